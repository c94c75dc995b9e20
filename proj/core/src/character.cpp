#include "spfc/character.hpp"

#include <charconv>
#include <stdexcept>

namespace spfc {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

UnramifiedCharacter UnramifiedCharacter::generic(std::string label, std::string inverse_label) {
    if (label.empty() || inverse_label.empty()) throw std::invalid_argument("generic character needs two labels");
    if (label == inverse_label) {
        throw std::invalid_argument("generic character '" + label + "' cannot be its own inverse");
    }
    if (label == "1" || label == "trivial" || label == "lambda0" || inverse_label == "1" ||
        inverse_label == "trivial" || inverse_label == "lambda0") {
        throw std::invalid_argument("generic character labels clash with reserved names");
    }
    return UnramifiedCharacter(Kind::Generic, std::move(label), std::move(inverse_label));
}

UnramifiedCharacter UnramifiedCharacter::inverse() const {
    if (kind_ != Kind::Generic) return *this;
    return UnramifiedCharacter(Kind::Generic, inverse_label_, label_);
}

UnramifiedCharacter parse_character(std::string_view text) {
    if (text == "1" || text == "trivial") return UnramifiedCharacter::trivial();
    if (text == "lambda0") return UnramifiedCharacter::lambda0();
    auto tilde = text.find('~');
    if (tilde == std::string_view::npos) {
        throw std::invalid_argument("character '" + std::string(text) +
                                    "' must be 1, lambda0, or label~inverse_label");
    }
    return UnramifiedCharacter::generic(std::string(text.substr(0, tilde)), std::string(text.substr(tilde + 1)));
}

std::string to_string(const UnramifiedCharacter& c) {
    switch (c.kind()) {
        case UnramifiedCharacter::Kind::Trivial: return "1";
        case UnramifiedCharacter::Kind::Lambda0: return "lambda0";
        case UnramifiedCharacter::Kind::Generic: return c.label() + "~" + c.inverse_label();
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const UnramifiedCharacter& c) { return os << to_string(c); }

}  // namespace spfc
