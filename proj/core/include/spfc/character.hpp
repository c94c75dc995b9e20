#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace spfc {

/// Exact exponents (the alpha and beta values of the classification data).
using Rational = boost::rational<std::int64_t>;

/// Parses "3/10", "0", or "1/2". Throws `std::invalid_argument`.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// An unramified unitary character of a local field, tracked only through
/// the predicates the classification uses: identity, inverse, and whether
/// it squares to the trivial character.
///
/// Trivial and Lambda0 (the unramified quadratic character) are their own
/// inverses. A generic character carries its own label and the label of its
/// inverse; it never squares to the trivial character.
class UnramifiedCharacter {
public:
    enum class Kind { Trivial, Lambda0, Generic };

    static UnramifiedCharacter trivial() { return UnramifiedCharacter(Kind::Trivial, {}, {}); }
    static UnramifiedCharacter lambda0() { return UnramifiedCharacter(Kind::Lambda0, {}, {}); }
    /// Throws if the labels are empty or equal.
    static UnramifiedCharacter generic(std::string label, std::string inverse_label);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::string& label() const noexcept { return label_; }
    [[nodiscard]] const std::string& inverse_label() const noexcept { return inverse_label_; }

    [[nodiscard]] UnramifiedCharacter inverse() const;
    [[nodiscard]] bool squares_to_trivial() const noexcept { return kind_ != Kind::Generic; }

    friend bool operator==(const UnramifiedCharacter& a, const UnramifiedCharacter& b) {
        return a.kind_ == b.kind_ && a.label_ == b.label_;
    }
    friend auto operator<=>(const UnramifiedCharacter& a, const UnramifiedCharacter& b) {
        if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
        return a.label_ <=> b.label_;
    }

private:
    UnramifiedCharacter(Kind k, std::string label, std::string inverse_label)
        : kind_(k), label_(std::move(label)), inverse_label_(std::move(inverse_label)) {}

    Kind kind_ = Kind::Trivial;
    std::string label_;
    std::string inverse_label_;
};

/// "1" (or "trivial"), "lambda0", or "label~inverse_label" for a generic
/// character.
UnramifiedCharacter parse_character(std::string_view text);
std::string to_string(const UnramifiedCharacter& c);

std::ostream& operator<<(std::ostream& os, const UnramifiedCharacter& c);

}  // namespace spfc
