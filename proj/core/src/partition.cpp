#include "spfc/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spfc {

std::string_view to_string(OrderRelation r) {
    switch (r) {
        case OrderRelation::Less: return "Less";
        case OrderRelation::Equal: return "Equal";
        case OrderRelation::Greater: return "Greater";
        case OrderRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_) {
        if (x < 0) throw std::invalid_argument("partition part must be non-negative");
    }
    std::erase(parts_, 0);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::repeated(int value, int count) {
    if (count < 0) throw std::invalid_argument("negative repeat count");
    return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
}

int Partition::multiplicity(int value) const noexcept {
    auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), value, std::greater<>());
    return static_cast<int>(hi - lo);
}

namespace {

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
    return s;
}

int parse_positive(std::string_view token, std::string_view whole) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("malformed partition '" + std::string(whole) + "'");
    }
    if (value <= 0) {
        throw std::invalid_argument("partition parts must be positive in '" + std::string(whole) + "'");
    }
    return value;
}

// "[5^2 4 1]" with the brackets already stripped.
std::vector<int> parse_exponent_body(std::string_view body, std::string_view whole) {
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < body.size()) {
        if (is_blank(body[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < body.size() && !is_blank(body[j])) ++j;
        std::string_view token = body.substr(i, j - i);
        i = j;
        auto caret = token.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(parse_positive(token, whole));
            continue;
        }
        int value = parse_positive(token.substr(0, caret), whole);
        int count = parse_positive(token.substr(caret + 1), whole);
        parts.insert(parts.end(), static_cast<std::size_t>(count), value);
    }
    return parts;
}

std::vector<int> parse_comma_body(std::string_view body, std::string_view whole) {
    std::vector<int> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = body.find(',', start);
        std::string_view token = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
        parts.push_back(parse_positive(token, whole));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) return {};
    if (s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unterminated '[' in '" + std::string(text) + "'");
        std::string_view body = trim(s.substr(1, s.size() - 2));
        if (body.empty()) return {};
        if (body.find(',') != std::string_view::npos) return Partition(parse_comma_body(body, text));
        return Partition(parse_exponent_body(body, text));
    }
    if (s.find('^') != std::string_view::npos || s.find(' ') != std::string_view::npos) {
        if (s.find(',') == std::string_view::npos) return Partition(parse_exponent_body(s, text));
    }
    return Partition(parse_comma_body(s, text));
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '[';
    auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i != 0) os << ' ';
        os << parts[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    os << ']';
    return os.str();
}

std::string to_comma_string(const Partition& p) {
    std::ostringstream os;
    bool first = true;
    for (int x : p.parts()) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

Partition transpose(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> columns(static_cast<std::size_t>(p.parts().front()), 0);
    for (int row : p.parts()) {
        for (int c = 0; c < row; ++c) ++columns[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(columns));
}

Partition concat(const Partition& p, const Partition& q) {
    std::vector<int> parts = p.vector();
    parts.insert(parts.end(), q.parts().begin(), q.parts().end());
    return Partition(std::move(parts));
}

Partition add(const Partition& p, const Partition& q) {
    std::size_t len = std::max(p.length(), q.length());
    std::vector<int> parts(len);
    for (std::size_t i = 0; i < len; ++i) parts[i] = p.at_or_zero(i) + q.at_or_zero(i);
    return Partition(std::move(parts));
}

OrderRelation dominance_compare(const Partition& p, const Partition& q) {
    // Prefix sums stay constant past the longer length, so comparing up to
    // max(length) covers every k.
    std::size_t len = std::max(p.length(), q.length());
    long long sp = 0, sq = 0;
    bool some_greater = false, some_less = false;
    for (std::size_t i = 0; i < len; ++i) {
        sp += p.at_or_zero(i);
        sq += q.at_or_zero(i);
        if (sp > sq) some_greater = true;
        if (sp < sq) some_less = true;
    }
    if (some_greater && some_less) return OrderRelation::Incomparable;
    if (some_greater) return OrderRelation::Greater;
    if (some_less) return OrderRelation::Less;
    return OrderRelation::Equal;
}

OrderRelation lex_compare(const Partition& p, const Partition& q) {
    auto a = p.parts();
    auto b = q.parts();
    auto cmp = std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    if (cmp < 0) return OrderRelation::Less;
    if (cmp > 0) return OrderRelation::Greater;
    return OrderRelation::Equal;
}

void for_each_partition(int n, const std::function<bool(const Partition&)>& visit, int cap) {
    if (n < 0) throw std::out_of_range("cannot enumerate partitions of a negative integer");
    if (n > cap) throw std::out_of_range("partition enumeration of " + std::to_string(n) +
                                         " exceeds cap " + std::to_string(cap));
    if (n == 0) {
        visit(Partition{});
        return;
    }
    // Classic successor rule on the non-increasing part list: find the
    // rightmost part > 1, decrease it, and refill the remainder greedily.
    std::vector<int> a{n};
    while (true) {
        if (!visit(Partition(a))) return;
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) return;
        int k = --a.back();
        int rem = ones + 1;
        while (rem > k) {
            a.push_back(k);
            rem -= k;
        }
        if (rem > 0) a.push_back(rem);
    }
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        out.push_back(p);
        return true;
    }, cap);
    return out;
}

}  // namespace spfc
