#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spfc {

/// Result of comparing two partitions. `Incomparable` only arises from the
/// dominance order; the lexicographic order is total.
enum class OrderRelation { Less, Equal, Greater, Incomparable };

std::string_view to_string(OrderRelation r);

/// A partition: a non-increasing sequence of positive integers.
///
/// The representation is canonical. Construction sorts the parts in
/// non-increasing order and erases zero parts, so two partitions compare
/// equal exactly when they are the same multiset of positive integers.
/// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    /// Throws `std::invalid_argument` on a negative part. Zeros are erased.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// `value` repeated `count` times, i.e. [value^count].
    static Partition repeated(int value, int count);

    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
    [[nodiscard]] const std::vector<int>& vector() const noexcept { return parts_; }
    [[nodiscard]] long long total() const noexcept { return total_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// i-th part (0-based) with zero padding past the end.
    [[nodiscard]] int at_or_zero(std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    /// Number of parts equal to `value`.
    [[nodiscard]] int multiplicity(int value) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    long long total_ = 0;
};

/// Parses either a comma list ("5,5,4,1") or exponent notation
/// ("[5^2 4 1]"). The empty string and "[]" both denote the empty partition.
/// Throws `std::invalid_argument` on malformed text or a non-positive part.
Partition parse_partition(std::string_view text);

/// Exponent notation with repeated parts collapsed: "[5^2 4^4 2^3 1^2]".
std::string to_string(const Partition& p);

/// Plain comma list, "5,5,4,4".
std::string to_comma_string(const Partition& p);

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Column lengths of the Young diagram.
Partition transpose(const Partition& p);

/// Multiset union of the parts.
Partition concat(const Partition& p, const Partition& q);

/// Componentwise sum p_i + q_i with zero padding.
Partition add(const Partition& p, const Partition& q);

/// Prefix-sum (dominance) comparison. Different totals are allowed; the
/// same zero-padded prefix-sum rule applies.
OrderRelation dominance_compare(const Partition& p, const Partition& q);

/// Lexicographic comparison: the first differing part decides, and a
/// prefix-equal shorter sequence is smaller.
OrderRelation lex_compare(const Partition& p, const Partition& q);

/// Upper bound on `n` accepted by the partition enumerators.
inline constexpr int kDefaultEnumerationCap = 40;

/// Calls `visit` on every partition of `n` once, in decreasing
/// lexicographic order. Returning false from `visit` stops the walk.
/// Throws `std::out_of_range` when `n` is negative or exceeds `cap`.
void for_each_partition(int n, const std::function<bool(const Partition&)>& visit,
                        int cap = kDefaultEnumerationCap);

/// All partitions of `n`, in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap);

}  // namespace spfc
