#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spfc/character.hpp"
#include "spfc/partition.hpp"

namespace spfc {

/// A pair (character, size).
struct JordanBlock {
    UnramifiedCharacter character;
    int size = 1;

    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
    friend auto operator<=>(const JordanBlock& a, const JordanBlock& b) {
        if (auto c = a.size <=> b.size; c != 0) return c;
        return a.character <=> b.character;
    }
};

std::string to_string(const JordanBlock& b);

/// Jordan data of a strongly negative unramified representation: distinct
/// odd sizes carrying lambda0 (an even number of them) and distinct odd
/// sizes carrying the trivial character (an odd number of them), with
/// total 2n+1. Lists are kept in increasing order.
struct StronglyNegativeData {
    std::vector<int> lambda0_sizes;
    std::vector<int> trivial_sizes;

    /// (sum of all sizes - 1) / 2. Meaningless unless the sum is odd.
    [[nodiscard]] int rank() const;
    [[nodiscard]] std::vector<JordanBlock> jordan_blocks() const;

    friend bool operator==(const StronglyNegativeData&, const StronglyNegativeData&) = default;
};

/// Checks every invariant of `data` against the ambient rank `n`.
bool validate_jord_sn(const StronglyNegativeData& data, int n);

inline constexpr int kDefaultJordSnCap = 12;

/// All strongly negative data of rank `n`: ordered by the lambda0 list
/// (shorter sum first, then lexicographically) and then by the trivial list.
/// Throws `std::out_of_range` when n exceeds `cap` or is negative.
std::vector<StronglyNegativeData> enumerate_jord_sn(int n, int cap = kDefaultJordSnCap);

/// Negative data: a strongly negative part plus general-linear blocks
/// (chi_i, n_i), each one standing for the pair (chi_i, n_i), (chi_i^-1, n_i).
struct NegativeData {
    StronglyNegativeData sn;
    std::vector<JordanBlock> gl_blocks;

    [[nodiscard]] int rank() const;
    friend bool operator==(const NegativeData&, const NegativeData&) = default;
};

/// Jord(sn) together with both (chi, n) and (chi^-1, n) for every GL block.
/// Returned sorted.
std::vector<JordanBlock> jord_of_negative(const NegativeData& neg);

/// A triple (chi, m, alpha) of the exponent multiset e.
struct ExponentTriple {
    UnramifiedCharacter character;
    int m = 1;
    Rational alpha;

    friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
};

/// The pair (e, negative data) parameterizing an irreducible unramified
/// unitary representation of Sp(2n).
struct UnitaryDualPoint {
    std::vector<ExponentTriple> e;
    NegativeData neg;
    int n = 0;

    friend bool operator==(const UnitaryDualPoint&, const UnitaryDualPoint&) = default;
};

/// Throws `std::invalid_argument` describing the first structural defect:
/// invalid strongly negative data, non-positive sizes, alpha outside (0,1),
/// or rank bookkeeping that does not add up to n.
void check_structure(const UnitaryDualPoint& point);

/// Outcome of the unitarity membership test. `violated` names the first
/// failed condition: "1", "2", "3" for the range conditions, "a" to "f" for
/// the conditions on each e(chi, m).
struct Membership {
    bool accepted = true;
    std::string violated;
    std::string detail;

    static Membership accept() { return {}; }
    static Membership reject(std::string label, std::string detail) {
        return {false, std::move(label), std::move(detail)};
    }
};

/// Evaluates range conditions (1)-(3) for every (chi, m), then (a)-(f) for
/// every (chi, m) present in e, in increasing (m, chi) order. Multisets
/// throughout; (chi, m) in Jord uses exact character equality.
Membership check_uunr(const UnitaryDualPoint& point);

/// Multiset of: every GL size twice, every e-triple's m twice, every
/// strongly negative size once. Total is 2n+1.
Partition orbit_partition(const UnitaryDualPoint& point);

}  // namespace spfc
