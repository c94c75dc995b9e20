#pragma once

#include <vector>

#include "spfc/partition.hpp"

namespace spfc {

/// Even total, and every odd part occurs with even multiplicity.
bool is_symplectic(const Partition& p);

/// A symplectic partition with an even number of even parts strictly
/// between any two consecutive distinct odd parts, and above the largest
/// odd part. Throws `std::invalid_argument` if `p` is not symplectic.
bool is_special_symplectic(const Partition& p);

/// Sp-collapse: the largest symplectic partition dominated by `p`.
///
/// Odd parts o_1 >= o_2 >= ... >= o_2r (with multiplicity) are paired as
/// (o_1, o_2), (o_3, o_4), ...; every pair with o_{2i-1} > o_{2i} becomes
/// (o_{2i-1} - 1, o_{2i} + 1). Throws `std::invalid_argument` on odd total.
Partition sp_collapse(const Partition& p);

/// Sp-expansion: the smallest special symplectic partition dominating `p`.
///
/// With p_1 >= ... >= p_r (zero padded), each index i such that
/// p_{2i} = p_{2i+1} is odd and p_{2i-1} != p_{2i} has its pair replaced by
/// (p_{2i} + 1, p_{2i+1} - 1). Indices are read off the input, not the
/// partially rewritten sequence. Throws `std::invalid_argument` if `p` is
/// not symplectic.
Partition sp_expand(const Partition& p);

/// Largest total accepted by the brute-force oracles.
inline constexpr int kDefaultOracleCap = 24;

/// Exhaustive search for the dominance-maximal symplectic partition below
/// `p`. Throws `std::logic_error` if the maximum is not unique.
Partition sp_collapse_oracle(const Partition& p, int cap = kDefaultOracleCap);

/// Exhaustive search for the dominance-minimal special symplectic
/// partition above `p`. Throws `std::logic_error` if the minimum is not
/// unique.
Partition sp_expand_oracle(const Partition& p, int cap = kDefaultOracleCap);

/// Every symplectic partition of `two_n`, in decreasing lexicographic order.
std::vector<Partition> enumerate_symplectic(int two_n, int cap = kDefaultEnumerationCap);

}  // namespace spfc
