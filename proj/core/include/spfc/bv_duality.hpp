#pragma once

#include "spfc/partition.hpp"

namespace spfc {

/// A partition of an odd number 2n+1 whose even parts occur with even
/// multiplicity: the nilpotent-orbit data on the so(2n+1) side.
class OddOrthogonalPartition {
public:
    /// Throws `std::invalid_argument` if the invariants fail.
    explicit OddOrthogonalPartition(Partition p);

    static bool is_valid(const Partition& p);

    [[nodiscard]] const Partition& partition() const noexcept { return p_; }
    /// The rank n with total 2n+1.
    [[nodiscard]] int rank() const noexcept { return static_cast<int>((p_.total() - 1) / 2); }

    friend bool operator==(const OddOrthogonalPartition&, const OddOrthogonalPartition&) = default;

private:
    Partition p_;
};

/// Smallest part decremented by one (a resulting zero is erased).
Partition q_minus(const OddOrthogonalPartition& q);

/// Barbasch-Vogan dual: transpose of the Sp-collapse of `q_minus(q)`.
/// The collapse is taken first, then the transpose.
Partition bv_dual(const OddOrthogonalPartition& q);

}  // namespace spfc
