#include "spfc/bv_duality.hpp"

#include <stdexcept>

#include "spfc/symplectic.hpp"

namespace spfc {

bool OddOrthogonalPartition::is_valid(const Partition& p) {
    if (p.total() % 2 != 1) return false;
    auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i] % 2 == 0 && (j - i) % 2 == 1) return false;
        i = j;
    }
    return true;
}

OddOrthogonalPartition::OddOrthogonalPartition(Partition p) : p_(std::move(p)) {
    if (!is_valid(p_)) {
        throw std::invalid_argument(to_string(p_) +
                                    " is not an odd orthogonal partition (odd total, even parts with even multiplicity)");
    }
}

Partition q_minus(const OddOrthogonalPartition& q) {
    std::vector<int> parts = q.partition().vector();
    // Odd total guarantees at least one part.
    --parts.back();
    return Partition(std::move(parts));
}

Partition bv_dual(const OddOrthogonalPartition& q) {
    return transpose(sp_collapse(q_minus(q)));
}

}  // namespace spfc
