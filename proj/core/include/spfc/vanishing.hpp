#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spfc/arthur.hpp"
#include "spfc/partition.hpp"
#include "spfc/unramified_dual.hpp"

namespace spfc {

enum class BoundSource { TypeI, TypeII, TypeIII, TypeIV };

std::string_view to_string(BoundSource s);

/// A symplectic partition above which no Fourier coefficient survives.
struct VanishingBound {
    Partition bound;
    BoundSource source = BoundSource::TypeI;

    friend bool operator==(const VanishingBound&, const VanishingBound&) = default;
};

/// Named intermediate partitions, in the order they were computed.
using BoundTrace = std::vector<std::pair<std::string, Partition>>;

/// bv_dual of the blocks 2m_i+1. `m_list` is strictly increasing,
/// non-negative, of odd length. Throws `std::invalid_argument` otherwise.
VanishingBound bound_type_I(const std::vector<int>& m_list);

/// bv_dual of the blocks 2n_i+1 together with one extra block 1. `n_list`
/// is strictly increasing, non-negative, of even length.
VanishingBound bound_type_II(const std::vector<int>& n_list);

/// For a point of type I or III with trivial sizes s_1 < ... < s_l:
/// collapse(transpose(gl sizes twice, e sizes twice, collapse(s_2..s_l), s_1 - 1)).
/// Throws `std::invalid_argument` for any other type.
VanishingBound bound_type_III(const UnitaryDualPoint& point, BoundTrace* trace = nullptr);

/// For a point of type II or IV:
/// collapse(transpose(gl sizes twice, e sizes twice, collapse(lambda0 sizes))).
VanishingBound bound_type_IV(const UnitaryDualPoint& point, BoundTrace* trace = nullptr);

/// Dispatches on `classify_type`. Throws for mixed points.
VanishingBound bound_for_point(const UnitaryDualPoint& point);

/// The type I bound written out exponent by exponent: with l = 2s+1 the
/// value 2s+1 occurs 2m_1 times and 2s+1-j occurs
/// 2m_{j+1} - 2m_j + 2 (j odd) or 2m_{j+1} - 2m_j - 2 (j even) times.
Partition type_I_closed_form(const std::vector<int>& m_list);

/// Transpose of collapse(2m_i - 2m_2 - 1 for i >= 4) with 2m_3 - 2m_2 - 2
/// appended. Requires length >= 5.
Partition exponent_identity_lhs(const std::vector<int>& m_list);

/// The same partition in exponent form: value 2s+1-j occurs
/// 2m_{j+1} - 2m_j - 2 (j even) or + 2 (j odd) times, for j = 2..l-1.
Partition exponent_identity_rhs(const std::vector<int>& m_list);

bool exponent_identity(const std::vector<int>& m_list);

/// bv_dual(orbit_partition(point)).
Partition duality_target(const UnitaryDualPoint& point);

/// The type-appropriate bound equals `duality_target`. False for mixed
/// points.
bool verify_duality_identity(const UnitaryDualPoint& point);

enum class VerdictMode { Dominance, Lex };
enum class Verdict { ForcedVanishDominance, ForcedVanishLex, NotDetermined };

std::string_view to_string(VerdictMode m);
std::string_view to_string(Verdict v);
VerdictMode parse_verdict_mode(std::string_view text);

/// Dominance mode: forced iff the candidate strictly dominates the bound.
/// Lex mode: forced iff the two are dominance-incomparable and the
/// candidate is lexicographically larger. Throws `std::invalid_argument`
/// if the candidate is not symplectic or the totals differ.
Verdict verdict(const Partition& candidate, const Partition& bound, VerdictMode mode);
Verdict verdict(const Partition& candidate, const VanishingBound& bound, VerdictMode mode);

/// Every structurally valid point of rank `n` of types I to IV, where e and
/// the GL blocks share a partition of the remaining rank. GL blocks carry
/// the trivial character, e-triples carry (1, m, 1/4). Visiting stops early
/// if `visit` returns false.
void for_each_pure_point(int n, const std::function<bool(const UnitaryDualPoint&)>& visit);

/// A random structurally valid point of type I to IV with rank <= max_n.
UnitaryDualPoint random_pure_point(std::mt19937_64& rng, int max_n);

struct IdentityFailure {
    UnitaryDualPoint point;
    Partition bound;
    Partition target;
};

struct IdentityReport {
    std::int64_t exhaustive_checked = 0;
    std::int64_t random_checked = 0;
    std::vector<IdentityFailure> failures;
};

/// Exhaustive check for every rank 0..max_n, followed by `random_count`
/// random points of rank <= random_max_n drawn from a generator seeded
/// with `seed`.
IdentityReport run_identity_campaign(int max_n, int random_count, std::uint64_t seed, int random_max_n = 30);

}  // namespace spfc
