#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spfc/bv_duality.hpp"
#include "spfc/character.hpp"
#include "spfc/squareclass.hpp"
#include "spfc/unramified_dual.hpp"

namespace spfc {

enum class DualType { Symplectic, Orthogonal };

std::string_view to_string(DualType t);

/// One simple block (tau, b). The cuspidal datum tau is an opaque label;
/// only its GL rank, duality type and central square class matter here.
struct SimpleParameter {
    std::string tau_id;
    int gl_rank = 1;
    int b = 1;
    DualType dual_type = DualType::Orthogonal;
    SquareClass central_class;

    /// Number of generic Satake pairs: gl_rank/2 for even rank,
    /// (gl_rank-1)/2 for odd rank.
    [[nodiscard]] int a() const noexcept { return gl_rank / 2; }
};

/// A formal sum of simple blocks for Sp(2n).
struct ArthurParameter {
    int n = 0;
    std::vector<SimpleParameter> blocks;
};

struct ValidationReport {
    bool ok = true;
    std::string violation;  // stable code, e.g. "parity", "rank-sum"
    std::string detail;

    static ValidationReport pass() { return {}; }
    static ValidationReport fail(std::string code, std::string detail) {
        return {false, std::move(code), std::move(detail)};
    }
};

/// Checks, in order: block field sanity, the parity rule (symplectic blocks
/// have even b and even GL rank, orthogonal blocks odd b), the rank sum
/// 2n+1, pairwise distinct (tau, b), and the central character condition.
ValidationReport validate(const ArthurParameter& psi);

/// Central classes paired with b, in block order.
std::vector<ClassPower> central_data(const ArthurParameter& psi);

/// The central character condition: product of class^b is trivial.
bool parity_condition(const ArthurParameter& psi);

/// b_i repeated gl_rank_i times. Throws `std::invalid_argument` when
/// `validate` fails.
OddOrthogonalPartition psi_partition(const ArthurParameter& psi);

/// The conjectural vanishing bound: bv_dual(psi_partition(psi)).
Partition fc_bound(const ArthurParameter& psi);

/// How a block's local component is shaped at an unramified place.
enum class LocalShape { I, J1, J2, S1, S2 };

std::string_view to_string(LocalShape s);

/// One Satake entry nu^beta chi (its partner nu^-beta chi^-1 is implicit).
struct SatakeEntry {
    UnramifiedCharacter character;
    Rational beta;
};

/// Unramified local data for every block, in block order. Blocks of shape
/// J2 list a-1 entries; all other shapes list a entries. The forced
/// lambda0 / trivial constituents are implicit.
///
/// When `prime` is set, an orthogonal block's local central character is
/// trivial iff its central class is a square mod that prime. Otherwise it is
/// trivial iff the class itself is trivial.
struct LocalSatakeData {
    std::optional<std::int64_t> prime;
    std::vector<std::vector<SatakeEntry>> blocks;
};

/// Local shape of `block`. Throws `std::invalid_argument` if `prime` is not
/// an odd prime or divides the block's central class.
LocalShape local_shape(const SimpleParameter& block, const std::optional<std::int64_t>& prime);

/// Everything assembled from the local data: the multisets Jord_1, Jord_2,
/// Jord_3 and the resulting unitary dual point.
struct LocalAssembly {
    std::vector<JordanBlock> jord1;
    std::vector<JordanBlock> jord2;
    std::vector<JordanBlock> jord3;
    UnitaryDualPoint point;
};

/// Assembles the classification data without testing unitarity. Throws
/// `std::invalid_argument` on an invalid parameter or on local data whose
/// shape does not match the parameter.
LocalAssembly assemble_local_data(const ArthurParameter& psi, const LocalSatakeData& local);

/// `assemble_local_data` followed by the membership test. Throws
/// `MembershipError` when the assembled point is rejected.
LocalAssembly build_local_data(const ArthurParameter& psi, const LocalSatakeData& local);

class MembershipError : public std::runtime_error {
public:
    explicit MembershipError(Membership m)
        : std::runtime_error("local data fails unitarity condition (" + m.violated + "): " + m.detail),
          membership_(std::move(m)) {}
    [[nodiscard]] const Membership& membership() const noexcept { return membership_; }

private:
    Membership membership_;
};

enum class PointType { TypeI, TypeII, TypeIII, TypeIV, Mixed };

std::string_view to_string(PointType t);

/// Reads the strongly negative part: only trivial characters gives III (I
/// when e and the GL blocks are empty); only lambda0 besides the forced
/// (1, 1) gives IV (II when e and the GL blocks are empty); else Mixed.
PointType classify_type(const UnitaryDualPoint& point);

/// A random valid parameter with trivial central classes and rank in
/// [1, max_n]. Block labels are "t0", "t1", ...
ArthurParameter random_trivial_parameter(std::mt19937_64& rng, int max_n);

/// Random local data of the right shape for `psi` that always passes the
/// membership test: positive exponents come as self-dual pairs in one
/// block, or as a generic pair completed by a zero-exponent entry.
LocalSatakeData random_local_data(std::mt19937_64& rng, const ArthurParameter& psi,
                                  std::optional<std::int64_t> prime = std::nullopt);

}  // namespace spfc
