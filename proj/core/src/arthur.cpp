#include "spfc/arthur.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spfc {

std::string_view to_string(DualType t) {
    return t == DualType::Symplectic ? "symplectic" : "orthogonal";
}

std::string_view to_string(LocalShape s) {
    switch (s) {
        case LocalShape::I: return "I";
        case LocalShape::J1: return "J1";
        case LocalShape::J2: return "J2";
        case LocalShape::S1: return "S1";
        case LocalShape::S2: return "S2";
    }
    return "?";
}

std::string_view to_string(PointType t) {
    switch (t) {
        case PointType::TypeI: return "TypeI";
        case PointType::TypeII: return "TypeII";
        case PointType::TypeIII: return "TypeIII";
        case PointType::TypeIV: return "TypeIV";
        case PointType::Mixed: return "Mixed";
    }
    return "?";
}

ValidationReport validate(const ArthurParameter& psi) {
    if (psi.n < 1) return ValidationReport::fail("rank", "n must be positive");
    if (psi.blocks.empty()) return ValidationReport::fail("empty", "parameter has no blocks");
    for (std::size_t i = 0; i < psi.blocks.size(); ++i) {
        const auto& blk = psi.blocks[i];
        if (blk.tau_id.empty()) return ValidationReport::fail("field", "block " + std::to_string(i) + " has no tau_id");
        if (blk.gl_rank < 1 || blk.b < 1) {
            return ValidationReport::fail("field", "block " + std::to_string(i) + " needs gl_rank >= 1 and b >= 1");
        }
    }
    for (std::size_t i = 0; i < psi.blocks.size(); ++i) {
        const auto& blk = psi.blocks[i];
        if (blk.dual_type == DualType::Symplectic && blk.b % 2 != 0) {
            return ValidationReport::fail("parity", "symplectic block " + blk.tau_id + " has odd b=" + std::to_string(blk.b));
        }
        if (blk.dual_type == DualType::Symplectic && blk.gl_rank % 2 != 0) {
            return ValidationReport::fail("parity", "symplectic block " + blk.tau_id + " has odd GL rank " +
                                                        std::to_string(blk.gl_rank));
        }
        if (blk.dual_type == DualType::Orthogonal && blk.b % 2 != 1) {
            return ValidationReport::fail("parity", "orthogonal block " + blk.tau_id + " has even b=" + std::to_string(blk.b));
        }
    }
    long long sum = 0;
    for (const auto& blk : psi.blocks) sum += static_cast<long long>(blk.gl_rank) * blk.b;
    if (sum != 2LL * psi.n + 1) {
        return ValidationReport::fail("rank-sum", "sum of gl_rank*b is " + std::to_string(sum) + ", expected " +
                                                      std::to_string(2LL * psi.n + 1));
    }
    std::set<std::pair<std::string, int>> seen;
    for (const auto& blk : psi.blocks) {
        if (!seen.insert({blk.tau_id, blk.b}).second) {
            return ValidationReport::fail("distinct", "block (" + blk.tau_id + ", " + std::to_string(blk.b) + ") repeats");
        }
    }
    if (!parity_condition(psi)) {
        return ValidationReport::fail("central", "product of central classes is " +
                                                     to_string(class_product(central_data(psi))) + ", not trivial");
    }
    return ValidationReport::pass();
}

std::vector<ClassPower> central_data(const ArthurParameter& psi) {
    std::vector<ClassPower> out;
    out.reserve(psi.blocks.size());
    for (const auto& blk : psi.blocks) out.push_back({blk.central_class, blk.b});
    return out;
}

bool parity_condition(const ArthurParameter& psi) {
    auto data = central_data(psi);
    return parity_condition(std::span<const ClassPower>(data));
}

namespace {

void require_valid(const ArthurParameter& psi) {
    auto report = validate(psi);
    if (!report.ok) throw std::invalid_argument("invalid Arthur parameter (" + report.violation + "): " + report.detail);
}

}  // namespace

OddOrthogonalPartition psi_partition(const ArthurParameter& psi) {
    require_valid(psi);
    std::vector<int> parts;
    for (const auto& blk : psi.blocks) parts.insert(parts.end(), static_cast<std::size_t>(blk.gl_rank), blk.b);
    return OddOrthogonalPartition(Partition(std::move(parts)));
}

Partition fc_bound(const ArthurParameter& psi) { return bv_dual(psi_partition(psi)); }

LocalShape local_shape(const SimpleParameter& block, const std::optional<std::int64_t>& prime) {
    if (block.dual_type == DualType::Symplectic) return LocalShape::I;
    bool trivial_center = block.central_class.is_trivial();
    if (prime && !trivial_center) {
        int symbol = legendre_symbol(block.central_class.value(), *prime);
        if (symbol == 0) {
            throw std::invalid_argument("place " + std::to_string(*prime) + " divides central class " +
                                        to_string(block.central_class) + " of block " + block.tau_id);
        }
        trivial_center = symbol == 1;
    }
    if (block.gl_rank % 2 == 0) return trivial_center ? LocalShape::J1 : LocalShape::J2;
    return trivial_center ? LocalShape::S1 : LocalShape::S2;
}

LocalAssembly assemble_local_data(const ArthurParameter& psi, const LocalSatakeData& local) {
    require_valid(psi);
    if (local.prime && (*local.prime < 3 || *local.prime % 2 == 0)) {
        throw std::invalid_argument("local place must be an odd prime");
    }
    if (local.blocks.size() != psi.blocks.size()) {
        throw std::invalid_argument("local data lists " + std::to_string(local.blocks.size()) + " blocks, parameter has " +
                                    std::to_string(psi.blocks.size()));
    }
    const Rational zero(0);
    const Rational half(1, 2);
    LocalAssembly out;
    std::vector<JordanBlock> pairs;  // (chi, size) standing for (chi, size), (chi^-1, size)

    for (std::size_t i = 0; i < psi.blocks.size(); ++i) {
        const auto& blk = psi.blocks[i];
        const auto& entries = local.blocks[i];
        const LocalShape shape = local_shape(blk, local.prime);
        const int expected = shape == LocalShape::J2 ? blk.a() - 1 : blk.a();
        if (static_cast<int>(entries.size()) != expected) {
            throw std::invalid_argument("block " + blk.tau_id + " of shape " + std::string(to_string(shape)) + " needs " +
                                        std::to_string(expected) + " Satake entries, got " +
                                        std::to_string(entries.size()));
        }
        const auto lambda0 = UnramifiedCharacter::lambda0();
        const auto trivial = UnramifiedCharacter::trivial();
        switch (shape) {
            case LocalShape::J2:
                out.jord1.push_back({lambda0, blk.b});
                out.jord1.push_back({trivial, blk.b});
                break;
            case LocalShape::S1: out.jord1.push_back({trivial, blk.b}); break;
            case LocalShape::S2: out.jord1.push_back({lambda0, blk.b}); break;
            default: break;
        }
        for (const auto& entry : entries) {
            if (entry.beta < zero || entry.beta >= half) {
                throw std::invalid_argument("block " + blk.tau_id + " has exponent " + to_string(entry.beta) +
                                            " outside [0, 1/2)");
            }
            if (entry.beta == zero) {
                pairs.push_back({entry.character, blk.b});
            } else {
                out.point.e.push_back({entry.character, blk.b, entry.beta});
            }
        }
    }
    std::sort(out.jord1.begin(), out.jord1.end());

    // Jord_2: distinct blocks of odd multiplicity in Jord_1. The even
    // remainder of Jord_1 pairs up into GL blocks.
    StronglyNegativeData sn;
    for (std::size_t i = 0; i < out.jord1.size();) {
        std::size_t j = i;
        while (j < out.jord1.size() && out.jord1[j] == out.jord1[i]) ++j;
        const JordanBlock& blk = out.jord1[i];
        std::size_t mult = j - i;
        if (mult % 2 == 1) {
            out.jord2.push_back(blk);
            auto& sizes = blk.character == UnramifiedCharacter::lambda0() ? sn.lambda0_sizes : sn.trivial_sizes;
            sizes.push_back(blk.size);
            --mult;
        }
        for (std::size_t k = 0; k < mult; ++k) out.jord3.push_back(blk);
        for (std::size_t k = 0; k < mult / 2; ++k) out.point.neg.gl_blocks.push_back(blk);
        i = j;
    }
    std::sort(sn.lambda0_sizes.begin(), sn.lambda0_sizes.end());
    std::sort(sn.trivial_sizes.begin(), sn.trivial_sizes.end());
    if (!validate_jord_sn(sn, sn.rank())) {
        throw std::invalid_argument(
            "inconsistent local central characters: Jord_2 needs an even number of lambda0 blocks and an odd number "
            "of trivial blocks");
    }
    out.point.neg.sn = std::move(sn);

    for (const auto& p : pairs) {
        out.jord3.push_back(p);
        out.jord3.push_back({p.character.inverse(), p.size});
        out.point.neg.gl_blocks.push_back(p);
    }
    std::sort(out.jord3.begin(), out.jord3.end());
    out.point.n = psi.n;
    check_structure(out.point);
    return out;
}

LocalAssembly build_local_data(const ArthurParameter& psi, const LocalSatakeData& local) {
    LocalAssembly out = assemble_local_data(psi, local);
    Membership m = check_uunr(out.point);
    if (!m.accepted) throw MembershipError(std::move(m));
    return out;
}

PointType classify_type(const UnitaryDualPoint& point) {
    const auto& sn = point.neg.sn;
    const bool bare = point.e.empty() && point.neg.gl_blocks.empty();
    if (sn.lambda0_sizes.empty()) return bare ? PointType::TypeI : PointType::TypeIII;
    if (sn.trivial_sizes == std::vector<int>{1}) return bare ? PointType::TypeII : PointType::TypeIV;
    return PointType::Mixed;
}

}  // namespace spfc

namespace spfc {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Uniform pick among lo, lo+2, ..., up to hi.
int uniform_step2(std::mt19937_64& rng, int lo, int hi) { return lo + 2 * uniform(rng, 0, (hi - lo) / 2); }

}  // namespace

ArthurParameter random_trivial_parameter(std::mt19937_64& rng, int max_n) {
    if (max_n < 1) throw std::invalid_argument("rank bound must be positive");
    ArthurParameter psi;
    psi.n = uniform(rng, 1, max_n);
    int remaining = 2 * psi.n + 1;
    while (remaining > 0) {
        SimpleParameter blk;
        blk.tau_id = "t" + std::to_string(psi.blocks.size());
        if (remaining >= 4 && uniform(rng, 0, 2) == 0) {
            blk.dual_type = DualType::Symplectic;
            blk.gl_rank = uniform_step2(rng, 2, std::min(6, remaining / 2));
            blk.b = uniform_step2(rng, 2, remaining / blk.gl_rank);
        } else {
            blk.dual_type = DualType::Orthogonal;
            blk.gl_rank = uniform(rng, 1, std::min(6, remaining));
            blk.b = uniform_step2(rng, 1, remaining / blk.gl_rank);
        }
        remaining -= blk.gl_rank * blk.b;
        psi.blocks.push_back(std::move(blk));
    }
    return psi;
}

LocalSatakeData random_local_data(std::mt19937_64& rng, const ArthurParameter& psi, std::optional<std::int64_t> prime) {
    LocalSatakeData local;
    local.prime = prime;
    int fresh = 0;
    auto beta = [&] { return Rational(uniform(rng, 1, 9), 20); };
    for (const auto& blk : psi.blocks) {
        const LocalShape shape = local_shape(blk, prime);
        int slots = shape == LocalShape::J2 ? blk.a() - 1 : blk.a();
        std::vector<SatakeEntry> entries;
        while (slots > 0) {
            int pick = uniform(rng, 0, 2);
            if (pick == 2 && slots >= 3) {
                std::string label = "c" + std::to_string(fresh++);
                auto chi = UnramifiedCharacter::generic(label, label + "i");
                Rational b = beta();
                entries.push_back({chi, b});
                entries.push_back({chi.inverse(), b});
                entries.push_back({chi, Rational(0)});
                slots -= 3;
            } else if (pick >= 1 && slots >= 2) {
                auto s = uniform(rng, 0, 1) == 0 ? UnramifiedCharacter::trivial() : UnramifiedCharacter::lambda0();
                entries.push_back({s, beta()});
                entries.push_back({s, beta()});
                slots -= 2;
            } else {
                UnramifiedCharacter chi = UnramifiedCharacter::trivial();
                switch (uniform(rng, 0, 2)) {
                    case 1: chi = UnramifiedCharacter::lambda0(); break;
                    case 2: {
                        std::string label = "c" + std::to_string(fresh++);
                        chi = UnramifiedCharacter::generic(label, label + "i");
                        break;
                    }
                    default: break;
                }
                entries.push_back({chi, Rational(0)});
                slots -= 1;
            }
        }
        std::shuffle(entries.begin(), entries.end(), rng);
        local.blocks.push_back(std::move(entries));
    }
    return local;
}

}  // namespace spfc
