#include "spfc/vanishing.hpp"

#include <algorithm>
#include <stdexcept>

#include "spfc/bv_duality.hpp"
#include "spfc/symplectic.hpp"

namespace spfc {

std::string_view to_string(BoundSource s) {
    switch (s) {
        case BoundSource::TypeI: return "TypeI";
        case BoundSource::TypeII: return "TypeII";
        case BoundSource::TypeIII: return "TypeIII";
        case BoundSource::TypeIV: return "TypeIV";
    }
    return "?";
}

std::string_view to_string(VerdictMode m) { return m == VerdictMode::Dominance ? "dominance" : "lex"; }

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::ForcedVanishDominance: return "ForcedVanishDominance";
        case Verdict::ForcedVanishLex: return "ForcedVanishLex";
        case Verdict::NotDetermined: return "NotDetermined";
    }
    return "?";
}

VerdictMode parse_verdict_mode(std::string_view text) {
    if (text == "dominance") return VerdictMode::Dominance;
    if (text == "lex") return VerdictMode::Lex;
    throw std::invalid_argument("mode must be 'dominance' or 'lex', got '" + std::string(text) + "'");
}

namespace {

void require_increasing(const std::vector<int>& list, const char* what) {
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] < 0) throw std::invalid_argument(std::string(what) + " has a negative entry");
        if (i > 0 && list[i - 1] >= list[i]) {
            throw std::invalid_argument(std::string(what) + " must be strictly increasing");
        }
    }
}

void require_odd_length(const std::vector<int>& m_list) {
    require_increasing(m_list, "m-list");
    if (m_list.size() % 2 != 1) throw std::invalid_argument("m-list must have odd length");
}

Partition doubled_sizes(const UnitaryDualPoint& point) {
    std::vector<int> parts;
    for (const auto& b : point.neg.gl_blocks) parts.insert(parts.end(), 2, b.size);
    for (const auto& t : point.e) parts.insert(parts.end(), 2, t.m);
    return Partition(std::move(parts));
}

void record(BoundTrace* trace, const char* name, const Partition& p) {
    if (trace) trace->emplace_back(name, p);
}

// Parts listed as (value, exponent) with value decreasing.
Partition from_exponents(const std::vector<std::pair<int, int>>& terms) {
    std::vector<int> parts;
    for (auto [value, exponent] : terms) {
        if (exponent < 0) throw std::logic_error("negative exponent in closed form");
        parts.insert(parts.end(), static_cast<std::size_t>(exponent), value);
    }
    return Partition(std::move(parts));
}

}  // namespace

VanishingBound bound_type_I(const std::vector<int>& m_list) {
    require_odd_length(m_list);
    std::vector<int> parts;
    for (int m : m_list) parts.push_back(2 * m + 1);
    return {bv_dual(OddOrthogonalPartition(Partition(std::move(parts)))), BoundSource::TypeI};
}

VanishingBound bound_type_II(const std::vector<int>& n_list) {
    require_increasing(n_list, "n-list");
    if (n_list.size() % 2 != 0) throw std::invalid_argument("n-list must have even length");
    std::vector<int> parts{1};
    for (int n : n_list) parts.push_back(2 * n + 1);
    return {bv_dual(OddOrthogonalPartition(Partition(std::move(parts)))), BoundSource::TypeII};
}

VanishingBound bound_type_III(const UnitaryDualPoint& point, BoundTrace* trace) {
    check_structure(point);
    auto type = classify_type(point);
    if (type != PointType::TypeI && type != PointType::TypeIII) {
        throw std::invalid_argument("bound_type_III needs a point of type I or III, got " +
                                    std::string(to_string(type)));
    }
    const auto& sizes = point.neg.sn.trivial_sizes;
    Partition upper = sp_collapse(Partition(std::vector<int>(sizes.begin() + 1, sizes.end())));
    record(trace, "upper-collapse", upper);
    Partition inner = concat(concat(doubled_sizes(point), upper), Partition{sizes.front() - 1});
    record(trace, "inner", inner);
    Partition t = transpose(inner);
    record(trace, "transpose", t);
    Partition bound = sp_collapse(t);
    record(trace, "bound", bound);
    return {bound, BoundSource::TypeIII};
}

VanishingBound bound_type_IV(const UnitaryDualPoint& point, BoundTrace* trace) {
    check_structure(point);
    auto type = classify_type(point);
    if (type != PointType::TypeII && type != PointType::TypeIV) {
        throw std::invalid_argument("bound_type_IV needs a point of type II or IV, got " +
                                    std::string(to_string(type)));
    }
    Partition lambda = sp_collapse(Partition(point.neg.sn.lambda0_sizes));
    record(trace, "lambda0-collapse", lambda);
    Partition inner = concat(doubled_sizes(point), lambda);
    record(trace, "inner", inner);
    Partition t = transpose(inner);
    record(trace, "transpose", t);
    Partition bound = sp_collapse(t);
    record(trace, "bound", bound);
    return {bound, BoundSource::TypeIV};
}

VanishingBound bound_for_point(const UnitaryDualPoint& point) {
    switch (classify_type(point)) {
        case PointType::TypeI:
        case PointType::TypeIII: return bound_type_III(point);
        case PointType::TypeII:
        case PointType::TypeIV: return bound_type_IV(point);
        case PointType::Mixed: break;
    }
    throw std::invalid_argument("mixed points have no vanishing bound");
}

Partition type_I_closed_form(const std::vector<int>& m) {
    require_odd_length(m);
    const int l = static_cast<int>(m.size());
    std::vector<std::pair<int, int>> terms{{l, 2 * m[0]}};
    for (int j = 1; j < l; ++j) {
        int shift = j % 2 == 1 ? 2 : -2;
        terms.emplace_back(l - j, 2 * m[j] - 2 * m[j - 1] + shift);
    }
    return from_exponents(terms);
}

Partition exponent_identity_lhs(const std::vector<int>& m) {
    require_odd_length(m);
    if (m.size() < 5) throw std::invalid_argument("identity needs at least five entries");
    std::vector<int> tail;
    for (std::size_t i = 3; i < m.size(); ++i) tail.push_back(2 * m[i] - 2 * m[1] - 1);
    Partition inner = concat(sp_collapse(Partition(std::move(tail))), Partition{2 * m[2] - 2 * m[1] - 2});
    return transpose(inner);
}

Partition exponent_identity_rhs(const std::vector<int>& m) {
    require_odd_length(m);
    if (m.size() < 5) throw std::invalid_argument("identity needs at least five entries");
    const int l = static_cast<int>(m.size());
    std::vector<std::pair<int, int>> terms;
    for (int j = 2; j < l; ++j) {
        int shift = j % 2 == 0 ? -2 : 2;
        terms.emplace_back(l - j, 2 * m[j] - 2 * m[j - 1] + shift);
    }
    return from_exponents(terms);
}

bool exponent_identity(const std::vector<int>& m_list) { return exponent_identity_lhs(m_list) == exponent_identity_rhs(m_list); }

Partition duality_target(const UnitaryDualPoint& point) {
    return bv_dual(OddOrthogonalPartition(orbit_partition(point)));
}

bool verify_duality_identity(const UnitaryDualPoint& point) {
    if (classify_type(point) == PointType::Mixed) return false;
    return bound_for_point(point).bound == duality_target(point);
}

Verdict verdict(const Partition& candidate, const Partition& bound, VerdictMode mode) {
    if (!is_symplectic(candidate)) {
        throw std::invalid_argument("candidate " + to_string(candidate) + " is not symplectic");
    }
    if (candidate.total() != bound.total()) {
        throw std::invalid_argument("candidate total " + std::to_string(candidate.total()) +
                                    " differs from bound total " + std::to_string(bound.total()));
    }
    const OrderRelation dom = dominance_compare(candidate, bound);
    if (mode == VerdictMode::Dominance) {
        return dom == OrderRelation::Greater ? Verdict::ForcedVanishDominance : Verdict::NotDetermined;
    }
    if (dom == OrderRelation::Incomparable && lex_compare(candidate, bound) == OrderRelation::Greater) {
        return Verdict::ForcedVanishLex;
    }
    return Verdict::NotDetermined;
}

Verdict verdict(const Partition& candidate, const VanishingBound& bound, VerdictMode mode) {
    return verdict(candidate, bound.bound, mode);
}

namespace {

bool is_pure(const StronglyNegativeData& sn) {
    return sn.lambda0_sizes.empty() || sn.trivial_sizes == std::vector<int>{1};
}

// Calls `visit` for every way of splitting the parts of `p` between the GL
// blocks and e, as sub-multisets.
bool for_each_split(const Partition& p, const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& visit) {
    std::vector<std::pair<int, int>> groups;
    for (int v : p.parts()) {
        if (groups.empty() || groups.back().first != v) groups.emplace_back(v, 0);
        ++groups.back().second;
    }
    std::vector<int> take(groups.size(), 0);
    while (true) {
        std::vector<int> gl, e;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            e.insert(e.end(), static_cast<std::size_t>(take[g]), groups[g].first);
            gl.insert(gl.end(), static_cast<std::size_t>(groups[g].second - take[g]), groups[g].first);
        }
        if (!visit(gl, e)) return false;
        std::size_t g = 0;
        while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
        if (g == groups.size()) return true;
        ++take[g];
    }
}

}  // namespace

void for_each_pure_point(int n, const std::function<bool(const UnitaryDualPoint&)>& visit) {
    if (n < 0) throw std::invalid_argument("rank must be non-negative");
    const Rational quarter(1, 4);
    for (int sn_rank = 0; sn_rank <= n; ++sn_rank) {
        for (const auto& sn : enumerate_jord_sn(sn_rank, n)) {
            if (!is_pure(sn)) continue;
            bool keep_going = true;
            for_each_partition(n - sn_rank, [&](const Partition& rest) {
                return keep_going = for_each_split(rest, [&](const std::vector<int>& gl, const std::vector<int>& e) {
                    UnitaryDualPoint point;
                    point.n = n;
                    point.neg.sn = sn;
                    for (int s : gl) point.neg.gl_blocks.push_back({UnramifiedCharacter::trivial(), s});
                    for (int m : e) point.e.push_back({UnramifiedCharacter::trivial(), m, quarter});
                    return visit(point);
                });
            }, n);
            if (!keep_going) return;
        }
    }
}

namespace {

std::vector<int> random_distinct_odd(std::mt19937_64& rng, int count, int max_value) {
    std::vector<int> odds;
    for (int v = 1; v <= max_value; v += 2) odds.push_back(v);
    std::shuffle(odds.begin(), odds.end(), rng);
    odds.resize(static_cast<std::size_t>(std::min<int>(count, static_cast<int>(odds.size()))));
    std::sort(odds.begin(), odds.end());
    return odds;
}

UnramifiedCharacter random_character(std::mt19937_64& rng, int& fresh) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: return UnramifiedCharacter::trivial();
        case 1: return UnramifiedCharacter::lambda0();
        default: {
            std::string label = "x" + std::to_string(fresh++);
            return UnramifiedCharacter::generic(label, label + "i");
        }
    }
}

}  // namespace

UnitaryDualPoint random_pure_point(std::mt19937_64& rng, int max_n) {
    if (max_n < 0) throw std::invalid_argument("rank must be non-negative");
    const int max_total = 2 * max_n + 1;
    StronglyNegativeData sn;
    const bool lambda_type = std::bernoulli_distribution(0.5)(rng);
    while (true) {
        if (lambda_type) {
            int k = 2 * std::uniform_int_distribution<int>(0, 2)(rng);
            sn.lambda0_sizes = random_distinct_odd(rng, k, max_total);
            if (sn.lambda0_sizes.size() % 2 != 0) sn.lambda0_sizes.pop_back();
            sn.trivial_sizes = {1};
        } else {
            int l = 2 * std::uniform_int_distribution<int>(0, 2)(rng) + 1;
            sn.lambda0_sizes.clear();
            sn.trivial_sizes = random_distinct_odd(rng, l, max_total);
            if (sn.trivial_sizes.size() % 2 == 0) sn.trivial_sizes.pop_back();
        }
        if (sn.rank() <= max_n) break;
    }
    UnitaryDualPoint point;
    point.neg.sn = sn;
    int rest = std::uniform_int_distribution<int>(0, max_n - sn.rank())(rng);
    point.n = sn.rank() + rest;
    int fresh = 0;
    while (rest > 0) {
        int part = std::uniform_int_distribution<int>(1, rest)(rng);
        rest -= part;
        if (std::bernoulli_distribution(0.5)(rng)) {
            point.neg.gl_blocks.push_back({random_character(rng, fresh), part});
        } else {
            Rational alpha(std::uniform_int_distribution<int>(1, 11)(rng), 12);
            point.e.push_back({random_character(rng, fresh), part, alpha});
        }
    }
    return point;
}

IdentityReport run_identity_campaign(int max_n, int random_count, std::uint64_t seed, int random_max_n) {
    IdentityReport report;
    auto check = [&](const UnitaryDualPoint& point) {
        Partition bound = bound_for_point(point).bound;
        Partition target = duality_target(point);
        if (bound != target) report.failures.push_back({point, bound, target});
    };
    for (int n = 0; n <= max_n; ++n) {
        for_each_pure_point(n, [&](const UnitaryDualPoint& point) {
            check(point);
            ++report.exhaustive_checked;
            return true;
        });
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) {
        check(random_pure_point(rng, random_max_n));
        ++report.random_checked;
    }
    return report;
}

}  // namespace spfc
