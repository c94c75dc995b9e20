#include "spfc/unramified_dual.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace spfc {

std::string to_string(const JordanBlock& b) {
    return "(" + to_string(b.character) + "," + std::to_string(b.size) + ")";
}

int StronglyNegativeData::rank() const {
    int sum = std::accumulate(lambda0_sizes.begin(), lambda0_sizes.end(), 0) +
              std::accumulate(trivial_sizes.begin(), trivial_sizes.end(), 0);
    return (sum - 1) / 2;
}

std::vector<JordanBlock> StronglyNegativeData::jordan_blocks() const {
    std::vector<JordanBlock> out;
    for (int s : lambda0_sizes) out.push_back({UnramifiedCharacter::lambda0(), s});
    for (int s : trivial_sizes) out.push_back({UnramifiedCharacter::trivial(), s});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool strictly_increasing_odd_positive(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0 || v[i] % 2 == 0) return false;
        if (i > 0 && v[i - 1] >= v[i]) return false;
    }
    return true;
}

// Increasing lists of distinct odd integers >= `min_value` summing to `sum`,
// in lexicographic order.
void distinct_odd_sets(int sum, int min_value, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (sum == 0) {
        out.push_back(current);
        return;
    }
    for (int v = min_value; v <= sum; v += 2) {
        current.push_back(v);
        distinct_odd_sets(sum - v, v + 2, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> distinct_odd_sets(int sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    distinct_odd_sets(sum, 1, current, out);
    return out;
}

}  // namespace

bool validate_jord_sn(const StronglyNegativeData& data, int n) {
    if (n < 0) return false;
    if (!strictly_increasing_odd_positive(data.lambda0_sizes)) return false;
    if (!strictly_increasing_odd_positive(data.trivial_sizes)) return false;
    if (data.lambda0_sizes.size() % 2 != 0) return false;
    if (data.trivial_sizes.size() % 2 != 1) return false;
    long long sum = std::accumulate(data.lambda0_sizes.begin(), data.lambda0_sizes.end(), 0LL) +
                    std::accumulate(data.trivial_sizes.begin(), data.trivial_sizes.end(), 0LL);
    return sum == 2LL * n + 1;
}

std::vector<StronglyNegativeData> enumerate_jord_sn(int n, int cap) {
    if (n < 0 || n > cap) {
        throw std::out_of_range("enumerate_jord_sn: n=" + std::to_string(n) + " outside [0, " +
                                std::to_string(cap) + "]");
    }
    const int total = 2 * n + 1;
    std::vector<StronglyNegativeData> out;
    // An even count of odd sizes has an even sum.
    for (int lambda_sum = 0; lambda_sum < total; lambda_sum += 2) {
        auto lambda_sets = distinct_odd_sets(lambda_sum);
        auto trivial_sets = distinct_odd_sets(total - lambda_sum);
        for (const auto& a : lambda_sets) {
            if (a.size() % 2 != 0) continue;
            for (const auto& b : trivial_sets) {
                if (b.size() % 2 != 1) continue;
                out.push_back({a, b});
            }
        }
    }
    return out;
}

int NegativeData::rank() const {
    int r = sn.rank();
    for (const auto& b : gl_blocks) r += b.size;
    return r;
}

std::vector<JordanBlock> jord_of_negative(const NegativeData& neg) {
    std::vector<JordanBlock> out = neg.sn.jordan_blocks();
    for (const auto& b : neg.gl_blocks) {
        out.push_back(b);
        out.push_back({b.character.inverse(), b.size});
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_structure(const UnitaryDualPoint& point) {
    if (point.n < 0) throw std::invalid_argument("negative rank");
    if (!validate_jord_sn(point.neg.sn, point.neg.sn.rank())) {
        throw std::invalid_argument("strongly negative data violates its parity or ordering constraints");
    }
    const Rational zero(0);
    const Rational one(1);
    int rank = point.neg.rank();
    for (const auto& b : point.neg.gl_blocks) {
        if (b.size <= 0) throw std::invalid_argument("GL block size must be positive");
    }
    for (const auto& t : point.e) {
        if (t.m <= 0) throw std::invalid_argument("exponent triple needs m > 0");
        if (t.alpha <= zero || t.alpha >= one) {
            throw std::invalid_argument("exponent " + to_string(t.alpha) + " outside (0,1)");
        }
        rank += t.m;
    }
    if (rank != point.n) {
        throw std::invalid_argument("rank bookkeeping gives " + std::to_string(rank) + ", expected n=" +
                                    std::to_string(point.n));
    }
}

namespace {

using GroupKey = std::pair<int, UnramifiedCharacter>;

std::string group_name(const GroupKey& key) {
    return "e(" + to_string(key.second) + "," + std::to_string(key.first) + ")";
}

std::optional<Membership> check_ranges(const std::map<GroupKey, std::vector<Rational>>& groups) {
    const Rational zero(0);
    const Rational half(1, 2);
    const Rational one(1);
    for (const auto& [key, alphas] : groups) {
        const auto& [m, chi] = key;
        if (!chi.squares_to_trivial()) {
            auto partner = groups.find({m, chi.inverse()});
            if (partner == groups.end() || partner->second != alphas) {
                return Membership::reject("1", group_name(key) + " differs from its inverse-character multiset");
            }
            for (const auto& a : alphas) {
                if (a >= half) return Membership::reject("1", group_name(key) + " has alpha >= 1/2");
            }
        } else if (m % 2 == 0) {
            for (const auto& a : alphas) {
                if (a >= half) return Membership::reject("2", group_name(key) + " has alpha >= 1/2");
            }
        } else {
            for (const auto& a : alphas) {
                if (a <= zero || a >= one) return Membership::reject("3", group_name(key) + " has alpha outside (0,1)");
            }
        }
    }
    return std::nullopt;
}

std::optional<Membership> check_group(const GroupKey& key, const std::vector<Rational>& sorted,
                                      const std::vector<JordanBlock>& jord) {
    const Rational half(1, 2);
    const Rational one(1);
    std::vector<Rational> alpha, beta;
    for (const auto& x : sorted) (x <= half ? alpha : beta).push_back(x);
    const std::size_t k = alpha.size();
    const std::size_t l = beta.size();
    const std::string name = group_name(key);

    JordanBlock block{key.second, key.first};
    bool in_jord = std::binary_search(jord.begin(), jord.end(), block);
    if (!in_jord && (k + l) % 2 != 0) {
        return Membership::reject("a", name + ": k+l odd and " + to_string(block) + " not in Jord");
    }
    if (k >= 2 && alpha[k - 2] == half) {
        return Membership::reject("b", name + ": alpha_{k-1} = 1/2");
    }
    if (l >= 2) {
        for (std::size_t j = 1; j < l; ++j) {
            if (!(beta[j - 1] < beta[j])) return Membership::reject("c", name + ": beta values repeat");
        }
    }
    for (const auto& a : alpha) {
        for (const auto& b : beta) {
            if (a + b == one) {
                return Membership::reject("d", name + ": " + to_string(a) + " + " + to_string(b) + " = 1");
            }
        }
    }
    if (l >= 1) {
        auto c = std::count_if(alpha.begin(), alpha.end(),
                               [&](const Rational& a) { return one - beta[0] < a && a <= half; });
        if (c % 2 != 0) return Membership::reject("e", name + ": odd count above 1 - beta_1");
    }
    if (l >= 2) {
        for (std::size_t j = 0; j + 1 < l; ++j) {
            auto c = std::count_if(alpha.begin(), alpha.end(),
                                   [&](const Rational& a) { return one - beta[j + 1] < a && a < beta[j]; });
            if (c % 2 != 1) {
                return Membership::reject("f", name + ": even count in (1 - beta_" + std::to_string(j + 2) +
                                                   ", beta_" + std::to_string(j + 1) + ")");
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Membership check_uunr(const UnitaryDualPoint& point) {
    std::map<GroupKey, std::vector<Rational>> groups;
    for (const auto& t : point.e) groups[{t.m, t.character}].push_back(t.alpha);
    for (auto& [key, alphas] : groups) std::sort(alphas.begin(), alphas.end());

    if (auto r = check_ranges(groups)) return *r;
    const auto jord = jord_of_negative(point.neg);
    for (const auto& [key, alphas] : groups) {
        if (auto r = check_group(key, alphas, jord)) return *r;
    }
    return Membership::accept();
}

Partition orbit_partition(const UnitaryDualPoint& point) {
    check_structure(point);
    std::vector<int> parts;
    for (const auto& b : point.neg.gl_blocks) parts.insert(parts.end(), 2, b.size);
    for (const auto& t : point.e) parts.insert(parts.end(), 2, t.m);
    for (int s : point.neg.sn.lambda0_sizes) parts.push_back(s);
    for (int s : point.neg.sn.trivial_sizes) parts.push_back(s);
    return Partition(std::move(parts));
}

}  // namespace spfc
