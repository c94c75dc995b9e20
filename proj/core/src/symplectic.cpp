#include "spfc/symplectic.hpp"

#include <stdexcept>
#include <string>

namespace spfc {

bool is_symplectic(const Partition& p) {
    if (p.total() % 2 != 0) return false;
    auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i] % 2 == 1 && (j - i) % 2 == 1) return false;
        i = j;
    }
    return true;
}

bool is_special_symplectic(const Partition& p) {
    if (!is_symplectic(p)) {
        throw std::invalid_argument("is_special_symplectic: " + to_string(p) + " is not symplectic");
    }
    // Walk parts from the top; the even-part counter resets at each new odd
    // value and must be even at that moment.
    int evens_since_odd = 0;
    int last_odd = 0;
    for (int x : p.parts()) {
        if (x % 2 == 0) {
            ++evens_since_odd;
        } else if (x != last_odd) {
            if (evens_since_odd % 2 != 0) return false;
            evens_since_odd = 0;
            last_odd = x;
        }
    }
    return true;
}

Partition sp_collapse(const Partition& p) {
    if (p.total() % 2 != 0) {
        throw std::invalid_argument("sp_collapse: " + to_string(p) + " has odd total");
    }
    std::vector<int> parts = p.vector();
    std::vector<std::size_t> odd_positions;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % 2 == 1) odd_positions.push_back(i);
    }
    // An even total forces an even number of odd parts.
    for (std::size_t k = 0; k + 1 < odd_positions.size(); k += 2) {
        int& hi = parts[odd_positions[k]];
        int& lo = parts[odd_positions[k + 1]];
        if (hi > lo) {
            --hi;
            ++lo;
        }
    }
    return Partition(std::move(parts));
}

Partition sp_expand(const Partition& p) {
    if (!is_symplectic(p)) {
        throw std::invalid_argument("sp_expand: " + to_string(p) + " is not symplectic");
    }
    const std::vector<int>& in = p.vector();
    std::vector<int> out = in;
    out.push_back(0);
    // 1-based p_{2i} sits at 0-based index 2i-1.
    for (std::size_t k = 1; k + 1 < out.size(); k += 2) {
        int left = in[k - 1];
        int a = p.at_or_zero(k);
        int b = p.at_or_zero(k + 1);
        if (a == b && a % 2 == 1 && left != a) {
            ++out[k];
            --out[k + 1];
        }
    }
    return Partition(std::move(out));
}

namespace {

bool dominated_by(const Partition& lower, const Partition& upper) {
    auto r = dominance_compare(lower, upper);
    return r == OrderRelation::Less || r == OrderRelation::Equal;
}

void check_oracle_cap(const Partition& p, int cap, const char* who) {
    if (p.total() > cap) {
        throw std::out_of_range(std::string(who) + ": total " + std::to_string(p.total()) +
                                " exceeds oracle cap " + std::to_string(cap));
    }
}

}  // namespace

// In a finite poset a unique maximal element is the greatest element, and a
// greatest element under dominance is also lexicographically greatest. So
// the lexicographically first candidate is checked against all others.
Partition sp_collapse_oracle(const Partition& p, int cap) {
    check_oracle_cap(p, cap, "sp_collapse_oracle");
    if (p.total() % 2 != 0) {
        throw std::invalid_argument("sp_collapse_oracle: " + to_string(p) + " has odd total");
    }
    std::vector<Partition> candidates;
    for_each_partition(static_cast<int>(p.total()), [&](const Partition& q) {
        if (is_symplectic(q) && dominated_by(q, p)) candidates.push_back(q);
        return true;
    }, cap);
    if (candidates.empty()) throw std::logic_error("sp_collapse_oracle: no symplectic partition below " + to_string(p));
    const Partition& top = candidates.front();
    for (const auto& r : candidates) {
        if (!dominated_by(r, top)) {
            throw std::logic_error("sp_collapse_oracle: no unique maximum below " + to_string(p));
        }
    }
    return top;
}

Partition sp_expand_oracle(const Partition& p, int cap) {
    check_oracle_cap(p, cap, "sp_expand_oracle");
    if (!is_symplectic(p)) {
        throw std::invalid_argument("sp_expand_oracle: " + to_string(p) + " is not symplectic");
    }
    std::vector<Partition> candidates;
    for_each_partition(static_cast<int>(p.total()), [&](const Partition& q) {
        if (is_symplectic(q) && is_special_symplectic(q) && dominated_by(p, q)) candidates.push_back(q);
        return true;
    }, cap);
    if (candidates.empty()) throw std::logic_error("sp_expand_oracle: no special partition above " + to_string(p));
    const Partition& bottom = candidates.back();
    for (const auto& r : candidates) {
        if (!dominated_by(bottom, r)) {
            throw std::logic_error("sp_expand_oracle: no unique minimum above " + to_string(p));
        }
    }
    return bottom;
}

std::vector<Partition> enumerate_symplectic(int two_n, int cap) {
    if (two_n % 2 != 0) throw std::invalid_argument("enumerate_symplectic: odd total");
    std::vector<Partition> out;
    for_each_partition(two_n, [&](const Partition& q) {
        if (is_symplectic(q)) out.push_back(q);
        return true;
    }, cap);
    return out;
}

}  // namespace spfc
