#include "spfc/squareclass.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace spfc {

namespace {

// Prime -> exponent mod 2, with -1 keyed as -1.
std::map<std::int64_t, int> odd_exponent_primes(std::int64_t x) {
    std::map<std::int64_t, int> out;
    if (x < 0) {
        out[-1] = 1;
        x = -x;
    }
    for (std::int64_t d = 2; d * d <= x; ++d) {
        int e = 0;
        while (x % d == 0) {
            x /= d;
            ++e;
        }
        if (e % 2 == 1) out[d] = 1;
    }
    if (x > 1) out[x] = 1;
    return out;
}

}  // namespace

bool is_squarefree(std::int64_t x) {
    if (x == 0) return false;
    std::int64_t a = std::llabs(x);
    for (std::int64_t d = 2; d * d <= a; ++d) {
        if (a % (d * d) == 0) return false;
    }
    return true;
}

SquareClass::SquareClass(std::int64_t value) : value_(value) {
    if (!is_squarefree(value)) {
        throw std::invalid_argument("square class representative must be nonzero and squarefree, got " +
                                    std::to_string(value));
    }
}

std::string to_string(SquareClass c) { return std::to_string(c.value()); }

SquareClass squarefree_class(std::int64_t x) {
    if (x == 0) throw std::invalid_argument("zero has no square class");
    std::int64_t r = 1;
    for (auto [p, e] : odd_exponent_primes(x)) r *= p;
    return SquareClass(r);
}

SquareClass class_product(std::span<const ClassPower> factors) {
    std::map<std::int64_t, int> parity;
    for (const auto& f : factors) {
        if (f.exponent % 2 == 0) continue;
        for (auto [p, e] : odd_exponent_primes(f.square_class.value())) parity[p] ^= e;
    }
    std::int64_t r = 1;
    for (auto [p, e] : parity) {
        if (e) r *= p;
    }
    return SquareClass(r);
}

bool parity_condition(std::span<const ClassPower> factors) { return class_product(factors).is_trivial(); }

int legendre_symbol(std::int64_t a, std::int64_t p) {
    bool prime = p >= 3 && p % 2 != 0;
    for (std::int64_t d = 3; prime && d <= p / d; d += 2) prime = p % d != 0;
    if (!prime) throw std::invalid_argument("legendre_symbol needs an odd prime modulus");
    std::int64_t n = p;
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::vector<std::int64_t> qr_primes(std::span<const SquareClass> classes, int count, std::int64_t limit) {
    if (count < 1) throw std::invalid_argument("qr_primes: count must be positive");
    if (limit < 2) throw std::invalid_argument("qr_primes: limit must be at least 2");
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::int64_t> found;
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (std::int64_t m = p * p; m <= limit; m += p) composite[static_cast<std::size_t>(m)] = true;
        if (p == 2) continue;
        bool ok = true;
        for (SquareClass c : classes) {
            if (legendre_symbol(c.value(), p) != 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        found.push_back(p);
        if (static_cast<int>(found.size()) == count) return found;
    }
    throw std::runtime_error("qr_primes: only " + std::to_string(found.size()) + " of " + std::to_string(count) +
                             " requested primes exist below " + std::to_string(limit));
}

}  // namespace spfc
