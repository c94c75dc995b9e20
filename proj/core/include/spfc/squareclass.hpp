#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spfc {

/// An element of Q*/(Q*)^2, represented by its squarefree integer
/// representative (sign kept). 1 is the trivial class.
class SquareClass {
public:
    constexpr SquareClass() = default;

    /// Throws `std::invalid_argument` unless `value` is a nonzero squarefree
    /// integer. Use `squarefree_class` to reduce an arbitrary integer.
    explicit SquareClass(std::int64_t value);

    [[nodiscard]] constexpr std::int64_t value() const noexcept { return value_; }
    [[nodiscard]] constexpr bool is_trivial() const noexcept { return value_ == 1; }

    friend constexpr bool operator==(SquareClass, SquareClass) = default;
    friend constexpr auto operator<=>(SquareClass, SquareClass) = default;

private:
    std::int64_t value_ = 1;
};

std::string to_string(SquareClass c);

bool is_squarefree(std::int64_t x);

/// Squarefree part of `x`, sign preserved. Throws on zero.
SquareClass squarefree_class(std::int64_t x);

struct ClassPower {
    SquareClass square_class;
    std::int64_t exponent = 1;
};

/// Square class of the product, i.e. classes with odd exponent multiplied
/// and reduced.
SquareClass class_product(std::span<const ClassPower> factors);

/// Legendre symbol (a/p) for an odd prime p, computed through the Jacobi
/// symbol and quadratic reciprocity. Returns 0 when p divides a.
int legendre_symbol(std::int64_t a, std::int64_t p);

/// True iff the product of the classes with odd exponent is trivial: the
/// exponent vectors over the primes (and -1) sum to zero mod 2.
bool parity_condition(std::span<const ClassPower> factors);

/// The first `count` odd primes p <= `limit`, coprime to every class, at
/// which every class is a quadratic residue. Throws `std::runtime_error`
/// if fewer than `count` exist below `limit`.
std::vector<std::int64_t> qr_primes(std::span<const SquareClass> classes, int count, std::int64_t limit);

}  // namespace spfc
