#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

#include "numsg/errors.hpp"

namespace numsg {

using Int = std::int64_t;

/// A positive modulus n >= 1.
class Modulus {
public:
    /// Throws std::invalid_argument when n < 1.
    explicit Modulus(Int n);

    [[nodiscard]] Int value() const noexcept { return n_; }

private:
    Int n_;
};

/// Remainder operator [m]_n: the residue of m in [0, n), for any sign of m.
[[nodiscard]] Int rem(Int m, Modulus n) noexcept;

/// floor(m / n), rounding toward negative infinity.
[[nodiscard]] Int floor_div(Int m, Modulus n) noexcept;

/// [m^{-1}]_n by extended Euclid. Returns 0 for n = 1.
/// Throws NotInvertible when gcd(m, n) != 1.
[[nodiscard]] Int mod_inverse(Int m, Modulus n);

/// gcd(a, 0) = a. Arguments are taken by absolute value.
[[nodiscard]] Int gcd(Int a, Int b) noexcept;

/// [f_1 * ... * f_r * g_1^{-1} * ... * g_s^{-1}]_n with every partial
/// product reduced mod n, so no intermediate exceeds n^2.
[[nodiscard]] Int rem_product(std::span<const Int> factors, std::span<const Int> inverses,
                              Modulus n);
[[nodiscard]] Int rem_product(std::initializer_list<Int> factors,
                              std::initializer_list<Int> inverses, Modulus n);

/// (a * b) mod n without overflow, for a, b already in [0, n).
[[nodiscard]] Int mul_mod(Int a, Int b, Modulus n) noexcept;

// Overflow-checked arithmetic; throw OverflowError.
[[nodiscard]] Int checked_add(Int a, Int b);
[[nodiscard]] Int checked_sub(Int a, Int b);
[[nodiscard]] Int checked_mul(Int a, Int b);

}  // namespace numsg
