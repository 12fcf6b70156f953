#include "numsg/modular.hpp"

#include <stdexcept>
#include <string>

namespace numsg {

namespace {
__extension__ using Wide = __int128;
}  // namespace

Modulus::Modulus(Int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(n));
    }
}

Int rem(Int m, Modulus n) noexcept {
    const Int r = m % n.value();
    return r < 0 ? r + n.value() : r;
}

Int floor_div(Int m, Modulus n) noexcept {
    const Int q = m / n.value();
    return (m % n.value() < 0) ? q - 1 : q;
}

Int gcd(Int a, Int b) noexcept {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        const Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int mod_inverse(Int m, Modulus n) {
    if (n.value() == 1) {
        return 0;
    }
    // Invariant: old_s * m ≡ old_r (mod n).
    Int old_r = rem(m, n);
    Int r = n.value();
    Int old_s = 1;
    Int s = 0;
    while (r != 0) {
        const Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw NotInvertible("no inverse of " + std::to_string(m) + " modulo " +
                            std::to_string(n.value()) + " (gcd is " + std::to_string(old_r) + ")");
    }
    return rem(old_s, n);
}

Int mul_mod(Int a, Int b, Modulus n) noexcept {
    const auto p = static_cast<Wide>(a) * static_cast<Wide>(b);
    auto r = static_cast<Int>(p % n.value());
    return r < 0 ? r + n.value() : r;
}

Int rem_product(std::span<const Int> factors, std::span<const Int> inverses, Modulus n) {
    Int acc = rem(1, n);
    for (const Int f : factors) {
        acc = mul_mod(acc, rem(f, n), n);
    }
    for (const Int g : inverses) {
        acc = mul_mod(acc, mod_inverse(g, n), n);
    }
    return acc;
}

Int rem_product(std::initializer_list<Int> factors, std::initializer_list<Int> inverses,
                Modulus n) {
    return rem_product(std::span<const Int>(factors.begin(), factors.size()),
                       std::span<const Int>(inverses.begin(), inverses.size()), n);
}

Int checked_add(Int a, Int b) {
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r = 0;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

}  // namespace numsg
