#pragma once

// Legendre symbols, square roots mod p, and the normalized two-squares
// representation p = x^2 + y^2 for p = 1 (mod 4).

#include <cmath>
#include <cstdint>

#include "supercong/modring.hpp"

namespace supercong {

// Euler's criterion: a^{(p-1)/2} mod p, mapped to {-1, 0, +1}.
inline int legendre_symbol(i64 a, u64 p) {
    u64 ar = signed_mod(a, p);
    if (ar == 0) return 0;
    u64 e = powmod(ar, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

namespace detail {

inline u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace detail

// Tonelli-Shanks, used unconditionally (the p = 3 (mod 4) case falls out of
// the same code path with S = 1). The quadratic non-residue is found by
// deterministic search from 2 upward, so outputs are reproducible.
// Returns the canonical root r <= (p-1)/2.
inline u64 sqrt_mod_p(i64 a, u64 p) {
    u64 ar = signed_mod(a, p);
    if (legendre_symbol(static_cast<i64>(ar), p) != 1) {
        throw NotAResidue(std::to_string(a) + " is not a quadratic residue mod " +
                          std::to_string(p));
    }
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (legendre_symbol(static_cast<i64>(z), p) != -1) ++z;

    u64 m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(ar, q, p);
    u64 r = powmod(ar, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0;
        for (u64 t2 = t; t2 != 1; t2 = mulmod(t2, t2, p)) ++i;
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r <= (p - 1) / 2 ? r : p - r;
}

// p = x^2 + y^2 with x odd, x = 1 (mod 4) and y even, y >= 0. Only |x| and y
// are determined by p; the sign normalization makes the output unique.
struct TwoSquares {
    i64 x;
    i64 y;
};

// Cornacchia descent from a square root of -1 mod p.
inline TwoSquares two_squares(u64 p) {
    if (p % 4 != 1) {
        throw WrongResidueClass("two_squares requires p = 1 (mod 4), got " +
                                std::to_string(p));
    }
    if (!is_prime(p)) {
        throw Error("two_squares requires a prime, got " + std::to_string(p));
    }
    u64 r = sqrt_mod_p(-1, p);
    u64 a = p, b = r;
    const u64 bound = detail::isqrt_u64(p);
    while (b > bound) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    u64 u = b;
    u64 v = detail::isqrt_u64(p - u * u);
    if (u * u + v * v != p) {
        throw Error("two_squares: descent failed for p = " + std::to_string(p));
    }
    // exactly one of u, v is odd since p is odd
    u64 odd = (u % 2 == 1) ? u : v;
    u64 even = (u % 2 == 1) ? v : u;
    i64 x = (odd % 4 == 1) ? static_cast<i64>(odd) : -static_cast<i64>(odd);
    return TwoSquares{x, static_cast<i64>(even)};
}

}  // namespace supercong
