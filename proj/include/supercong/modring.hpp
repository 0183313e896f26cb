#pragma once

// Exact residue arithmetic modulo p, p^2, p^3 for odd primes p.
//
// All residues are stored canonically in [0, p^e). Moduli are limited to
// p < 2^21 so that p^3 < 2^63; products of two residues then fit in 128-bit
// intermediates and every operation is exact.

#include <cstdint>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/exactq.hpp"

namespace supercong {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;  // a, b < m <= 2^63, no overflow
    return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Reduce a signed value into [0, m).
inline u64 signed_mod(i64 v, u64 m) {
    i64 r = v % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

namespace detail {

inline i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i64 x1, y1;
    i64 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace detail

inline u64 invmod(u64 a, u64 m) {
    i64 x, y;
    i64 g = detail::egcd(static_cast<i64>(a % m), static_cast<i64>(m), x, y);
    if (g != 1) {
        throw NotInvertible("no inverse of " + std::to_string(a) + " modulo " +
                            std::to_string(m));
    }
    return signed_mod(x, m);
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// An integer residue tied to a specific modulus. Mixing moduli throws.
class Residue {
public:
    Residue() : value_(0), modulus_(1) {}
    Residue(u64 value, u64 modulus) : value_(value % modulus), modulus_(modulus) {}

    static Residue from_signed(i64 value, u64 modulus) {
        return Residue(signed_mod(value, modulus), modulus);
    }

    u64 value() const { return value_; }
    u64 modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }
    std::string str() const { return std::to_string(value_); }

    friend Residue operator+(Residue a, Residue b) {
        a.require_same(b);
        return Residue(addmod(a.value_, b.value_, a.modulus_), a.modulus_);
    }
    friend Residue operator-(Residue a, Residue b) {
        a.require_same(b);
        return Residue(submod(a.value_, b.value_, a.modulus_), a.modulus_);
    }
    friend Residue operator*(Residue a, Residue b) {
        a.require_same(b);
        return Residue(mulmod(a.value_, b.value_, a.modulus_), a.modulus_);
    }
    Residue operator-() const { return Residue(submod(0, value_, modulus_), modulus_); }
    Residue& operator+=(Residue b) { return *this = *this + b; }
    Residue& operator-=(Residue b) { return *this = *this - b; }
    Residue& operator*=(Residue b) { return *this = *this * b; }
    friend bool operator==(const Residue& a, const Residue& b) {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }

    Residue pow(u64 e) const { return Residue(powmod(value_, e, modulus_), modulus_); }
    Residue inverse() const { return Residue(invmod(value_, modulus_), modulus_); }

private:
    void require_same(const Residue& other) const {
        if (modulus_ != other.modulus_) {
            throw ModulusMismatch("residue moduli differ: " + std::to_string(modulus_) +
                                  " vs " + std::to_string(other.modulus_));
        }
    }

    u64 value_;
    u64 modulus_;
};

inline Residue mod_inverse(const Residue& a) { return a.inverse(); }
inline Residue mod_pow(const Residue& a, u64 n) { return a.pow(n); }

// Lift an exact rational into Z/m for m = p^e; the (reduced) denominator must
// be coprime to m.
inline Residue rational_to_residue(const Rational& q, u64 modulus) {
    Rational r = q;
    r.canonicalize();
    u64 num = mpz_fdiv_ui(r.get_num().get_mpz_t(), modulus);
    u64 den = mpz_fdiv_ui(r.get_den().get_mpz_t(), modulus);
    u64 inv;
    try {
        inv = invmod(den, modulus);
    } catch (const NotInvertible&) {
        throw DenominatorDivisibleByP("denominator " + r.get_den().get_str() +
                                      " not invertible modulo " + std::to_string(modulus));
    }
    return Residue(mulmod(num, inv, modulus), modulus);
}

struct PrimeContext;
inline Residue fermat_quotient(i64 a, const PrimeContext& ctx);

// An odd prime with its powers and the precomputed constants every check
// needs: the Fermat quotient q_p(2) mod p^2 and the Legendre symbol (2/p).
struct PrimeContext {
    u64 p;
    u64 m1, m2, m3;  // p, p^2, p^3
    int p_mod4;
    int leg2;     // (2/p) = +1 iff p = +-1 (mod 8)
    Residue qp2;  // q_p(2) = (2^{p-1} - 1)/p, mod p^2

    static PrimeContext make(u64 p) {
        if (p < 3 || p % 2 == 0 || !is_prime(p)) {
            throw Error("PrimeContext requires an odd prime, got " + std::to_string(p));
        }
        if (p >= (1ull << 21)) {
            throw Error("p^3 would overflow 63 bits for p = " + std::to_string(p));
        }
        PrimeContext ctx;
        ctx.p = p;
        ctx.m1 = p;
        ctx.m2 = p * p;
        ctx.m3 = p * p * p;
        ctx.p_mod4 = static_cast<int>(p % 4);
        ctx.leg2 = (p % 8 == 1 || p % 8 == 7) ? 1 : -1;
        ctx.qp2 = fermat_quotient(2, ctx);
        return ctx;
    }

    u64 modulus(int e) const { return e == 1 ? m1 : e == 2 ? m2 : m3; }
    u64 half() const { return (p - 1) / 2; }

    Residue res(i64 v, int e) const { return Residue::from_signed(v, modulus(e)); }
    Residue zero(int e) const { return Residue(0, modulus(e)); }
    Residue one(int e) const { return Residue(1, modulus(e)); }
    // (-1)^{(p-1)/2}, i.e. the Legendre symbol (-1/p).
    Residue sign_half(int e) const { return res(p_mod4 == 1 ? 1 : -1, e); }
};

// q_p(a) = (a^{p-1} - 1)/p, an integer by Fermat's little theorem, returned
// mod p^2. Computed from a^{p-1} mod p^3, so the division by p is exact.
inline Residue fermat_quotient(i64 a, const PrimeContext& ctx) {
    u64 ar = signed_mod(a, ctx.m3);
    if (ar % ctx.p == 0) {
        throw NotCoprime("fermat_quotient: " + std::to_string(a) + " shares a factor with " +
                         std::to_string(ctx.p));
    }
    u64 x = powmod(ar, ctx.p - 1, ctx.m3);
    u64 diff = submod(x, 1, ctx.m3);
    // diff is divisible by p exactly
    return Residue((diff / ctx.p) % ctx.m2, ctx.m2);
}

}  // namespace supercong
