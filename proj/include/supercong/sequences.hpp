#pragma once

// Per-prime immutable tables of every sequence the congruence checks consume,
// plus Euler numbers, Euler polynomials and Fibonacci/Lucas values.

#include <cstdint>
#include <utility>
#include <vector>

#include "supercong/modring.hpp"

namespace supercong {

// Immutable after construction; one prime's tables are confined to the task
// verifying that prime and dropped afterwards, so sweep memory stays O(p).
struct SequenceTables {
    u64 p = 0;
    // indices 0..p-1
    std::vector<u64> H;   // H_k mod p^2
    std::vector<u64> H2;  // H_k^{(2)} mod p^2
    std::vector<u64> C;   // binom(2k, k) mod p^3
    // indices 0..(p-1)/2
    std::vector<u64> OH;   // sum_{j<=k} 1/(2j-1) mod p^3
    std::vector<u64> OH2;  // sum_{j<=k} 1/(2j-1)^2 mod p^3
    std::vector<u64> B;    // binom((p-1)/2, k) mod p^3

    Residue h(u64 k) const { return Residue(H[k], p * p); }
    Residue h2(u64 k) const { return Residue(H2[k], p * p); }
    Residue c(u64 k) const { return Residue(C[k], p * p * p); }
    Residue oh(u64 k) const { return Residue(OH[k], p * p * p); }
    Residue oh2(u64 k) const { return Residue(OH2[k], p * p * p); }
    Residue b(u64 k) const { return Residue(B[k], p * p * p); }
};

// Fills every table by incremental recurrences; O(p) time and memory.
inline SequenceTables build_tables(const PrimeContext& ctx) {
    SequenceTables t;
    const u64 p = ctx.p, m2 = ctx.m2, m3 = ctx.m3;
    const u64 n = ctx.half();
    t.p = p;
    t.H.assign(p, 0);
    t.H2.assign(p, 0);
    t.C.assign(p, 0);
    t.OH.assign(n + 1, 0);
    t.OH2.assign(n + 1, 0);
    t.B.assign(n + 1, 0);

    t.C[0] = 1;
    for (u64 k = 1; k < p; ++k) {
        const u64 ik2 = invmod(k, m2);
        t.H[k] = addmod(t.H[k - 1], ik2, m2);
        t.H2[k] = addmod(t.H2[k - 1], mulmod(ik2, ik2, m2), m2);
        // binom(2k,k) = binom(2k-2,k-1) * 2(2k-1)/k
        const u64 ik3 = invmod(k, m3);
        t.C[k] = mulmod(t.C[k - 1], mulmod(2 * (2 * k - 1) % m3, ik3, m3), m3);
    }
    t.B[0] = 1;
    for (u64 k = 1; k <= n; ++k) {
        const u64 iodd = invmod(2 * k - 1, m3);
        t.OH[k] = addmod(t.OH[k - 1], iodd, m3);
        t.OH2[k] = addmod(t.OH2[k - 1], mulmod(iodd, iodd, m3), m3);
        t.B[k] = mulmod(t.B[k - 1], mulmod((n - k + 1) % m3, invmod(k, m3), m3), m3);
    }
    return t;
}

// Euler numbers E_0..E_{p-3} mod p; odd indices are zero.
struct EulerTable {
    u64 p = 0;
    std::vector<u64> E;  // indices 0..p-3

    Residue at(u64 k) const { return Residue(E.at(k), p); }
};

// Ground-truth Euler numbers from the defining recurrence
//   E_0 = 1,  sum_{k even, 0<=k<=n} binom(n,k) E_{n-k} = 0  (n >= 1),
// computed mod p in O(p^2). Guarded by the small-tier bound so sweeps over
// large ranges stay O(p) per prime (euler_pm3_fast covers those).
inline EulerTable euler_numbers_recurrence(const PrimeContext& ctx, u64 tier_bound = 500) {
    if (ctx.p > tier_bound) {
        throw TierExceeded("p = " + std::to_string(ctx.p) + " above small-tier bound " +
                           std::to_string(tier_bound));
    }
    EulerTable et;
    et.p = ctx.p;
    const u64 p = ctx.p;
    const u64 count = p - 2;  // indices 0..p-3
    et.E.assign(count, 0);
    et.E[0] = 1;
    for (u64 m = 1; m < count; ++m) {
        // E_m = -sum_{k even, 2<=k<=m} binom(m,k) E_{m-k}  (mod p)
        u64 acc = 0;
        u64 binom = 1;  // binom(m, k), updated incrementally
        for (u64 k = 1; k <= m; ++k) {
            binom = mulmod(binom, mulmod((m - k + 1) % p, invmod(k, p), p), p);
            if (k % 2 == 0) acc = addmod(acc, mulmod(binom, et.E[m - k], p), p);
        }
        et.E[m] = submod(0, acc, p);
    }
    return et;
}

// E_{p-3} mod p in O(1) from the tables:
//   H_{floor(p/4)}^{(2)} = (-1)^{(p-1)/2} * 4 * E_{p-3}  (mod p),  p > 5.
inline Residue euler_pm3_fast(const PrimeContext& ctx, const SequenceTables& tables) {
    if (ctx.p <= 5) throw Error("euler_pm3_fast requires p > 5");
    const u64 p = ctx.p;
    u64 h2q = tables.H2[p / 4] % p;
    u64 v = mulmod(h2q, invmod(4, p), p);
    if (ctx.p_mod4 == 3) v = submod(0, v, p);
    return Residue(v, p);
}

// E_n(x) = sum_{k=0}^{n} binom(n,k) (E_k / 2^k) (x - 1/2)^{n-k}, reduced mod p.
inline Residue euler_polynomial_at(u64 n, const Rational& x, const EulerTable& et,
                                   const PrimeContext& ctx) {
    const u64 p = ctx.p;
    if (et.p != p) throw Error("euler_polynomial_at: Euler table built for a different prime");
    if (n + 3 > p) throw Error("euler_polynomial_at: n must be at most p-3");
    const u64 t = rational_to_residue(x - rational(1, 2), p).value();
    const u64 inv2 = invmod(2, p);
    // powers t^{n-k}: iterate k downward so the power grows by one factor each step
    u64 acc = 0;
    u64 binom = 1;       // binom(n, k)
    u64 inv2k = 1;       // 2^{-k}
    std::vector<u64> tpow(n + 1);
    tpow[0] = 1;
    for (u64 i = 1; i <= n; ++i) tpow[i] = mulmod(tpow[i - 1], t, p);
    for (u64 k = 0; k <= n; ++k) {
        if (k > 0) {
            binom = mulmod(binom, mulmod((n - k + 1) % p, invmod(k, p), p), p);
            inv2k = mulmod(inv2k, inv2, p);
        }
        u64 term = mulmod(binom, mulmod(et.E[k], inv2k, p), p);
        acc = addmod(acc, mulmod(term, tpow[n - k], p), p);
    }
    return Residue(acc, p);
}

// Fibonacci and Lucas values at a common index, common modulus.
struct FibPair {
    Residue f;
    Residue l;
};

// (F_n, L_n) mod `modulus` by fast doubling, O(log n).
inline FibPair fib_lucas(u64 n, u64 modulus) {
    // (a, b) = (F_k, F_{k+1}), doubling on the bits of n from the top
    u64 a = 0, b = 1 % modulus;
    int bits = 0;
    for (u64 tmp = n; tmp; tmp >>= 1) ++bits;
    for (int i = bits - 1; i >= 0; --i) {
        u64 two_b_minus_a = submod(mulmod(2 % modulus, b, modulus), a, modulus);
        u64 f2k = mulmod(a, two_b_minus_a, modulus);
        u64 f2k1 = addmod(mulmod(a, a, modulus), mulmod(b, b, modulus), modulus);
        if ((n >> i) & 1) {
            a = f2k1;
            b = addmod(f2k, f2k1, modulus);
        } else {
            a = f2k;
            b = f2k1;
        }
    }
    u64 l = submod(mulmod(2 % modulus, b, modulus), a, modulus);
    return FibPair{Residue(a, modulus), Residue(l, modulus)};
}

// F_{p - (p/5)} is divisible by p; returns the quotient mod p.
// (p/5) is the Legendre symbol, so p = 5 is excluded.
inline Residue fib_quotient(const PrimeContext& ctx) {
    const u64 p = ctx.p;
    if (p == 5) throw Error("fib_quotient: (p/5) undefined for p = 5");
    const int leg5 = (p % 5 == 1 || p % 5 == 4) ? 1 : -1;
    const u64 index = leg5 == 1 ? p - 1 : p + 1;
    const u64 f = fib_lucas(index, ctx.m2).f.value();
    if (f % p != 0) {
        throw NotDivisible("F_" + std::to_string(index) + " not divisible by " +
                           std::to_string(p) + "; arithmetic bug");
    }
    return Residue((f / p) % p, p);
}

}  // namespace supercong
