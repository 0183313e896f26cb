#pragma once

// O(range) evaluators for the finite sums appearing in the congruence
// registry. Six kernel shapes cover them; each kernel is a single
// left-to-right pass maintaining the running power of its base.
//
// A denominator that reduces to 0 mod p makes the evaluator fail loudly with
// the offending index instead of skipping the term: the registry's ranges are
// chosen so that never happens, so it signals a mis-transcribed check.

#include <cstdint>

#include "supercong/sequences.hpp"

namespace supercong {

enum class CentralWeight { One, KPlusOne, TwoKPlusOne };
enum class SumRange { FullRow, HalfRow };
enum class HarmonicWeight { None, H };
enum class SquareWeight { One, K, TwoKPlusOne };
enum class SquareHarmonic { None, H, HSq, H2, TwoHSqPlusH2 };

// sum_{k=0}^{hi} w(k) * binom(2k,k)^2 / base^k  (mod p^3),
// w in {1, k+1, 2k+1}, base in {8, -16, 16}, hi in {p-1, (p-1)/2}.
inline Residue sum_weighted_central_sq(CentralWeight weight, i64 base, SumRange range,
                                       const PrimeContext& ctx, const SequenceTables& t) {
    const u64 m = ctx.m3;
    const u64 hi = range == SumRange::FullRow ? ctx.p - 1 : ctx.half();
    const u64 binv = invmod(signed_mod(base, m), m);
    u64 acc = 0, bpow = 1;
    for (u64 k = 0; k <= hi; ++k) {
        u64 w = 1;
        if (weight == CentralWeight::KPlusOne) w = (k + 1) % m;
        if (weight == CentralWeight::TwoKPlusOne) w = (2 * k + 1) % m;
        u64 term = mulmod(mulmod(t.C[k], t.C[k], m), mulmod(bpow, w, m), m);
        acc = addmod(acc, term, m);
        bpow = mulmod(bpow, binv, m);
    }
    return Residue(acc, m);
}

// sum_{k=lo}^{hi} binom(2k,k) * base^k / (a*k+b)^m  (mod p^e).
inline Residue sum_central_over_affine_pow(i64 a, i64 b, unsigned m, const Rational& base,
                                           u64 lo, u64 hi, int mod_exp,
                                           const PrimeContext& ctx, const SequenceTables& t) {
    const u64 mm = ctx.modulus(mod_exp);
    if (lo > hi) return Residue(0, mm);
    if (hi > ctx.p - 1) {
        throw Error("sum_central_over_affine_pow: hi beyond central binomial table");
    }
    const u64 br = rational_to_residue(base, mm).value();
    u64 acc = 0;
    u64 bpow = powmod(br, lo, mm);
    for (u64 k = lo; k <= hi; ++k) {
        const i64 d = a * static_cast<i64>(k) + b;
        u64 inv_den = 1;
        if (m >= 1) {
            if (signed_mod(d, ctx.p) == 0) {
                throw DenominatorHitsZeroModP("a*k+b = " + std::to_string(d) +
                                                  " divisible by p = " + std::to_string(ctx.p),
                                              k);
            }
            inv_den = powmod(invmod(signed_mod(d, mm), mm), m, mm);
        }
        acc = addmod(acc, mulmod(t.C[k] % mm, mulmod(bpow, inv_den, mm), mm), mm);
        bpow = mulmod(bpow, br, mm);
    }
    return Residue(acc, mm);
}

// sum_{k=lo}^{hi} base^k / ((a*k+b)^m * binom(2k,k))  (mod p^e);
// requires k <= (p-1)/2 so the central binomial stays invertible.
inline Residue sum_inv_central_over_affine_pow(i64 a, i64 b, unsigned m, const Rational& base,
                                               u64 lo, u64 hi, int mod_exp,
                                               const PrimeContext& ctx,
                                               const SequenceTables& t) {
    const u64 mm = ctx.modulus(mod_exp);
    if (lo > hi) return Residue(0, mm);
    if (hi > ctx.p - 1) {
        throw Error("sum_inv_central_over_affine_pow: hi beyond central binomial table");
    }
    const u64 br = rational_to_residue(base, mm).value();
    u64 acc = 0;
    u64 bpow = powmod(br, lo, mm);
    for (u64 k = lo; k <= hi; ++k) {
        if (t.C[k] % ctx.p == 0) {
            throw DenominatorHitsZeroModP("binom(2k,k) divisible by p = " + std::to_string(ctx.p),
                                          k);
        }
        u64 term = mulmod(bpow, invmod(t.C[k] % mm, mm), mm);
        if (m >= 1) {
            const i64 d = a * static_cast<i64>(k) + b;
            if (signed_mod(d, ctx.p) == 0) {
                throw DenominatorHitsZeroModP("a*k+b = " + std::to_string(d) +
                                                  " divisible by p = " + std::to_string(ctx.p),
                                              k);
            }
            term = mulmod(term, powmod(invmod(signed_mod(d, mm), mm), m, mm), mm);
        }
        acc = addmod(acc, term, mm);
        bpow = mulmod(bpow, br, mm);
    }
    return Residue(acc, mm);
}

// sum_{k=lo}^{hi} binom((p-1)/2, k) * (-1)^k * [H_k] / (a*k+b)  (mod p^e),
// e <= 2 when the harmonic weight is used (H_k is tabulated mod p^2).
inline Residue sum_halfbinom_alt_affine(i64 a, i64 b, HarmonicWeight hw, u64 lo, u64 hi,
                                        int mod_exp, const PrimeContext& ctx,
                                        const SequenceTables& t) {
    const u64 mm = ctx.modulus(mod_exp);
    if (hw == HarmonicWeight::H && mod_exp > 2) {
        throw Error("sum_halfbinom_alt_affine: harmonic weight only available mod p^2");
    }
    if (lo > hi) return Residue(0, mm);
    if (hi > ctx.half()) {
        throw Error("sum_halfbinom_alt_affine: hi beyond half-binomial table");
    }
    u64 acc = 0;
    bool negative = (lo % 2 == 1);
    for (u64 k = lo; k <= hi; ++k) {
        const i64 d = a * static_cast<i64>(k) + b;
        if (signed_mod(d, ctx.p) == 0) {
            throw DenominatorHitsZeroModP("a*k+b = " + std::to_string(d) +
                                              " divisible by p = " + std::to_string(ctx.p),
                                          k);
        }
        u64 term = mulmod(t.B[k] % mm, invmod(signed_mod(d, mm), mm), mm);
        if (hw == HarmonicWeight::H) term = mulmod(term, t.H[k] % mm, mm);
        acc = negative ? submod(acc, term, mm) : addmod(acc, term, mm);
        negative = !negative;
    }
    return Residue(acc, mm);
}

// sum_{k=0}^{(p-1)/2} w(k) * (-1)^k * binom((p-1)/2, k)^2 * hw(k)  (mod p^2),
// w in {1, k, 2k+1}, hw in {1, H_k, H_k^2, H_k^{(2)}, 2H_k^2 + H_k^{(2)}}.
inline Residue sum_halfbinom_sq_weighted(SquareWeight weight, SquareHarmonic hw,
                                         const PrimeContext& ctx, const SequenceTables& t) {
    const u64 m = ctx.m2;
    u64 acc = 0;
    bool negative = false;
    for (u64 k = 0; k <= ctx.half(); ++k) {
        u64 term = mulmod(t.B[k] % m, t.B[k] % m, m);
        switch (weight) {
            case SquareWeight::One: break;
            case SquareWeight::K: term = mulmod(term, k % m, m); break;
            case SquareWeight::TwoKPlusOne: term = mulmod(term, (2 * k + 1) % m, m); break;
        }
        switch (hw) {
            case SquareHarmonic::None: break;
            case SquareHarmonic::H: term = mulmod(term, t.H[k], m); break;
            case SquareHarmonic::HSq: term = mulmod(term, mulmod(t.H[k], t.H[k], m), m); break;
            case SquareHarmonic::H2: term = mulmod(term, t.H2[k], m); break;
            case SquareHarmonic::TwoHSqPlusH2:
                term = mulmod(term,
                              addmod(mulmod(2, mulmod(t.H[k], t.H[k], m), m), t.H2[k], m), m);
                break;
        }
        acc = negative ? submod(acc, term, m) : addmod(acc, term, m);
        negative = !negative;
    }
    return Residue(acc, m);
}

// binom(num/den, k) = prod_{i=1..k} ((num/den) - i + 1)/i, reduced mod `modulus`.
inline Residue genbinom_residue(i64 num, i64 den, u64 k, u64 modulus) {
    u64 acc = 1 % modulus;
    for (u64 i = 1; i <= k; ++i) {
        const i64 numerator = num - static_cast<i64>(i - 1) * den;
        const i64 denominator = den * static_cast<i64>(i);
        u64 inv;
        try {
            inv = invmod(signed_mod(denominator, modulus), modulus);
        } catch (const NotInvertible&) {
            throw DenominatorDivisibleByP("genbinom_residue: " + std::to_string(denominator) +
                                          " not invertible modulo " + std::to_string(modulus));
        }
        acc = mulmod(acc, mulmod(signed_mod(numerator, modulus), inv, modulus), modulus);
    }
    return Residue(acc, modulus);
}

// A kernel invocation as data; used by the data-driven oracle tests and by
// callers that want a single evaluation entry point.
struct SumSpec {
    enum class Kernel {
        WeightedCentralSq,
        CentralOverAffine,
        InvCentralOverAffine,
        HalfbinomAltAffine,
        HalfbinomSqWeighted,
        GenBinom,
    };

    Kernel kernel = Kernel::WeightedCentralSq;
    int mod_exp = 3;

    // WeightedCentralSq
    CentralWeight weight = CentralWeight::One;
    i64 base_int = 8;
    SumRange range = SumRange::FullRow;

    // affine kernels
    i64 a = 1, b = 0;
    unsigned m = 1;
    Rational base = Rational(1);
    u64 lo = 0, hi = 0;
    HarmonicWeight hweight = HarmonicWeight::None;

    // HalfbinomSqWeighted
    SquareWeight sq_weight = SquareWeight::One;
    SquareHarmonic sq_harmonic = SquareHarmonic::None;

    // GenBinom
    i64 gb_num = -1, gb_den = 4;
    u64 gb_k = 0;
};

inline Residue evaluate(const SumSpec& s, const PrimeContext& ctx, const SequenceTables& t) {
    switch (s.kernel) {
        case SumSpec::Kernel::WeightedCentralSq:
            return sum_weighted_central_sq(s.weight, s.base_int, s.range, ctx, t);
        case SumSpec::Kernel::CentralOverAffine:
            return sum_central_over_affine_pow(s.a, s.b, s.m, s.base, s.lo, s.hi, s.mod_exp,
                                               ctx, t);
        case SumSpec::Kernel::InvCentralOverAffine:
            return sum_inv_central_over_affine_pow(s.a, s.b, s.m, s.base, s.lo, s.hi,
                                                   s.mod_exp, ctx, t);
        case SumSpec::Kernel::HalfbinomAltAffine:
            return sum_halfbinom_alt_affine(s.a, s.b, s.hweight, s.lo, s.hi, s.mod_exp, ctx, t);
        case SumSpec::Kernel::HalfbinomSqWeighted:
            return sum_halfbinom_sq_weighted(s.sq_weight, s.sq_harmonic, ctx, t);
        case SumSpec::Kernel::GenBinom:
            return genbinom_residue(s.gb_num, s.gb_den, s.gb_k, ctx.modulus(s.mod_exp));
    }
    throw Error("evaluate: unknown kernel");
}

}  // namespace supercong
