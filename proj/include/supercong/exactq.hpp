#pragma once

// Exact rational arithmetic and the combinatorial primitives used as the
// brute-force oracle for identity checking. Everything here is exact; no
// floating point is used anywhere in this library.

#include <gmpxx.h>

#include <string>

#include "supercong/errors.hpp"

namespace supercong {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class does not canonicalize on construction; all direct constructions
// go through here so that gcd(|num|, den) = 1 and den >= 1 hold.
inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational(const Integer& num, const Integer& den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Generalized binomial coefficient binom(a, k) = prod_{i=1..k} (a - i + 1)/i
// for rational a; reduces after every step, so intermediates stay small.
inline Rational gen_binomial(const Rational& a, unsigned long k) {
    Rational result = 1;
    Rational factor = a;
    for (unsigned long i = 1; i <= k; ++i) {
        result *= factor / static_cast<long>(i);
        factor -= 1;
    }
    return result;
}

// H_n^{(m)} = sum_{k=1..n} 1/k^m, with H_0^{(m)} = 0.
inline Rational exact_harmonic(unsigned long n, unsigned long m = 1) {
    Rational sum = 0;
    Integer km;
    for (unsigned long k = 1; k <= n; ++k) {
        mpz_ui_pow_ui(km.get_mpz_t(), k, m);
        sum += rational(1, km);
    }
    return sum;
}

// binom(2n, n) as an exact integer.
inline Integer exact_central_binom(unsigned long n) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    return b;
}

// binom(n, k) for (possibly negative) integer n.
inline Integer exact_binomial(long n, unsigned long k) {
    Integer b, nz(n);
    mpz_bin_ui(b.get_mpz_t(), nz.get_mpz_t(), k);
    return b;
}

}  // namespace supercong
