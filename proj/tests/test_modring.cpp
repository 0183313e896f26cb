#include <gtest/gtest.h>

#include <random>

#include "supercong/modring.hpp"
#include "supercong/primes.hpp"

using namespace supercong;

TEST(ModInverse, Examples) {
    EXPECT_EQ(mod_inverse(Residue(1, 27)).value(), 1u);
    EXPECT_EQ(mod_inverse(Residue(16, 27)).value(), 22u);
    EXPECT_THROW(mod_inverse(Residue(3, 27)), NotInvertible);
}

TEST(ModPow, Examples) {
    EXPECT_EQ(mod_pow(Residue(2, 343), 6).value(), 64u);
    EXPECT_EQ(mod_pow(Residue(2, 343), 0).value(), 1u);
    EXPECT_EQ(mod_pow(Residue(4, 125), 4).value(), 6u);
}

TEST(ModInverse, InvolutionOnRandomUnits) {
    std::mt19937_64 rng(20240811);
    for (u64 p : {3ull, 7ull, 97ull, 65521ull}) {
        for (int e = 1; e <= 3; ++e) {
            u64 m = 1;
            for (int i = 0; i < e; ++i) m *= p;
            for (int trial = 0; trial < 50; ++trial) {
                u64 a = rng() % m;
                if (a % p == 0) continue;
                Residue r(a, m);
                EXPECT_EQ(mod_inverse(mod_inverse(r)), r);
                EXPECT_EQ((r * mod_inverse(r)).value(), 1u);
            }
        }
    }
}

TEST(Residue, MixingModuliThrows) {
    Residue a(3, 27), b(3, 49);
    EXPECT_THROW(a + b, ModulusMismatch);
    EXPECT_THROW(a * b, ModulusMismatch);
}

TEST(RationalToResidue, Examples) {
    EXPECT_EQ(rational_to_residue(rational(9, 16), 27).value(), 9u);
    EXPECT_EQ(rational_to_residue(rational(0, 1), 343).value(), 0u);
    EXPECT_THROW(rational_to_residue(rational(1, 3), 27), DenominatorDivisibleByP);
    // canonicalizes before inspecting the denominator
    EXPECT_EQ(rational_to_residue(Rational(3, 12), 27).value(),
              rational_to_residue(rational(1, 4), 27).value());
}

TEST(RationalToResidue, RingHomomorphismOnRandomSamples) {
    std::mt19937_64 rng(7);
    const u64 p = 13, m = p * p * p;
    for (int trial = 0; trial < 200; ++trial) {
        long n1 = static_cast<long>(rng() % 2001) - 1000;
        long n2 = static_cast<long>(rng() % 2001) - 1000;
        long d1 = static_cast<long>(rng() % 500) + 1;
        long d2 = static_cast<long>(rng() % 500) + 1;
        if (d1 % p == 0 || d2 % p == 0) continue;
        Rational q1 = rational(n1, d1), q2 = rational(n2, d2);
        if (mpz_fdiv_ui(q1.get_den().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(q2.get_den().get_mpz_t(), p) == 0) continue;
        Rational sum = q1 + q2, prod = q1 * q2;
        EXPECT_EQ(rational_to_residue(sum, m),
                  rational_to_residue(q1, m) + rational_to_residue(q2, m));
        EXPECT_EQ(rational_to_residue(prod, m),
                  rational_to_residue(q1, m) * rational_to_residue(q2, m));
    }
}

TEST(FermatQuotient, Examples) {
    auto ctx7 = PrimeContext::make(7);
    EXPECT_EQ(fermat_quotient(2, ctx7).value(), 9u);
    EXPECT_EQ(fermat_quotient(2, ctx7).modulus(), 49u);
    EXPECT_EQ(fermat_quotient(1, ctx7).value(), 0u);
    EXPECT_THROW(fermat_quotient(7, ctx7), NotCoprime);
    auto ctx5 = PrimeContext::make(5);
    EXPECT_EQ(fermat_quotient(2, ctx5).value(), 3u);
}

TEST(FermatQuotient, ExactLiftToPCubes) {
    // p * q_p(a) + 1 = a^{p-1} (mod p^3) for several a and p
    for (u64 p : primes_in(3, 200)) {
        auto ctx = PrimeContext::make(p);
        for (i64 a : {2, 3, 10, -6}) {
            if (signed_mod(a, p) == 0) continue;
            u64 q = fermat_quotient(a, ctx).value();
            u64 lhs = addmod(mulmod(p, q, ctx.m3), 1, ctx.m3);
            EXPECT_EQ(lhs, powmod(signed_mod(a, ctx.m3), p - 1, ctx.m3))
                << "a=" << a << " p=" << p;
        }
    }
}

TEST(PrimeContext, InvariantsOnSmallPrimes) {
    for (u64 p : primes_in(3, 200)) {
        auto ctx = PrimeContext::make(p);
        EXPECT_EQ(ctx.m2, p * p);
        EXPECT_EQ(ctx.m3, p * p * p);
        EXPECT_EQ(ctx.p_mod4, static_cast<int>(p % 4));
        // (2/p) = +1 iff p = +-1 (mod 8)
        int expected = (p % 8 == 1 || p % 8 == 7) ? 1 : -1;
        EXPECT_EQ(ctx.leg2, expected);
        EXPECT_EQ(ctx.leg2 == 1 ? 1u : p - 1, powmod(2, (p - 1) / 2, p));
        // p * qp2 = 2^{p-1} - 1 (mod p^3)
        EXPECT_EQ(mulmod(p, ctx.qp2.value(), ctx.m3),
                  submod(powmod(2, p - 1, ctx.m3), 1, ctx.m3));
    }
}

TEST(PrimeContext, RejectsNonOddPrimes) {
    EXPECT_THROW(PrimeContext::make(1), Error);
    EXPECT_THROW(PrimeContext::make(2), Error);
    EXPECT_THROW(PrimeContext::make(9), Error);
    EXPECT_THROW(PrimeContext::make(561), Error);  // Carmichael
}

TEST(IsPrime, KnownValues) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(3));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(561));
    EXPECT_FALSE(is_prime(1ull << 40));
    EXPECT_TRUE(is_prime((1ull << 61) - 1));
    EXPECT_TRUE(is_prime(65521));
}

TEST(Primes, SieveMatchesMillerRabin) {
    auto sieved = primes_in(0, 2000);
    std::vector<u64> direct;
    for (u64 n = 0; n <= 2000; ++n) {
        if (is_prime(n)) direct.push_back(n);
    }
    EXPECT_EQ(sieved, direct);
}

TEST(Primes, SegmentBoundaries) {
    // window straddling the 2^16 segment edge
    auto ps = primes_in(65520, 65600);
    for (u64 p : ps) EXPECT_TRUE(is_prime(p));
    u64 count = 0;
    for (u64 n = 65520; n <= 65600; ++n) {
        if (is_prime(n)) ++count;
    }
    EXPECT_EQ(ps.size(), count);
    EXPECT_EQ(ps.front(), 65521u);
}
