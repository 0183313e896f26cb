#include <gtest/gtest.h>

#include "supercong/primes.hpp"
#include "supercong/quadforms.hpp"

using namespace supercong;

namespace {

// exhaustive two-squares search, used as the oracle
TwoSquares two_squares_brute(u64 p) {
    for (i64 a = 1; static_cast<u64>(a) * a <= p; a += 2) {
        u64 rest = p - static_cast<u64>(a) * a;
        u64 b = detail::isqrt_u64(rest);
        if (b * b == rest) {
            i64 x = (a % 4 == 1) ? a : -a;
            return TwoSquares{x, static_cast<i64>(b)};
        }
    }
    throw Error("no representation found");
}

}  // namespace

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre_symbol(2, 7), 1);
    EXPECT_EQ(legendre_symbol(2, 5), -1);
    EXPECT_EQ(legendre_symbol(7, 5), -1);  // 7 = 2 (mod 5)
    EXPECT_EQ(legendre_symbol(0, 7), 0);
    EXPECT_EQ(legendre_symbol(-1, 13), 1);
    EXPECT_EQ(legendre_symbol(-1, 7), -1);
}

TEST(Legendre, MatchesExhaustiveSquares) {
    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull}) {
        std::vector<bool> is_square(p, false);
        for (u64 r = 0; r < p; ++r) is_square[r * r % p] = true;
        for (u64 a = 0; a < p; ++a) {
            int expected = a == 0 ? 0 : (is_square[a] ? 1 : -1);
            EXPECT_EQ(legendre_symbol(static_cast<i64>(a), p), expected) << p << " " << a;
        }
    }
}

TEST(SqrtModP, Examples) {
    EXPECT_EQ(sqrt_mod_p(2, 7), 3u);
    EXPECT_EQ(sqrt_mod_p(1, 13), 1u);
    EXPECT_THROW(sqrt_mod_p(3, 5), NotAResidue);
}

TEST(SqrtModP, AllResiduesSmallPrimes) {
    // includes p = 1 (mod 8), which exercises the full Tonelli-Shanks loop
    for (u64 p : {5ull, 7ull, 13ull, 17ull, 41ull, 73ull, 89ull, 97ull, 65537ull}) {
        u64 checked = 0;
        for (u64 a = 1; a < std::min<u64>(p, 200); ++a) {
            if (legendre_symbol(static_cast<i64>(a), p) != 1) continue;
            u64 r = sqrt_mod_p(static_cast<i64>(a), p);
            EXPECT_EQ(mulmod(r, r, p), a % p) << p << " " << a;
            EXPECT_LE(r, (p - 1) / 2) << p << " " << a;
            ++checked;
        }
        EXPECT_GT(checked, 0u);
    }
}

TEST(TwoSquares, Examples) {
    auto r5 = two_squares(5);
    EXPECT_EQ(r5.x, 1);
    EXPECT_EQ(r5.y, 2);
    auto r13 = two_squares(13);
    EXPECT_EQ(r13.x, -3);
    EXPECT_EQ(r13.y, 2);
    EXPECT_THROW(two_squares(7), WrongResidueClass);
    EXPECT_THROW(two_squares(3), WrongResidueClass);
    EXPECT_THROW(two_squares(25), Error);  // composite
}

TEST(TwoSquares, NormalizationAndAgreementWithSearch) {
    for (u64 p : primes_in(5, 2000)) {
        if (p % 4 != 1) continue;
        auto ts = two_squares(p);
        EXPECT_EQ(static_cast<u64>(ts.x * ts.x + ts.y * ts.y), p) << p;
        EXPECT_EQ(signed_mod(ts.x, 4), 1u) << p;
        EXPECT_GE(ts.y, 0) << p;
        EXPECT_EQ(ts.y % 2, 0) << p;
        auto brute = two_squares_brute(p);
        EXPECT_EQ(ts.x, brute.x) << p;
        EXPECT_EQ(ts.y, brute.y) << p;
    }
}
