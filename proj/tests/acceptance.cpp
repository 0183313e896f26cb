// Acceptance suite: one test per exit criterion, each printing a final
// [CRITERION n] PASS/FAIL line. Everything here is exact-equality checking;
// no numeric tolerance exists anywhere.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>

#include "oracle.hpp"
#include "supercong/supercong.hpp"

using namespace supercong;
using supercong::testing::exact_eval;
using supercong::testing::oracle_specs;

namespace {

void report_line(int criterion, bool ok, const std::string& what) {
    std::printf("[CRITERION %d] %s - %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
}

u64 count_primes_in_class(u64 lo, u64 hi, u64 mod4) {
    u64 count = 0;
    for (u64 p : primes_in(lo, hi)) {
        if (p % 4 == mod4) ++count;
    }
    return count;
}

}  // namespace

TEST(Acceptance, Criterion1_FullRangeTheorem_To10000) {
    SweepOptions opt;
    opt.lo = 3;
    opt.hi = 10000;
    opt.checks = std::vector<std::string>{"C-THM11"};
    opt.jobs = 8;
    auto report = sweep(opt);

    const u64 expected = count_primes_in_class(3, 10000, 3);
    EXPECT_EQ(report.results.size(), expected);
    EXPECT_TRUE(report.failures.empty());
    for (const auto& r : report.results) EXPECT_TRUE(r.pass) << "p=" << r.prime;

    // spot anchor: p = 3 gives 24 = 24 (mod 27)
    ASSERT_FALSE(report.results.empty());
    EXPECT_EQ(report.results.front().prime, 3u);
    EXPECT_EQ(report.results.front().lhs, "24");
    EXPECT_EQ(report.results.front().rhs, "24");

    EXPECT_LE(report.duration.count(), 120000) << "sweep must finish within 120 s";
    report_line(1, !HasFailure(),
                "C-THM11 exact mod p^3 on " + std::to_string(report.results.size()) +
                    " primes = 3 (mod 4) in [3, 10000], " +
                    std::to_string(report.duration.count()) + " ms at jobs=8");
}

TEST(Acceptance, Criterion2_WeightedTheorem_To10000) {
    SweepOptions opt;
    opt.lo = 5;
    opt.hi = 10000;
    opt.checks = std::vector<std::string>{"C-THM12"};
    opt.jobs = 8;
    auto report = sweep(opt);

    const u64 expected = count_primes_in_class(5, 10000, 1);
    EXPECT_EQ(report.results.size(), expected);
    EXPECT_TRUE(report.failures.empty());

    // spot anchor: p = 5, x = 1, both sides 123 (mod 125)
    ASSERT_FALSE(report.results.empty());
    EXPECT_EQ(report.results.front().prime, 5u);
    EXPECT_EQ(report.results.front().lhs, "123");
    EXPECT_EQ(report.results.front().rhs, "123");

    report_line(2, !HasFailure(),
                "C-THM12 exact mod p^3 on " + std::to_string(report.results.size()) +
                    " primes = 1 (mod 4) in [5, 10000], " +
                    std::to_string(report.duration.count()) + " ms");
}

TEST(Acceptance, Criterion3_LemmaSuite_To2000) {
    SweepOptions opt;
    opt.lo = 3;
    opt.hi = 2000;
    opt.jobs = 8;
    opt.euler_tier_bound = 500;  // recurrence tier covers every applicable p <= 500
    auto report = sweep(opt);

    EXPECT_TRUE(report.failures.empty());
    for (const auto& r : report.failures) {
        ADD_FAILURE() << r.id << " p=" << r.prime << " lhs=" << r.lhs << " rhs=" << r.rhs
                      << " " << r.note;
    }
    // every registered congruence ran somewhere in the range
    EXPECT_EQ(report.counts.size(), congruence_registry().size());
    for (const auto& [id, counts] : report.counts) {
        EXPECT_GT(counts.passed, 0u) << id;
        EXPECT_EQ(counts.failed, 0u) << id;
    }
    report_line(3, !HasFailure(),
                "all " + std::to_string(report.counts.size()) +
                    " registry congruences pass on applicable primes <= 2000 (" +
                    std::to_string(report.results.size()) + " results, " +
                    std::to_string(report.duration.count()) + " ms)");
}

TEST(Acceptance, Criterion4_IdentitySuite_NTo25) {
    u64 cases = 0;
    for (const auto& entry : identity_registry()) {
        auto results = run_identity_domain(entry.id, 25);
        EXPECT_FALSE(results.empty()) << entry.id;
        for (const auto& r : results) {
            EXPECT_TRUE(r.pass) << entry.id << " " << r.params.str() << " lhs=" << r.lhs
                                << " rhs=" << r.rhs;
            ++cases;
        }
    }
    report_line(4, !HasFailure(),
                std::to_string(identity_registry().size()) + " identities hold exactly on " +
                    std::to_string(cases) + " parameter cases with n <= 25");
}

TEST(Acceptance, Criterion5_KernelOracleEquivalence_To100) {
    u64 compared = 0, error_paths = 0;
    for (u64 p : primes_in(3, 100)) {
        PrimeContext ctx = PrimeContext::make(p);
        SequenceTables t = build_tables(ctx);
        for (const auto& spec : oracle_specs(p)) {
            const u64 m = ctx.modulus(spec.mod_exp);
            bool threw = false;
            u64 modular = 0;
            try {
                modular = evaluate(spec, ctx, t).value();
            } catch (const DenominatorHitsZeroModP&) {
                threw = true;
            }
            if (threw) {
                bool hits = false;
                for (u64 k = spec.lo; k <= spec.hi; ++k) {
                    if (signed_mod(spec.a * static_cast<i64>(k) + spec.b, p) == 0) hits = true;
                }
                EXPECT_TRUE(hits) << "spurious refusal at p=" << p;
                ++error_paths;
                continue;
            }
            Rational exact = exact_eval(spec, p);
            EXPECT_EQ(modular, rational_to_residue(exact, m).value())
                << "p=" << p << " kernel=" << static_cast<int>(spec.kernel)
                << " a=" << spec.a << " b=" << spec.b << " m=" << spec.m
                << " hi=" << spec.hi << " e=" << spec.mod_exp;
            ++compared;
        }
    }
    report_line(5, !HasFailure(),
                "every kernel agrees with exact rational evaluation for p <= 100 (" +
                    std::to_string(compared) + " comparisons, " +
                    std::to_string(error_paths) + " consistent refusals)");
}

TEST(Acceptance, Criterion6_EulerCrossValidation_To500) {
    u64 checked = 0;
    for (u64 p : primes_in(7, 500)) {
        PrimeContext ctx = PrimeContext::make(p);
        SequenceTables t = build_tables(ctx);
        EulerTable et = euler_numbers_recurrence(ctx, 500);
        EXPECT_EQ(euler_pm3_fast(ctx, t).value(), et.E[p - 3]) << "p=" << p;
        ++checked;
    }
    report_line(6, !HasFailure(),
                "euler_pm3_fast matches the defining recurrence at p-3 for " +
                    std::to_string(checked) + " primes in [7, 500]");
}

TEST(Acceptance, Criterion7_TwoSquares_To1e6) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    u64 count = 0;
    bool all_ok = true;
    for_each_prime(5, 1000000, [&](u64 p) {
        if (p % 4 != 1) return;
        TwoSquares ts = two_squares(p);
        const bool ok = static_cast<u64>(ts.x) * ts.x + static_cast<u64>(ts.y) * ts.y == p &&
                        signed_mod(ts.x, 4) == 1 && ts.y >= 0 && ts.y % 2 == 0;
        if (!ok) {
            all_ok = false;
            ADD_FAILURE() << "p=" << p << " x=" << ts.x << " y=" << ts.y;
        }
        ++count;
    });
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);
    EXPECT_TRUE(all_ok);
    EXPECT_LE(elapsed.count(), 10000) << "two-squares sweep must finish within 10 s";

    // agreement with exhaustive search on the small range
    for (u64 p : primes_in(5, 10000)) {
        if (p % 4 != 1) continue;
        TwoSquares ts = two_squares(p);
        bool found = false;
        for (i64 a = 1; static_cast<u64>(a) * a <= p; a += 2) {
            u64 rest = p - static_cast<u64>(a) * a;
            u64 b = supercong::detail::isqrt_u64(rest);
            if (b * b == rest) {
                i64 x = (a % 4 == 1) ? a : -a;
                EXPECT_EQ(ts.x, x) << p;
                EXPECT_EQ(ts.y, static_cast<i64>(b)) << p;
                found = true;
                break;
            }
        }
        EXPECT_TRUE(found) << p;
    }
    report_line(7, !HasFailure(),
                "two-squares normalization verified for " + std::to_string(count) +
                    " primes = 1 (mod 4) up to 10^6 in " + std::to_string(elapsed.count()) +
                    " ms, exhaustive agreement to 10^4");
}

TEST(Acceptance, Criterion8_DeterministicReports) {
    SweepOptions opt;
    opt.lo = 3;
    opt.hi = 2000;
    opt.jobs = 1;
    auto a = sweep(opt);
    opt.jobs = 8;
    auto b = sweep(opt);

    ASSERT_EQ(a.results.size(), b.results.size());
    for (size_t i = 0; i < a.results.size(); ++i) {
        EXPECT_EQ(a.results[i].prime, b.results[i].prime);
        EXPECT_EQ(a.results[i].id, b.results[i].id);
        EXPECT_EQ(a.results[i].lhs, b.results[i].lhs);
        EXPECT_EQ(a.results[i].rhs, b.results[i].rhs);
        EXPECT_EQ(a.results[i].pass, b.results[i].pass);
        EXPECT_EQ(a.results[i].modulus_exp, b.results[i].modulus_exp);
    }
    // serialized result payloads are byte-identical
    EXPECT_EQ(sweep_report_csv(a), sweep_report_csv(b));
    EXPECT_EQ(sweep_report_json(a)["results"].dump(), sweep_report_json(b)["results"].dump());
    report_line(8, !HasFailure(),
                "sweeps over [3, 2000] at jobs=1 and jobs=8 produce identical reports (" +
                    std::to_string(a.results.size()) + " rows)");
}
