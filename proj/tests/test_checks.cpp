#include <gtest/gtest.h>

#include "supercong/checks.hpp"
#include "supercong/report.hpp"

using namespace supercong;

TEST(Registry, SizeAndIds) {
    EXPECT_EQ(congruence_registry().size(), 43u);
    for (const auto& c : congruence_registry()) {
        EXPECT_FALSE(c.id.empty());
        EXPECT_FALSE(c.reference.empty());
        EXPECT_GE(c.modulus_exp, 1);
        EXPECT_LE(c.modulus_exp, 3);
        EXPECT_FALSE(c.app.str().empty());
        EXPECT_EQ(&find_check(c.id), &c);
    }
    EXPECT_THROW(find_check("C-NOPE"), UnknownCheck);
}

TEST(RunCheck, TheoremBaseCases) {
    auto r11 = run_check("C-THM11", 3);
    EXPECT_TRUE(r11.pass);
    EXPECT_EQ(r11.lhs, "24");
    EXPECT_EQ(r11.rhs, "24");
    EXPECT_EQ(r11.modulus_exp, 3);

    auto r12 = run_check("C-THM12", 5);
    EXPECT_TRUE(r12.pass);
    EXPECT_EQ(r12.lhs, "123");
    EXPECT_EQ(r12.rhs, "123");
}

TEST(RunCheck, Applicability) {
    EXPECT_THROW(run_check("C-THM12", 7), NotApplicable);   // 7 = 3 (mod 4)
    EXPECT_THROW(run_check("C-THM11", 13), NotApplicable);  // 13 = 1 (mod 4)
    EXPECT_THROW(run_check("C-HPQ", 5), NotApplicable);     // requires p > 5
    EXPECT_THROW(run_check("C-WOL", 4), NotApplicable);     // 4 not prime
    EXPECT_THROW(run_check("C-SUND", 521), NotApplicable);  // above small tier
    EXPECT_NO_THROW(run_check("C-SUND", 499));
}

TEST(RunCheck, SpotValues) {
    // a sample across moduli and residue classes
    for (auto [id, p] : std::vector<std::pair<const char*, u64>>{
             {"C-WOL", 5},    {"C-WOL", 97},   {"C-MOR", 11},    {"C-REFL", 13},
             {"C-L21", 3},    {"C-L22a", 7},   {"C-SZW", 11},    {"C-RV", 5},
             {"C-SUNE", 5},   {"C-CD", 5},     {"C-CD", 13},     {"C-KMY", 13},
             {"C-MPT", 7},    {"C-HALF16", 3}, {"C-TAIL", 3},    {"C-ZHU1", 7},
             {"C-CHAIN-A1", 7},               {"C-CHAIN-A5", 7}, {"C-FIB", 7},
             {"C-K18K", 13},  {"C-2K16K", 13}, {"C-CHAIN-B3", 13}, {"C-RM25", 13},
             {"C-L31a", 13},  {"C-L31b", 13},  {"C-L32", 13},    {"C-SUN-R3", 7},
             {"C-HPQ", 7},    {"C-H2Q", 7},    {"C-SUND", 5},    {"C-FIB", 11}}) {
        auto r = run_check(id, p);
        EXPECT_TRUE(r.pass) << id << " p=" << p << " lhs=" << r.lhs << " rhs=" << r.rhs
                            << " " << r.note;
    }
}

TEST(Sweep, CountsApplicablePrimes) {
    SweepOptions opt;
    opt.lo = 3;
    opt.hi = 100;
    opt.checks = std::vector<std::string>{"C-THM11"};
    auto report = sweep(opt);
    // primes = 3 (mod 4) up to 100: 3,7,11,19,23,31,43,47,59,67,71,79,83
    EXPECT_EQ(report.results.size(), 13u);
    EXPECT_EQ(report.counts.at("C-THM11").passed, 13u);
    EXPECT_EQ(report.counts.at("C-THM11").failed, 0u);
    EXPECT_TRUE(report.failures.empty());

    opt.checks = std::vector<std::string>{"C-WOL"};
    report = sweep(opt);
    // applicable p in {5, ..., 97}
    EXPECT_EQ(report.results.size(), 23u);
    EXPECT_EQ(report.results.front().prime, 5u);
    EXPECT_EQ(report.results.back().prime, 97u);
    EXPECT_EQ(report.counts.at("C-WOL").failed, 0u);
}

TEST(Sweep, EmptyCheckSetGivesEmptyReport) {
    SweepOptions opt;
    opt.lo = 3;
    opt.hi = 100;
    opt.checks = std::vector<std::string>{};
    auto report = sweep(opt);
    EXPECT_TRUE(report.results.empty());
    EXPECT_TRUE(report.counts.empty());
    EXPECT_TRUE(report.failures.empty());
}

TEST(Sweep, InvalidBoundsThrow) {
    SweepOptions opt;
    opt.lo = 10;
    opt.hi = 5;
    EXPECT_THROW(sweep(opt), Error);
    opt.lo = 3;
    opt.hi = 1ull << 22;  // p^3 would overflow
    EXPECT_THROW(sweep(opt), Error);
}

TEST(Sweep, UnknownCheckRejected) {
    SweepOptions opt;
    opt.checks = std::vector<std::string>{"C-THM11", "C-TYPO"};
    EXPECT_THROW(sweep(opt), UnknownCheck);
}

TEST(Sweep, DeterministicAcrossParallelism) {
    SweepOptions opt;
    opt.lo = 3;
    opt.hi = 300;
    opt.jobs = 1;
    auto a = sweep(opt);
    opt.jobs = 4;
    auto b = sweep(opt);
    ASSERT_EQ(a.results.size(), b.results.size());
    for (size_t i = 0; i < a.results.size(); ++i) {
        EXPECT_EQ(a.results[i].prime, b.results[i].prime);
        EXPECT_EQ(a.results[i].id, b.results[i].id);
        EXPECT_EQ(a.results[i].lhs, b.results[i].lhs);
        EXPECT_EQ(a.results[i].rhs, b.results[i].rhs);
        EXPECT_EQ(a.results[i].pass, b.results[i].pass);
    }
    EXPECT_EQ(sweep_report_csv(a), sweep_report_csv(b));
}

TEST(Sweep, ExploratoryRowsAreSeparate) {
    SweepOptions opt;
    opt.lo = 3;
    opt.hi = 120;
    opt.checks = std::vector<std::string>{"C-CHAIN-A5"};
    auto plain = sweep(opt);
    EXPECT_TRUE(plain.exploratory.empty());
    for (const auto& r : plain.results) EXPECT_EQ(r.prime % 4, 3u);

    opt.exploratory = true;
    auto probed = sweep(opt);
    EXPECT_EQ(probed.results.size(), plain.results.size());
    EXPECT_FALSE(probed.exploratory.empty());
    for (const auto& r : probed.exploratory) {
        EXPECT_EQ(r.prime % 4, 1u);
        EXPECT_GT(r.prime, 5u);
    }
    // exploratory rows never count as failures
    EXPECT_TRUE(probed.failures.empty());
}

TEST(EulerTiers, ConsistentResultsForSmallPrimes) {
    // checks consuming E_{p-3} give identical results on both tiers
    for (const char* id : {"C-HPQ", "C-SUNE", "C-CD", "C-2K16K"}) {
        const auto& check = find_check(id);
        for (u64 p : primes_in(7, 200)) {
            if (!check.app.applies(p, 500)) continue;
            EvalOptions small{500}, fast{0};
            auto a = run_check(id, p, small);
            auto b = run_check(id, p, fast);
            EXPECT_EQ(a.lhs, b.lhs) << id << " p=" << p;
            EXPECT_EQ(a.rhs, b.rhs) << id << " p=" << p;
            EXPECT_TRUE(a.pass && b.pass) << id << " p=" << p;
        }
    }
}

TEST(Reports, JsonShape) {
    SweepOptions opt;
    opt.lo = 3;
    opt.hi = 30;
    opt.checks = std::vector<std::string>{"C-THM11", "C-WOL"};
    auto report = sweep(opt);
    auto j = sweep_report_json(report);
    ASSERT_TRUE(j.contains("meta"));
    EXPECT_EQ(j["meta"]["version"], kVersion);
    EXPECT_EQ(j["meta"]["range"][0], 3);
    EXPECT_EQ(j["meta"]["range"][1], 30);
    ASSERT_TRUE(j.contains("results"));
    ASSERT_FALSE(j["results"].empty());
    const auto& row = j["results"][0];
    EXPECT_TRUE(row.contains("prime"));
    EXPECT_TRUE(row.contains("check"));
    EXPECT_TRUE(row.contains("modulus"));
    EXPECT_TRUE(row.contains("lhs"));
    EXPECT_TRUE(row.contains("rhs"));
    EXPECT_TRUE(row.contains("pass"));
    EXPECT_EQ(row["modulus"], "p^3");
    // residues serialize as decimal strings
    EXPECT_TRUE(row["lhs"].is_string());
}
