#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef VERIFY_BIN
#error "VERIFY_BIN must point at the verify executable"
#endif

namespace {

struct CommandResult {
    int exit_code;
    std::string output;  // stdout only
};

CommandResult run(const std::string& args) {
    std::string cmd = std::string(VERIFY_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return CommandResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST(Cli, TwoSquares) {
    auto r = run("twosquares --prime 13");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output, "x=-3 y=2\n");
    EXPECT_EQ(run("twosquares --prime 7").exit_code, 2);
}

TEST(Cli, SingleCheck) {
    auto r = run("check --prime 3 --check C-THM11 --format text");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("lhs=24 rhs=24"), std::string::npos);
    EXPECT_NE(r.output.find("mod 27"), std::string::npos);
    EXPECT_NE(r.output.find("PASS"), std::string::npos);

    EXPECT_EQ(run("check --prime 7 --check C-THM12").exit_code, 2);  // not applicable
    EXPECT_EQ(run("check --prime 7 --check C-NOPE").exit_code, 2);   // unknown id
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("sweep --min 10 --max 5").exit_code, 2);
    EXPECT_EQ(run("sweep --format yaml").exit_code, 2);
    EXPECT_EQ(run("").exit_code, 2);  // subcommand required
}

TEST(Cli, SweepJsonReport) {
    std::string path = ::testing::TempDir() + "sweep_report.json";
    auto r = run("sweep --min 3 --max 60 --checks C-THM11,C-WOL --jobs 2 --format json --out " +
                 path);
    EXPECT_EQ(r.exit_code, 0);
    auto doc = nlohmann::json::parse(slurp(path));
    EXPECT_TRUE(doc.contains("meta"));
    EXPECT_TRUE(doc["meta"].contains("version"));
    EXPECT_TRUE(doc["meta"].contains("started"));
    ASSERT_TRUE(doc.contains("results"));
    EXPECT_FALSE(doc["results"].empty());
    for (const auto& row : doc["results"]) {
        EXPECT_TRUE(row["pass"].get<bool>());
    }
    std::remove(path.c_str());
}

TEST(Cli, OutExtensionSelectsFormat) {
    // a .json output path without --format yields a JSON report
    std::string path = ::testing::TempDir() + "inferred.json";
    auto r = run("sweep --min 3 --max 30 --checks C-THM11,C-THM12 --jobs 2 --out " + path);
    EXPECT_EQ(r.exit_code, 0);
    auto doc = nlohmann::json::parse(slurp(path));
    EXPECT_TRUE(doc.contains("results"));
    std::remove(path.c_str());
}

TEST(Cli, SweepCsvDeterministicAcrossJobs) {
    std::string p1 = ::testing::TempDir() + "sweep_j1.csv";
    std::string p8 = ::testing::TempDir() + "sweep_j8.csv";
    EXPECT_EQ(run("sweep --min 3 --max 200 --jobs 1 --format csv --out " + p1).exit_code, 0);
    EXPECT_EQ(run("sweep --min 3 --max 200 --jobs 8 --format csv --out " + p8).exit_code, 0);
    auto a = slurp(p1), b = slurp(p8);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, b);
    std::remove(p1.c_str());
    std::remove(p8.c_str());
}

TEST(Cli, JobsFromEnvironment) {
    std::string path = ::testing::TempDir() + "sweep_env.csv";
    std::string cmd = "VERIFY_JOBS=3 " + std::string(VERIFY_BIN) +
                      " sweep --min 3 --max 100 --checks C-WOL --format csv --out " + path +
                      " 2>/dev/null";
    EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
    EXPECT_NE(slurp(path).find("prime,check,modulus_exp,lhs,rhs,pass"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Cli, ListEnumeratesRegistry) {
    auto r = run("list");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("congruence checks (43)"), std::string::npos);
    EXPECT_NE(r.output.find("identities (22)"), std::string::npos);
    EXPECT_NE(r.output.find("C-THM11"), std::string::npos);
    EXPECT_NE(r.output.find("C-CHAIN-B5"), std::string::npos);
    EXPECT_NE(r.output.find("I-DBL"), std::string::npos);
}

TEST(Cli, IdentityCommand) {
    auto r = run("identity --ids I-DBL,I-ALT0 --n-max 6");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("ALL PASSED"), std::string::npos);
    EXPECT_EQ(run("identity --ids I-TYPO").exit_code, 2);
}

TEST(Cli, SweepTextGoesToStdout) {
    auto r = run("sweep --min 3 --max 40 --checks C-THM11 --format text");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("ALL PASSED"), std::string::npos);
    EXPECT_NE(r.output.find("C-THM11"), std::string::npos);
}
