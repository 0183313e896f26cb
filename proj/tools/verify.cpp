// Command-line front end: prime sweeps, single congruence checks, identity
// runs, two-squares queries and registry listing.
//
// Exit codes: 0 if everything checked passed, 1 if at least one check failed,
// 2 for usage or configuration errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supercong/supercong.hpp"

namespace {

using namespace supercong;

int write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    out << payload;
    return 0;
}

int cmd_sweep(const SweepOptions& opt, const std::string& format, const std::string& out_path) {
    SweepReport report = sweep(opt);
    std::string payload;
    if (format == "json") {
        payload = sweep_report_json(report).dump(2);
        payload += '\n';
    } else if (format == "csv") {
        payload = sweep_report_csv(report);
    } else {
        std::ostringstream os;
        print_sweep_text(os, report);
        payload = os.str();
    }
    if (int rc = write_output(out_path, payload)) return rc;
    std::cerr << "sweep [" << report.lo << ", " << report.hi << "]: "
              << report.results.size() << " results, " << report.failures.size()
              << " failures, " << report.duration.count() << " ms\n";
    return report.failures.empty() ? 0 : 1;
}

int cmd_check(u64 prime, const std::string& id, const std::string& format, u64 tier) {
    EvalOptions opts;
    opts.euler_tier_bound = tier;
    CheckResult r = run_check(id, prime, opts);
    if (format == "json") {
        auto row = result_json(r);
        if (!r.note.empty()) row["note"] = r.note;
        std::cout << row.dump(2) << "\n";
    } else {
        print_result_text(std::cout, r);
    }
    return r.pass ? 0 : 1;
}

int cmd_identity(std::vector<std::string> ids, unsigned n_max, const std::string& format,
                 const std::string& out_path) {
    if (ids.empty()) {
        for (const auto& entry : identity_registry()) ids.push_back(entry.id);
    }
    std::vector<IdentityResult> results;
    for (const auto& id : ids) {
        auto rows = run_identity_domain(id, n_max);
        results.insert(results.end(), rows.begin(), rows.end());
    }
    u64 failed = 0;
    std::string payload;
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : results) {
            rows.push_back(identity_result_json(r));
            if (!r.pass) ++failed;
        }
        payload = nlohmann::json{{"meta", {{"version", kVersion}, {"n_max", n_max}}},
                                 {"results", rows}}
                      .dump(2);
        payload += '\n';
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            print_identity_text(os, r);
            if (!r.pass) ++failed;
        }
        os << (failed == 0 ? "ALL PASSED" : "FAILURES PRESENT") << " ("
           << results.size() - failed << " passed, " << failed << " failed)\n";
        payload = os.str();
    }
    if (int rc = write_output(out_path, payload)) return rc;
    return failed == 0 ? 0 : 1;
}

int cmd_twosquares(u64 prime) {
    TwoSquares ts = two_squares(prime);
    std::cout << "x=" << ts.x << " y=" << ts.y << "\n";
    return 0;
}

int cmd_list() {
    const auto& checks = congruence_registry();
    std::cout << "congruence checks (" << checks.size() << "):\n";
    for (const auto& c : checks) {
        std::cout << "  " << c.id << "  [mod " << modulus_label(c.modulus_exp) << "; "
                  << c.app.str() << "]\n      " << c.reference << "\n";
    }
    const auto& identities = identity_registry();
    std::cout << "identities (" << identities.size() << "):\n";
    for (const auto& entry : identities) {
        std::cout << "  " << entry.id << "  [" << entry.domain << "]\n      "
                  << entry.reference << "\n";
    }
    return 0;
}

// --out report.json without an explicit --format means a JSON report
std::string format_for(const std::string& requested, bool requested_explicitly,
                       const std::string& out_path) {
    if (requested_explicitly || out_path.empty()) return requested;
    auto ends_with = [&](const char* suffix) {
        std::string s(suffix);
        return out_path.size() >= s.size() &&
               out_path.compare(out_path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".json")) return "json";
    if (ends_with(".csv")) return "csv";
    return requested;
}

unsigned jobs_from_env(unsigned fallback) {
    const char* env = std::getenv("VERIFY_JOBS");
    if (!env) return fallback;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return fallback;
    return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verify: exact checker for central binomial coefficient congruences"};
    app.require_subcommand(1);

    // sweep
    SweepOptions sweep_opt;
    std::vector<std::string> sweep_checks;
    std::string sweep_format = "text", sweep_out;
    auto* sc_sweep = app.add_subcommand("sweep", "run checks over a range of primes");
    sc_sweep->add_option("--min", sweep_opt.lo, "lowest prime (default 3)");
    sc_sweep->add_option("--max", sweep_opt.hi, "highest prime (default 10000)");
    auto* checks_opt =
        sc_sweep->add_option("--checks", sweep_checks, "comma-separated check ids (default all)")
            ->delimiter(',');
    auto* jobs_opt = sc_sweep->add_option("--jobs", sweep_opt.jobs, "worker threads")
                         ->check(CLI::PositiveNumber);
    sc_sweep->add_option("--euler-tier-bound", sweep_opt.euler_tier_bound,
                         "largest p using the Euler-number recurrence (default 500)");
    sc_sweep->add_flag("--exploratory", sweep_opt.exploratory,
                       "also evaluate C-CHAIN-A5 on p = 1 (mod 4); reported, not asserted");
    sc_sweep->add_flag("--progress", sweep_opt.progress, "progress lines on stderr");
    auto* sweep_format_opt =
        sc_sweep->add_option("--format", sweep_format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    sc_sweep->add_option("--out", sweep_out, "write the report to this file");

    // check
    u64 check_prime = 0;
    std::string check_id, check_format = "text";
    u64 check_tier = 500;
    auto* sc_check = app.add_subcommand("check", "run one check at one prime");
    sc_check->add_option("--prime", check_prime, "odd prime")->required();
    sc_check->add_option("--check", check_id, "check id")->required();
    sc_check->add_option("--format", check_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sc_check->add_option("--euler-tier-bound", check_tier,
                         "largest p using the Euler-number recurrence (default 500)");

    // identity
    std::vector<std::string> identity_ids;
    unsigned identity_n_max = 25;
    std::string identity_format = "text", identity_out;
    auto* sc_identity =
        app.add_subcommand("identity", "verify identities in exact rational arithmetic");
    sc_identity->add_option("--ids", identity_ids, "comma-separated identity ids (default all)")
        ->delimiter(',');
    sc_identity->add_option("--n-max", identity_n_max, "largest n in the domain (default 25)")
        ->check(CLI::PositiveNumber);
    auto* identity_format_opt =
        sc_identity->add_option("--format", identity_format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    sc_identity->add_option("--out", identity_out, "write the report to this file");

    // twosquares
    u64 ts_prime = 0;
    auto* sc_ts = app.add_subcommand("twosquares", "p = x^2 + y^2 with x = 1 (mod 4)");
    sc_ts->add_option("--prime", ts_prime, "prime = 1 (mod 4)")->required();

    auto* sc_list = app.add_subcommand("list", "list registered checks and identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sc_sweep->parsed()) {
            if (sweep_opt.lo > sweep_opt.hi) {
                std::cerr << "sweep: --min must not exceed --max\n";
                return 2;
            }
            if (jobs_opt->count() == 0) sweep_opt.jobs = jobs_from_env(1);
            if (checks_opt->count() > 0) sweep_opt.checks = sweep_checks;
            return cmd_sweep(sweep_opt,
                             format_for(sweep_format, sweep_format_opt->count() > 0, sweep_out),
                             sweep_out);
        }
        if (sc_check->parsed()) {
            return cmd_check(check_prime, check_id, check_format, check_tier);
        }
        if (sc_identity->parsed()) {
            return cmd_identity(
                identity_ids, identity_n_max,
                format_for(identity_format, identity_format_opt->count() > 0, identity_out),
                identity_out);
        }
        if (sc_ts->parsed()) return cmd_twosquares(ts_prime);
        if (sc_list->parsed()) return cmd_list();
    } catch (const NotApplicable& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return 2;
    } catch (const UnknownCheck& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UnknownIdentity& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const OutOfDomain& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const WrongResidueClass& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
