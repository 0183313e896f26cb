#pragma once

// Report emission: JSON, CSV and plain text. Per-result records carry no
// timestamps, so reports over the same range are byte-identical regardless of
// parallelism; the run timestamp lives in the metadata block.

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "supercong/checks.hpp"
#include "supercong/identities.hpp"

namespace supercong {

inline std::string modulus_label(int e) { return "p^" + std::to_string(e); }

inline nlohmann::json result_json(const CheckResult& r) {
    return nlohmann::json{{"prime", r.prime},  {"check", r.id},
                          {"modulus", modulus_label(r.modulus_exp)},
                          {"lhs", r.lhs},      {"rhs", r.rhs},
                          {"pass", r.pass}};
}

inline nlohmann::json sweep_report_json(const SweepReport& report) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : report.results) results.push_back(result_json(r));
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& r : report.failures) {
        auto row = result_json(r);
        row["note"] = r.note;
        failures.push_back(row);
    }
    nlohmann::json counts;
    for (const auto& [id, c] : report.counts) {
        counts[id] = {{"passed", c.passed}, {"failed", c.failed}};
    }
    nlohmann::json out{
        {"meta",
         {{"version", report.version},
          {"range", {report.lo, report.hi}},
          {"started", report.started},
          {"duration_ms", report.duration.count()}}},
        {"results", results},
        {"counts", counts},
        {"failures", failures},
    };
    if (!report.exploratory.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : report.exploratory) rows.push_back(result_json(r));
        out["exploratory"] = rows;
    }
    return out;
}

// prime,check,modulus_exp,lhs,rhs,pass -- no metadata, so files diff cleanly
inline std::string sweep_report_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "prime,check,modulus_exp,lhs,rhs,pass\n";
    for (const auto& r : report.results) {
        out << r.prime << ',' << r.id << ',' << r.modulus_exp << ',' << r.lhs << ',' << r.rhs
            << ',' << (r.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

inline void print_result_text(std::ostream& os, const CheckResult& r) {
    u64 modulus = 1;
    for (int i = 0; i < r.modulus_exp; ++i) modulus *= r.prime;
    os << "p=" << r.prime << " " << r.id << " mod " << modulus << ": lhs=" << r.lhs
       << " rhs=" << r.rhs << (r.pass ? " PASS" : " FAIL");
    if (!r.note.empty()) os << " [" << r.note << "]";
    os << '\n';
}

inline void print_sweep_text(std::ostream& os, const SweepReport& report) {
    os << "sweep [" << report.lo << ", " << report.hi << "] version " << report.version
       << "\n\n";
    os << "check            applicable  passed  failed\n";
    u64 total_pass = 0, total_fail = 0;
    for (const auto& [id, c] : report.counts) {
        os << id;
        for (size_t i = id.size(); i < 17; ++i) os << ' ';
        os << c.passed + c.failed << "  " << c.passed << "  " << c.failed << '\n';
        total_pass += c.passed;
        total_fail += c.failed;
    }
    os << '\n';
    if (!report.failures.empty()) {
        os << "failures:\n";
        for (const auto& r : report.failures) print_result_text(os, r);
        os << '\n';
    }
    if (!report.exploratory.empty()) {
        os << "exploratory (reported, not asserted):\n";
        for (const auto& r : report.exploratory) print_result_text(os, r);
        os << '\n';
    }
    os << (total_fail == 0 ? "ALL PASSED" : "FAILURES PRESENT") << " (" << total_pass
       << " passed, " << total_fail << " failed)\n";
}

inline nlohmann::json identity_result_json(const IdentityResult& r) {
    nlohmann::json row{{"identity", r.id},
                       {"n", r.params.n},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"pass", r.pass}};
    if (r.params.j) row["j"] = *r.params.j;
    return row;
}

inline void print_identity_text(std::ostream& os, const IdentityResult& r) {
    os << r.id << " " << r.params.str() << ": lhs=" << r.lhs << " rhs=" << r.rhs
       << (r.pass ? " PASS" : " FAIL") << '\n';
}

}  // namespace supercong
