/*
   Copyright 2026 The jacsyz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "jacsyz/analysis.hpp"
#include "jacsyz/oracle.hpp"
#include "jacsyz/report.hpp"

namespace jacsyz {

namespace cli_detail {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitExpectationFailure = 2;

struct CurveOutcome {
    CurveRecord record;
    std::optional<CurveAnalysis> analysis;
    std::string error;  // validation / computation error text
    std::vector<std::string> mismatches;
};

/// Analyze records on a bounded pool; results keep the input order.
inline std::vector<CurveOutcome> run_records(const std::vector<CurveRecord>& records,
                                             const AnalyzeOptions& options, int jobs) {
    std::vector<CurveOutcome> out(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= records.size()) return;
            CurveOutcome& slot = out[i];
            slot.record = records[i];
            try {
                slot.analysis =
                    analyze_curve(records[i].name, records[i].f_text, records[i].meta, options);
                slot.mismatches = check_expectations(*slot.analysis, records[i].expected);
            } catch (const std::exception& e) {
                slot.error = e.what();
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(records.size())));
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

inline std::vector<CurveRecord> load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
    std::vector<CurveRecord> records;
    if (doc.is_array())
        for (const auto& j : doc) records.push_back(record_from_json(j));
    else
        records.push_back(record_from_json(doc));
    if (records.empty()) throw std::invalid_argument("no curve records in " + path);
    return records;
}

/// Emits outcomes (already name-sorted by the caller) and returns the
/// process exit code. Expectation mismatches and audit failures both gate;
/// verbose_audit additionally prints every check line in text mode.
inline int emit_outcomes(std::vector<CurveOutcome>& outcomes, const std::string& format,
                         bool verbose_audit, std::ostream& out, std::ostream& err) {
    bool invalid = false, failed = false;
    for (const auto& o : outcomes) {
        if (!o.error.empty()) {
            invalid = true;
            continue;
        }
        if (!o.mismatches.empty()) failed = true;
        if (!o.analysis->audit_report.all_passed()) failed = true;
    }

    if (format == "json") {
        Json arr = Json::array();
        for (auto& o : outcomes) {
            if (!o.error.empty()) {
                arr.push_back(Json{{"curve", Json{{"name", o.record.name}}}, {"error", o.error}});
                continue;
            }
            Json j = report_json(*o.analysis);
            if (!o.mismatches.empty()) j["expectation_failures"] = o.mismatches;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
    } else {
        int pass = 0;
        for (auto& o : outcomes) {
            if (!o.error.empty()) {
                out << o.record.name << ": ERROR " << o.error << "\n";
                continue;
            }
            const bool ok = o.mismatches.empty() && o.analysis->audit_report.all_passed();
            out << (ok ? "[PASS] " : "[FAIL] ") << report_text(*o.analysis);
            if (verbose_audit)
                for (const auto& c : o.analysis->audit_report.checks)
                    out << "    " << c.id << ": " << to_string(c.status)
                        << (c.details.empty() ? "" : " (" + c.details + ")") << "\n";
            for (const auto& msg : o.mismatches) out << "    expectation: " << msg << "\n";
            pass += ok;
        }
        out << pass << "/" << outcomes.size() << " curves clean\n";
    }

    for (const auto& o : outcomes)
        if (!o.error.empty()) err << o.record.name << ": " << o.error << "\n";

    if (invalid) return kExitInvalidInput;
    return failed ? kExitExpectationFailure : kExitOk;
}

inline int cmd_analyze(const std::string& input, const std::string& format, int max_degree,
                       int jobs, std::ostream& out, std::ostream& err) {
    std::vector<CurveRecord> records;
    try {
        records = load_records(input);
    } catch (const std::exception& e) {
        err << "analyze: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    AnalyzeOptions options;
    options.max_degree = max_degree;
    auto outcomes = run_records(records, options, jobs);
    std::stable_sort(outcomes.begin(), outcomes.end(),
                     [](const CurveOutcome& a, const CurveOutcome& b) {
                         return a.record.name < b.record.name;
                     });
    return emit_outcomes(outcomes, format, /*verbose_audit=*/false, out, err);
}

inline int cmd_corpus(const std::string& filter, bool audit_gate, bool stress,
                      const std::string& format, int jobs, std::ostream& out,
                      std::ostream& err) {
    std::vector<CurveRecord> records;
    for (auto& r : corpus(stress))
        if (filter.empty() || r.name.find(filter) != std::string::npos)
            records.push_back(std::move(r));
    if (records.empty()) {
        err << "corpus: no record matches filter '" << filter << "'\n";
        return kExitInvalidInput;
    }
    AnalyzeOptions options;
    if (stress) options.max_degree = 12;
    auto outcomes = run_records(records, options, jobs);
    std::stable_sort(outcomes.begin(), outcomes.end(),
                     [](const CurveOutcome& a, const CurveOutcome& b) {
                         return a.record.name < b.record.name;
                     });
    return emit_outcomes(outcomes, format, audit_gate, out, err);
}

inline int cmd_family(const std::string& name, const std::vector<int>& params,
                      const std::string& format, int max_degree, std::ostream& out,
                      std::ostream& err) {
    CurveRecord record;
    try {
        record = family(name, params);
    } catch (const std::exception& e) {
        err << "family: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    AnalyzeOptions options;
    options.max_degree = max_degree;
    auto outcomes = run_records({record}, options, 1);
    return emit_outcomes(outcomes, format, /*verbose_audit=*/false, out, err);
}

inline int cmd_oracle(const std::string& input, int max_degree, std::ostream& out,
                      std::ostream& err) {
    std::vector<CurveRecord> records;
    try {
        records = load_records(input);
    } catch (const std::exception& e) {
        err << "oracle: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    bool mismatch = false;
    for (const auto& r : records) {
        Poly f;
        CurveInput ci;
        try {
            f = parse_poly(r.f_text);
            ci = validate_curve(f);
        } catch (const std::exception& e) {
            err << r.name << ": " << e.what() << "\n";
            return kExitInvalidInput;
        }
        const int K = max_degree > 0 ? max_degree : 3 * ci.d - 4;
        IdealGB sat = saturate_max_ideal(ci.jacobian, 3 * ci.d - 6);
        out << r.name << ": degrees 0.." << K << "\n";
        for (int k = 0; k <= K; ++k) {
            const int em = graded_dimension(ci.jacobian, k);
            const int om = oracle::milnor_dim(f, k);
            const int en = em - graded_dimension(sat, k);
            const int on = oracle::jacobian_module_dim(f, k);
            const bool ok = em == om && en == on;
            if (!ok) mismatch = true;
            out << "  k=" << k << " m_k engine=" << em << " oracle=" << om << " n_k engine=" << en
                << " oracle=" << on << (ok ? "" : "  MISMATCH") << "\n";
        }
    }
    out << (mismatch ? "oracle disagreement detected\n" : "engine and oracle agree\n");
    return mismatch ? kExitExpectationFailure : kExitOk;
}

}  // namespace cli_detail

/// Command-line front end; returns the process exit code.
/// Exit codes: 0 success, 1 invalid input, 2 expectation or audit failure.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"exact syzygy-based invariants and classification of plane curves"};
    app.require_subcommand(1);
    const int default_jobs =
        std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

    std::string an_input, an_format = "json";
    int an_maxdeg = 12, an_jobs = default_jobs;
    auto* an = app.add_subcommand("analyze", "analyze curves from a JSON record file");
    an->add_option("--input", an_input, "JSON file with curve records")->required();
    an->add_option("--format", an_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    an->add_option("--max-degree", an_maxdeg, "reject curves above this degree");
    an->add_option("--jobs", an_jobs, "worker pool size");

    std::string co_filter, co_format = "text";
    bool co_audit = false, co_stress = false;
    int co_jobs = default_jobs;
    auto* co = app.add_subcommand("corpus", "run the built-in golden corpus");
    co->add_option("--filter", co_filter, "only records whose name contains this substring");
    co->add_flag("--audit", co_audit, "print the full check table per curve");
    co->add_flag("--stress", co_stress, "include the slow degree-12 record");
    co->add_option("--format", co_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    co->add_option("--jobs", co_jobs, "worker pool size");

    std::string fa_name, fa_format = "json";
    std::vector<int> fa_mults, fa_params;
    int fa_k = 0, fa_dprime = 0, fa_r = 0, fa_maxdeg = 12;
    auto* fa = app.add_subcommand("family", "generate and analyze a parameterized curve");
    fa->add_option("name", fa_name, "family name: ts | ex2 | exnularge | exrnc")->required();
    fa->add_option("--params", fa_params, "family parameters as a comma list")->delimiter(',');
    fa->add_option("--mults", fa_mults, "ts: factor multiplicities")->delimiter(',');
    fa->add_option("--k", fa_k, "ex2: parameter k >= 2");
    fa->add_option("--dprime", fa_dprime, "exnularge: parameter d' >= 3");
    fa->add_option("--r", fa_r, "exrnc: parameter r >= 3");
    fa->add_option("--format", fa_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    fa->add_option("--max-degree", fa_maxdeg, "degree guard for generated curves");

    std::string orc_input;
    int orc_maxdeg = 0;
    auto* orc = app.add_subcommand("oracle",
                                   "diff engine dimensions against the dense linear-algebra oracle");
    orc->add_option("--input", orc_input, "JSON file with curve records")->required();
    orc->add_option("--max-degree", orc_maxdeg, "top degree to compare (default 3d-4)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInvalidInput;
    }

    try {
        if (an->parsed()) return cmd_analyze(an_input, an_format, an_maxdeg, an_jobs, out, err);
        if (co->parsed())
            return cmd_corpus(co_filter, co_audit, co_stress, co_format, co_jobs, out, err);
        if (fa->parsed()) {
            std::vector<int> params = fa_params;
            if (params.empty()) {
                if (fa_name == "ts")
                    params = fa_mults;
                else if (fa_name == "ex2")
                    params = {fa_k};
                else if (fa_name == "exnularge")
                    params = {fa_dprime};
                else if (fa_name == "exrnc")
                    params = {fa_r};
            }
            return cmd_family(fa_name, params, fa_format, fa_maxdeg, out, err);
        }
        if (orc->parsed()) return cmd_oracle(orc_input, orc_maxdeg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    err << "no subcommand given\n";
    return kExitInvalidInput;
}

}  // namespace jacsyz
