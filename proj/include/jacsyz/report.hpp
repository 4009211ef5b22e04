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

#include <json.hpp>

#include <sstream>
#include <string>

#include "jacsyz/corpus.hpp"

namespace jacsyz {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Fixed-field-order JSON report; identical analyses serialize to
/// byte-identical documents.
inline Json report_json(const CurveAnalysis& a) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["curve"] = Json{{"name", a.name}, {"f", a.f.to_string()}, {"d", a.d}};

    Json inv;
    inv["m"] = a.m();
    inv["exponents"] = a.exponents();
    inv["e_list"] = a.resolution.e_list;
    inv["epsilons"] = a.resolution.eps_list;
    inv["tau"] = a.tau;
    inv["nu"] = a.nu;
    if (a.sigma)
        inv["sigma"] = *a.sigma;
    else
        inv["sigma"] = nullptr;
    inv["ct"] = a.thr.ct;
    inv["st"] = a.thr.st;
    inv["reg"] = a.thr.reg;
    inv["T"] = a.thr.T;
    j["invariants"] = std::move(inv);

    j["hilbert"] = Json{{"M", a.milnor.values}, {"N", a.jmodule.values}};

    j["classification"] = Json{{"verdict", to_string(a.cls.verdict)},
                               {"is_plus_one", a.cls.is_plus_one},
                               {"minimal_tjurina", a.cls.minimal_tjurina},
                               {"nu2_shape", to_string(a.cls.nu2_shape)}};

    if (a.bourbaki) {
        Json b;
        b["gen_degrees"] = a.bourbaki->gen_degrees;
        b["degree"] = a.bourbaki->degree;
        b["complete_intersection"] = a.bourbaki->is_complete_intersection;
        if (a.dprime && a.dprime->found)
            b["d_prime"] = a.dprime->d_prime;
        else
            b["d_prime"] = nullptr;
        j["bourbaki"] = std::move(b);
    } else {
        j["bourbaki"] = nullptr;
    }

    Json dpw;
    dpw["bound"] = a.dpw.bound;
    dpw["equality"] = a.dpw.equality;
    if (a.dpw.strict_bound)
        dpw["strict_bound"] = *a.dpw.strict_bound;
    else
        dpw["strict_bound"] = nullptr;
    j["dpw"] = std::move(dpw);

    Json checks = Json::array();
    for (const auto& c : a.audit_report.checks)
        checks.push_back(Json{{"id", c.id}, {"status", to_string(c.status)}, {"details", c.details}});
    j["audit"] = std::move(checks);
    return j;
}

inline std::string report_text(const CurveAnalysis& a) {
    std::ostringstream os;
    auto joined = [](const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    os << a.name << ": " << a.f.to_string() << "\n";
    os << "  degree " << a.d << ", " << a.m() << " syzygies, exponents "
       << joined(a.exponents()) << "\n";
    os << "  classification: " << to_string(a.cls.verdict)
       << (a.cls.is_plus_one ? " [plus-one]" : "")
       << (a.cls.minimal_tjurina ? " [minimal tjurina]" : "");
    if (a.cls.nu2_shape != Nu2Shape::none) os << " [" << to_string(a.cls.nu2_shape) << "]";
    os << "\n";
    os << "  tau=" << a.tau << " nu=" << a.nu
       << " sigma=" << (a.sigma ? std::to_string(*a.sigma) : "-") << " ct=" << a.thr.ct
       << " st=" << a.thr.st << " reg=" << a.thr.reg << " T=" << a.thr.T << "\n";
    if (!a.resolution.e_list.empty())
        os << "  e_list " << joined(a.resolution.e_list) << ", eps "
           << joined(a.resolution.eps_list) << "\n";
    if (a.bourbaki) {
        os << "  bourbaki: degrees " << joined(a.bourbaki->gen_degrees) << ", scheme degree "
           << a.bourbaki->degree
           << (a.bourbaki->is_complete_intersection ? ", complete intersection" : "");
        if (a.dprime && a.dprime->found) os << ", d'=" << a.dprime->d_prime;
        os << "\n";
    }
    os << "  dpw bound " << a.dpw.bound << (a.dpw.equality ? " (equality)" : "");
    if (a.dpw.strict_bound) os << ", arrangement bound " << *a.dpw.strict_bound;
    os << "\n";
    os << "  M(f): ";
    for (std::size_t k = 0; k < a.milnor.values.size(); ++k)
        os << (k ? " " : "") << a.milnor.values[k];
    os << "\n  N(f): ";
    for (std::size_t k = 0; k < a.jmodule.values.size(); ++k)
        os << (k ? " " : "") << a.jmodule.values[k];
    os << "\n";
    int fails = a.audit_report.failures();
    os << "  audit: " << (fails == 0 ? "all checks pass" : std::to_string(fails) + " FAILED");
    for (const auto& c : a.audit_report.checks)
        if (c.status == CheckStatus::fail) os << "\n    FAIL " << c.id << ": " << c.details;
    os << "\n";
    return os.str();
}

inline CurveMeta meta_from_json(const Json& j) {
    CurveMeta m;
    if (j.contains("all_components_rational")) m.all_components_rational = j["all_components_rational"].get<bool>();
    if (j.contains("line_arrangement")) m.line_arrangement = j["line_arrangement"].get<bool>();
    if (j.contains("nearly_cuspidal")) m.nearly_cuspidal = j["nearly_cuspidal"].get<bool>();
    return m;
}

inline Expected expected_from_json(const Json& j) {
    Expected e;
    if (j.contains("d")) e.d = j["d"].get<int>();
    if (j.contains("m")) e.m = j["m"].get<int>();
    if (j.contains("exponents")) e.exponents = j["exponents"].get<std::vector<int>>();
    if (j.contains("e_list")) e.e_list = j["e_list"].get<std::vector<int>>();
    if (j.contains("tau")) e.tau = j["tau"].get<int>();
    if (j.contains("nu")) e.nu = j["nu"].get<int>();
    if (j.contains("sigma")) {
        if (j["sigma"].is_null())
            e.sigma = std::optional<int>{};
        else
            e.sigma = std::optional<int>{j["sigma"].get<int>()};
    }
    if (j.contains("ct")) e.ct = j["ct"].get<int>();
    if (j.contains("st")) e.st = j["st"].get<int>();
    if (j.contains("classification")) e.classification = j["classification"].get<std::string>();
    if (j.contains("d_prime")) e.d_prime = j["d_prime"].get<int>();
    if (j.contains("bourbaki_degree")) e.bourbaki_degree = j["bourbaki_degree"].get<int>();
    return e;
}

inline CurveRecord record_from_json(const Json& j) {
    if (!j.contains("name") || !j.contains("f"))
        throw std::invalid_argument("curve record: 'name' and 'f' are required");
    CurveRecord r;
    r.name = j["name"].get<std::string>();
    r.f_text = j["f"].get<std::string>();
    if (j.contains("meta")) r.meta = meta_from_json(j["meta"]);
    if (j.contains("expected")) r.expected = expected_from_json(j["expected"]);
    if (j.contains("stress")) r.stress = j["stress"].get<bool>();
    return r;
}

inline Json record_to_json(const CurveRecord& r) {
    Json j;
    j["name"] = r.name;
    j["f"] = r.f_text;
    Json meta = Json::object();
    if (r.meta.all_components_rational) meta["all_components_rational"] = *r.meta.all_components_rational;
    if (r.meta.line_arrangement) meta["line_arrangement"] = *r.meta.line_arrangement;
    if (r.meta.nearly_cuspidal) meta["nearly_cuspidal"] = *r.meta.nearly_cuspidal;
    if (!meta.empty()) j["meta"] = std::move(meta);
    Json e = Json::object();
    if (r.expected.d) e["d"] = *r.expected.d;
    if (r.expected.m) e["m"] = *r.expected.m;
    if (r.expected.exponents) e["exponents"] = *r.expected.exponents;
    if (r.expected.e_list) e["e_list"] = *r.expected.e_list;
    if (r.expected.tau) e["tau"] = *r.expected.tau;
    if (r.expected.nu) e["nu"] = *r.expected.nu;
    if (r.expected.sigma) {
        if (r.expected.sigma->has_value())
            e["sigma"] = **r.expected.sigma;
        else
            e["sigma"] = nullptr;
    }
    if (r.expected.ct) e["ct"] = *r.expected.ct;
    if (r.expected.st) e["st"] = *r.expected.st;
    if (r.expected.classification) e["classification"] = *r.expected.classification;
    if (r.expected.d_prime) e["d_prime"] = *r.expected.d_prime;
    if (r.expected.bourbaki_degree) e["bourbaki_degree"] = *r.expected.bourbaki_degree;
    if (!e.empty()) j["expected"] = std::move(e);
    if (r.stress) j["stress"] = true;
    return j;
}

}  // namespace jacsyz
