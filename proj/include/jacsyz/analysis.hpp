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

#include <string>

#include "jacsyz/audit.hpp"
#include "jacsyz/curve_analysis.hpp"
#include "jacsyz/parse.hpp"

namespace jacsyz {

struct AnalyzeOptions {
    int max_degree = 12;  // Groebner cost guard; larger degrees are opt-in
};

/// Full invariant pipeline for a single curve. Throws on invalid input
/// (non-homogeneous, degree < 3, non-reduced, degree above the guard);
/// theorem failures never throw, they land in the audit report.
inline CurveAnalysis analyze_curve(const std::string& name, const Poly& f,
                                   const CurveMeta& meta = {},
                                   const AnalyzeOptions& options = {}) {
    if (!f.is_zero() && f.degree() > options.max_degree)
        throw std::invalid_argument("curve: degree " + std::to_string(*f.degree()) +
                                    " exceeds the max-degree guard " +
                                    std::to_string(options.max_degree));
    CurveInput ci = validate_curve(f);

    CurveAnalysis a;
    a.name = name;
    a.f = ci.f;
    a.d = ci.d;
    a.meta = meta;
    a.jacobian = ci.jacobian;
    a.resolution = minimal_resolution_from(ci);
    a.milnor = detail::milnor_table(ci.jacobian, ci.d);
    a.tau = a.milnor.eventual;
    a.thr = detail::thresholds_from_table(a.milnor, ci.d);
    a.saturation = saturate_max_ideal(ci.jacobian, 3 * ci.d - 6);
    a.jmodule = detail::jacobian_module_table(ci.jacobian, a.saturation, ci.d);
    a.nu = a.jmodule.nu;
    a.sigma = a.jmodule.sigma;

    if (a.resolution.m() >= 3) {
        a.bourbaki = bourbaki_ideal(a.f, a.resolution.syzygies, a.tau);
        a.dprime = thm_new_dprime(a.f, a.resolution.syzygies, *a.bourbaki, a.tau);
        if (a.resolution.m() == 3)
            a.relation = unique_relation(a.f, a.resolution.syzygies, *a.bourbaki);
    }

    a.cls = classify(a.resolution, a.tau);
    a.dpw = dpw_report(a.d, a.exponents()[0], a.tau, a.meta.line_arrangement.value_or(false));
    a.audit_report = audit(a);
    return a;
}

inline CurveAnalysis analyze_curve(const std::string& name, const std::string& f_text,
                                   const CurveMeta& meta = {},
                                   const AnalyzeOptions& options = {}) {
    return analyze_curve(name, parse_poly(f_text), meta, options);
}

}  // namespace jacsyz
