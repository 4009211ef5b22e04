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

#include <optional>
#include <string>
#include <vector>

#include "jacsyz/bourbaki.hpp"
#include "jacsyz/classify.hpp"
#include "jacsyz/invariants.hpp"

namespace jacsyz {

enum class CheckStatus { pass, fail, not_applicable };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "not-applicable";
    }
}

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::not_applicable;
    std::string details;
};

struct AuditReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += (c.status == CheckStatus::fail);
        return n;
    }
};

/// Everything the engine knows about one curve.
struct CurveAnalysis {
    std::string name;
    Poly f;
    int d = 0;
    CurveMeta meta;

    IdealGB jacobian;
    IdealGB saturation;
    ResolutionData resolution;
    HilbertTable milnor;    // m(f)_k, k = 0..3d-4
    HilbertTable jmodule;   // n(f)_k, k = 0..3d-6
    Thresholds thr;
    int tau = 0;
    int nu = 0;
    std::optional<int> sigma;

    std::optional<BourbakiData> bourbaki;   // absent for free curves
    std::optional<RelationData> relation;   // 3-syzygy curves only
    std::optional<DPrimeResult> dprime;
    Classification cls;
    DpwRecord dpw;
    AuditReport audit_report;

    int m() const { return resolution.m(); }
    const std::vector<int>& exponents() const { return resolution.d_list; }
};

}  // namespace jacsyz
