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

#include "jacsyz/resolution.hpp"

namespace jacsyz {

enum class Verdict { Smooth, Free, NearlyFree, PlusOneGenerated, ThreeSyzygy, MSyzygy };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Smooth: return "Smooth";
        case Verdict::Free: return "Free";
        case Verdict::NearlyFree: return "NearlyFree";
        case Verdict::PlusOneGenerated: return "PlusOneGenerated";
        case Verdict::ThreeSyzygy: return "ThreeSyzygy";
        default: return "MSyzygy";
    }
}

enum class Nu2Shape { shape_i, shape_ii, none };

inline std::string to_string(Nu2Shape s) {
    switch (s) {
        case Nu2Shape::shape_i: return "thmPO2-i";
        case Nu2Shape::shape_ii: return "thmPO2-ii";
        default: return "none";
    }
}

struct Classification {
    Verdict verdict = Verdict::MSyzygy;
    std::vector<int> exponents;
    bool is_plus_one = false;      // d1 + d2 == d; NearlyFree keeps this flag set
    bool minimal_tjurina = false;  // tau equals (d-1)(d-d1-1)
    Nu2Shape nu2_shape = Nu2Shape::none;
};

struct DpwRecord {
    int bound = 0;
    bool equality = false;
    std::optional<int> strict_bound;  // set for line arrangements
    bool violated = false;
};

/// Metadata asserted per corpus record, never computed by the engine.
struct CurveMeta {
    std::optional<bool> all_components_rational;
    std::optional<bool> line_arrangement;
    std::optional<bool> nearly_cuspidal;
};

/// Verdict per the exponent arithmetic, cross-checked against the
/// resolution shape; any mismatch means an engine bug, not bad input.
inline Classification classify(const ResolutionData& res, int tau) {
    const int m = res.m();
    const int d = res.d;
    const auto& dl = res.d_list;
    const int d1 = dl[0], d2 = dl[1];

    const bool free_arith = (d1 + d2 == d - 1);
    const bool free_shape = (m == 2);
    if (free_arith != free_shape)
        throw std::logic_error("classify: free verdicts from arithmetic and shape disagree");
    if (free_shape != res.e_list.empty())
        throw std::logic_error("classify: free shape disagrees with the third Betti module");
    const bool plus_one = (d1 + d2 == d);
    if (plus_one && m != 3)
        throw std::logic_error("classify: d1+d2 = d forces a 3-syzygy curve");
    if (tau == 0 && !(m == 3 && d1 == d - 1 && dl[2] == d - 1))
        throw std::logic_error("classify: smooth curve without Koszul exponents");

    Classification c;
    c.exponents = dl;
    c.is_plus_one = plus_one;
    c.minimal_tjurina = (tau == (d - 1) * (d - d1 - 1));

    if (tau == 0)
        c.verdict = Verdict::Smooth;
    else if (free_shape)
        c.verdict = Verdict::Free;
    else if (m == 3 && plus_one && dl[2] == d2)
        c.verdict = Verdict::NearlyFree;
    else if (m == 3 && plus_one)
        c.verdict = Verdict::PlusOneGenerated;
    else if (m == 3)
        c.verdict = Verdict::ThreeSyzygy;
    else
        c.verdict = Verdict::MSyzygy;

    // nu = 2 normal forms, recognized from exponents and tau alone
    if (m == 3 && plus_one && dl[2] == d - d1 + 1 &&
        tau == (d - 1) * (d - 1) - d1 * (d - d1 - 1) - 2)
        c.nu2_shape = Nu2Shape::shape_i;
    else if (m == 4 && dl[1] == d1 && dl[2] == d1 && dl[3] == d1 && d == 2 * d1 - 1 &&
             tau == 3 * d1 * d1 - 6 * d1 + 1)
        c.nu2_shape = Nu2Shape::shape_ii;

    return c;
}

inline DpwRecord dpw_report(int d, int d1, int tau, bool line_arrangement) {
    DpwRecord r;
    r.bound = (d - 1) * (d - d1 - 1);
    r.equality = (tau == r.bound);
    r.violated = tau < r.bound;
    if (line_arrangement) {
        r.strict_bound = r.bound + 2 * d1 - 1;
        if (tau < *r.strict_bound) r.violated = true;
    }
    return r;
}

}  // namespace jacsyz
