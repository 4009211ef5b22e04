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

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jacsyz/curve_analysis.hpp"

namespace jacsyz {

/// Golden values a record is checked against. Absent fields are not
/// checked; sigma uses a two-level optional so "expected absent" (free
/// curves) is expressible.
struct Expected {
    std::optional<int> d;
    std::optional<int> m;
    std::optional<std::vector<int>> exponents;
    std::optional<std::vector<int>> e_list;
    std::optional<int> tau;
    std::optional<int> nu;
    std::optional<std::optional<int>> sigma;
    std::optional<int> ct;
    std::optional<int> st;
    std::optional<std::string> classification;
    std::optional<int> d_prime;
    std::optional<int> bourbaki_degree;

    bool empty() const {
        return !d && !m && !exponents && !e_list && !tau && !nu && !sigma && !ct && !st &&
               !classification && !d_prime && !bourbaki_degree;
    }
};

struct CurveRecord {
    std::string name;
    std::string f_text;
    CurveMeta meta;
    Expected expected;
    bool stress = false;  // only analyzed when explicitly requested
};

/// Mismatch descriptions between computed invariants and golden values.
inline std::vector<std::string> check_expectations(const CurveAnalysis& a, const Expected& e) {
    std::vector<std::string> bad;
    auto num = [&bad](const char* what, auto got, auto want) {
        if (got != want) {
            std::ostringstream os;
            os << what << ": computed " << got << ", expected " << want;
            bad.push_back(os.str());
        }
    };
    auto list = [&bad](const char* what, const std::vector<int>& got, const std::vector<int>& want) {
        if (got != want) {
            auto fmt = [](const std::vector<int>& v) {
                std::string s = "(";
                for (std::size_t i = 0; i < v.size(); ++i)
                    s += (i ? "," : "") + std::to_string(v[i]);
                return s + ")";
            };
            bad.push_back(std::string(what) + ": computed " + fmt(got) + ", expected " + fmt(want));
        }
    };
    if (e.d) num("d", a.d, *e.d);
    if (e.m) num("m", a.m(), *e.m);
    if (e.exponents) list("exponents", a.exponents(), *e.exponents);
    if (e.e_list) list("e_list", a.resolution.e_list, *e.e_list);
    if (e.tau) num("tau", a.tau, *e.tau);
    if (e.nu) num("nu", a.nu, *e.nu);
    if (e.sigma) {
        if (a.sigma != *e.sigma) {
            auto fmt = [](const std::optional<int>& s) {
                return s ? std::to_string(*s) : std::string("absent");
            };
            bad.push_back("sigma: computed " + fmt(a.sigma) + ", expected " + fmt(*e.sigma));
        }
    }
    if (e.ct) num("ct", a.thr.ct, *e.ct);
    if (e.st) num("st", a.thr.st, *e.st);
    if (e.classification) num("classification", to_string(a.cls.verdict), *e.classification);
    if (e.d_prime) {
        if (!a.dprime || !a.dprime->found || a.dprime->d_prime != *e.d_prime)
            bad.push_back("d_prime: expected " + std::to_string(*e.d_prime));
    }
    if (e.bourbaki_degree) {
        if (!a.bourbaki || a.bourbaki->degree != *e.bourbaki_degree)
            bad.push_back("bourbaki degree: expected " + std::to_string(*e.bourbaki_degree));
    }
    return bad;
}

namespace corpus_detail {

inline CurveRecord make(std::string name, std::string f, CurveMeta meta, Expected e,
                        bool stress = false) {
    CurveRecord r;
    r.name = std::move(name);
    r.f_text = std::move(f);
    r.meta = meta;
    r.expected = std::move(e);
    r.stress = stress;
    return r;
}

inline Expected expect(std::optional<int> tau, std::optional<std::vector<int>> exps,
                       std::optional<std::string> cls, std::optional<int> nu = std::nullopt) {
    Expected e;
    e.tau = tau;
    e.exponents = std::move(exps);
    e.classification = std::move(cls);
    e.nu = nu;
    return e;
}

}  // namespace corpus_detail

/// Built-in golden corpus. Every expected value is an exact integer the
/// curve is known to have; any mismatch is a hard failure of the engine.
inline std::vector<CurveRecord> corpus(bool include_stress = false) {
    using corpus_detail::expect;
    using corpus_detail::make;
    const CurveMeta rational_lines{true, true, std::nullopt};
    const CurveMeta rational_nearly_cuspidal{true, false, true};
    const CurveMeta irrational{false, false, std::nullopt};

    std::vector<CurveRecord> out;

    out.push_back(make("nodal-cubic", "xyz+x^3+y^3", rational_nearly_cuspidal,
                       expect(1, std::vector<int>{2, 2, 2, 2}, "MSyzygy", 2)));

    out.push_back(make("ex1-heptic", "xyz(x+y-2z)(x-3y+z)(-5x+y+z)(x+y+z)", rational_lines, [] {
        Expected e = expect(24, std::vector<int>{4, 4, 4}, "ThreeSyzygy");
        e.e_list = std::vector<int>{12};
        return e;
    }()));

    // low degree plus-one and 3-syzygy curves
    out.push_back(make("exlowdegree-i", "(y^2-xz)^2+y^2z^2+z^4", rational_nearly_cuspidal,
                       expect(5, std::vector<int>{2, 2, 3}, "PlusOneGenerated", 2)));
    out.push_back(make("exlowdegree-ii", "(x^2+y^2)^2-4xy^2z", rational_nearly_cuspidal,
                       expect(5, std::vector<int>{2, 2, 3}, "PlusOneGenerated", 2)));
    out.push_back(make("exlowdegree-iii", "(x^2+y^2-2xz)^2-(x^2+y^2)z^2",
                       rational_nearly_cuspidal,
                       expect(5, std::vector<int>{2, 2, 3}, "PlusOneGenerated", 2)));
    out.push_back(make("exlowdegree-iv", "x^5-y^2z^3-xz^4", irrational, [] {
        Expected e = expect(8, std::vector<int>{2, 4, 4}, "ThreeSyzygy");
        e.ct = 5;
        e.st = 8;
        return e;
    }()));
    out.push_back(make("exlowdegree-v", "x^6+y^6-x^2z^4", irrational,
                       expect(5, std::vector<int>{4, 5, 5}, "ThreeSyzygy")));

    out.push_back(make("exconj1-sextic", "(x^2+y^2)^3-4x^2y^2z^2", irrational, [] {
        Expected e = expect(16, std::vector<int>{3, 4, 4, 4}, "MSyzygy", 3);
        e.e_list = std::vector<int>{10, 10};
        e.d_prime = 4;
        e.bourbaki_degree = 3;
        return e;
    }()));

    // nu = 2 menagerie
    out.push_back(make("A5", "xyz(x-2y-3z)(x+y+z)", rational_lines,
                       expect(10, std::vector<int>{3, 3, 3, 3}, "MSyzygy", 2)));
    out.push_back(make("A7", "xyz(x-z)(y-z)(x+y)(x+y+z)", rational_lines,
                       expect(25, std::vector<int>{4, 4, 4, 4}, "MSyzygy", 2)));
    out.push_back(make("A9", "xyz(x-z)(y-z)(x+y)(x+y+z)(x-y)(x-y-z)", rational_lines,
                       expect(46, std::vector<int>{5, 5, 5, 5}, "MSyzygy", 2)));
    out.push_back(make("B7", "xyz(x+y+z)(x+z)(y+z)(x-y+2z)", rational_lines,
                       expect(25, std::vector<int>{3, 4, 5}, "PlusOneGenerated", 2)));
    out.push_back(make("C5-prime", "(x+y)(x^4-x^3y+x^2y^2-xy^3+y^4+x^3z-x^2yz+xy^2z)", {},
                       expect(10, std::vector<int>{3, 3, 3, 3}, "MSyzygy", 2)));
    out.push_back(make("C5-second", "z(x^2+y^2+xy)^2+x^5+y^5", rational_nearly_cuspidal,
                       expect(10, std::vector<int>{3, 3, 3, 3}, "MSyzygy", 2)));
    out.push_back(make("C9-third", "z(x^2+y^2+xy)^4+x^9+y^9", rational_nearly_cuspidal,
                       expect(46, std::vector<int>{5, 5, 5, 5}, "MSyzygy", 2)));

    out.push_back(make("exnularge-d3", "x^7+(x^3+y^3)^2z", CurveMeta{true, false, std::nullopt},
                       expect(24, std::vector<int>{3, 4, 6}, "PlusOneGenerated", 3)));

    // smooth curve of degree d-1 union a transversal line: minimal Tjurina
    out.push_back(make("exconj-i-d4", "x(x^3+y^3+z^3)", irrational,
                       expect(3, std::vector<int>{2, 3, 3}, "ThreeSyzygy")));
    out.push_back(make("exconj-i-d5", "x(x^4+y^4+z^4)", irrational,
                       expect(4, std::vector<int>{3, 4, 4}, "ThreeSyzygy")));
    out.push_back(make("exconj-i-d6", "x(x^5+y^5+z^5)", irrational,
                       expect(5, std::vector<int>{4, 5, 5}, "ThreeSyzygy")));

    // smooth curve of degree d-1 union a tangent line
    out.push_back(make("exconj-ii-d3", "x(x^2+xy+z^2)", {}, [] {
        Expected e = expect(3, std::vector<int>{1, 1}, "Free", 0);
        e.sigma = std::optional<int>{};  // free: no jacobian module at all
        return e;
    }()));
    out.push_back(make("exconj-ii-d4", "x(x^3+xy^2+z^3)", {},
                       expect(5, std::vector<int>{2, 2, 3}, "PlusOneGenerated", 2)));
    out.push_back(make("exconj-ii-d5", "x(x^4+xy^3+z^4)", {},
                       expect(7, std::vector<int>{3, 3, 4}, "ThreeSyzygy")));

    out.push_back(make("exconj-iii", "x(x^4+xy^3+xz^3+y^2z^2)", {},
                       expect(6, std::vector<int>{3, 4, 4, 4}, "MSyzygy")));

    // infinite series of plus-one generated irreducible curves
    out.push_back(make("ex2-k2", "x^5+(x^2+y^2)^2z", rational_nearly_cuspidal, [] {
        Expected e = expect(10, std::vector<int>{2, 3, 4}, "PlusOneGenerated", 2);
        e.sigma = std::optional<int>{3};
        return e;
    }()));
    out.push_back(make("ex2-k3", "x^7+(x^2+y^2)^3z", rational_nearly_cuspidal, [] {
        Expected e = expect(26, std::vector<int>{2, 5, 6}, "PlusOneGenerated", 2);
        e.sigma = std::optional<int>{5};
        return e;
    }()));

    // Thom-Sebastiani curves g(x,y) + z^d
    out.push_back(make("ts-x2y2-z4", "x^2y^2+z^4", {}, [] {
        Expected e = expect(6, std::vector<int>{1, 3, 3}, "NearlyFree", 1);
        e.ct = 3;
        e.st = 5;
        return e;
    }()));
    out.push_back(make("ts-x2y2xy-z5", "x^2y^2(x+y)+z^5", {}, [] {
        Expected e = expect(8, std::vector<int>{2, 4, 4}, "ThreeSyzygy", 4);
        e.ct = 5;
        e.st = 8;
        return e;
    }()));

    out.push_back(make("exrnc-r3", "x^2y^2z+x^5+y^5", rational_nearly_cuspidal,
                       expect(10, std::vector<int>{3, 3, 3, 3}, "MSyzygy", 2)));

    out.push_back(make("fermat-cubic", "x^3+y^3+z^3", {},
                       expect(0, std::vector<int>{2, 2, 2}, "Smooth")));

    if (include_stress) {
        // slow opt-in curve; run with an enlarged degree guard
        out.push_back(make("exconj1-stress-d12", "(x^2+y^2)^6-3(x^11+y^11)z",
                           CurveMeta{true, false, std::nullopt}, [] {
                               Expected e;
                               e.m = 4;
                               e.exponents = std::vector<int>{6, 7, 8, 10};
                               return e;
                           }(),
                           true));
    }
    return out;
}

/// Parameterized families with their closed-form golden values.
inline CurveRecord family(const std::string& name, const std::vector<int>& params) {
    using corpus_detail::make;
    if (name == "ts") {
        // params: factor multiplicities k_1, ..., k_m of g(x,y)
        const auto& mults = params;
        const int m = static_cast<int>(mults.size());
        if (m < 2) throw std::invalid_argument("family ts: need at least two factors");
        for (int k : mults)
            if (k < 1) throw std::invalid_argument("family ts: multiplicities must be >= 1");
        const int d = std::accumulate(mults.begin(), mults.end(), 0);
        if (d < 3) throw std::invalid_argument("family ts: total degree must be >= 3");
        std::ostringstream f;
        for (int i = 0; i < m; ++i) {
            if (i == 0)
                f << "x";
            else if (i == 1)
                f << "y";
            else if (i == 2)
                f << "(x+y)";
            else
                f << "(x+" << i - 1 << "y)";
            if (mults[i] > 1) f << "^" << mults[i];
        }
        f << "+z^" << d;
        Expected e;
        e.d = d;
        e.exponents = std::vector<int>{m - 1, d - 1, d - 1};
        e.tau = (d - 1) * (d - m);
        if (m < d) e.ct = d + m - 3;  // smooth (m = d) reports the sentinel instead
        e.st = 2 * d + m - 5;
        if (2 * (m - 1) <= d) e.nu = (m - 1) * (m - 1);
        e.sigma = std::optional<int>{d - m};
        e.classification = (m == d) ? "Smooth" : (m == 2 ? "NearlyFree" : "ThreeSyzygy");
        std::ostringstream nm;
        nm << "ts";
        for (int k : mults) nm << "-" << k;
        return make(nm.str(), f.str(), {}, std::move(e));
    }
    if (name == "ex2") {
        if (params.size() != 1 || params[0] < 2)
            throw std::invalid_argument("family ex2: need one parameter k >= 2");
        const int k = params[0];
        const int d = 2 * k + 1;
        Expected e;
        e.d = d;
        e.exponents = std::vector<int>{2, d - 2, d - 1};
        e.tau = d * d - 4 * d + 5;
        e.nu = 2;
        e.sigma = std::optional<int>{d - 2};
        e.classification = "PlusOneGenerated";
        return make("ex2-k" + std::to_string(k), "x^" + std::to_string(d) + "+(x^2+y^2)^" +
                        std::to_string(k) + "z",
                    CurveMeta{true, false, true}, std::move(e));
    }
    if (name == "exnularge") {
        if (params.size() != 1 || params[0] < 3)
            throw std::invalid_argument("family exnularge: need one parameter d' >= 3");
        const int dp = params[0];
        const int d = 2 * dp + 1;
        Expected e;
        e.d = d;
        e.exponents = std::vector<int>{dp, dp + 1, 2 * dp};
        e.tau = 3 * dp * dp - dp;
        e.nu = dp;
        e.sigma = std::optional<int>{2 * dp - 1};
        e.classification = "PlusOneGenerated";
        return make("exnularge-d" + std::to_string(dp),
                    "x^" + std::to_string(d) + "+(x^" + std::to_string(dp) + "+y^" +
                        std::to_string(dp) + ")^2z",
                    CurveMeta{true, false, std::nullopt}, std::move(e));
    }
    if (name == "exrnc") {
        if (params.size() != 1 || params[0] < 3)
            throw std::invalid_argument("family exrnc: need one parameter r >= 3");
        const int r = params[0];
        const int d = 2 * r - 1;
        Expected e;
        e.d = d;
        e.exponents = std::vector<int>(4, r);
        e.tau = 3 * r * r - 6 * r + 1;
        e.nu = 2;
        e.classification = "MSyzygy";
        const std::string rm1 = std::to_string(r - 1);
        return make("exrnc-r" + std::to_string(r),
                    "x^" + rm1 + "y^" + rm1 + "z+x^" + std::to_string(d) + "+y^" +
                        std::to_string(d),
                    CurveMeta{true, false, true}, std::move(e));
    }
    throw std::invalid_argument("family: unknown family '" + name + "'");
}

}  // namespace jacsyz
