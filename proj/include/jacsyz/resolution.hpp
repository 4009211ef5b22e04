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
#include <stdexcept>
#include <string>
#include <vector>

#include "jacsyz/groebner.hpp"

namespace jacsyz {

struct GradedFree {
    std::vector<int> shifts;
    int rank() const { return static_cast<int>(shifts.size()); }
};

/// Validated curve input: homogeneous reduced f of degree >= 3, with the
/// Groebner basis of its Jacobian ideal.
struct CurveInput {
    Poly f;
    int d = 0;
    IdealGB jacobian;
};

/// Checks the standing hypotheses on f. Reducedness is decided by the
/// dimension of the Jacobian ideal: a repeated factor forces a positive
/// dimensional singular locus, so dim S/J_f <= 1 characterizes the
/// admissible inputs (f itself lies in J_f by the Euler relation).
inline CurveInput validate_curve(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("curve: zero polynomial");
    if (!f.is_homogeneous()) throw std::invalid_argument("curve: polynomial is not homogeneous");
    const int d = *f.degree();
    if (d < 3) throw std::invalid_argument("curve: degree must be at least 3");
    if (!euler_relation_holds(f)) throw std::logic_error("curve: Euler relation failed");
    IdealGB J = buchberger({f.derivative(Var::x), f.derivative(Var::y), f.derivative(Var::z)});
    if (krull_dimension(J) > 1)
        throw std::domain_error("curve: not reduced (singular locus has positive dimension)");
    return CurveInput{f, d, std::move(J)};
}

/// Minimal generators of AR(f), the module of Jacobian syzygies
/// { (a,b,c) : a f_x + b f_y + c f_z = 0 }, with their degrees.
struct SyzygyBasis {
    std::vector<ModVec> generators;  // ambient S^3 with shifts (d-1, d-1, d-1)
    std::vector<int> degrees;        // component degrees d_1 <= ... <= d_m
    int curve_degree = 0;

    int m() const { return static_cast<int>(degrees.size()); }
    int mdr() const { return degrees.front(); }

    /// Components (a, b, c) of generator i.
    const std::vector<Poly>& triple(int i) const { return generators[i].components; }
};

/// Graded Betti data of the minimal resolution of M(f) = S/J_f:
///   0 -> (+)S(-e_i) -> (+)S(1-d-d_j) -> S^3(1-d) -> S.
struct ResolutionData {
    int d = 0;
    std::vector<int> d_list;
    std::vector<int> e_list;    // empty for free curves
    std::vector<int> eps_list;  // eps_j = e_j - (d + d_{j+2} - 1)
    SyzygyBasis syzygies;
    std::vector<ModVec> second_syzygies;  // ambient rank m, shifts d + d_j - 1

    int m() const { return static_cast<int>(d_list.size()); }
    bool is_free() const { return m() == 2; }

    GradedFree f1() const { return GradedFree{{d - 1, d - 1, d - 1}}; }
    GradedFree f2() const {
        GradedFree g;
        for (int dj : d_list) g.shifts.push_back(d + dj - 1);
        return g;
    }
    GradedFree f3() const { return GradedFree{e_list}; }
};

/// Greedy minimalization in ascending degree: a generator survives exactly
/// when it is not in the submodule spanned by the survivors before it.
/// The multiset of surviving degrees is the graded Betti data and does not
/// depend on the choices; the vectors themselves are canonical only up to
/// the documented tie order (earlier generators first).
inline std::vector<ModVec> minimalize(const SubmoduleGB& gb) {
    std::vector<ModVec> cands;
    for (const auto& g : gb.generators())
        if (!g.is_zero()) cands.push_back(g);
    std::stable_sort(cands.begin(), cands.end(), [](const ModVec& a, const ModVec& b) {
        return a.degree().value_or(0) < b.degree().value_or(0);
    });
    std::vector<ModVec> kept;
    for (const auto& c : cands) {
        if (kept.empty()) {
            kept.push_back(c);
            continue;
        }
        SubmoduleGB span = buchberger(kept);
        if (!normal_form(c, span).is_zero()) kept.push_back(c);
    }
    return kept;
}

namespace detail {

inline SyzygyBasis ar_minimal_basis(const CurveInput& ci) {
    SubmoduleGB ar = syzygies({ci.f.derivative(Var::x), ci.f.derivative(Var::y),
                               ci.f.derivative(Var::z)});
    std::vector<ModVec> gens = minimalize(ar);
    SyzygyBasis basis;
    basis.curve_degree = ci.d;
    basis.generators = std::move(gens);
    for (const auto& g : basis.generators)
        basis.degrees.push_back(*g.degree() - (ci.d - 1));
    return basis;
}

inline void enforce(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("resolution invariant violated: " + what);
}

}  // namespace detail

inline SyzygyBasis jacobian_syzygies(const Poly& f) {
    return detail::ar_minimal_basis(validate_curve(f));
}

inline ResolutionData minimal_resolution_from(const CurveInput& ci) {
    ResolutionData res;
    res.d = ci.d;
    res.syzygies = detail::ar_minimal_basis(ci);
    res.d_list = res.syzygies.degrees;
    const int m = res.m();
    const int d = ci.d;

    detail::enforce(m >= 2, "AR(f) has rank two, at least two generators expected");
    detail::enforce(std::is_sorted(res.d_list.begin(), res.d_list.end()), "exponents sorted");
    detail::enforce(m <= d + 1, "m <= d+1");
    detail::enforce(res.d_list.back() <= 2 * d - 4, "d_m <= 2d-4");
    if (m >= 3) {
        detail::enforce(res.d_list[0] + res.d_list[1] >= d, "d_1 + d_2 >= d for non-free curves");
        detail::enforce(res.d_list[2] <= d - 1, "d_3 <= d-1");
    } else {
        detail::enforce(res.d_list[0] + res.d_list[1] == d - 1, "free curve exponent sum");
    }

    if (m >= 3) {
        SubmoduleGB syz2 = syzygies(res.syzygies.generators);
        res.second_syzygies = minimalize(syz2);
        for (const auto& s : res.second_syzygies) res.e_list.push_back(*s.degree());
        std::sort(res.e_list.begin(), res.e_list.end());
        detail::enforce(static_cast<int>(res.e_list.size()) == m - 2, "rank of F_3 is m-2");
        for (int j = 0; j + 2 < m; ++j) {
            const int eps = res.e_list[j] - (d + res.d_list[j + 2] - 1);
            detail::enforce(eps >= 1, "eps_j >= 1");
            res.eps_list.push_back(eps);
        }
        const int eps_sum = std::accumulate(res.eps_list.begin(), res.eps_list.end(), 0);
        detail::enforce(eps_sum == res.d_list[0] + res.d_list[1] - (d - 1),
                        "sum of eps_j equals d_1 + d_2 - (d-1)");
        // minimality of the presentation: no constant entries anywhere
        for (const auto& s : res.second_syzygies)
            for (const auto& comp : s.components)
                detail::enforce(comp.is_zero() || *comp.degree() >= 1, "minimal second syzygies");
    }
    for (const auto& g : res.syzygies.generators)
        for (const auto& comp : g.components)
            detail::enforce(comp.is_zero() || *comp.degree() >= 1, "minimal first syzygies");

    return res;
}

inline ResolutionData minimal_resolution(const Poly& f) {
    return minimal_resolution_from(validate_curve(f));
}

}  // namespace jacsyz
