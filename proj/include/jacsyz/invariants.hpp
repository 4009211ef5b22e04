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
#include <stdexcept>
#include <vector>

#include "jacsyz/resolution.hpp"

namespace jacsyz {

/// Degree-indexed dimension table of a graded module, k = 0..K.
struct HilbertTable {
    std::vector<int> values;
    int eventual = 0;              // constant tail value (tau for M(f))
    std::optional<int> sigma;      // first nonzero degree, N(f) tables only
    int nu = 0;                    // maximal value, N(f) tables only
    int T = 0;

    int value(int k) const {
        if (k < 0) return 0;
        if (k < static_cast<int>(values.size())) return values[k];
        return eventual;
    }
    int top_degree() const { return static_cast<int>(values.size()) - 1; }
};

struct Thresholds {
    int ct = 0;   // last degree where M(f) agrees with a smooth curve's algebra
    int st = 0;   // first degree from which m(f)_k is constant
    int reg = 0;  // st - 1
    int T = 0;    // 3d - 6
};

inline long binom2(long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

/// Hilbert function of the Milnor algebra of a smooth degree-d curve,
/// i.e. the coefficients of (1 - t^(d-1))^3 / (1 - t)^3.
inline int smooth_milnor_value(int d, int k) {
    if (k < 0) return 0;
    return static_cast<int>(binom2(k + 2) - 3 * binom2(k - d + 3) + 3 * binom2(k - 2 * d + 4) -
                            binom2(k - 3 * d + 5));
}

/// Alternating sum of the graded pieces of the length-three resolution of a
/// 3-syzygy curve; valid for k >= e - 2.
inline long three_syzygy_hilbert_value(int d, const std::vector<int>& d_list, int e, int k) {
    long v = binom2(k + 2) - 3 * binom2(k - d + 3);
    for (int dj : d_list) v += binom2(k - d + 3 - dj);
    return v - binom2(k - e + 2);
}

namespace detail {

inline HilbertTable milnor_table(const IdealGB& jacobian, int d) {
    HilbertTable t;
    t.T = 3 * d - 6;
    const int K = 3 * d - 4;
    t.values.reserve(K + 1);
    for (int k = 0; k <= K; ++k) t.values.push_back(graded_dimension(jacobian, k));
    // singular curves are constant from 3d-6 on, smooth ones vanish from 3d-5
    if (t.values[K] != t.values[K - 1])
        throw std::logic_error("milnor table: no stabilization inside the window");
    t.eventual = t.values[K];
    return t;
}

inline HilbertTable jacobian_module_table(const IdealGB& jacobian, const IdealGB& saturation,
                                          int d) {
    HilbertTable t;
    t.T = 3 * d - 6;
    t.eventual = 0;
    for (int k = 0; k <= t.T; ++k) {
        const int nk = graded_dimension(jacobian, k) - graded_dimension(saturation, k);
        if (nk < 0) throw std::logic_error("jacobian module: negative dimension");
        t.values.push_back(nk);
        if (nk > 0 && !t.sigma) t.sigma = k;
        t.nu = std::max(t.nu, nk);
    }
    return t;
}

inline Thresholds thresholds_from_table(const HilbertTable& mt, int d) {
    Thresholds th;
    th.T = 3 * d - 6;
    const int K = mt.top_degree();
    int st = 0;
    for (int k = K; k >= 0; --k) {
        if (mt.values[k] != mt.eventual) {
            st = k + 1;
            break;
        }
    }
    th.st = st;
    th.reg = st - 1;
    int ct = th.T + 1;  // sentinel: agrees with the smooth algebra everywhere
    for (int k = 0; k <= K; ++k) {
        if (mt.values[k] != smooth_milnor_value(d, k)) {
            ct = k - 1;
            break;
        }
    }
    th.ct = ct;
    return th;
}

}  // namespace detail

inline HilbertTable milnor_hilbert(const Poly& f) {
    CurveInput ci = validate_curve(f);
    return detail::milnor_table(ci.jacobian, ci.d);
}

/// Total Tjurina number: the stable value of dim M(f)_k.
inline int tjurina_number(const Poly& f) { return milnor_hilbert(f).eventual; }

inline HilbertTable jacobian_module_hf(const Poly& f) {
    CurveInput ci = validate_curve(f);
    IdealGB sat = saturate_max_ideal(ci.jacobian, 3 * ci.d - 6);
    return detail::jacobian_module_table(ci.jacobian, sat, ci.d);
}

inline Thresholds thresholds(const Poly& f) {
    CurveInput ci = validate_curve(f);
    return detail::thresholds_from_table(detail::milnor_table(ci.jacobian, ci.d), ci.d);
}

}  // namespace jacsyz
