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

#include <sstream>
#include <string>

#include "jacsyz/curve_analysis.hpp"

// The audit runs every catalog check against a completed analysis and
// records pass / fail / not-applicable per check. Failures are data, not
// exceptions: a fail here means a proved statement did not hold on the
// computed invariants, which the caller surfaces prominently.

namespace jacsyz {

namespace audit_detail {

struct Ctx {
    const CurveAnalysis& a;
    AuditReport report;

    void add(const std::string& id, CheckStatus st, const std::string& details) {
        report.checks.push_back({id, st, details});
    }
    void na(const std::string& id, const std::string& why) { add(id, CheckStatus::not_applicable, why); }
    void verdict(const std::string& id, bool ok, const std::string& details) {
        add(id, ok ? CheckStatus::pass : CheckStatus::fail, details);
    }
};

inline std::string ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

inline void chk_thmd3(Ctx& c) {
    const auto& a = c.a;
    if (a.m() < 3) {
        c.na("CHK-thmd3", "free curve (m=2)");
        return;
    }
    const auto& dl = a.exponents();
    const bool ok = dl[0] + dl[1] >= a.d && dl[0] <= dl[1] && dl[1] <= dl[2] && dl[2] <= a.d - 1;
    c.verdict("CHK-thmd3", ok, "exponents " + ints(dl));
}

inline void chk_propA(Ctx& c) {
    const auto& a = c.a;
    if (a.m() != 3) {
        c.na("CHK-propA", "needs m=3");
        return;
    }
    if (a.tau == 0) {
        c.na("CHK-propA", "smooth curve: coincidence threshold is the sentinel");
        return;
    }
    const auto& dl = a.exponents();
    const int d = a.d, e = dl[0] + dl[1] + dl[2];
    const bool ok_e = a.resolution.e_list == std::vector<int>{e};
    const bool ok_ct = a.thr.ct == d - 2 + dl[0];
    const bool ok_st = a.thr.st == e - 2 && a.thr.reg == a.thr.st - 1;
    const int tau_formula = (d - 1) * e - (dl[0] * dl[1] + dl[0] * dl[2] + dl[1] * dl[2]);
    const bool ok_tau = a.tau == tau_formula;
    std::ostringstream os;
    os << "e=" << e << " ct=" << a.thr.ct << " st=" << a.thr.st << " tau=" << a.tau;
    c.verdict("CHK-propA", ok_e && ok_ct && ok_st && ok_tau, os.str());
}

inline void chk_eps(Ctx& c) {
    const auto& a = c.a;
    if (a.m() < 3) {
        c.na("CHK-eps", "free curve has no third Betti module");
        return;
    }
    const auto& eps = a.resolution.eps_list;
    bool ok = true;
    int sum = 0;
    for (int e : eps) {
        ok = ok && e >= 1;
        sum += e;
    }
    ok = ok && sum == a.exponents()[0] + a.exponents()[1] - (a.d - 1);
    c.verdict("CHK-eps", ok, "eps " + ints(eps));
}

inline void chk_dual(Ctx& c) {
    const auto& n = c.a.jmodule;
    bool ok = true;
    for (int k = 0; k <= n.T; ++k) ok = ok && n.values[k] == n.values[n.T - k];
    c.verdict("CHK-dual", ok, "n_k = n_{T-k} over [0," + std::to_string(n.T) + "]");
}

inline void chk_unimodal(Ctx& c) {
    const auto& n = c.a.jmodule;
    bool ok = true;
    for (int k = 0; k + 1 <= n.T / 2; ++k) ok = ok && n.values[k] <= n.values[k + 1];
    for (int k = n.T / 2; k + 1 <= n.T; ++k) ok = ok && n.values[k] >= n.values[k + 1];
    c.verdict("CHK-unimodal", ok, "monotone up to T/2 and down after");
}

inline void chk_propC(Ctx& c) {
    const auto& a = c.a;
    if (a.m() != 3) {
        c.na("CHK-propC", "needs m=3");
        return;
    }
    const auto& dl = a.exponents();
    const int d = a.d, d1 = dl[0], d2 = dl[1], d3 = dl[2];
    if (2 * d1 > d) {
        c.na("CHK-propC", "needs d1 <= d/2");
        return;
    }
    bool ok = a.nu == (d1 - (d - 1 - d2)) * (d1 - (d - 1 - d3));
    if (a.cls.is_plus_one) ok = ok && a.nu == d3 - d2 + 1 && a.nu <= d1;
    c.verdict("CHK-propC", ok, "nu=" + std::to_string(a.nu));
}

inline void chk_thmHS_sigma(Ctx& c) {
    const auto& a = c.a;
    if (a.m() != 3) {
        c.na("CHK-thmHS-sigma", "needs m=3");
        return;
    }
    const auto& dl = a.exponents();
    const int expected = 3 * (a.d - 1) - (dl[0] + dl[1] + dl[2]);
    const bool ok = a.sigma.has_value() && *a.sigma == expected;
    c.verdict("CHK-thmHS-sigma", ok,
              "sigma=" + (a.sigma ? std::to_string(*a.sigma) : std::string("absent")) +
                  " expected " + std::to_string(expected));
}

inline void chk_corHS_pattern(Ctx& c) {
    const auto& a = c.a;
    if (!(a.m() == 3 && a.cls.is_plus_one)) {
        c.na("CHK-corHS-pattern", "needs a plus-one generated curve");
        return;
    }
    const auto& dl = a.exponents();
    const int d = a.d;
    const int k2 = 2 * d - dl[1] - 3;
    const int k3 = 2 * d - dl[2] - 3;
    const int nu_expected = dl[2] - dl[1] + 1;
    const auto& n = a.jmodule;
    bool ok = k2 <= n.T / 2 && a.sigma.has_value() && *a.sigma == k3;
    for (int k = 0; k < k3 && ok; ++k) ok = n.values[k] == 0;
    for (int k = k3; k <= k2 && ok; ++k) ok = n.values[k] == k - k3 + 1;
    for (int k = k2; k <= n.T / 2 && ok; ++k) ok = n.values[k] == nu_expected;
    ok = ok && a.nu == nu_expected;
    std::ostringstream os;
    os << "k3=" << k3 << " k2=" << k2 << " nu=" << a.nu;
    c.verdict("CHK-corHS-pattern", ok, os.str());
}

inline void chk_thmPO2(Ctx& c) {
    const auto& a = c.a;
    if (a.nu != 2) {
        c.na("CHK-thmPO2", "needs nu=2");
        return;
    }
    const bool ok = a.cls.nu2_shape != Nu2Shape::none;
    c.verdict("CHK-thmPO2", ok, "shape " + to_string(a.cls.nu2_shape));
}

inline void chk_tau1(Ctx& c) {
    const auto& a = c.a;
    if (!a.bourbaki) {
        c.na("CHK-tau1", "free curve");
        return;
    }
    const int d = a.d, d1 = a.exponents()[0];
    const int formula = (d - 1) * (d - 1) - d1 * (d - d1 - 1) - a.tau;
    c.verdict("CHK-tau1", a.bourbaki->degree == formula,
              "deg B = " + std::to_string(a.bourbaki->degree));
}

inline void chk_propB(Ctx& c) {
    const auto& a = c.a;
    if (a.m() != 3) {
        c.na("CHK-propB", "needs m=3");
        return;
    }
    const auto& dl = a.exponents();
    const int d = a.d, d1 = dl[0], d2 = dl[1], d3 = dl[2];
    const int first = (d - 1) * (d - 1) - d1 * (d - d1 - 1) - (d3 - d2 + 1) -
                      (d1 + d2 - d) * (d1 + d3 - d + 2);
    const int second =
        (d - 1) * (d - d1 - 1) + d1 * d1 - (d1 - (d - 1 - d2)) * (d1 - (d - 1 - d3));
    const int upper = (d - 1) * (d - 1) - d1 * (d - d1 - 1) - (d3 - d2 + 1);
    bool ok = a.tau == first && a.tau == second && a.tau <= upper;
    ok = ok && ((a.tau == upper) == a.cls.is_plus_one);
    c.verdict("CHK-propB", ok, "tau=" + std::to_string(a.tau));
}

inline void chk_corBour(Ctx& c) {
    const auto& a = c.a;
    if (!a.bourbaki) {
        c.na("CHK-corBour", "free curve");
        return;
    }
    if (!a.bourbaki->pair23.is_ci) {
        c.na("CHK-corBour", "(g2,g3) is not a complete intersection");
        return;
    }
    const auto& dl = a.exponents();
    const int d = a.d, d1 = dl[0], d2 = dl[1], d3 = dl[2];
    const int bound =
        (d - 1) * (d - d1 - 1) + d1 * d1 - (d1 - (d - 1 - d2)) * (d1 - (d - 1 - d3));
    bool ok = a.tau >= bound && ((a.tau == bound) == (a.m() == 3));
    c.verdict("CHK-corBour", ok,
              "tau=" + std::to_string(a.tau) + " bound=" + std::to_string(bound));
}

inline void chk_thmNEW(Ctx& c) {
    const auto& a = c.a;
    if (!a.dprime) {
        c.na("CHK-thmNEW", "free curve");
        return;
    }
    const auto& dp = *a.dprime;
    bool ok = dp.found;
    if (ok) {
        ok = a.tau >= dp.refined_bound;
        ok = ok && (dp.equality == (a.m() == 3));
        if (a.m() == 3) ok = ok && dp.d_prime == a.exponents()[2];
        ok = ok && dp.certificate_found;
        if (a.meta.line_arrangement.value_or(false))
            ok = ok && a.tau >= (a.d - 1) * (a.d - a.exponents()[0] - 1) + 2 * a.exponents()[0] - 1;
    }
    std::ostringstream os;
    os << "d'=" << dp.d_prime << " bound=" << dp.refined_bound
       << (dp.certificate_found ? " certified" : " uncertified");
    c.verdict("CHK-thmNEW", ok, os.str());
}

inline void chk_rkcoeff(Ctx& c) {
    const auto& a = c.a;
    if (!a.relation) {
        c.na("CHK-rkcoeff", "needs a 3-syzygy curve");
        return;
    }
    const bool ok = a.relation->alpha_consistent && a.relation->alpha && *a.relation->alpha != 0;
    c.verdict("CHK-rkcoeff", ok, "h2 = alpha g3 and h3 = -alpha g2 for one scalar");
}

inline void chk_corA(Ctx& c) {
    const auto& a = c.a;
    if (!a.relation) {
        c.na("CHK-corA", "needs a 3-syzygy curve");
        return;
    }
    const auto& r = *a.relation;
    const bool ok = r.degrees_match && r.all_nonzero && r.pairwise_coprime;
    std::ostringstream os;
    os << "deg h = (" << r.degrees[0] << "," << r.degrees[1] << "," << r.degrees[2] << ")";
    c.verdict("CHK-corA", ok, os.str());
}

inline void chk_corB1(Ctx& c) {
    const auto& a = c.a;
    if (!a.meta.all_components_rational.value_or(false)) {
        c.na("CHK-corB1", "no all-rational metadata");
        return;
    }
    const bool ok = a.exponents().back() <= a.d - 1;
    c.verdict("CHK-corB1", ok, "d_m = " + std::to_string(a.exponents().back()));
}

inline void chk_corB2(Ctx& c) {
    const auto& a = c.a;
    if (!a.meta.all_components_rational.value_or(false) || a.m() != 3 || a.cls.is_plus_one) {
        c.na("CHK-corB2", "needs all-rational 3-syzygy curve that is not plus-one");
        return;
    }
    c.verdict("CHK-corB2", a.exponents()[2] <= a.d - 2,
              "d3 = " + std::to_string(a.exponents()[2]));
}

inline void chk_eq1(Ctx& c) {
    const auto& a = c.a;
    if (a.m() != 3) {
        c.na("CHK-eq1", "needs m=3");
        return;
    }
    const int e = a.resolution.e_list[0];
    bool ok = true;
    for (int k = std::max(0, e - 2); k <= e + 3; ++k)
        ok = ok && graded_dimension(a.jacobian, k) ==
                       three_syzygy_hilbert_value(a.d, a.exponents(), e, k);
    c.verdict("CHK-eq1", ok, "window [" + std::to_string(e - 2) + "," + std::to_string(e + 3) + "]");
}

}  // namespace audit_detail

inline AuditReport audit(const CurveAnalysis& a) {
    audit_detail::Ctx c{a, {}};
    audit_detail::chk_thmd3(c);
    audit_detail::chk_propA(c);
    audit_detail::chk_eps(c);
    audit_detail::chk_dual(c);
    audit_detail::chk_unimodal(c);
    audit_detail::chk_propC(c);
    audit_detail::chk_thmHS_sigma(c);
    audit_detail::chk_corHS_pattern(c);
    audit_detail::chk_thmPO2(c);
    audit_detail::chk_tau1(c);
    audit_detail::chk_propB(c);
    audit_detail::chk_corBour(c);
    audit_detail::chk_thmNEW(c);
    audit_detail::chk_rkcoeff(c);
    audit_detail::chk_corA(c);
    audit_detail::chk_corB1(c);
    audit_detail::chk_corB2(c);
    audit_detail::chk_eq1(c);
    return c.report;
}

}  // namespace jacsyz
