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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "jacsyz/bourbaki.hpp"
#include "jacsyz/parse.hpp"

using namespace jacsyz;

namespace {

Poly monic(const Poly& p) {
    REQUIRE(!p.is_zero());
    return p * (Rat(1) / p.leading_coefficient());
}

}  // namespace

TEST_CASE("Koszul syzygies satisfy the vector identity sum f_v k^v = 0") {
    for (const char* s : {"xyz+x^3+y^3", "x^4+y^4+z^4", "(x^2+y^2)^2-4xy^2z"}) {
        Poly f = parse_poly(s);
        auto k = koszul_syzygies(f);
        const Poly fx = f.derivative(Var::x), fy = f.derivative(Var::y), fz = f.derivative(Var::z);
        for (int comp = 0; comp < 3; ++comp) {
            Poly acc = fx * k[0].components[comp] + fy * k[1].components[comp] +
                       fz * k[2].components[comp];
            CHECK(acc.is_zero());
        }
        for (const auto& v : k) CHECK(v.degree() == 2 * (*f.degree() - 1));
    }
}

TEST_CASE("nodal cubic Koszul syzygies decompose over the four minimal generators") {
    Poly f = parse_poly("xyz+x^3+y^3");
    SyzygyBasis b = jacobian_syzygies(f);
    REQUIRE(b.degrees == std::vector<int>{2, 2, 2, 2});
    SubmoduleGB span = buchberger(b.generators);
    for (const auto& k : koszul_syzygies(f)) CHECK(normal_form(k, span).is_zero());
}

TEST_CASE("bourbaki map vanishes on r1 and is S-linear") {
    Poly f = parse_poly("(x^2+y^2)^2-4xy^2z");
    SyzygyBasis b = jacobian_syzygies(f);
    const ModVec& r1 = b.generators[0];
    CHECK(bourbaki_map(r1, r1, f).is_zero());

    const ModVec& r2 = b.generators[1];
    Poly h = parse_poly("x^2-3yz");
    ModVec hr2({h * r2.components[0], h * r2.components[1], h * r2.components[2]},
               {*r2.degree() + 2, *r2.degree() + 2, *r2.degree() + 2});
    // shifts only matter for degree bookkeeping; the map reads components
    CHECK(bourbaki_map(hr2, r1, f) == h * bourbaki_map(r2, r1, f));
}

TEST_CASE("bourbaki map rejects vectors outside AR(f)") {
    Poly f = parse_poly("(x^2+y^2)^2-4xy^2z");
    SyzygyBasis b = jacobian_syzygies(f);
    ModVec junk({parse_poly("x^2"), parse_poly("y^2"), parse_poly("z^2")}, {3, 3, 3});
    CHECK_THROWS_AS(bourbaki_map(junk, b.generators[0], f), std::domain_error);
}

TEST_CASE("exconj1 Bourbaki generators are the coordinate products up to scalar") {
    Poly f = parse_poly("(x^2+y^2)^3-4x^2y^2z^2");
    SyzygyBasis syz = jacobian_syzygies(f);
    REQUIRE(syz.degrees == std::vector<int>{3, 4, 4, 4});
    BourbakiData bd = bourbaki_ideal(f, syz, 16);

    std::multiset<std::string> images;
    for (const auto& g : bd.generators) images.insert(monic(g).to_string());
    CHECK(images == std::multiset<std::string>{"xy", "xz", "yz"});
    CHECK(bd.gen_degrees == std::vector<int>{2, 2, 2});
    CHECK(bd.degree == 3);
    CHECK(!bd.is_complete_intersection);
    CHECK(bd.ideal == buchberger({parse_poly("xy"), parse_poly("xz"), parse_poly("yz")}));
}

TEST_CASE("double folium Bourbaki ideal is a complete intersection of degree 2") {
    Poly f = parse_poly("(x^2+y^2)^2-4xy^2z");
    SyzygyBasis syz = jacobian_syzygies(f);
    BourbakiData bd = bourbaki_ideal(f, syz, 5);
    // (d-1)^2 - d1(d - d1 - 1) - tau = 9 - 2 - 5 = 2 = 1 * 2
    CHECK(bd.degree == 2);
    CHECK(bd.is_complete_intersection);
    CHECK(bd.gen_degrees == std::vector<int>{1, 2});
    CHECK(bd.pair23.is_ci);
    CHECK(bd.pair23.degree == 2);
}

TEST_CASE("exConj (iii): the pair ideal is a CI of degree 9, strictly larger than B") {
    Poly f = parse_poly("x(x^4+xy^3+xz^3+y^2z^2)");
    SyzygyBasis syz = jacobian_syzygies(f);
    REQUIRE(syz.degrees == std::vector<int>{3, 4, 4, 4});
    BourbakiData bd = bourbaki_ideal(f, syz, 6);
    CHECK(monic(bd.generators[0]).to_string() == monic(parse_poly("y^3-z^3")).to_string());
    CHECK(bd.pair23.is_ci);
    CHECK(bd.pair23.degree == 9);
    CHECK(bd.degree == 7);  // 16 - 3 - 6
    CHECK(!bd.is_complete_intersection);
}

TEST_CASE("free curves have no Bourbaki ideal") {
    Poly f = parse_poly("x(x^2+xy+z^2)");
    SyzygyBasis syz = jacobian_syzygies(f);
    REQUIRE(syz.m() == 2);
    CHECK_THROWS_AS(bourbaki_ideal(f, syz, 3), std::domain_error);
}

TEST_CASE("unique relation of the double folium") {
    Poly f = parse_poly("(x^2+y^2)^2-4xy^2z");
    SyzygyBasis syz = jacobian_syzygies(f);
    BourbakiData bd = bourbaki_ideal(f, syz, 5);
    RelationData rel = unique_relation(f, syz, bd);
    CHECK(rel.degrees == std::array<int, 3>{2, 2, 1});
    CHECK(rel.degrees_match);
    CHECK(rel.all_nonzero);
    CHECK(rel.pairwise_coprime);
    CHECK(rel.alpha_consistent);
    REQUIRE(rel.alpha.has_value());
    CHECK(*rel.alpha != 0);
    CHECK(rel.h[0].leading_coefficient() == 1);
    // the relation annihilates the generators
    for (int comp = 0; comp < 3; ++comp) {
        Poly acc;
        for (int i = 0; i < 3; ++i) acc = acc + rel.h[i] * syz.triple(i)[comp];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("nearly free curves have linear h2, h3") {
    Poly f = parse_poly("x^2y^2+z^4");  // exponents (1,3,3), d=4
    SyzygyBasis syz = jacobian_syzygies(f);
    REQUIRE(syz.degrees == std::vector<int>{1, 3, 3});
    BourbakiData bd = bourbaki_ideal(f, syz, 6);
    RelationData rel = unique_relation(f, syz, bd);
    // deg h1 = 2*d2 - d + 1, deg h2 = deg h3 = 1
    CHECK(rel.degrees == std::array<int, 3>{3, 1, 1});
    CHECK(rel.alpha_consistent);
}

TEST_CASE("unique relation rejects non 3-syzygy input") {
    Poly f = parse_poly("(x^2+y^2)^3-4x^2y^2z^2");
    SyzygyBasis syz = jacobian_syzygies(f);
    BourbakiData bd = bourbaki_ideal(f, syz, 16);
    CHECK_THROWS_AS(unique_relation(f, syz, bd), std::invalid_argument);
}

TEST_CASE("d' search on exconj1 lands on d3 = 4") {
    Poly f = parse_poly("(x^2+y^2)^3-4x^2y^2z^2");
    SyzygyBasis syz = jacobian_syzygies(f);
    BourbakiData bd = bourbaki_ideal(f, syz, 16);
    DPrimeResult dp = thm_new_dprime(f, syz, bd, 16);
    CHECK(dp.found);
    CHECK(dp.d_prime == 4);
    CHECK(dp.refined_bound == 15);
    CHECK(!dp.equality);  // strict for this 4-syzygy curve
    CHECK(dp.certificate_found);
}

TEST_CASE("3-syzygy curves attain the refined bound with d' = d3") {
    for (const char* s : {"(x^2+y^2)^2-4xy^2z", "x^5-y^2z^3-xz^4", "x^2y^2+z^4"}) {
        Poly f = parse_poly(s);
        SyzygyBasis syz = jacobian_syzygies(f);
        HilbertTable mt = milnor_hilbert(f);
        BourbakiData bd = bourbaki_ideal(f, syz, mt.eventual);
        DPrimeResult dp = thm_new_dprime(f, syz, bd, mt.eventual);
        CHECK(dp.found);
        CHECK(dp.d_prime == syz.degrees[2]);
        CHECK(dp.equality);
        CHECK(dp.certificate_found);
    }
}

TEST_CASE("minimal Tjurina curve x(x^3+y^3+z^3)") {
    Poly f = parse_poly("x(x^3+y^3+z^3)");
    SyzygyBasis syz = jacobian_syzygies(f);
    CHECK(syz.degrees == std::vector<int>{2, 3, 3});  // d2 = d3 = d-1
    const int tau = tjurina_number(f);
    CHECK(tau == 3);
    CHECK(tau == (4 - 1) * (4 - 2 - 1));  // lower bound attained
    BourbakiData bd = bourbaki_ideal(f, syz, tau);
    DPrimeResult dp = thm_new_dprime(f, syz, bd, tau);
    CHECK(dp.equality);
    CHECK(dp.refined_bound == tau);
}

TEST_CASE("graded dimension identity of the short exact sequence") {
    // dim AR(f)_k = dim S_{k-d1} + dim B(C,r1)_{k+d1-d+1}
    Poly f = parse_poly("(x^2+y^2)^2-4xy^2z");
    CurveInput ci = validate_curve(f);
    SubmoduleGB ar = syzygies({ci.f.derivative(Var::x), ci.f.derivative(Var::y),
                               ci.f.derivative(Var::z)});
    SyzygyBasis syz = detail::ar_minimal_basis(ci);
    BourbakiData bd = bourbaki_ideal(f, syz, 5);
    const int d1 = syz.degrees[0];
    for (int k = 0; k <= 2 * ci.d; ++k) {
        const int ar_dim = submodule_piece_dimension(ar, k + ci.d - 1);
        const int s_dim = monomial_count(k - d1);
        const int b_dim = ideal_piece_dimension(bd.ideal, k + d1 - ci.d + 1);
        CHECK(ar_dim == s_dim + b_dim);
    }
}

TEST_CASE("tau1 degree formula on a non-free sample") {
    for (const char* s : {"xyz+x^3+y^3", "x^6+y^6-x^2z^4", "x^7+(x^3+y^3)^2z"}) {
        Poly f = parse_poly(s);
        SyzygyBasis syz = jacobian_syzygies(f);
        const int tau = tjurina_number(f);
        BourbakiData bd = bourbaki_ideal(f, syz, tau);  // asserts the identity internally
        const int d = *f.degree(), d1 = syz.degrees[0];
        CHECK(bd.degree == (d - 1) * (d - 1) - d1 * (d - d1 - 1) - tau);
    }
}
