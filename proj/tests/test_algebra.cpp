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

#include <cstdint>
#include <string>
#include <vector>

#include "jacsyz/parse.hpp"
#include "jacsyz/polynomial.hpp"

using namespace jacsyz;

namespace {

// Small deterministic generator for random-polynomial properties.
struct Xorshift {
    std::uint64_t s;
    explicit Xorshift(std::uint64_t seed) : s(seed ? seed : 1) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

Poly random_poly(Xorshift& rng, int max_deg, int max_terms) {
    std::vector<Term> ts;
    const int n = rng.range(0, max_terms);
    for (int i = 0; i < n; ++i) {
        Monomial m{rng.range(0, max_deg), rng.range(0, max_deg), rng.range(0, max_deg)};
        ts.push_back({m, make_rat(rng.range(-6, 6))});
    }
    return Poly::from_terms(ts);
}

}  // namespace

TEST_CASE("grevlex order on degree three monomials") {
    // x^3 > x^2y > xy^2 > y^3 > x^2z > xyz > y^2z > xz^2 > yz^2 > z^3
    std::vector<Monomial> expected = {
        {3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}, {2, 0, 1},
        {1, 1, 1}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {0, 0, 3},
    };
    for (std::size_t i = 0; i + 1 < expected.size(); ++i)
        CHECK(grevlex_greater(expected[i], expected[i + 1]));
}

TEST_CASE("parse nodal cubic") {
    Poly p = parse_poly("xyz+x^3+y^3");
    CHECK(p.degree() == 3);
    CHECK(p.is_homogeneous());
    CHECK(p.term_count() == 3);
    CHECK(p.to_string() == "x^3+y^3+xyz");
}

TEST_CASE("parse zero polynomial") {
    Poly p = parse_poly("0");
    CHECK(p.is_zero());
    CHECK(!p.degree().has_value());
}

TEST_CASE("parse expands the double folium quartic") {
    Poly p = parse_poly("(x^2+y^2)^2-4xy^2z");
    CHECK(p.to_string() == "x^4+2x^2y^2+y^4-4xy^2z");
    CHECK(p.degree() == 4);
    CHECK(p.is_homogeneous());
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("   "), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^y"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-2"), ParseError);
    CHECK_THROWS_AS(parse_poly("x+(y"), ParseError);
    CHECK_THROWS_AS(parse_poly("x$y"), ParseError);
    try {
        parse_poly("x^3+w");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("non-homogeneous input is detected as such") {
    Poly p = parse_poly("x^2+y");
    CHECK(!p.is_homogeneous());
    CHECK(p.degree() == 2);
}

TEST_CASE("partial derivatives") {
    CHECK(parse_poly("x^3+y^3+z^3").derivative(Var::x).to_string() == "3x^2");
    CHECK(parse_poly("xyz+x^3+y^3").derivative(Var::z).to_string() == "xy");
    CHECK(parse_poly("(x^2+y^2)^2-4xy^2z").derivative(Var::z).to_string() == "-4xy^2");
    // degree drops by exactly one on homogeneous input
    Poly f = parse_poly("x^5-y^2z^3-xz^4");
    CHECK(f.derivative(Var::y).degree() == 4);
}

TEST_CASE("det3 basics") {
    const Poly zero = Poly::zero();
    const Poly one = Poly::one();
    std::array<Poly, 3> r2 = {parse_poly("x+y"), parse_poly("y^2"), parse_poly("z")};
    CHECK(det3(r2, r2).is_zero());

    std::array<Poly, 3> e1 = {one, zero, zero};
    std::array<Poly, 3> e2 = {zero, one, zero};
    CHECK(det3(e1, e2).to_string() == "z");
}

TEST_CASE("det3 of a Jacobian syzygy against a Koszul row is divisible by f") {
    // double folium: r1 = (a1,b1,c1) is a degree-2 syzygy of the partials
    Poly f = parse_poly("(x^2+y^2)^2-4xy^2z");
    Poly fx = f.derivative(Var::x), fy = f.derivative(Var::y), fz = f.derivative(Var::z);
    // hand-checked syzygy of minimal degree for this curve:
    //   a*fx + b*fy + c*fz = 0 with (a,b,c) below
    Poly a = parse_poly("y^2");
    Poly b = parse_poly("yz");
    Poly c = parse_poly("x^2+y^2+xz-2z^2");
    REQUIRE((a * fx + b * fy + c * fz).is_zero());
    std::array<Poly, 3> r1 = {a, b, c};
    std::array<Poly, 3> kx = {Poly::zero(), fz, -fy};
    Poly delta = det3(r1, kx);
    auto q = divide_exact(delta, f);
    REQUIRE(q.has_value());
    CHECK((*q * f) == delta);
}

TEST_CASE("euler relation on sample curves") {
    for (const char* s : {"xyz+x^3+y^3", "(x^2+y^2)^2-4xy^2z", "x^5-y^2z^3-xz^4",
                          "x^6+y^6-x^2z^4", "(x^2+y^2)^3-4x^2y^2z^2"}) {
        CHECK(euler_relation_holds(parse_poly(s)));
    }
}

TEST_CASE("ring laws and derivative product rule on random polynomials") {
    Xorshift rng(42);
    for (int i = 0; i < 60; ++i) {
        Poly p = random_poly(rng, 3, 6);
        Poly q = random_poly(rng, 3, 6);
        Poly r = random_poly(rng, 3, 6);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK((p * q).derivative(Var::x) ==
              p.derivative(Var::x) * q + p * q.derivative(Var::x));
    }
}

TEST_CASE("print/parse round trip") {
    Xorshift rng(7);
    for (int i = 0; i < 80; ++i) {
        Poly p = random_poly(rng, 4, 8);
        CHECK(parse_poly(p.to_string()) == p);
    }
    // rational coefficients round trip as well
    Poly h = Poly::monomial(Monomial{2, 0, 0}, make_rat(3, 2)) +
             Poly::monomial(Monomial{0, 1, 1}, make_rat(-1, 7)) + Poly::constant(make_rat(5, 6));
    CHECK(parse_poly(h.to_string()) == h);
    CHECK(parse_poly("3/2x^2-1/7yz+5/6") == h);
}

TEST_CASE("exact division detects non-divisibility") {
    Poly f = parse_poly("x^2+y^2");
    CHECK(!divide_exact(parse_poly("x^3"), f).has_value());
    auto q = divide_exact(parse_poly("x^4-y^4"), f);
    REQUIRE(q.has_value());
    CHECK(q->to_string() == "x^2-y^2");
}

TEST_CASE("evaluation") {
    Poly f = parse_poly("x^2y-3z^3");
    CHECK(f.evaluate(make_rat(2), make_rat(1), make_rat(1)) == make_rat(1));
    CHECK(f.evaluate(make_rat(1, 2), make_rat(4), make_rat(0)) == make_rat(1));
}
