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

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jacsyz/monomial.hpp"
#include "jacsyz/rational.hpp"

namespace jacsyz {

struct Term {
    Monomial mono;
    Rat coef;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in x, y, z.
///
/// Terms are kept in strictly descending grevlex order with no zero
/// coefficients, so equal polynomials have identical representations
/// and the leading term is terms().front().
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly{}; }

    static Poly constant(Rat c) {
        Poly p;
        if (c != 0) p.terms_.push_back({Monomial{}, std::move(c)});
        return p;
    }

    static Poly one() { return constant(1); }

    static Poly monomial(const Monomial& m, Rat c = Rat(1)) {
        Poly p;
        if (c != 0) p.terms_.push_back({m, std::move(c)});
        return p;
    }

    static Poly variable(Var v) { return monomial(power_of(v, 1)); }

    /// Builds a polynomial from unordered terms, combining duplicates.
    static Poly from_terms(std::vector<Term> ts) {
        std::map<Monomial, Rat, GrevlexLess> acc;
        for (auto& t : ts) {
            if (t.coef == 0) continue;
            acc[t.mono] += t.coef;
        }
        Poly p;
        p.terms_.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) p.terms_.push_back({it->first, it->second});
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    /// Total degree; empty for the zero polynomial.
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    std::span<const Term> terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rat& leading_coefficient() const { return leading_term().coef; }

    Rat coefficient(const Monomial& m) const {
        for (const auto& t : terms_) {
            if (t.mono == m) return t.coef;
            if (grevlex_less(t.mono, m)) break;
        }
        return Rat(0);
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    friend Poly operator+(const Poly& p, const Poly& q) {
        Poly r;
        r.terms_.reserve(p.terms_.size() + q.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < p.terms_.size() && j < q.terms_.size()) {
            const Term& a = p.terms_[i];
            const Term& b = q.terms_[j];
            if (a.mono == b.mono) {
                Rat c = a.coef + b.coef;
                if (c != 0) r.terms_.push_back({a.mono, std::move(c)});
                ++i, ++j;
            } else if (grevlex_greater(a.mono, b.mono)) {
                r.terms_.push_back(a);
                ++i;
            } else {
                r.terms_.push_back(b);
                ++j;
            }
        }
        for (; i < p.terms_.size(); ++i) r.terms_.push_back(p.terms_[i]);
        for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

    friend Poly operator*(const Poly& p, const Rat& c) {
        if (c == 0) return Poly{};
        Poly r = p;
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }
    friend Poly operator*(const Rat& c, const Poly& p) { return p * c; }

    /// Multiplication by a single term keeps the sorted order intact.
    Poly times_term(const Monomial& m, const Rat& c) const {
        if (c == 0) return Poly{};
        Poly r = *this;
        for (auto& t : r.terms_) {
            t.mono = t.mono * m;
            t.coef *= c;
        }
        return r;
    }

    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return Poly{};
        std::map<Monomial, Rat, GrevlexLess> acc;
        for (const auto& a : p.terms_)
            for (const auto& b : q.terms_) acc[a.mono * b.mono] += a.coef * b.coef;
        Poly r;
        r.terms_.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) r.terms_.push_back({it->first, it->second});
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r = Poly::one();
        for (unsigned i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    Poly derivative(Var v) const {
        Poly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            const int e = t.mono.exponent(v);
            if (e == 0) continue;
            Monomial m = t.mono;
            switch (v) {
                case Var::x: m.a -= 1; break;
                case Var::y: m.b -= 1; break;
                case Var::z: m.c -= 1; break;
            }
            r.terms_.push_back({m, t.coef * e});
        }
        return r;  // order is preserved: dividing by a variable is monotone
    }

    Rat evaluate(const Rat& x, const Rat& y, const Rat& z) const {
        Rat acc(0);
        for (const auto& t : terms_)
            acc += t.coef * rat_pow(x, t.mono.a) * rat_pow(y, t.mono.b) * rat_pow(z, t.mono.c);
        return acc;
    }

    /// Canonical text form: descending grevlex, '^' explicit, rational
    /// coefficients printed as num/den and juxtaposed with the monomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            const bool neg = t.coef < 0;
            Rat a = neg ? Rat(-t.coef) : t.coef;
            if (first) {
                if (neg) s += '-';
                first = false;
            } else {
                s += neg ? '-' : '+';
            }
            if (t.mono.is_one()) {
                s += rat_str(a);
            } else {
                if (a != 1) s += rat_str(a);
                s += jacsyz::to_string(t.mono);
            }
        }
        return s;
    }

private:
    std::vector<Term> terms_;
};

inline Poly partial_derivative(const Poly& p, Var v) { return p.derivative(v); }

/// Determinant of the 3x3 matrix with rows (x, y, z), row2, row3.
inline Poly det3(const std::array<Poly, 3>& row2, const std::array<Poly, 3>& row3) {
    const Poly x = Poly::variable(Var::x);
    const Poly y = Poly::variable(Var::y);
    const Poly z = Poly::variable(Var::z);
    return x * (row2[1] * row3[2] - row2[2] * row3[1]) -
           y * (row2[0] * row3[2] - row2[2] * row3[0]) +
           z * (row2[0] * row3[1] - row2[1] * row3[0]);
}

/// Exact division p / q; empty when q does not divide p.
inline std::optional<Poly> divide_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) return std::nullopt;
    Poly rem = p;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!q.leading_monomial().divides(lt.mono)) return std::nullopt;
        const Monomial m = lt.mono / q.leading_monomial();
        const Rat c = lt.coef / q.leading_coefficient();
        quot.push_back({m, c});
        rem = rem - q.times_term(m, c);
    }
    return Poly::from_terms(std::move(quot));
}

/// x*f_x + y*f_y + z*f_z == deg(f) * f, the arithmetic self-test used on
/// every curve fed to the engine.
inline bool euler_relation_holds(const Poly& f) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) return false;
    const int d = *f.degree();
    const Poly lhs = Poly::variable(Var::x) * f.derivative(Var::x) +
                     Poly::variable(Var::y) * f.derivative(Var::y) +
                     Poly::variable(Var::z) * f.derivative(Var::z);
    return lhs == f * Rat(d);
}

}  // namespace jacsyz
