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

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>

namespace jacsyz {

enum class Var : int { x = 0, y = 1, z = 2 };

inline char var_name(Var v) { return v == Var::x ? 'x' : (v == Var::y ? 'y' : 'z'); }

/// Monomial x^a y^b z^c in the polynomial ring S = Q[x, y, z].
struct Monomial {
    int a = 0;  // exponent of x
    int b = 0;  // exponent of y
    int c = 0;  // exponent of z

    int degree() const { return a + b + c; }
    bool is_one() const { return a == 0 && b == 0 && c == 0; }

    int exponent(Var v) const {
        switch (v) {
            case Var::x: return a;
            case Var::y: return b;
            default: return c;
        }
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend Monomial operator*(const Monomial& u, const Monomial& v) {
        return Monomial{u.a + v.a, u.b + v.b, u.c + v.c};
    }

    bool divides(const Monomial& v) const { return a <= v.a && b <= v.b && c <= v.c; }

    /// Exact quotient; caller must ensure divisibility.
    friend Monomial operator/(const Monomial& u, const Monomial& v) {
        return Monomial{u.a - v.a, u.b - v.b, u.c - v.c};
    }
};

inline Monomial lcm(const Monomial& u, const Monomial& v) {
    return Monomial{std::max(u.a, v.a), std::max(u.b, v.b), std::max(u.c, v.c)};
}

inline bool coprime(const Monomial& u, const Monomial& v) {
    return std::min(u.a, v.a) == 0 && std::min(u.b, v.b) == 0 && std::min(u.c, v.c) == 0;
}

// Graded reverse lexicographic order with x > y > z: the single fixed
// term order of the engine. All reported invariants are order-independent.
inline bool grevlex_less(const Monomial& u, const Monomial& v) {
    const int du = u.degree(), dv = v.degree();
    if (du != dv) return du < dv;
    if (u.c != v.c) return u.c > v.c;  // more z makes a monomial smaller
    if (u.b != v.b) return u.b > v.b;
    return false;
}

inline bool grevlex_greater(const Monomial& u, const Monomial& v) { return grevlex_less(v, u); }

struct GrevlexLess {
    bool operator()(const Monomial& u, const Monomial& v) const { return grevlex_less(u, v); }
};

inline Monomial power_of(Var v, int e) {
    switch (v) {
        case Var::x: return Monomial{e, 0, 0};
        case Var::y: return Monomial{0, e, 0};
        default: return Monomial{0, 0, e};
    }
}

inline std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    auto app = [&s](char name, int e) {
        if (e == 0) return;
        s += name;
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    };
    app('x', m.a);
    app('y', m.b);
    app('z', m.c);
    return s;
}

}  // namespace jacsyz
