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
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacsyz/polynomial.hpp"

namespace jacsyz {

/// Homogeneous element of a graded free module F = (+)_i S(-shift_i).
/// The degree of a term in slot i is deg(monomial) + shift_i.
struct ModVec {
    std::vector<Poly> components;
    std::vector<int> shifts;

    ModVec() = default;
    ModVec(std::vector<Poly> comps, std::vector<int> shs)
        : components(std::move(comps)), shifts(std::move(shs)) {
        if (components.size() != shifts.size())
            throw std::invalid_argument("ModVec: components/shifts size mismatch");
    }

    static ModVec from_poly(const Poly& p) { return ModVec({p}, {0}); }

    int rank() const { return static_cast<int>(components.size()); }

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_homogeneous() const {
        std::optional<int> deg;
        for (std::size_t i = 0; i < components.size(); ++i) {
            const auto& c = components[i];
            if (c.is_zero()) continue;
            if (!c.is_homogeneous()) return false;
            const int d = *c.degree() + shifts[i];
            if (deg && *deg != d) return false;
            deg = d;
        }
        return true;
    }

    /// Shifted degree of a homogeneous vector; empty for zero.
    std::optional<int> degree() const {
        std::optional<int> deg;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (components[i].is_zero()) continue;
            const int d = *components[i].degree() + shifts[i];
            deg = deg ? std::max(*deg, d) : d;
        }
        return deg;
    }

    friend bool operator==(const ModVec&, const ModVec&) = default;
};

namespace gb {

// ---------------------------------------------------------------------------
// Flattened module polynomials.
//
// A term of a free-module element is a (monomial, slot) pair. The module
// order is term-over-position grevlex: monomials compare first, equal
// monomials are ordered by slot with the smaller slot index on top. For
// syzygy computations the order is additionally blocked so that every term
// in a slot below elim_split dominates every term in the tail block; the
// tail block of a Groebner basis then cuts out the intersection with it.
// ---------------------------------------------------------------------------

struct MKey {
    Monomial mono;
    int pos = 0;

    friend bool operator==(const MKey&, const MKey&) = default;
};

struct MOrder {
    int elim_split = -1;  // slots < elim_split dominate; -1 disables blocking

    bool less(const MKey& u, const MKey& v) const {
        if (elim_split >= 0) {
            const bool ua = u.pos < elim_split, va = v.pos < elim_split;
            if (ua != va) return va;
        }
        if (grevlex_less(u.mono, v.mono)) return true;
        if (grevlex_less(v.mono, u.mono)) return false;
        return u.pos > v.pos;
    }
    bool greater(const MKey& u, const MKey& v) const { return less(v, u); }
};

struct MTerm {
    MKey key;
    Rat coef;
};

/// Terms sorted strictly descending under the active module order.
struct VecPoly {
    std::vector<MTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const MTerm& lead() const { return terms.front(); }
};

inline VecPoly normalize_terms(std::vector<MTerm> ts, const MOrder& ord) {
    std::sort(ts.begin(), ts.end(),
              [&ord](const MTerm& a, const MTerm& b) { return ord.greater(a.key, b.key); });
    VecPoly out;
    out.terms.reserve(ts.size());
    for (auto& t : ts) {
        if (t.coef == 0) continue;
        if (!out.terms.empty() && out.terms.back().key == t.key)
            out.terms.back().coef += t.coef;
        else
            out.terms.push_back(std::move(t));
        if (!out.terms.empty() && out.terms.back().coef == 0) out.terms.pop_back();
    }
    return out;
}

inline VecPoly add(const VecPoly& p, const VecPoly& q, const MOrder& ord) {
    VecPoly r;
    r.terms.reserve(p.terms.size() + q.terms.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms.size() && j < q.terms.size()) {
        const MTerm& a = p.terms[i];
        const MTerm& b = q.terms[j];
        if (a.key == b.key) {
            Rat c = a.coef + b.coef;
            if (c != 0) r.terms.push_back({a.key, std::move(c)});
            ++i, ++j;
        } else if (ord.greater(a.key, b.key)) {
            r.terms.push_back(a);
            ++i;
        } else {
            r.terms.push_back(b);
            ++j;
        }
    }
    for (; i < p.terms.size(); ++i) r.terms.push_back(p.terms[i]);
    for (; j < q.terms.size(); ++j) r.terms.push_back(q.terms[j]);
    return r;
}

/// g scaled by c * mono; the order survives term-wise multiplication.
inline VecPoly scaled(const VecPoly& g, const Monomial& mono, const Rat& c) {
    VecPoly r;
    r.terms.reserve(g.terms.size());
    for (const auto& t : g.terms) r.terms.push_back({{t.key.mono * mono, t.key.pos}, t.coef * c});
    return r;
}

/// Clears denominators, divides by the integer content, makes the leading
/// coefficient positive.
inline void make_primitive(VecPoly& v) {
    if (v.is_zero()) return;
    Int den_lcm = 1;
    for (const auto& t : v.terms) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
    Int content = 0;
    for (const auto& t : v.terms) {
        Int num = t.coef.get_num() * (den_lcm / t.coef.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    if (content == 0) return;
    Rat scale(den_lcm, content);
    scale.canonicalize();
    if (v.lead().coef < 0) scale = -scale;
    for (auto& t : v.terms) t.coef *= scale;
}

inline void make_monic(VecPoly& v) {
    if (v.is_zero()) return;
    const Rat lc = v.lead().coef;
    for (auto& t : v.terms) t.coef /= lc;
}

inline int shifted_degree(const MKey& k, const std::vector<int>& shifts) {
    return k.mono.degree() + shifts[k.pos];
}

inline bool is_homogeneous(const VecPoly& v, const std::vector<int>& shifts) {
    if (v.is_zero()) return true;
    const int d = shifted_degree(v.terms[0].key, shifts);
    for (const auto& t : v.terms)
        if (shifted_degree(t.key, shifts) != d) return false;
    return true;
}

/// Full normal form: no remainder term is divisible by any basis lead.
/// The reducer is always the first match in basis order, so the result is
/// deterministic for a fixed basis sequence.
inline VecPoly normal_form(VecPoly v, const std::vector<VecPoly>& basis, const MOrder& ord) {
    VecPoly rem;
    while (!v.is_zero()) {
        const MTerm& lt = v.lead();
        const VecPoly* red = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const MKey& gl = g.lead().key;
            if (gl.pos == lt.key.pos && gl.mono.divides(lt.key.mono)) {
                red = &g;
                break;
            }
        }
        if (red == nullptr) {
            rem.terms.push_back(lt);
            v.terms.erase(v.terms.begin());
            continue;
        }
        const Monomial q = lt.key.mono / red->lead().key.mono;
        const Rat c = -lt.coef / red->lead().coef;
        v = add(v, scaled(*red, q, c), ord);
    }
    return rem;
}

struct SPair {
    int deg;  // shifted degree of the lcm, drives the normal selection strategy
    int pos;
    Monomial lcm;
    int i, j;

    friend bool operator<(const SPair& a, const SPair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.pos != b.pos) return a.pos < b.pos;
        if (a.lcm != b.lcm) return grevlex_less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

struct BuchbergerResult {
    std::vector<VecPoly> basis;  // reduced: monic, self-reduced, sorted by lead
    bool exact = true;           // false when a degree cap discarded pairs
};

/// Buchberger completion with normal (lowest lcm degree first) strategy.
/// Pairs are skipped via the coprimality criterion (rank-1 only) and the
/// classic chain criterion. With degree_cap set, pairs above the cap are
/// dropped and the result is only a basis up to that degree.
inline BuchbergerResult buchberger_core(std::vector<VecPoly> gens, const MOrder& ord,
                                        const std::vector<int>& shifts, int rank,
                                        std::optional<int> degree_cap = std::nullopt) {
    BuchbergerResult out;
    std::vector<VecPoly> basis;

    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!is_homogeneous(g, shifts))
            throw std::invalid_argument("buchberger: generators must be homogeneous");
        make_primitive(g);
        basis.push_back(std::move(g));
    }

    std::set<SPair> queue;
    std::set<std::pair<int, int>> handled;
    auto push_pairs = [&](std::size_t n) {
        const MKey& ln = basis[n].lead().key;
        for (std::size_t k = 0; k < n; ++k) {
            const MKey& lk = basis[k].lead().key;
            if (lk.pos != ln.pos) continue;
            const Monomial l = lcm(lk.mono, ln.mono);
            queue.insert({l.degree() + shifts[ln.pos], ln.pos,
                          l, static_cast<int>(k), static_cast<int>(n)});
        }
    };
    for (std::size_t n = 1; n < basis.size(); ++n) push_pairs(n);

    while (!queue.empty()) {
        const SPair p = *queue.begin();
        queue.erase(queue.begin());
        if (degree_cap && p.deg > *degree_cap) {
            out.exact = false;
            continue;  // drain remaining pairs so the flag reflects all of them
        }
        handled.insert({p.i, p.j});

        const VecPoly& gi = basis[p.i];
        const VecPoly& gj = basis[p.j];
        // coprime leads: valid shortcut in the ideal case only
        if (rank == 1 && coprime(gi.lead().key.mono, gj.lead().key.mono)) continue;
        // chain criterion
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            const int ki = static_cast<int>(k);
            if (ki == p.i || ki == p.j) continue;
            const MKey& lk = basis[k].lead().key;
            if (lk.pos != p.pos || !lk.mono.divides(p.lcm)) continue;
            const auto key_ik = std::minmax(p.i, ki);
            const auto key_jk = std::minmax(p.j, ki);
            if (handled.count({key_ik.first, key_ik.second}) &&
                handled.count({key_jk.first, key_jk.second}))
                chained = true;
        }
        if (chained) continue;

        VecPoly s = add(scaled(gi, p.lcm / gi.lead().key.mono, Rat(1) / gi.lead().coef),
                        scaled(gj, p.lcm / gj.lead().key.mono, Rat(-1) / gj.lead().coef), ord);
        s = normal_form(std::move(s), basis, ord);
        if (s.is_zero()) continue;
        make_primitive(s);
        basis.push_back(std::move(s));
        push_pairs(basis.size() - 1);
    }

    // Reduced basis: minimal lead set, fully tail-reduced, monic, canonical order.
    std::vector<VecPoly> sorted = basis;
    std::sort(sorted.begin(), sorted.end(), [&ord](const VecPoly& a, const VecPoly& b) {
        return ord.less(a.lead().key, b.lead().key);
    });
    std::vector<VecPoly> kept;
    for (auto& g : sorted) {
        bool divisible = false;
        for (const auto& h : kept) {
            const MKey& hl = h.lead().key;
            if (hl.pos == g.lead().key.pos && hl.mono.divides(g.lead().key.mono)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) kept.push_back(std::move(g));
    }
    std::vector<VecPoly> reduced;
    reduced.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<VecPoly> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        VecPoly r = normal_form(kept[i], others, ord);
        make_monic(r);
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&ord](const VecPoly& a, const VecPoly& b) {
        return ord.less(a.lead().key, b.lead().key);
    });
    out.basis = std::move(reduced);
    return out;
}

inline VecPoly from_modvec(const ModVec& v) {
    std::vector<MTerm> ts;
    for (int i = 0; i < v.rank(); ++i)
        for (const auto& t : v.components[i].terms()) ts.push_back({{t.mono, i}, t.coef});
    return normalize_terms(std::move(ts), MOrder{});
}

inline ModVec to_modvec(const VecPoly& v, int rank, const std::vector<int>& shifts) {
    std::vector<std::vector<Term>> comps(rank);
    for (const auto& t : v.terms) comps[t.key.pos].push_back({t.key.mono, t.coef});
    std::vector<Poly> polys;
    polys.reserve(rank);
    for (auto& c : comps) polys.push_back(Poly::from_terms(std::move(c)));
    return ModVec(std::move(polys), shifts);
}

inline VecPoly from_poly(const Poly& p) {
    std::vector<MTerm> ts;
    for (const auto& t : p.terms()) ts.push_back({{t.mono, 0}, t.coef});
    return VecPoly{std::move(ts)};  // already descending
}

inline Poly to_poly(const VecPoly& v) {
    std::vector<Term> ts;
    for (const auto& t : v.terms) ts.push_back({t.key.mono, t.coef});
    return Poly::from_terms(std::move(ts));
}

}  // namespace gb

// ---------------------------------------------------------------------------
// Public Groebner objects
// ---------------------------------------------------------------------------

/// Ideal of S with its reduced Groebner basis (grevlex, monic leads).
class IdealGB {
public:
    IdealGB() = default;

    static IdealGB compute(std::vector<Poly> gens, std::optional<int> degree_cap = std::nullopt) {
        IdealGB I;
        I.generators_ = gens;
        std::vector<gb::VecPoly> vs;
        for (const auto& g : gens)
            if (!g.is_zero()) vs.push_back(gb::from_poly(g));
        auto res = gb::buchberger_core(std::move(vs), gb::MOrder{}, {0}, 1, degree_cap);
        I.exact_ = res.exact;
        for (const auto& v : res.basis) I.basis_.push_back(gb::to_poly(v));
        return I;
    }

    const std::vector<Poly>& generators() const { return generators_; }
    const std::vector<Poly>& basis() const { return basis_; }
    bool exact() const { return exact_; }
    bool is_zero_ideal() const { return basis_.empty(); }
    bool is_unit_ideal() const { return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero(); }

    friend bool operator==(const IdealGB& a, const IdealGB& b) { return a.basis_ == b.basis_; }

private:
    std::vector<Poly> generators_;
    std::vector<Poly> basis_;
    bool exact_ = true;
};

/// Graded submodule of a free module with its reduced Groebner basis.
class SubmoduleGB {
public:
    SubmoduleGB() = default;

    static SubmoduleGB compute(std::vector<ModVec> gens, std::optional<int> degree_cap = std::nullopt) {
        if (gens.empty()) throw std::invalid_argument("SubmoduleGB: ambient module unknown for empty input");
        SubmoduleGB M;
        M.rank_ = gens.front().rank();
        M.shifts_ = gens.front().shifts;
        for (const auto& g : gens)
            if (g.rank() != M.rank_ || g.shifts != M.shifts_)
                throw std::invalid_argument("SubmoduleGB: mixed ambient modules");
        M.generators_ = gens;
        std::vector<gb::VecPoly> vs;
        for (const auto& g : gens)
            if (!g.is_zero()) vs.push_back(gb::from_modvec(g));
        auto res = gb::buchberger_core(std::move(vs), gb::MOrder{}, M.shifts_, M.rank_, degree_cap);
        M.exact_ = res.exact;
        for (const auto& v : res.basis) M.basis_.push_back(gb::to_modvec(v, M.rank_, M.shifts_));
        return M;
    }

    static SubmoduleGB from_parts(int rank, std::vector<int> shifts, std::vector<ModVec> gens,
                                  std::vector<ModVec> basis, bool exact) {
        SubmoduleGB M;
        M.rank_ = rank;
        M.shifts_ = std::move(shifts);
        M.generators_ = std::move(gens);
        M.basis_ = std::move(basis);
        M.exact_ = exact;
        return M;
    }

    int rank() const { return rank_; }
    const std::vector<int>& shifts() const { return shifts_; }
    const std::vector<ModVec>& generators() const { return generators_; }
    const std::vector<ModVec>& basis() const { return basis_; }
    bool exact() const { return exact_; }

    friend bool operator==(const SubmoduleGB& a, const SubmoduleGB& b) {
        return a.rank_ == b.rank_ && a.shifts_ == b.shifts_ && a.basis_ == b.basis_;
    }

private:
    int rank_ = 0;
    std::vector<int> shifts_;
    std::vector<ModVec> generators_;
    std::vector<ModVec> basis_;
    bool exact_ = true;
};

inline IdealGB buchberger(std::vector<Poly> gens, std::optional<int> degree_cap = std::nullopt) {
    for (const auto& g : gens)
        if (!g.is_homogeneous()) throw std::invalid_argument("buchberger: inputs must be homogeneous");
    return IdealGB::compute(std::move(gens), degree_cap);
}

inline SubmoduleGB buchberger(std::vector<ModVec> gens, std::optional<int> degree_cap = std::nullopt) {
    for (const auto& g : gens)
        if (!g.is_homogeneous()) throw std::invalid_argument("buchberger: inputs must be homogeneous");
    return SubmoduleGB::compute(std::move(gens), degree_cap);
}

inline Poly normal_form(const Poly& p, const IdealGB& I) {
    std::vector<gb::VecPoly> basis;
    for (const auto& g : I.basis()) basis.push_back(gb::from_poly(g));
    return gb::to_poly(gb::normal_form(gb::from_poly(p), basis, gb::MOrder{}));
}

inline ModVec normal_form(const ModVec& v, const SubmoduleGB& M) {
    if (v.rank() != M.rank()) throw std::invalid_argument("normal_form: ambient rank mismatch");
    std::vector<gb::VecPoly> basis;
    for (const auto& g : M.basis()) basis.push_back(gb::from_modvec(g));
    return gb::to_modvec(gb::normal_form(gb::from_modvec(v), basis, gb::MOrder{}), M.rank(), M.shifts());
}

inline bool contains(const IdealGB& I, const Poly& p) { return normal_form(p, I).is_zero(); }
inline bool contains(const SubmoduleGB& M, const ModVec& v) { return normal_form(v, M).is_zero(); }

inline int monomial_count(int degree) { return degree < 0 ? 0 : (degree + 2) * (degree + 1) / 2; }

namespace gb {

template <typename Fn>
inline void for_each_monomial(int degree, Fn&& fn) {
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b) fn(Monomial{a, b, degree - a - b});
}

}  // namespace gb

/// Generators of { (c_1,...,c_k) : sum c_i v_i = 0 }, the syzygy module of
/// the given homogeneous vectors. Ambient shift of slot i is deg(v_i).
/// Computed by a Groebner basis of the graph module { (v, tag) } under a
/// block order eliminating the ambient slots; every returned vector is
/// verified to annihilate the input exactly.
inline SubmoduleGB syzygies(const std::vector<ModVec>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("syzygies: empty input");
    const int r = vectors.front().rank();
    const std::vector<int>& base_shifts = vectors.front().shifts;
    const int k = static_cast<int>(vectors.size());

    std::vector<int> tag_shifts;
    for (const auto& v : vectors) {
        if (v.rank() != r || v.shifts != base_shifts)
            throw std::invalid_argument("syzygies: mixed ambient modules");
        if (!v.is_homogeneous()) throw std::invalid_argument("syzygies: inputs must be homogeneous");
        tag_shifts.push_back(v.degree().value_or(0));
    }

    std::vector<int> big_shifts = base_shifts;
    big_shifts.insert(big_shifts.end(), tag_shifts.begin(), tag_shifts.end());

    std::vector<gb::VecPoly> gens;
    for (int i = 0; i < k; ++i) {
        std::vector<gb::MTerm> ts;
        for (int p = 0; p < r; ++p)
            for (const auto& t : vectors[i].components[p].terms()) ts.push_back({{t.mono, p}, t.coef});
        ts.push_back({{Monomial{}, r + i}, Rat(1)});
        gens.push_back(gb::normalize_terms(std::move(ts), gb::MOrder{r}));
    }

    auto res = gb::buchberger_core(std::move(gens), gb::MOrder{r}, big_shifts, r + k);

    std::vector<ModVec> syz;
    for (const auto& g : res.basis) {
        if (g.lead().key.pos < r) continue;
        std::vector<gb::MTerm> ts;
        for (const auto& t : g.terms) {
            if (t.key.pos < r) throw std::logic_error("syzygies: elimination order violated");
            ts.push_back({{t.key.mono, t.key.pos - r}, t.coef});
        }
        gb::VecPoly proj{std::move(ts)};
        syz.push_back(gb::to_modvec(proj, k, tag_shifts));
    }

    // exact verification against the input
    for (const auto& s : syz) {
        for (int p = 0; p < r; ++p) {
            Poly acc;
            for (int i = 0; i < k; ++i) acc = acc + s.components[i] * vectors[i].components[p];
            if (!acc.is_zero()) throw std::logic_error("syzygies: verification failed");
        }
    }

    return SubmoduleGB::from_parts(k, tag_shifts, syz, syz, res.exact);
}

inline SubmoduleGB syzygies(const std::vector<Poly>& polys) {
    std::vector<ModVec> vs;
    vs.reserve(polys.size());
    for (const auto& p : polys) vs.push_back(ModVec::from_poly(p));
    return syzygies(vs);
}

/// I : J = { h : h*J is contained in I }.
inline IdealGB ideal_colon_ideal(const IdealGB& I, const std::vector<Poly>& jgens) {
    std::vector<Poly> js;
    for (const auto& g : jgens)
        if (!g.is_zero()) js.push_back(g);
    if (js.empty()) throw std::invalid_argument("ideal_colon: colon by the zero ideal");
    if (I.is_zero_ideal()) return I;

    const int q = static_cast<int>(js.size());
    std::vector<int> shifts;
    shifts.reserve(q);
    for (const auto& g : js) shifts.push_back(-*g.degree());

    std::vector<ModVec> vectors;
    {
        std::vector<Poly> diag(js.begin(), js.end());
        vectors.emplace_back(std::move(diag), shifts);
    }
    for (const auto& a : I.basis()) {
        for (int l = 0; l < q; ++l) {
            std::vector<Poly> comps(q, Poly::zero());
            comps[l] = a;
            vectors.emplace_back(std::move(comps), shifts);
        }
    }

    SubmoduleGB syz = syzygies(vectors);
    std::vector<Poly> colon_gens;
    for (const auto& s : syz.basis())
        if (!s.components[0].is_zero()) colon_gens.push_back(s.components[0]);
    return buchberger(std::move(colon_gens));
}

inline IdealGB ideal_colon_ideal(const IdealGB& I, const IdealGB& J) {
    return ideal_colon_ideal(I, J.basis());
}

inline IdealGB ideal_colon(const IdealGB& I, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("ideal_colon: colon by zero");
    return ideal_colon_ideal(I, std::vector<Poly>{g});
}

namespace gb {

/// Kernel basis of the columns of a rational matrix (rows x cols).
inline std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows, int cols) {
    // row reduce
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        const Rat inv = Rat(1) / rows[rank][col];
        for (int c = col; c < cols; ++c) rows[rank][c] *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rat f = rows[r][col];
            for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> kernel;
    for (int freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[freec] = 1;
        for (int r = 0; r < rank; ++r)
            if (rows[r][freec] != 0) v[pivot_col[r]] = -rows[r][freec];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace gb

/// Socle elements in degree k: lifts of a basis of
/// ker( (S/I)_k -> (S/I)_{k+1}^3 ), the multiplication by x, y, z.
/// These are exactly the degree-k elements of (I : m) modulo I_k.
inline std::vector<Poly> socle_lifts(const IdealGB& I, int k) {
    std::vector<Monomial> std_k, std_k1;
    gb::for_each_monomial(k, [&](const Monomial& m) {
        for (const auto& g : I.basis())
            if (g.leading_monomial().divides(m)) return;
        std_k.push_back(m);
    });
    if (std_k.empty()) return {};
    gb::for_each_monomial(k + 1, [&](const Monomial& m) {
        for (const auto& g : I.basis())
            if (g.leading_monomial().divides(m)) return;
        std_k1.push_back(m);
    });
    std::map<Monomial, int, GrevlexLess> row_of;
    for (std::size_t i = 0; i < std_k1.size(); ++i) row_of[std_k1[i]] = static_cast<int>(i);

    const int cols = static_cast<int>(std_k.size());
    std::vector<std::vector<Rat>> rows(3 * std_k1.size(), std::vector<Rat>(cols, Rat(0)));
    for (int j = 0; j < cols; ++j) {
        int block = 0;
        for (Var v : {Var::x, Var::y, Var::z}) {
            const Poly nf = normal_form(Poly::monomial(std_k[j] * power_of(v, 1)), I);
            for (const auto& t : nf.terms())
                rows[block * std_k1.size() + row_of.at(t.mono)][j] = t.coef;
            ++block;
        }
    }
    std::vector<Poly> lifts;
    for (const auto& vec : gb::nullspace(std::move(rows), cols)) {
        std::vector<Term> ts;
        for (int j = 0; j < cols; ++j)
            if (vec[j] != 0) ts.push_back({std_k[j], vec[j]});
        lifts.push_back(Poly::from_terms(std::move(ts)));
    }
    return lifts;
}

/// Saturation with respect to (x, y, z): iterate I <- I : m until stable.
///
/// When the caller can bound the degrees where H0_m(S/I) lives (for a
/// Jacobian ideal the bound 3d-6 holds for every iterate of the chain),
/// each colon step reduces to kernels over the standard monomials.
inline IdealGB saturate_max_ideal(const IdealGB& I,
                                  std::optional<int> h0_degree_bound = std::nullopt) {
    if (h0_degree_bound) {
        IdealGB cur = I;
        for (;;) {
            int mingen = *h0_degree_bound + 1;
            for (const auto& g : cur.basis()) mingen = std::min(mingen, *g.degree());
            std::vector<Poly> lifts;
            for (int k = std::max(0, mingen - 1); k <= *h0_degree_bound; ++k)
                for (auto& p : socle_lifts(cur, k)) lifts.push_back(std::move(p));
            if (lifts.empty()) return cur;
            std::vector<Poly> gens = cur.basis();
            gens.insert(gens.end(), lifts.begin(), lifts.end());
            cur = buchberger(std::move(gens));
        }
    }
    const std::vector<Poly> m = {Poly::variable(Var::x), Poly::variable(Var::y),
                                 Poly::variable(Var::z)};
    IdealGB cur = I;
    for (;;) {
        IdealGB next = ideal_colon_ideal(cur, m);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

/// Krull dimension of S/I read off the monomial ideal of leading terms:
/// the largest set of variables supporting no leading term. Unit ideal
/// has dimension -1 by convention.
inline int krull_dimension(const IdealGB& I) {
    std::vector<Monomial> leads;
    for (const auto& g : I.basis()) leads.push_back(g.leading_monomial());
    int best = -1;
    for (int mask = 0; mask < 8; ++mask) {
        bool independent = true;
        for (const auto& m : leads) {
            const bool in_subring = ((mask & 1) || m.a == 0) && ((mask & 2) || m.b == 0) &&
                                    ((mask & 4) || m.c == 0);
            if (in_subring) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, (mask & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1));
    }
    return best;
}

/// dim (S/I)_k, the number of degree-k standard monomials.
inline int graded_dimension(const IdealGB& I, int k) {
    if (k < 0) return 0;
    int count = 0;
    gb::for_each_monomial(k, [&](const Monomial& m) {
        for (const auto& g : I.basis())
            if (g.leading_monomial().divides(m)) return;
        ++count;
    });
    return count;
}

/// dim (F/N)_k for the ambient free module F of the submodule N.
inline int graded_dimension(const SubmoduleGB& N, int k) {
    std::vector<gb::MKey> leads;
    for (const auto& g : N.basis()) leads.push_back(gb::from_modvec(g).lead().key);
    int count = 0;
    for (int p = 0; p < N.rank(); ++p) {
        const int d = k - N.shifts()[p];
        if (d < 0) continue;
        gb::for_each_monomial(d, [&](const Monomial& m) {
            for (const auto& l : leads)
                if (l.pos == p && l.mono.divides(m)) return;
            ++count;
        });
    }
    return count;
}

inline int ambient_dimension(const std::vector<int>& shifts, int k) {
    int n = 0;
    for (int s : shifts) n += monomial_count(k - s);
    return n;
}

/// dim I_k as a subspace of S_k.
inline int ideal_piece_dimension(const IdealGB& I, int k) {
    return monomial_count(k) - graded_dimension(I, k);
}

/// dim N_k as a subspace of the ambient module's degree-k piece.
inline int submodule_piece_dimension(const SubmoduleGB& N, int k) {
    return ambient_dimension(N.shifts(), k) - graded_dimension(N, k);
}

}  // namespace jacsyz
