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

#include <map>
#include <stdexcept>
#include <vector>

#include "jacsyz/polynomial.hpp"

// Dense exact linear algebra over the monomial bases of S_k. This is the
// independent cross-check route for every graded dimension the Groebner
// engine reports: nothing here touches normal forms, bases, or saturation
// -- only coefficient matrices and Gaussian elimination.

namespace jacsyz::oracle {

/// Monomials of S_d in a fixed enumeration order.
inline std::vector<Monomial> monomial_basis(int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) out.push_back(Monomial{a, b, d - a - b});
    return out;
}

inline std::map<Monomial, int, GrevlexLess> basis_index(const std::vector<Monomial>& basis) {
    std::map<Monomial, int, GrevlexLess> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
    return idx;
}

/// In-place row echelon form; returns the rank.
inline int echelonize(std::vector<std::vector<Rat>>& rows) {
    const int nrows = static_cast<int>(rows.size());
    if (nrows == 0) return 0;
    const int ncols = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rat inv = Rat(1) / rows[rank][col];
        for (int c = col; c < ncols; ++c) rows[rank][c] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rat f = rows[r][col];
            for (int c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

inline std::vector<Rat> coefficient_row(const Poly& p,
                                        const std::map<Monomial, int, GrevlexLess>& idx,
                                        int ncols) {
    std::vector<Rat> row(ncols, Rat(0));
    for (const auto& t : p.terms()) row[idx.at(t.mono)] = t.coef;
    return row;
}

/// Echelon basis of the degree-k piece of the ideal (g_1, ..., g_r).
inline std::vector<std::vector<Rat>> ideal_piece_rows(const std::vector<Poly>& gens, int k) {
    const auto basis = monomial_basis(k);
    const auto idx = basis_index(basis);
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        const int dg = *g.degree();
        for (const auto& u : monomial_basis(k - dg))
            rows.push_back(coefficient_row(g.times_term(u, Rat(1)), idx, static_cast<int>(basis.size())));
    }
    echelonize(rows);
    return rows;
}

inline int ideal_piece_dim(const std::vector<Poly>& gens, int k) {
    return static_cast<int>(ideal_piece_rows(gens, k).size());
}

inline std::vector<Poly> jacobian_generators(const Poly& f) {
    return {f.derivative(Var::x), f.derivative(Var::y), f.derivative(Var::z)};
}

/// dim (S/J_f)_k by rank of the multiplication matrix of the partials.
inline int milnor_dim(const Poly& f, int k) {
    if (k < 0) return 0;
    const int nk = (k + 2) * (k + 1) / 2;
    return nk - ideal_piece_dim(jacobian_generators(f), k);
}

/// Reduces v against an echelon basis (pivot = first nonzero entry, scaled
/// to 1); returns the residual.
inline std::vector<Rat> reduce_against(std::vector<Rat> v,
                                       const std::vector<std::vector<Rat>>& echelon) {
    for (const auto& row : echelon) {
        int pc = -1;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] != 0) {
                pc = static_cast<int>(c);
                break;
            }
        }
        if (pc < 0) continue;
        if (v[pc] == 0) continue;
        const Rat f = v[pc];
        for (std::size_t c = pc; c < row.size(); ++c) v[c] -= f * row[c];
    }
    return v;
}

/// dim (I_f)_k where I_f is the saturation of J_f with respect to (x,y,z).
///
/// For t > T - k with T = 3d-6 the degree-k pieces of J_f : m^t and of the
/// saturation agree, so a single kernel computation at that t suffices:
///   h is in (I_f)_k  iff  h*u lies in (J_f)_{k+t} for every monomial u of
/// degree t. The membership constraints are linear in the coefficients of h.
inline int saturation_dim(const Poly& f, int k) {
    if (k < 0) return 0;
    if (!f.is_homogeneous() || f.is_zero()) throw std::invalid_argument("saturation_dim: need homogeneous f");
    const int d = *f.degree();
    const int T = 3 * d - 6;
    const int t = std::max(0, T - k + 1);

    const auto gens = jacobian_generators(f);
    const auto target_basis = monomial_basis(k + t);
    const auto target_idx = basis_index(target_basis);
    const auto source_basis = monomial_basis(k);
    const int ncols = static_cast<int>(source_basis.size());
    const int wide = static_cast<int>(target_basis.size());

    const auto echelon = ideal_piece_rows(gens, k + t);

    // Stack the residual constraint matrix over all degree-t multipliers.
    std::vector<std::vector<Rat>> constraints;
    for (const auto& u : monomial_basis(t)) {
        std::vector<std::vector<Rat>> cols;
        cols.reserve(ncols);
        bool all_zero = true;
        for (const auto& w : source_basis) {
            std::vector<Rat> col(wide, Rat(0));
            col[target_idx.at(w * u)] = 1;
            col = reduce_against(std::move(col), echelon);
            for (const auto& e : col)
                if (e != 0) {
                    all_zero = false;
                    break;
                }
            cols.push_back(std::move(col));
        }
        if (all_zero) continue;
        // transpose the residual columns into constraint rows
        for (int r = 0; r < wide; ++r) {
            std::vector<Rat> row(ncols, Rat(0));
            bool nonzero = false;
            for (int c = 0; c < ncols; ++c) {
                row[c] = cols[c][r];
                if (row[c] != 0) nonzero = true;
            }
            if (nonzero) constraints.push_back(std::move(row));
        }
    }
    const int rank = echelonize(constraints);
    return ncols - rank;
}

/// n_k = dim (I_f)_k - dim (J_f)_k, both sides by dense elimination.
inline int jacobian_module_dim(const Poly& f, int k) {
    if (k < 0) return 0;
    return saturation_dim(f, k) - ideal_piece_dim(jacobian_generators(f), k);
}

}  // namespace jacsyz::oracle
