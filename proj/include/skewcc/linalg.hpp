/**************************************************************************
 * linalg.hpp
 *
 * Copyright 2026 The skewcc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <vector>

#include "skewcc/chain_ring.hpp"

namespace skewcc {

using FVec = std::vector<FieldElement>;
using FMat = std::vector<FVec>;
using RVec = std::vector<ChainRingElement>;

namespace linalg {

/// In-place reduced row echelon form over F_{p^m}; returns the pivot columns.
inline std::vector<int> f_rref(FMat& M) {
    std::vector<int> pivots;
    if (M.empty()) return pivots;
    const size_t ncols = M[0].size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < M.size(); ++col) {
        size_t sel = row;
        while (sel < M.size() && M[sel][col].is_zero()) ++sel;
        if (sel == M.size()) continue;
        std::swap(M[row], M[sel]);
        const FieldElement inv = M[row][col].inverse();
        for (auto& e : M[row]) e = e * inv;
        for (size_t r = 0; r < M.size(); ++r) {
            if (r == row || M[r][col].is_zero()) continue;
            const FieldElement c = M[r][col];
            for (size_t j = 0; j < ncols; ++j) M[r][j] = M[r][j] - c * M[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    M.resize(row);  // drop zero rows
    return pivots;
}

/// Residual of v after reduction by a reduced row echelon basis.
inline FVec f_reduce_by(const FMat& rref, const std::vector<int>& pivots, FVec v) {
    for (size_t r = 0; r < rref.size(); ++r) {
        const FieldElement c = v[static_cast<size_t>(pivots[r])];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * rref[r][j];
    }
    return v;
}

inline bool f_is_zero(const FVec& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

/// One particular solution of A x = b over F_{p^m}, if consistent.
inline std::optional<FVec> f_solve(FMat A, FVec b, const FieldParams* F) {
    const size_t n = A.empty() ? 0 : A[0].size();
    for (size_t r = 0; r < A.size(); ++r) A[r].push_back(b[r]);
    auto pivots = f_rref(A);
    FVec x(n, F->zero());
    for (size_t r = 0; r < A.size(); ++r) {
        if (pivots[r] == static_cast<int>(n)) return std::nullopt;  // 0 = 1 row
        x[static_cast<size_t>(pivots[r])] = A[r][n];
    }
    return x;
}

/// Right null space of A over F_{p^m}: all x with A x = 0.
inline FMat f_nullspace(FMat A, const FieldParams* F, size_t ncols) {
    auto pivots = f_rref(A);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    FMat basis;
    for (size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        FVec x(ncols, F->zero());
        x[free_col] = F->one();
        for (size_t r = 0; r < A.size(); ++r)
            x[static_cast<size_t>(pivots[r])] = -A[r][free_col];
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Prime-subfield matrices, used where the relevant maps are only
/// F_p-linear (annihilators in the skew quotient).
struct FpMat {
    int64_t p;
    size_t cols;
    std::vector<std::vector<uint32_t>> rows;

    std::vector<int> rref() {
        std::vector<int> pivots;
        size_t row = 0;
        auto& M = rows;
        for (size_t col = 0; col < cols && row < M.size(); ++col) {
            size_t sel = row;
            while (sel < M.size() && M[sel][col] == 0) ++sel;
            if (sel == M.size()) continue;
            std::swap(M[row], M[sel]);
            const uint64_t inv = inv_mod(M[row][col]);
            for (auto& e : M[row]) e = static_cast<uint32_t>(e * inv % static_cast<uint64_t>(p));
            for (size_t r = 0; r < M.size(); ++r) {
                if (r == row || M[r][col] == 0) continue;
                const uint64_t c = M[r][col];
                for (size_t j = 0; j < cols; ++j) {
                    uint64_t t = (M[r][j] + c * (static_cast<uint64_t>(p) - M[row][j])) % static_cast<uint64_t>(p);
                    M[r][j] = static_cast<uint32_t>(t);
                }
            }
            pivots.push_back(static_cast<int>(col));
            ++row;
        }
        M.resize(row);
        return pivots;
    }

    std::vector<std::vector<uint32_t>> nullspace() {
        auto pivots = rref();
        std::vector<bool> is_pivot(cols, false);
        for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
        std::vector<std::vector<uint32_t>> basis;
        for (size_t free_col = 0; free_col < cols; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<uint32_t> x(cols, 0);
            x[free_col] = 1;
            for (size_t r = 0; r < rows.size(); ++r) {
                uint32_t v = rows[r][free_col];
                x[static_cast<size_t>(pivots[r])] = v == 0 ? 0 : static_cast<uint32_t>(p - v);
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

  private:
    uint64_t inv_mod(uint64_t a) const {
        uint64_t r = 1, b = a % static_cast<uint64_t>(p), e = static_cast<uint64_t>(p) - 2;
        while (e) {
            if (e & 1) r = r * b % static_cast<uint64_t>(p);
            b = b * b % static_cast<uint64_t>(p);
            e >>= 1;
        }
        return r;
    }
};

inline ChainRingElement unit_shift_down(const ChainRingElement& e, int v) {
    // e = u^v w; recover w (valuation of e must be >= v)
    const ChainRingParams* R = e.ring();
    std::vector<FieldElement> c;
    for (int i = v; i < R->k(); ++i) c.push_back(e.coeff(i));
    return R->from_coeffs(std::move(c));
}

/// Row echelon over the chain ring with global minimum-valuation pivoting.
/// Final rows r_i have every entry of valuation >= the pivot valuation v_i,
/// pivot entries exactly u^{v_i}, and zeros at all earlier pivot columns, so
/// the span decomposes as a direct sum of cyclic modules u^{v_i} R_k and
/// |C| = prod (p^m)^{k - v_i}.
struct CrEchelon {
    std::vector<RVec> rows;       // in pivot processing order
    std::vector<int> pivot_col;
    std::vector<int> pivot_val;
    const ChainRingParams* ring = nullptr;
    size_t ncols = 0;

    int log_cardinality_p() const {
        int e = 0;
        for (int v : pivot_val) e += ring->field()->m() * (ring->k() - v);
        return e;
    }

    std::vector<int> valuations_sorted() const {
        std::vector<int> v = pivot_val;
        std::sort(v.begin(), v.end());
        return v;
    }

    bool contains(RVec v) const {
        if (v.size() != ncols) throw LengthMismatch("vector length mismatch");
        for (size_t i = 0; i < rows.size(); ++i) {
            const ChainRingElement& e = v[static_cast<size_t>(pivot_col[i])];
            if (e.is_zero()) continue;
            if (e.u_valuation() < pivot_val[i]) return false;
            ChainRingElement w = unit_shift_down(e, pivot_val[i]);
            for (size_t j = 0; j < ncols; ++j) v[j] = v[j] - w * rows[i][j];
        }
        for (const auto& e : v)
            if (!e.is_zero()) return false;
        return true;
    }

    /// F_{p^m}-basis of the span: u^a times row i for a < k - v_i.
    FMat f_basis_flat() const {
        FMat out;
        const int k = ring->k();
        for (size_t i = 0; i < rows.size(); ++i) {
            for (int a = 0; a < k - pivot_val[i]; ++a) {
                FVec flat;
                flat.reserve(ncols * static_cast<size_t>(k));
                for (size_t j = 0; j < ncols; ++j) {
                    ChainRingElement e = rows[i][j].u_shifted(a);
                    for (int l = 0; l < k; ++l) flat.push_back(e.coeff(l));
                }
                out.push_back(std::move(flat));
            }
        }
        return out;
    }
};

inline CrEchelon cr_echelon(std::vector<RVec> work, const ChainRingParams* ring, size_t ncols) {
    CrEchelon out;
    out.ring = ring;
    out.ncols = ncols;
    const int k = ring->k();
    std::vector<bool> col_used(out.ncols, false);
    while (true) {
        // drop zero rows
        std::vector<RVec> active;
        for (auto& r : work) {
            bool z = true;
            for (const auto& e : r)
                if (!e.is_zero()) {
                    z = false;
                    break;
                }
            if (!z) active.push_back(std::move(r));
        }
        work = std::move(active);
        if (work.empty()) break;
        // global minimum valuation pivot, tie-broken by column then row
        int best_v = k + 1;
        size_t best_r = 0, best_c = 0;
        for (size_t c = 0; c < out.ncols; ++c) {
            if (col_used[c]) continue;
            for (size_t r = 0; r < work.size(); ++r) {
                int v = work[r][c].u_valuation();
                if (v < best_v) {
                    best_v = v;
                    best_r = r;
                    best_c = c;
                }
            }
            if (best_v == 0) break;  // cannot improve
        }
        if (best_v > k - 1) break;  // only zero entries left in unused columns
        RVec pivot_row = work[best_r];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(best_r));
        // normalize: pivot entry becomes exactly u^{v}
        ChainRingElement unit = unit_shift_down(pivot_row[best_c], best_v);
        ChainRingElement uinv = unit.inverse();
        for (auto& e : pivot_row) e = uinv * e;
        // eliminate the pivot column from all remaining rows
        for (auto& r : work) {
            const ChainRingElement& e = r[best_c];
            if (e.is_zero()) continue;
            ChainRingElement w = unit_shift_down(e, best_v);
            for (size_t j = 0; j < out.ncols; ++j) r[j] = r[j] - w * pivot_row[j];
        }
        col_used[best_c] = true;
        out.rows.push_back(std::move(pivot_row));
        out.pivot_col.push_back(static_cast<int>(best_c));
        out.pivot_val.push_back(best_v);
    }
    return out;
}

}  // namespace linalg
}  // namespace skewcc
