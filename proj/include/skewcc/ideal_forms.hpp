/**************************************************************************
 * ideal_forms.hpp
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

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skewcc/code.hpp"

namespace skewcc {

/// Canonical presentation of a left ideal of R_k[x;Theta]/<f^j>:
///   I = sum_i R (u^{i-1} a_i(x) + sum_j u^{i-1+j} r_{i,j}(x))
/// with a_i a monic right divisor of mu(f)^j or zero, a_k |_r a_i, and the
/// r_{i,j} unique under the degree constraints. All entries are residue-field
/// polynomials; a zero polynomial marks an absent summand.
struct CanonicalIdealForm {
    std::vector<SkewPoly> a;                // k entries
    std::vector<std::vector<SkewPoly>> r;   // r[i] holds r_{i+1, 1..k-1-i}

    bool operator==(const CanonicalIdealForm& rhs) const {
        if (a.size() != rhs.a.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != rhs.a[i]) return false;
        for (size_t i = 0; i < r.size(); ++i)
            for (size_t j = 0; j < r[i].size(); ++j)
                if (r[i][j] != rhs.r[i][j]) return false;
        return true;
    }
    bool operator!=(const CanonicalIdealForm& rhs) const { return !(*this == rhs); }

    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) os << " ; ";
            os << "a" << (i + 1) << "=" << a[i].to_string();
            for (size_t j = 0; j < r[i].size(); ++j)
                os << ", r" << (i + 1) << "," << (j + 1) << "=" << r[i][j].to_string();
        }
        return os.str();
    }
};

/// Rebuild the left ideal presented by a canonical form inside the ambient.
inline LeftIdealCode regenerate_ideal(std::shared_ptr<const AmbientQuotient> amb,
                                      const CanonicalIdealForm& form) {
    const SkewRing* ctx = amb->ctx();
    const ChainRingParams* R = ctx->ring();
    const FieldParams* F = R->field();
    const int k = R->k();
    const int N = amb->length();
    std::vector<SkewPoly> gens;
    for (int i = 0; i < k; ++i) {
        if (form.a[static_cast<size_t>(i)].is_zero()) continue;
        std::vector<std::vector<FieldElement>> layers(
            static_cast<size_t>(N), std::vector<FieldElement>(static_cast<size_t>(k), F->zero()));
        auto add_layer = [&](const SkewPoly& poly, int layer) {
            for (size_t t = 0; t < poly.coeff_count(); ++t)
                layers[t][static_cast<size_t>(layer)] = mu(poly.coeff(static_cast<int>(t)));
        };
        add_layer(form.a[static_cast<size_t>(i)], i);
        for (size_t j = 0; j < form.r[static_cast<size_t>(i)].size(); ++j) {
            const SkewPoly& rij = form.r[static_cast<size_t>(i)][j];
            if (!rij.is_zero()) add_layer(rij, i + 1 + static_cast<int>(j));
        }
        std::vector<ChainRingElement> coeffs;
        for (int t = 0; t < N; ++t) coeffs.push_back(R->from_coeffs(layers[static_cast<size_t>(t)]));
        gens.push_back(SkewPoly::from_coeffs(ctx, std::move(coeffs)));
    }
    return LeftIdealCode::from_generators(std::move(amb), std::move(gens));
}

/// The monic generator of a field-level left ideal (k = 1 code), or the zero
/// polynomial for the zero ideal.
inline SkewPoly ideal_generator(const LeftIdealCode& C) {
    if (C.ambient().ctx()->ring()->k() != 1) throw UnsupportedAmbient("generator extraction needs k = 1");
    if (C.is_zero_code()) return SkewPoly::zero(C.ambient().ctx());
    SkewPoly d = C.ambient().modulus();
    for (const auto& g : C.generators())
        if (!g.is_zero()) d = gcd_r(d, g);
    return d;
}

/// Canonical form of a left ideal of R_k[x;Theta]/<f^j>: a_i generates
/// Tor_i(C); the r_{i,j} are recovered by a constrained solve against C's
/// F-basis and certified by regenerating the ideal.
inline CanonicalIdealForm canonicalize_ideal(const LeftIdealCode& C, const SkewPoly& f_base, int j) {
    const AmbientQuotient& amb = C.ambient();
    const SkewRing* ctx = amb.ctx();
    const ChainRingParams* R = ctx->ring();
    const FieldParams* F = R->field();
    const int k = R->k();
    const int N = amb.length();
    if (f_base.pow(static_cast<uint64_t>(j)) != amb.modulus())
        throw UnsupportedAmbient("ambient modulus is not f^j");

    CanonicalIdealForm form;
    form.a.reserve(static_cast<size_t>(k));
    std::vector<LeftIdealCode> torsions;
    for (int i = 1; i <= k; ++i) {
        torsions.push_back(torsion_code(C, i));
        SkewPoly ai = ideal_generator(torsions.back());
        if (!ai.is_zero() && torsions.back().dimension_f() != N - ai.degree())
            throw Error("torsion generator degree mismatch");
        form.a.push_back(std::move(ai));
    }
    form.r.assign(static_cast<size_t>(k), {});
    for (int i = 0; i < k; ++i)
        form.r[static_cast<size_t>(i)].assign(static_cast<size_t>(k - 1 - i),
                                              SkewPoly::zero(torsions[0].ambient().ctx()));
    if (k == 1) {
        if (regenerate_ideal(C.ambient_ptr(), form) != C) throw Error("canonical form fails to regenerate");
        return form;
    }

    // constrained solve for each nonzero summand
    FMat basis = C.echelon().f_basis_flat();
    const size_t rho = basis.size();
    const size_t dim = static_cast<size_t>(N) * static_cast<size_t>(k);
    for (int i = 0; i < k; ++i) {
        const SkewPoly& ai = form.a[static_cast<size_t>(i)];
        if (ai.is_zero()) continue;
        // constraints: layers < i zero; layer i equals a_i; layer i+jj zero
        // at degrees >= deg a_{i+jj} when a_{i+jj} != 0
        FMat A;
        FVec b;
        auto constrain = [&](size_t flat_idx, const FieldElement& value) {
            FVec row;
            row.reserve(rho);
            for (size_t t = 0; t < rho; ++t) row.push_back(basis[t][flat_idx]);
            A.push_back(std::move(row));
            b.push_back(value);
        };
        for (int pos = 0; pos < N; ++pos) {
            for (int layer = 0; layer < k; ++layer) {
                const size_t flat = static_cast<size_t>(pos * k + layer);
                if (layer < i) {
                    constrain(flat, F->zero());
                } else if (layer == i) {
                    FieldElement v = static_cast<size_t>(pos) < ai.coeff_count() ? mu(ai.coeff(pos)) : F->zero();
                    constrain(flat, v);
                } else {
                    const SkewPoly& anext = form.a[static_cast<size_t>(layer)];
                    if (!anext.is_zero() && pos >= anext.degree()) constrain(flat, F->zero());
                }
            }
        }
        auto sol = linalg::f_solve(std::move(A), std::move(b), F);
        if (!sol) throw Error("canonical summand solve is inconsistent");
        // materialize h and read off the r layers
        FVec flat_h(dim, F->zero());
        for (size_t t = 0; t < rho; ++t) {
            if ((*sol)[t].is_zero()) continue;
            for (size_t cidx = 0; cidx < dim; ++cidx)
                flat_h[cidx] = flat_h[cidx] + (*sol)[t] * basis[t][cidx];
        }
        const SkewRing* res_ctx = torsions[0].ambient().ctx();
        for (int jj = 1; i + jj < k; ++jj) {
            std::vector<ChainRingElement> coeffs;
            for (int pos = 0; pos < N; ++pos)
                coeffs.push_back(
                    res_ctx->ring()->from_field(flat_h[static_cast<size_t>(pos * k + i + jj)]));
            form.r[static_cast<size_t>(i)][static_cast<size_t>(jj - 1)] =
                SkewPoly::from_coeffs(res_ctx, std::move(coeffs));
        }
    }
    if (regenerate_ideal(C.ambient_ptr(), form) != C) throw Error("canonical form fails to regenerate");
    return form;
}

/// Prop-2.16-style label for k = 2 ideals.
inline std::string ideal_type_label(const LeftIdealCode& C, const CanonicalIdealForm& form) {
    const ChainRingParams* R = C.ambient().ctx()->ring();
    if (R->k() != 2) throw UnsupportedAmbient("type labels are defined for k = 2");
    const int full = R->field()->m() * R->k() * C.ambient().length();
    if (C.is_zero_code() || C.log_cardinality_p() == full) return "trivial";
    if (form.a[0].is_zero()) return "nonmonic-principal";
    // principal iff the first summand alone regenerates the ideal
    CanonicalIdealForm head = form;
    head.a[1] = SkewPoly::zero(form.a[1].ctx());
    LeftIdealCode single = regenerate_ideal(C.ambient_ptr(), head);
    return single.same_row_space(C) ? "principal" : "nonprincipal";
}

/// Every left ideal of R_k[x;Theta]/<f^j> exactly once, as (canonical form,
/// code) pairs: candidate forms are enumerated under the divisor-tower
/// constraints and kept when they are the canonical form of the ideal they
/// generate.
inline std::vector<std::pair<CanonicalIdealForm, LeftIdealCode>> enumerate_ideals(
    std::shared_ptr<const AmbientQuotient> amb, const SkewPoly& f_base, int j,
    uint64_t candidate_cap = 2000000) {
    const SkewRing* ctx = amb->ctx();
    const ChainRingParams* R = ctx->ring();
    const FieldParams* F = R->field();
    const int k = R->k();
    const int N = amb->length();
    if (f_base.pow(static_cast<uint64_t>(j)) != amb->modulus())
        throw UnsupportedAmbient("ambient modulus is not f^j");
    auto res_ctx = k == 1 ? amb->ctx_ptr() : ctx->residue_context();
    SkewPoly muf_j = k == 1 ? amb->modulus() : mu_poly(amb->modulus(), res_ctx);

    // monic right divisors of mu(f)^j of degree < N, plus the zero marker
    std::vector<SkewPoly> divisors;
    divisors.push_back(SkewPoly::one(res_ctx.get()));
    for (int d = 1; d < N; ++d)
        for (auto& g : monic_right_divisors(muf_j, d, candidate_cap)) divisors.push_back(std::move(g));

    std::vector<std::pair<CanonicalIdealForm, LeftIdealCode>> out;
    uint64_t candidates = 0;

    // the zero ideal (all a_i zero) is one candidate
    CanonicalIdealForm zero_form;
    zero_form.a.assign(static_cast<size_t>(k), SkewPoly::zero(res_ctx.get()));
    zero_form.r.assign(static_cast<size_t>(k), {});
    for (int i = 0; i < k; ++i)
        zero_form.r[static_cast<size_t>(i)].assign(static_cast<size_t>(k - 1 - i),
                                                   SkewPoly::zero(res_ctx.get()));
    out.emplace_back(zero_form, regenerate_ideal(amb, zero_form));

    // a-assignments: indices into divisors for positions t..k-1 (positions
    // below t carry the zero marker), with a_{i+1} |_r a_i along the chain
    std::vector<size_t> choice(static_cast<size_t>(k), 0);
    auto enumerate_r = [&](const CanonicalIdealForm& base, auto&& self, int slot_i, int slot_j) -> void {
        // advance to the next open r slot
        int i = slot_i, jj = slot_j;
        while (i < k) {
            if (base.a[static_cast<size_t>(i)].is_zero() ||
                jj > static_cast<int>(base.r[static_cast<size_t>(i)].size())) {
                ++i;
                jj = 1;
                continue;
            }
            break;
        }
        if (i >= k) {
            if (++candidates > candidate_cap) throw CapExceeded("ideal candidate count above cap");
            LeftIdealCode C = regenerate_ideal(amb, base);
            if (canonicalize_ideal(C, f_base, j) == base) out.emplace_back(base, std::move(C));
            return;
        }
        const SkewPoly& anext = base.a[static_cast<size_t>(i + jj)];
        const int bound = anext.is_zero() ? N : anext.degree();
        uint64_t total = 1;
        for (int t = 0; t < bound; ++t) total *= F->q();
        for (uint64_t idx = 0; idx < total; ++idx) {
            uint64_t v = idx;
            std::vector<ChainRingElement> coeffs;
            for (int t = 0; t < bound; ++t) {
                coeffs.push_back(res_ctx->ring()->from_field(F->element_at(v % F->q())));
                v /= F->q();
            }
            CanonicalIdealForm next = base;
            next.r[static_cast<size_t>(i)][static_cast<size_t>(jj - 1)] =
                SkewPoly::from_coeffs(res_ctx.get(), std::move(coeffs));
            self(next, self, i, jj + 1);
        }
    };

    auto assign_a = [&](auto&& self, int pos, CanonicalIdealForm form) -> void {
        if (pos < 0) {
            enumerate_r(form, enumerate_r, 0, 1);
            return;
        }
        for (const auto& d : divisors) {
            // tower: a_{pos+1} must right-divide a_pos when both are present
            if (pos + 1 < k) {
                const SkewPoly& below = form.a[static_cast<size_t>(pos + 1)];
                if (below.is_zero()) continue;  // zeros form a prefix
                if (d.degree() < below.degree()) continue;
                if (!right_divmod(d, below).second.is_zero()) continue;
            }
            CanonicalIdealForm next = form;
            next.a[static_cast<size_t>(pos)] = d;
            self(self, pos - 1, std::move(next));
        }
        // leave positions 0..pos as the zero prefix
        if (pos == k - 1) return;  // all-zero handled separately
        enumerate_r(form, enumerate_r, 0, 1);
    };
    assign_a(assign_a, k - 1, zero_form);
    return out;
}

}  // namespace skewcc
