/**************************************************************************
 * crt.hpp
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

#include "skewcc/factor.hpp"

namespace skewcc {

namespace detail {

/// Bezout pair for central coprime b, F over R_k: start from the residue
/// field identity and correct u-adically. With D = a b + v F = 1 - N and N
/// nilpotent coefficientwise, left-multiplying both coefficients by (1 + N)
/// squares N away; at most log2(k)+1 rounds are needed.
inline std::pair<SkewPoly, SkewPoly> hensel_bezout(const SkewPoly& b, const SkewPoly& F) {
    const SkewRing* ctx = b.ctx();
    auto res = ctx->residue_context();
    SkewPoly rb = mu_poly(b, res), rF = mu_poly(F, res);
    ExtendedGcd eg = gcd_r_extended(rb, rF);
    if (!eg.d.is_one()) throw NotCoprime("factors are not coprime in the residue field");
    SkewPoly a = lift_poly(eg.a, ctx), v = lift_poly(eg.b, ctx);
    const SkewPoly one = SkewPoly::one(ctx);
    for (int round = 0; round <= ctx->ring()->k() + 1; ++round) {
        SkewPoly N = one - (a * b + v * F);
        if (N.is_zero()) return {a, v};
        SkewPoly corr = one + N;
        a = corr * a;
        v = corr * v;
    }
    throw Error("u-adic Bezout correction failed to converge");
}

}  // namespace detail

/// The idempotent system of a central coprime factorization: complements
/// F_j = modulus / f_j^{k_j}, Bezout cofactors v_j, and the idempotents
/// eps_j = v_j F_j mod modulus, with all the defining identities certified
/// at construction.
class CrtSystem {
  public:
    static CrtSystem build(const CentralFactorization& fact) {
        CrtSystem sys;
        sys.fact_ = fact;
        const SkewRing* ctx = fact.modulus.ctx();
        const size_t t = fact.factors.size();
        for (size_t j = 0; j < t; ++j) sys.blocks_.push_back(fact.block(j));
        for (size_t j = 0; j < t; ++j) {
            SkewPoly Fj = SkewPoly::one(ctx);
            for (size_t l = 0; l < t; ++l)
                if (l != j) Fj = Fj * sys.blocks_[l];
            sys.complements_.push_back(Fj);
            SkewPoly vj = SkewPoly::zero(ctx);
            if (t == 1) {
                vj = SkewPoly::one(ctx);
            } else {
                try {
                    ExtendedGcd eg = gcd_r_extended(sys.blocks_[j], Fj);
                    if (!eg.d.is_one()) throw NotCoprime("blocks are not right-coprime");
                    vj = eg.b;
                } catch (const NonUnitPivot&) {
                    vj = detail::hensel_bezout(sys.blocks_[j], Fj).second;
                }
            }
            sys.bezout_.push_back(vj);
            sys.idempotents_.push_back(sys.reduce(vj * Fj));
        }
        sys.certify();
        return sys;
    }

    const CentralFactorization& factorization() const { return fact_; }
    const std::vector<SkewPoly>& blocks() const { return blocks_; }
    const std::vector<SkewPoly>& complements() const { return complements_; }
    const std::vector<SkewPoly>& idempotents() const { return idempotents_; }
    size_t arity() const { return blocks_.size(); }

    SkewPoly reduce(const SkewPoly& g) const { return right_divmod(g, fact_.modulus).second; }

    /// Component j is g mod f_j^{k_j}.
    std::vector<SkewPoly> decompose(const SkewPoly& g) const {
        std::vector<SkewPoly> out;
        for (const auto& b : blocks_) out.push_back(right_divmod(g, b).second);
        return out;
    }

    /// sum eps_j a_j mod modulus, the inverse of decompose.
    SkewPoly recompose(const std::vector<SkewPoly>& components) const {
        if (components.size() != blocks_.size()) throw ArityMismatch("component count mismatch");
        SkewPoly acc = SkewPoly::zero(fact_.modulus.ctx());
        for (size_t j = 0; j < components.size(); ++j) acc = acc + idempotents_[j] * components[j];
        return reduce(acc);
    }

  private:
    void certify() const {
        const SkewRing* ctx = fact_.modulus.ctx();
        SkewPoly sum = SkewPoly::zero(ctx);
        for (const auto& e : idempotents_) sum = sum + e;
        if (!reduce(sum).is_one()) throw Error("idempotents do not sum to 1");
        for (size_t j = 0; j < idempotents_.size(); ++j) {
            if (reduce(idempotents_[j] * idempotents_[j]) != idempotents_[j])
                throw Error("idempotent fails eps^2 = eps");
            for (size_t l = 0; l < idempotents_.size(); ++l) {
                if (l == j) continue;
                if (!reduce(idempotents_[j] * idempotents_[l]).is_zero())
                    throw Error("idempotents are not orthogonal");
            }
        }
    }

    CentralFactorization fact_;
    std::vector<SkewPoly> blocks_;
    std::vector<SkewPoly> complements_;
    std::vector<SkewPoly> bezout_;
    std::vector<SkewPoly> idempotents_;
};

}  // namespace skewcc
