/**************************************************************************
 * factor.hpp
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

#include <optional>
#include <string>
#include <vector>

#include "skewcc/skew.hpp"

namespace skewcc {

inline ChainRingElement cr_pow(const ChainRingElement& a, uint64_t e) {
    ChainRingElement r = a.ring()->one();
    ChainRingElement b = a;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

/// In characteristic p, (sum a_i u^i)^{p^s} = sum a_i^{p^s} u^{i p^s}, so a
/// p^s-th root of a unit exists iff the support lies on u-indices divisible
/// by p^s; the canonical root is then assembled from field-level roots.
inline std::optional<ChainRingElement> ps_root_chain_ring(const ChainRingElement& lambda, int s) {
    if (!lambda.is_unit()) throw NotAUnit("p^s-th root of a non-unit");
    if (s < 0) throw BadParams("negative root exponent");
    const ChainRingParams* R = lambda.ring();
    const int k = R->k();
    uint64_t ps = 1;
    for (int i = 0; i < s && ps <= static_cast<uint64_t>(k); ++i) ps *= static_cast<uint64_t>(R->field()->p());
    ChainRingElement root = R->zero();
    for (int j = 0; j < k; ++j) {
        if (lambda.coeff(j).is_zero()) continue;
        if (static_cast<uint64_t>(j) % ps != 0) return std::nullopt;
        root = root + R->from_field(pth_power_root(lambda.coeff(j), s)).u_shifted(j / static_cast<int>(ps));
    }
    // certify root^{p^s} = lambda
    ChainRingElement chk = root;
    for (int i = 0; i < s; ++i) chk = cr_pow(chk, static_cast<uint64_t>(R->field()->p()));
    if (chk != lambda) return std::nullopt;
    return root;
}

/// Cube root of a unit of R_k for p != 3: choose a field-level cube root of
/// the residue, then solve the triangular system 3 d_1^2 d_n = l_n - (lower
/// triple products) layer by layer. Exists iff the residue is a cube.
inline std::optional<ChainRingElement> cube_root_unit(const ChainRingElement& lambda0) {
    const ChainRingParams* R = lambda0.ring();
    if (R->field()->p() == 3) throw CharacteristicThree("cube roots in characteristic 3 are out of scope");
    if (!lambda0.is_unit()) throw NotAUnit("cube root of a non-unit");
    const int k = R->k();
    auto res_roots = cube_roots(mu(lambda0));
    if (res_roots.empty()) return std::nullopt;
    std::vector<FieldElement> d(static_cast<size_t>(k), R->field()->zero());
    d[0] = res_roots.front();  // least-encoded
    const FieldElement inv3d2 = (R->field()->from_int(3) * d[0] * d[0]).inverse();
    for (int n = 2; n <= k; ++n) {
        // lambda_n = sum_{i+j+l = n+2, 1 <= i,j,l <= n} d_i d_j d_l; the only
        // terms with an index n are the three permutations of (1,1,n).
        FieldElement lower = R->field()->zero();
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= n - 1; ++j) {
                const int l = n + 2 - i - j;
                if (l < 1 || l > n - 1) continue;
                lower = lower + d[static_cast<size_t>(i - 1)] * d[static_cast<size_t>(j - 1)] *
                                    d[static_cast<size_t>(l - 1)];
            }
        d[static_cast<size_t>(n - 1)] = (lambda0.coeff(n - 1) - lower) * inv3d2;
    }
    ChainRingElement delta = R->from_coeffs(std::move(d));
    if (delta * delta * delta != lambda0) throw Error("cube root reconstruction failed verification");
    return delta;
}

namespace detail {

/// Field-coefficient view of a k = 1 skew polynomial, plus the residue
/// Frobenius exponent; the substrate for the exhaustive scans below.
struct FieldPolyView {
    const FieldParams* F;
    std::vector<FieldElement> c;
    int theta_exp;
    explicit FieldPolyView(const SkewPoly& f) {
        if (f.ctx()->ring()->k() != 1) throw UnsupportedAmbient("field-level scan requires k = 1");
        F = f.ctx()->ring()->field();
        theta_exp = f.ctx()->theta().theta().exponent;
        for (size_t i = 0; i < f.coeff_count(); ++i) c.push_back(mu(f.coeff(static_cast<int>(i))));
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    /// Remainder under right division by (x - a), by the norm recursion.
    FieldElement eval_at(const FieldElement& a) const {
        FieldElement acc = c[0];
        FieldElement norm = F->one();
        FieldElement tw = a;
        const int d = degree();
        for (int i = 1; i <= d; ++i) {
            norm = tw * norm;
            if (!c[static_cast<size_t>(i)].is_zero()) acc = acc + c[static_cast<size_t>(i)] * norm;
            if (i < d) tw = frobenius(tw, theta_exp);
        }
        return acc;
    }

    /// Remainder under right division by x^2 + c1 x + c0, as (r1, r0):
    /// x^{i+1} = (theta(B_i) - theta(A_i) c1) x - theta(A_i) c0 from
    /// x^i = A_i x + B_i.
    std::pair<FieldElement, FieldElement> quad_remainder(const FieldElement& c1, const FieldElement& c0) const {
        FieldElement A = F->zero(), B = F->one();  // x^0
        FieldElement r1 = F->zero(), r0 = c[0];
        const int d = degree();
        for (int i = 1; i <= d; ++i) {
            FieldElement tA = frobenius(A, theta_exp), tB = frobenius(B, theta_exp);
            A = tB - tA * c1;
            B = -(tA * c0);
            const FieldElement& ci = c[static_cast<size_t>(i)];
            if (!ci.is_zero()) {
                r1 = r1 + ci * A;
                r0 = r0 + ci * B;
            }
        }
        return {r1, r0};
    }
};

}  // namespace detail

/// All a with (x - a) a right divisor of f, by exhaustive field scan in
/// encoding order (k = 1 contexts only).
inline std::vector<ChainRingElement> linear_right_factors(const SkewPoly& f, uint64_t cap = 1000000) {
    if (f.is_zero()) throw ZeroPolynomial("factor scan of the zero polynomial");
    detail::FieldPolyView view(f);
    if (view.F->q() > cap) throw FieldTooLarge("field larger than the scan cap");
    std::vector<ChainRingElement> out;
    for (uint64_t i = 0; i < view.F->q(); ++i) {
        FieldElement a = view.F->element_at(i);
        if (view.eval_at(a).is_zero()) out.push_back(f.ctx()->ring()->from_field(a));
    }
    return out;
}

namespace detail {
inline std::optional<FieldElement> first_right_root(const FieldPolyView& view) {
    for (uint64_t i = 0; i < view.F->q(); ++i) {
        FieldElement a = view.F->element_at(i);
        if (view.eval_at(a).is_zero()) return a;
    }
    return std::nullopt;
}
}  // namespace detail

/// Full ordered factorization of a monic k = 1 polynomial into linear skew
/// factors, peeling the least-encoded right root at each stage. The product
/// of the returned factors, left to right, recomposes f (certified before
/// returning); nullopt if some stage has no right root.
inline std::optional<std::vector<SkewPoly>> peel_linear_factorization(const SkewPoly& f, uint64_t cap = 1000000) {
    if (f.is_zero() || !f.is_monic()) throw NonMonic("peeling requires a monic polynomial");
    if (f.ctx()->ring()->k() != 1) throw UnsupportedAmbient("peeling requires field coefficients");
    if (f.ctx()->ring()->field()->q() > cap) throw FieldTooLarge("field larger than the scan cap");
    const SkewRing* ctx = f.ctx();
    std::vector<SkewPoly> peeled;
    SkewPoly g = f;
    while (!g.is_one()) {
        detail::FieldPolyView view(g);
        auto root = detail::first_right_root(view);
        if (!root) return std::nullopt;
        SkewPoly lin = SkewPoly::binomial(ctx, 1, ctx->ring()->from_field(*root));
        auto [q, r] = right_divmod(g, lin);
        if (!r.is_zero()) throw Error("extracted root fails to divide");
        peeled.push_back(lin);
        g = q;
    }
    std::reverse(peeled.begin(), peeled.end());
    SkewPoly prod = SkewPoly::one(ctx);
    for (const auto& l : peeled) prod = prod * l;
    if (prod != f) throw Error("peeled factorization fails to recompose");
    return peeled;
}

/// Resumable scan over monic quadratics x^2 + c1 x + c0 in lexicographic
/// (c0, c1) encoding order, yielding the right divisors of f.
class QuadraticRightDivisorScan {
  public:
    explicit QuadraticRightDivisorScan(const SkewPoly& f) : view_(f), ctx_(f.ctx()), next_(0) {}

    std::optional<SkewPoly> next() {
        const uint64_t q = view_.F->q();
        while (next_ < q * q) {
            const uint64_t i0 = next_ / q, i1 = next_ % q;
            ++next_;
            FieldElement c0 = view_.F->element_at(i0);
            FieldElement c1 = view_.F->element_at(i1);
            auto [r1, r0] = view_.quad_remainder(c1, c0);
            if (r1.is_zero() && r0.is_zero()) {
                const ChainRingParams* R = ctx_->ring();
                return SkewPoly::from_coeffs(
                    ctx_, {R->from_field(c0), R->from_field(c1), R->one()});
            }
        }
        return std::nullopt;
    }

  private:
    detail::FieldPolyView view_;
    const SkewRing* ctx_;
    uint64_t next_;
};

/// All monic right divisors of f of exact degree d, by brute enumeration
/// (test-scale only; candidate count q^d is capped).
inline std::vector<SkewPoly> monic_right_divisors(const SkewPoly& f, int d, uint64_t cap = 2000000) {
    if (f.is_zero()) throw ZeroPolynomial("divisor scan of the zero polynomial");
    if (f.ctx()->ring()->k() != 1) throw UnsupportedAmbient("divisor scan requires k = 1");
    const FieldParams* F = f.ctx()->ring()->field();
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
        count *= F->q();
        if (count > cap) throw CapExceeded("divisor candidate count above cap");
    }
    std::vector<SkewPoly> out;
    std::vector<uint64_t> idx(static_cast<size_t>(d), 0);
    const SkewRing* ctx = f.ctx();
    for (uint64_t n = 0; n < count; ++n) {
        uint64_t t = n;
        std::vector<ChainRingElement> c;
        c.reserve(static_cast<size_t>(d) + 1);
        // lexicographic in (c_0, ..., c_{d-1})
        for (int i = d - 1; i >= 0; --i) {
            idx[static_cast<size_t>(i)] = t % F->q();
            t /= F->q();
        }
        for (int i = 0; i < d; ++i) c.push_back(ctx->ring()->from_field(F->element_at(idx[static_cast<size_t>(i)])));
        c.push_back(ctx->ring()->one());
        SkewPoly cand = SkewPoly::from_coeffs(ctx, std::move(c));
        if (right_divmod(f, cand).second.is_zero()) out.push_back(cand);
    }
    return out;
}

struct CentralFactor {
    SkewPoly base;
    int multiplicity = 1;
    bool irreducible = false;
};

/// A verified central coprime factorization of x^{n p^s} - lambda: the blocks
/// base^multiplicity are central, pairwise coprime, and multiply back to the
/// modulus exactly.
struct CentralFactorization {
    SkewPoly modulus;
    std::vector<CentralFactor> factors;
    std::string case_tag;

    SkewPoly block(size_t i) const { return factors[i].base.pow(static_cast<uint64_t>(factors[i].multiplicity)); }

    void verify() const {
        const SkewRing* ctx = modulus.ctx();
        SkewPoly prod = SkewPoly::one(ctx);
        std::vector<SkewPoly> blocks;
        for (size_t i = 0; i < factors.size(); ++i) {
            blocks.push_back(block(i));
            if (!is_central(blocks.back()).central) throw Error("factor block is not central");
            if (factors[i].multiplicity == 1 && !is_central(factors[i].base).central)
                throw Error("multiplicity-one base factor is not central");
            prod = prod * blocks.back();
        }
        if (prod != modulus) throw Error("factor blocks do not recompose the modulus");
        const bool field_level = ctx->ring()->k() == 1;
        for (size_t i = 0; i < blocks.size(); ++i)
            for (size_t j = i + 1; j < blocks.size(); ++j) {
                if (field_level) {
                    if (!gcd_r(blocks[i], blocks[j]).is_one()) throw Error("factor blocks are not coprime");
                } else {
                    auto res = ctx->residue_context();
                    if (!gcd_r(mu_poly(blocks[i], res), mu_poly(blocks[j], res)).is_one())
                        throw Error("factor blocks are not residue-coprime");
                }
            }
    }
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionViolated(what);
}

inline uint64_t int_pow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Least primitive root modulo p (integer arithmetic, prime field scale).
inline int64_t least_primitive_root(int64_t p) {
    auto primes = prime_factors(static_cast<uint64_t>(p - 1));
    auto powmod = [&](int64_t b, int64_t e) {
        int64_t r = 1 % p;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t r : primes)
            if (powmod(g, (p - 1) / static_cast<int64_t>(r)) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no primitive root found");
}

inline void check_theta_preconditions(const SkewRing& ctx, const ChainRingElement& lambda, int s) {
    require(lambda.is_unit(), "lambda must be a unit");
    require(ctx.theta().apply(lambda) == lambda, "lambda must be fixed by the automorphism");
    const uint64_t ps = int_pow(static_cast<uint64_t>(ctx.ring()->field()->p()), s);
    require(ps % ctx.theta().order() == 0, "automorphism order must divide p^s");
}

}  // namespace detail

/// Factorization of x^{3 p^s} - lambda, dispatching on whether the p^s-th
/// root lambda_0 is a cube and on (p mod 3, parity of m).
inline CentralFactorization factor_length3(const std::shared_ptr<const SkewRing>& ctx,
                                           const ChainRingElement& lambda, int s) {
    const ChainRingParams* R = ctx->ring();
    const FieldParams* F = R->field();
    const int64_t p = F->p();
    detail::require(p != 3, "p = 3 is out of scope for length 3 p^s");
    detail::check_theta_preconditions(*ctx, lambda, s);
    const int ps = static_cast<int>(detail::int_pow(static_cast<uint64_t>(p), s));

    auto lambda0_opt = ps_root_chain_ring(lambda, s);
    if (!lambda0_opt) throw NoPsRoot("lambda has no p^s-th root in the chain ring");
    const ChainRingElement lambda0 = *lambda0_opt;
    detail::require(ctx->theta().apply(lambda0) == lambda0, "canonical p^s-th root is not automorphism-fixed");

    CentralFactorization out;
    out.modulus = SkewPoly::binomial(ctx, 3 * ps, lambda);

    auto delta_opt = cube_root_unit(lambda0);
    if (!delta_opt) {
        // x^3 - lambda_0 is irreducible (its residue is a non-cube)
        out.factors.push_back({SkewPoly::binomial(ctx, 3, lambda0), ps, true});
        out.case_tag = "len3 non-cube";
        out.verify();
        return out;
    }
    const ChainRingElement delta = *delta_opt;
    detail::require(ctx->theta().apply(delta) == delta, "cube root is not automorphism-fixed");

    const bool omega_exists = (F->q() - 1) % 3 == 0;
    if (omega_exists) {
        FieldElement w = *primitive_cube_root_of_unity(*F);
        ChainRingElement omega = R->from_field(w);
        for (int i = 0; i < 3; ++i) {
            out.factors.push_back({SkewPoly::binomial(ctx, 1, cr_pow(omega, static_cast<uint64_t>(i)) * delta),
                                   ps, true});
        }
        out.case_tag = p % 3 == 1 ? "len3 cube, p=1 mod 3" : "len3 cube, p=2 mod 3, m even";
    } else {
        // p = 2 mod 3 with m odd: x^2 + dx + d^2 stays irreducible
        out.factors.push_back({SkewPoly::binomial(ctx, 1, delta), ps, true});
        SkewPoly quad = SkewPoly::from_coeffs(ctx, {delta * delta, delta, R->one()});
        out.factors.push_back({quad, ps, true});
        out.case_tag = "len3 cube, p=2 mod 3, m odd";
    }
    out.verify();
    return out;
}

/// Factorization of x^{6 p^s} -+ 1. The cyclic case splits on whether a
/// primitive 6th root of unity exists; the negacyclic case dispatches on
/// p mod 12 and the parity of m.
inline CentralFactorization factor_length6(const std::shared_ptr<const SkewRing>& ctx, int lambda_sign, int s) {
    const ChainRingParams* R = ctx->ring();
    const FieldParams* F = R->field();
    const int64_t p = F->p();
    detail::require(p >= 5, "p must be at least 5 for length 6 p^s");
    detail::require(lambda_sign == 1 || lambda_sign == -1, "lambda must be +1 or -1");
    const ChainRingElement lambda = R->from_int(lambda_sign);
    detail::check_theta_preconditions(*ctx, lambda, s);
    const int ps = static_cast<int>(detail::int_pow(static_cast<uint64_t>(p), s));
    const bool m_even = F->m() % 2 == 0;

    CentralFactorization out;
    out.modulus = SkewPoly::binomial(ctx, 6 * ps, lambda);
    auto lin = [&](const ChainRingElement& c) { return SkewPoly::binomial(ctx, 1, c); };
    auto quad = [&](const ChainRingElement& c1, const ChainRingElement& c0) {
        return SkewPoly::from_coeffs(ctx, {c0, c1, R->one()});
    };

    if (lambda_sign == 1) {
        if (p % 6 == 1 || m_even) {
            // six linear base factors through a primitive 6th root of unity
            FieldElement a6 = element_of_order(*F, 6);
            FieldElement alt = a6.pow(5);
            if (F->index_of(alt) < F->index_of(a6)) a6 = alt;
            ChainRingElement alpha = R->from_field(a6);
            for (int i = 0; i < 6; ++i)
                out.factors.push_back({lin(cr_pow(alpha, static_cast<uint64_t>(i))), ps, true});
            out.case_tag = "len6 cyclic, split";
        } else {
            out.factors.push_back({lin(R->one()), ps, true});
            out.factors.push_back({lin(-R->one()), ps, true});
            out.factors.push_back({quad(-R->one(), R->one()), ps, true});   // x^2 - x + 1
            out.factors.push_back({quad(R->one(), R->one()), ps, true});    // x^2 + x + 1
            out.case_tag = "len6 cyclic, p=5 mod 6, m odd";
        }
        out.verify();
        return out;
    }

    // negacyclic
    if (m_even || p % 12 == 1) {
        // 12th roots of unity exist; x^6 + 1 splits into the odd powers of
        // a primitive 12th root (the cyclic case in disguise)
        FieldElement psi = element_of_order(*F, 12);
        for (int i = 0; i < 6; ++i)
            out.factors.push_back({lin(R->from_field(psi.pow(static_cast<uint64_t>(2 * i + 1)))), ps, true});
        out.case_tag = m_even ? "len6 negacyclic, m even" : "len6 negacyclic, p=1 mod 12";
    } else if (p % 12 == 5) {
        const int64_t xi = detail::least_primitive_root(p);
        int64_t a = 1;
        for (int64_t i = 0; i < (p - 1) / 4; ++i) a = a * xi % p;
        ChainRingElement alpha = R->from_int(a);
        ChainRingElement alpha_inv = alpha.inverse();
        out.factors.push_back({lin(alpha), ps, true});
        out.factors.push_back({lin(-alpha), ps, true});
        out.factors.push_back({quad(alpha, -R->one()), ps, true});      // x^2 + a x - 1
        out.factors.push_back({quad(alpha_inv, -R->one()), ps, true});  // x^2 + a^{-1} x - 1
        out.case_tag = "len6 negacyclic, p=5 mod 12, m odd";
    } else if (p % 12 == 7) {
        const int64_t xi = detail::least_primitive_root(p);
        int64_t a = 1;
        for (int64_t i = 0; i < (p - 1) / 6; ++i) a = a * xi % p;
        ChainRingElement alpha = R->from_int(a);
        out.factors.push_back({quad(R->zero(), R->one()), ps, true});           // x^2 + 1
        out.factors.push_back({quad(R->zero(), -alpha), ps, true});             // x^2 - a
        out.factors.push_back({quad(R->zero(), -alpha.inverse()), ps, true});   // x^2 - a^{-1}
        out.case_tag = "len6 negacyclic, p=7 mod 12, m odd";
    } else {  // p = 11 mod 12
        int64_t beta = 0;
        for (int64_t b = 1; b < p; ++b)
            if (b * b % p == 3 % p) {
                beta = b;
                break;
            }
        detail::require(beta != 0, "3 must be a quadratic residue for p = 11 mod 12");
        ChainRingElement bet = R->from_int(beta);
        out.factors.push_back({quad(R->zero(), R->one()), ps, true});  // x^2 + 1
        out.factors.push_back({quad(bet, R->one()), ps, true});        // x^2 + b x + 1
        out.factors.push_back({quad(-bet, R->one()), ps, true});       // x^2 - b x + 1
        out.case_tag = "len6 negacyclic, p=11 mod 12, m odd";
    }
    out.verify();
    return out;
}

}  // namespace skewcc
