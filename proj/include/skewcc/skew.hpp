/**************************************************************************
 * skew.hpp
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

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "skewcc/chain_ring.hpp"

namespace skewcc {

class SkewPoly;

/// Shared context for R_k[x; Theta]: the coefficient ring, the twisting
/// automorphism, and cached powers of it (both signs). All mutation is behind
/// a mutex; contexts are shareable across threads.
class SkewRing {
  public:
    static std::shared_ptr<const SkewRing> make(std::shared_ptr<const ChainRingParams> ring,
                                                RingAutomorphism theta) {
        if (theta.ring() != ring.get()) throw MismatchedRing("automorphism of a different ring");
        return std::shared_ptr<const SkewRing>(new SkewRing(std::move(ring), std::move(theta)));
    }
    /// Commutative specialization (identity twist).
    static std::shared_ptr<const SkewRing> make_commutative(std::shared_ptr<const ChainRingParams> ring) {
        auto id = RingAutomorphism::identity(ring);
        return make(std::move(ring), std::move(id));
    }

    const ChainRingParams* ring() const { return ring_.get(); }
    std::shared_ptr<const ChainRingParams> ring_ptr() const { return ring_; }
    const RingAutomorphism& theta() const { return theta_; }

    const RingAutomorphism& theta_power(int64_t i) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto& cache = i >= 0 ? pos_ : neg_;
        const size_t want = static_cast<size_t>(i >= 0 ? i : -i);
        if (cache.empty()) cache.push_back(RingAutomorphism::identity(ring_));
        if (i < 0 && neg_.size() == 1 && want >= 1) neg_.push_back(theta_.inverse());
        while (cache.size() <= want) {
            const RingAutomorphism& step = i >= 0 ? theta_ : neg_[1];
            cache.push_back(step.compose(cache.back()));
        }
        return cache[want];
    }

    ChainRingElement twist(int64_t i, const ChainRingElement& a) const { return theta_power(i).apply(a); }

    /// The residue-field context F_{p^m}[x; theta|_F], used by torsion codes
    /// and mu-projections. Created on first use and cached.
    std::shared_ptr<const SkewRing> residue_context() const {
        std::lock_guard<std::mutex> lock(mu_);
        if (!residue_) {
            if (ring_->k() == 1) throw KTooSmall("residue context of a field context");
            auto r1 = ChainRingParams::make(ring_->field_ptr(), 1);
            auto th = RingAutomorphism::make(r1, theta_.theta().exponent);
            residue_ = SkewRing::make(std::move(r1), std::move(th));
        }
        return residue_;
    }

  private:
    SkewRing(std::shared_ptr<const ChainRingParams> ring, RingAutomorphism theta)
        : ring_(std::move(ring)), theta_(std::move(theta)) {}

    std::shared_ptr<const ChainRingParams> ring_;
    RingAutomorphism theta_;
    mutable std::mutex mu_;
    mutable std::deque<RingAutomorphism> pos_;
    mutable std::deque<RingAutomorphism> neg_;
    mutable std::shared_ptr<const SkewRing> residue_;
};

/// Polynomial in R_k[x; Theta], coefficients low-to-high, trailing zeros
/// trimmed. The zero polynomial has an empty coefficient list; its degree is
/// a distinguished error, never an integer.
class SkewPoly {
  public:
    SkewPoly() : ctx_(nullptr) {}

    static SkewPoly zero(const SkewRing* ctx) {
        SkewPoly f;
        f.ctx_ = ctx;
        return f;
    }
    static SkewPoly constant(const SkewRing* ctx, const ChainRingElement& c) {
        SkewPoly f = zero(ctx);
        f.c_.push_back(c);
        f.trim();
        return f;
    }
    static SkewPoly one(const SkewRing* ctx) { return constant(ctx, ctx->ring()->one()); }
    static SkewPoly x_power(const SkewRing* ctx, int n,
                            std::optional<ChainRingElement> lead = std::nullopt) {
        SkewPoly f = zero(ctx);
        f.c_.assign(static_cast<size_t>(n) + 1, ctx->ring()->zero());
        f.c_.back() = lead ? *lead : ctx->ring()->one();
        f.trim();
        return f;
    }
    static SkewPoly from_coeffs(const SkewRing* ctx, std::vector<ChainRingElement> c) {
        SkewPoly f = zero(ctx);
        for (const auto& a : c)
            if (a.ring() != ctx->ring()) throw MismatchedRing("coefficient from different ring");
        f.c_ = std::move(c);
        f.trim();
        return f;
    }
    /// x^n - lambda
    static SkewPoly binomial(const SkewRing* ctx, int n, const ChainRingElement& lambda) {
        SkewPoly f = x_power(ctx, n);
        f.c_[0] = -lambda;
        return f;
    }

    static SkewPoly zero(const std::shared_ptr<const SkewRing>& ctx) { return zero(ctx.get()); }
    static SkewPoly constant(const std::shared_ptr<const SkewRing>& ctx, const ChainRingElement& c) {
        return constant(ctx.get(), c);
    }
    static SkewPoly one(const std::shared_ptr<const SkewRing>& ctx) { return one(ctx.get()); }
    static SkewPoly x_power(const std::shared_ptr<const SkewRing>& ctx, int n,
                            std::optional<ChainRingElement> lead = std::nullopt) {
        return x_power(ctx.get(), n, std::move(lead));
    }
    static SkewPoly from_coeffs(const std::shared_ptr<const SkewRing>& ctx, std::vector<ChainRingElement> c) {
        return from_coeffs(ctx.get(), std::move(c));
    }
    static SkewPoly binomial(const std::shared_ptr<const SkewRing>& ctx, int n, const ChainRingElement& lambda) {
        return binomial(ctx.get(), n, lambda);
    }

    const SkewRing* ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    int degree() const {
        if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }
    size_t coeff_count() const { return c_.size(); }
    const ChainRingElement& coeff(int i) const {
        if (i < 0 || static_cast<size_t>(i) >= c_.size()) throw IndexOutOfRange("coefficient index");
        return c_[static_cast<size_t>(i)];
    }
    ChainRingElement coeff_or_zero(int i) const {
        if (i < 0 || static_cast<size_t>(i) >= c_.size()) return ctx_->ring()->zero();
        return c_[static_cast<size_t>(i)];
    }
    const ChainRingElement& lead() const {
        if (is_zero()) throw ZeroPolynomial("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && lead().is_one(); }

    SkewPoly operator+(const SkewPoly& rhs) const {
        check(rhs);
        SkewPoly out = *this;
        if (rhs.c_.size() > out.c_.size()) out.c_.resize(rhs.c_.size(), ctx_->ring()->zero());
        for (size_t i = 0; i < rhs.c_.size(); ++i) out.c_[i] = out.c_[i] + rhs.c_[i];
        out.trim();
        return out;
    }
    SkewPoly operator-(const SkewPoly& rhs) const {
        check(rhs);
        SkewPoly out = *this;
        if (rhs.c_.size() > out.c_.size()) out.c_.resize(rhs.c_.size(), ctx_->ring()->zero());
        for (size_t i = 0; i < rhs.c_.size(); ++i) out.c_[i] = out.c_[i] - rhs.c_[i];
        out.trim();
        return out;
    }
    SkewPoly operator-() const {
        SkewPoly out = *this;
        for (auto& a : out.c_) a = -a;
        return out;
    }

    /// (a x^i)(b x^j) = a Theta^i(b) x^{i+j}, extended bilinearly.
    SkewPoly operator*(const SkewPoly& rhs) const {
        check(rhs);
        if (is_zero() || rhs.is_zero()) return zero_like();
        SkewPoly out = zero_like();
        out.c_.assign(c_.size() + rhs.c_.size() - 1, ctx_->ring()->zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const RingAutomorphism& phi = ctx_->theta_power(static_cast<int64_t>(i));
            for (size_t j = 0; j < rhs.c_.size(); ++j) {
                if (rhs.c_[j].is_zero()) continue;
                out.c_[i + j] = out.c_[i + j] + c_[i] * phi.apply(rhs.c_[j]);
            }
        }
        out.trim();
        return out;
    }

    /// Left multiplication by a ring scalar.
    SkewPoly scaled(const ChainRingElement& s) const {
        SkewPoly out = *this;
        for (auto& a : out.c_) a = s * a;
        out.trim();
        return out;
    }

    bool operator==(const SkewPoly& rhs) const {
        check(rhs);
        if (c_.size() != rhs.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != rhs.c_[i]) return false;
        return true;
    }
    bool operator!=(const SkewPoly& rhs) const { return !(*this == rhs); }

    std::string to_string() const;
    static SkewPoly parse(const SkewRing* ctx, std::string_view text);
    static SkewPoly parse(const std::shared_ptr<const SkewRing>& ctx, std::string_view text) {
        return parse(ctx.get(), text);
    }

    /// Binary exponentiation; for central bases, independent of association
    /// order as powers always are.
    SkewPoly pow(uint64_t e) const;

    std::vector<ChainRingElement> coeffs_padded(size_t n) const {
        std::vector<ChainRingElement> v = c_;
        v.resize(std::max(n, v.size()), ctx_->ring()->zero());
        return v;
    }

  private:
    friend std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly&, const SkewPoly&);
    friend std::pair<SkewPoly, SkewPoly> left_divmod(const SkewPoly&, const SkewPoly&);

    SkewPoly zero_like() const {
        SkewPoly f;
        f.ctx_ = ctx_;
        return f;
    }
    void check(const SkewPoly& rhs) const {
        if (ctx_ != rhs.ctx_) throw MismatchedContext("skew polynomials from different contexts");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const SkewRing* ctx_;
    std::vector<ChainRingElement> c_;
};

inline SkewPoly SkewPoly::pow(uint64_t e) const {
    SkewPoly r;
    r.ctx_ = ctx_;
    r.c_.assign(1, ctx_->ring()->one());
    SkewPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

/// g = q f + r with r = 0 or deg r < deg f; unique when lead(f) is a unit.
inline std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& g, const SkewPoly& f) {
    g.check(f);
    if (f.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (!f.lead().is_unit()) throw NonUnitLeadingCoeff("right division needs a unit leading coefficient");
    const SkewRing* ctx = g.ctx();
    const int df = f.degree();
    SkewPoly r = g;
    SkewPoly q = g.zero_like();
    if (!r.is_zero() && r.degree() >= df)
        q.c_.assign(static_cast<size_t>(r.degree() - df) + 1, ctx->ring()->zero());
    const ChainRingElement binv = f.lead().inverse();
    while (!r.is_zero() && r.degree() >= df) {
        const int d = r.degree() - df;
        // c Theta^d(lead f) = lead r
        const ChainRingElement c = r.lead() * ctx->twist(d, binv);
        q.c_[static_cast<size_t>(d)] = q.c_[static_cast<size_t>(d)] + c;
        // r -= (c x^d) f
        const RingAutomorphism& phi = ctx->theta_power(d);
        for (int j = 0; j <= df; ++j) {
            if (f.c_[static_cast<size_t>(j)].is_zero()) continue;
            r.c_[static_cast<size_t>(d + j)] =
                r.c_[static_cast<size_t>(d + j)] - c * phi.apply(f.c_[static_cast<size_t>(j)]);
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

/// g = f q + r, mirror of right_divmod.
inline std::pair<SkewPoly, SkewPoly> left_divmod(const SkewPoly& g, const SkewPoly& f) {
    g.check(f);
    if (f.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (!f.lead().is_unit()) throw NonUnitLeadingCoeff("left division needs a unit leading coefficient");
    const SkewRing* ctx = g.ctx();
    const int df = f.degree();
    SkewPoly r = g;
    SkewPoly q = g.zero_like();
    if (!r.is_zero() && r.degree() >= df)
        q.c_.assign(static_cast<size_t>(r.degree() - df) + 1, ctx->ring()->zero());
    const ChainRingElement binv = f.lead().inverse();
    while (!r.is_zero() && r.degree() >= df) {
        const int d = r.degree() - df;
        // lead(f (c x^d)) = lead(f) Theta^{df}(c): solve Theta^{df}(c) = binv lead(r)
        const ChainRingElement c = ctx->twist(-df, binv * r.lead());
        q.c_[static_cast<size_t>(d)] = q.c_[static_cast<size_t>(d)] + c;
        // r -= f (c x^d)
        for (int j = 0; j <= df; ++j) {
            if (f.c_[static_cast<size_t>(j)].is_zero()) continue;
            r.c_[static_cast<size_t>(d + j)] =
                r.c_[static_cast<size_t>(d + j)] - f.c_[static_cast<size_t>(j)] * ctx->twist(j, c);
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

struct ExtendedGcd {
    SkewPoly d, a, b;  // a f + b g = d, d monic
};

/// Extended right gcd via the Euclidean algorithm; every quotient step needs
/// a unit pivot, which always holds over field coefficients and is reported
/// as NonUnitPivot otherwise.
inline ExtendedGcd gcd_r_extended(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() && g.is_zero()) throw ZeroPolynomial("gcd of two zero polynomials");
    const SkewPoly one = SkewPoly::one(f.ctx());
    SkewPoly r0 = f, r1 = g;
    SkewPoly a0 = one, a1 = one - one;  // 1, 0
    SkewPoly b0 = a1, b1 = one;         // 0, 1
    while (!r1.is_zero()) {
        if (!r1.lead().is_unit()) throw NonUnitPivot("non-unit pivot in Euclidean chain");
        auto [q, r2] = right_divmod(r0, r1);
        SkewPoly a2 = a0 - q * a1;
        SkewPoly b2 = b0 - q * b1;
        r0 = r1; r1 = r2;
        a0 = a1; a1 = a2;
        b0 = b1; b1 = b2;
    }
    if (!r0.lead().is_unit()) throw NonUnitPivot("gcd has non-unit leading coefficient");
    const ChainRingElement s = r0.lead().inverse();
    ExtendedGcd out{r0.scaled(s), a0.scaled(s), b0.scaled(s)};
    // Bezout identity and divisibility are certified before returning.
    if (out.a * f + out.b * g != out.d) throw Error("Bezout identity failed");
    if (!f.is_zero() && !right_divmod(f, out.d).second.is_zero()) throw Error("gcd does not right-divide f");
    if (!g.is_zero() && !right_divmod(g, out.d).second.is_zero()) throw Error("gcd does not right-divide g");
    return out;
}

inline SkewPoly gcd_r(const SkewPoly& f, const SkewPoly& g) { return gcd_r_extended(f, g).d; }

/// Remainder of f upon right division by (x - a), via the norm recursion
/// N_0 = 1, N_i(a) = Theta^{i-1}(a) N_{i-1}(a), remainder = sum c_i N_i(a).
inline ChainRingElement eval_right_remainder(const SkewPoly& f, const ChainRingElement& a) {
    const SkewRing* ctx = f.ctx();
    if (a.ring() != ctx->ring()) throw MismatchedRing("evaluation point from different ring");
    if (f.is_zero()) return ctx->ring()->zero();
    ChainRingElement acc = f.coeff(0);
    ChainRingElement norm = ctx->ring()->one();
    ChainRingElement tw = a;
    const int d = f.degree();
    for (int i = 1; i <= d; ++i) {
        norm = tw * norm;
        if (!f.coeff(i).is_zero()) acc = acc + f.coeff(i) * norm;
        if (i < d) tw = ctx->theta().apply(tw);
    }
    return acc;
}

struct CentralityReport {
    bool central = false;
    int violated_condition = 0;        // 1, 2 or 3 per the monic centrality criterion
    int coefficient_index = -1;        // index witnessing conditions 1-2
    std::string witness;               // generator r witnessing condition 2
};

/// Centrality test for monic f: coefficients Theta-fixed, the commutation
/// identity a_i r = Theta^i(r) a_i on the generating set {w, u}, and
/// Theta^{deg f} = id.
inline CentralityReport is_central(const SkewPoly& f) {
    if (f.is_zero() || !f.is_monic()) throw NonMonic("centrality test requires a monic polynomial");
    const SkewRing* ctx = f.ctx();
    const ChainRingParams* R = ctx->ring();
    const int n = f.degree();
    CentralityReport rep;
    for (int i = 0; i < n; ++i) {
        const ChainRingElement& ci = f.coeff(i);
        if (ci.is_zero()) continue;
        if (ctx->theta().apply(ci) != ci) {
            rep.violated_condition = 1;
            rep.coefficient_index = i;
            return rep;
        }
    }
    // generators: field generator w (as ring element) and u when k >= 2;
    // the commutation condition is F_p-linear and multiplicative in r, so
    // checking generators suffices.
    std::vector<ChainRingElement> gens;
    gens.push_back(R->from_field(R->field()->generator_element()));
    if (R->k() >= 2) gens.push_back(R->u());
    for (int i = 0; i < n; ++i) {
        const ChainRingElement& ci = f.coeff(i);
        if (ci.is_zero()) continue;
        for (const auto& r : gens) {
            if (!(ci * (r - ctx->twist(i, r))).is_zero()) {
                rep.violated_condition = 2;
                rep.coefficient_index = i;
                rep.witness = r.to_string();
                return rep;
            }
        }
    }
    if (!ctx->theta_power(n).is_identity()) {
        rep.violated_condition = 3;
        return rep;
    }
    rep.central = true;
    return rep;
}

/// f*(x) = sum Theta(b_{r-i}) x^i for f = sum b_i x^i of degree r.
inline SkewPoly reciprocal(const SkewPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("reciprocal of the zero polynomial");
    const SkewRing* ctx = f.ctx();
    const int r = f.degree();
    std::vector<ChainRingElement> out;
    out.reserve(static_cast<size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) out.push_back(ctx->theta().apply(f.coeff(r - i)));
    return SkewPoly::from_coeffs(ctx, std::move(out));
}

inline std::string SkewPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[i].to_string();
        const bool compound = cs.find('+') != std::string::npos || cs.find('*') != std::string::npos;
        if (i == 0) {
            os << (compound ? "(" + cs + ")" : cs);
        } else {
            if (!c_[i].is_one()) os << (compound ? "(" + cs + ")" : cs) << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

inline SkewPoly SkewPoly::parse(const SkewRing* ctx, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty polynomial");
    if (s == "0") return zero(ctx);
    std::vector<ChainRingElement> coeffs;
    auto ensure = [&](size_t n) {
        if (coeffs.size() < n + 1) coeffs.resize(n + 1, ctx->ring()->zero());
    };
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = pos;
        int depth = 0;
        while (end < s.size() && (depth > 0 || s[end] != '+')) {
            if (s[end] == '(') ++depth;
            if (s[end] == ')') --depth;
            ++end;
        }
        std::string term = s.substr(pos, end - pos);
        pos = end < s.size() ? end + 1 : end;
        if (term.empty()) throw ParseError("empty term in polynomial");
        // locate the variable x at depth 0
        size_t xp = std::string::npos;
        depth = 0;
        for (size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++depth;
            if (term[i] == ')') --depth;
            if (depth == 0 && term[i] == 'x') {
                xp = i;
                break;
            }
        }
        int deg = 0;
        std::string coef;
        if (xp == std::string::npos) {
            coef = term;
        } else {
            deg = 1;
            std::string rest = term.substr(xp + 1);
            if (!rest.empty()) {
                if (rest[0] != '^') throw ParseError("bad power of x in '" + term + "'");
                deg = static_cast<int>(std::stoll(rest.substr(1)));
            }
            coef = term.substr(0, xp);
            if (!coef.empty()) {
                if (coef.back() != '*') throw ParseError("missing '*' before x in '" + term + "'");
                coef.pop_back();
            }
        }
        ChainRingElement c = ctx->ring()->one();
        if (!coef.empty()) {
            if (coef.front() == '(' && coef.back() == ')') coef = coef.substr(1, coef.size() - 2);
            c = ctx->ring()->parse_element(coef);
        } else if (xp == std::string::npos) {
            throw ParseError("empty coefficient");
        }
        ensure(static_cast<size_t>(deg));
        coeffs[static_cast<size_t>(deg)] = coeffs[static_cast<size_t>(deg)] + c;
    }
    return from_coeffs(ctx, std::move(coeffs));
}

/// mu applied coefficientwise, landing in the residue-field context.
inline SkewPoly mu_poly(const SkewPoly& f, const SkewRing* residue_ctx) {
    std::vector<ChainRingElement> out;
    for (size_t i = 0; i < f.coeff_count(); ++i)
        out.push_back(residue_ctx->ring()->from_field(mu(f.coeff(static_cast<int>(i)))));
    return SkewPoly::from_coeffs(residue_ctx, std::move(out));
}
inline SkewPoly mu_poly(const SkewPoly& f, const std::shared_ptr<const SkewRing>& residue_ctx) {
    return mu_poly(f, residue_ctx.get());
}

/// Coefficientwise embedding of a residue-field polynomial into R_k[x;Theta].
inline SkewPoly lift_poly(const SkewPoly& f, const SkewRing* big_ctx) {
    std::vector<ChainRingElement> out;
    for (size_t i = 0; i < f.coeff_count(); ++i)
        out.push_back(big_ctx->ring()->from_field(mu(f.coeff(static_cast<int>(i)))));
    return SkewPoly::from_coeffs(big_ctx, std::move(out));
}
inline SkewPoly lift_poly(const SkewPoly& f, const std::shared_ptr<const SkewRing>& big_ctx) {
    return lift_poly(f, big_ctx.get());
}

}  // namespace skewcc
