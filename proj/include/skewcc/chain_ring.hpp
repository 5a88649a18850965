/**************************************************************************
 * chain_ring.hpp
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

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "skewcc/field.hpp"

namespace skewcc {

class ChainRingParams;
class ChainRingElement;
class RingAutomorphism;

/// R_k = F_{p^m}[u]/<u^k>: elements are k field coefficients of u^0..u^{k-1};
/// products truncate at u^k. k = 1 degenerates to the field itself.
class ChainRingParams : public std::enable_shared_from_this<ChainRingParams> {
  public:
    static std::shared_ptr<const ChainRingParams> make(std::shared_ptr<const FieldParams> field, int k) {
        if (k < 1) throw BadParams("nilpotency index k must be >= 1");
        return std::shared_ptr<const ChainRingParams>(new ChainRingParams(std::move(field), k));
    }

    /// "p^m:coeffs|k" or "p^m|k" or plain field spec (k = 1).
    static std::shared_ptr<const ChainRingParams> parse(std::string_view spec) {
        std::string s(spec);
        int k = 1;
        size_t bar = s.find('|');
        if (bar != std::string::npos) {
            k = static_cast<int>(std::stoll(s.substr(bar + 1)));
            s = s.substr(0, bar);
        }
        return make(FieldParams::parse(s), k);
    }

    const FieldParams* field() const { return field_.get(); }
    std::shared_ptr<const FieldParams> field_ptr() const { return field_; }
    int k() const { return k_; }
    uint64_t size() const {
        uint64_t s = 1;
        for (int i = 0; i < k_; ++i) s *= field_->q();
        return s;
    }

    ChainRingElement zero() const;
    ChainRingElement one() const;
    ChainRingElement from_field(const FieldElement& a) const;
    ChainRingElement from_int(int64_t v) const;
    ChainRingElement u(int power = 1) const;
    ChainRingElement from_coeffs(std::vector<FieldElement> c) const;

    /// Enumeration in tie-break order: lexicographic on (a_0,...,a_{k-1})
    /// with the residue coefficient compared first, field encoding within.
    ChainRingElement element_at(uint64_t idx) const;
    uint64_t index_of(const ChainRingElement& a) const;

    ChainRingElement parse_element(std::string_view text) const;

  private:
    ChainRingParams(std::shared_ptr<const FieldParams> field, int k) : field_(std::move(field)), k_(k) {}
    std::shared_ptr<const FieldParams> field_;
    int k_;
};

class ChainRingElement {
  public:
    ChainRingElement() : ring_(nullptr) {}

    const ChainRingParams* ring() const { return ring_; }
    const FieldElement& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const {
        for (const auto& a : c_)
            if (!a.is_zero()) return false;
        return ring_ != nullptr;
    }
    bool is_one() const {
        if (!ring_ || !c_[0].is_one()) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    /// Units are exactly the elements with nonzero residue.
    bool is_unit() const { return ring_ && !c_[0].is_zero(); }
    /// Largest v with u^v | a; k for the zero element.
    int u_valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return ring_->k();
    }

    ChainRingElement operator+(const ChainRingElement& rhs) const {
        check(rhs);
        ChainRingElement out(*this);
        for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + rhs.c_[i];
        return out;
    }
    ChainRingElement operator-(const ChainRingElement& rhs) const {
        check(rhs);
        ChainRingElement out(*this);
        for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - rhs.c_[i];
        return out;
    }
    ChainRingElement operator-() const {
        ChainRingElement out(*this);
        for (auto& a : out.c_) a = -a;
        return out;
    }
    ChainRingElement operator*(const ChainRingElement& rhs) const {
        check(rhs);
        ChainRingElement out = ring_->zero();
        const int k = ring_->k();
        for (int i = 0; i < k; ++i) {
            if (c_[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j < k; ++j)
                out.c_[static_cast<size_t>(i + j)] =
                    out.c_[static_cast<size_t>(i + j)] + c_[static_cast<size_t>(i)] * rhs.c_[static_cast<size_t>(j)];
        }
        return out;
    }
    /// Scalar action of the residue field.
    ChainRingElement scaled(const FieldElement& s) const {
        ChainRingElement out(*this);
        for (auto& a : out.c_) a = a * s;
        return out;
    }
    /// Multiplication by u^t (truncating shift).
    ChainRingElement u_shifted(int t) const {
        ChainRingElement out = ring_->zero();
        const int k = ring_->k();
        for (int i = 0; i + t < k; ++i) out.c_[static_cast<size_t>(i + t)] = c_[static_cast<size_t>(i)];
        return out;
    }

    /// Residue inversion followed by the geometric-series correction of the
    /// nilpotent part.
    ChainRingElement inverse() const {
        if (!is_unit()) throw NotAUnit("inverse of non-unit chain ring element");
        ChainRingElement b = ring_->from_field(c_[0].inverse());
        ChainRingElement t = ring_->one() - (*this * b);  // valuation >= 1
        ChainRingElement acc = ring_->one();
        ChainRingElement pw = t;
        for (int i = 1; i < ring_->k(); ++i) {
            acc = acc + pw;
            pw = pw * t;
        }
        return b * acc;
    }

    bool operator==(const ChainRingElement& rhs) const {
        check(rhs);
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == rhs.c_[i])) return false;
        return true;
    }
    bool operator!=(const ChainRingElement& rhs) const { return !(*this == rhs); }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
            const FieldElement& a = c_[static_cast<size_t>(i)];
            if (a.is_zero()) continue;
            if (!first) os << "+";
            first = false;
            std::string cs = a.to_string();
            const bool nontrivial = cs.find('+') != std::string::npos;
            if (i == 0) {
                os << cs;
            } else {
                if (!a.is_one()) os << (nontrivial ? "(" + cs + ")" : cs) << "*";
                os << "u";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }

  private:
    friend class ChainRingParams;
    friend class RingAutomorphism;
    void check(const ChainRingElement& rhs) const {
        if (ring_ != rhs.ring_) throw MismatchedRing("chain ring elements from different rings");
    }
    const ChainRingParams* ring_;
    std::vector<FieldElement> c_;
};

inline ChainRingElement ChainRingParams::zero() const {
    ChainRingElement e;
    e.ring_ = this;
    e.c_.assign(static_cast<size_t>(k_), field_->zero());
    return e;
}
inline ChainRingElement ChainRingParams::one() const { return from_int(1); }
inline ChainRingElement ChainRingParams::from_field(const FieldElement& a) const {
    if (a.field() != field_.get()) throw MismatchedField("field element from wrong residue field");
    ChainRingElement e = zero();
    e.c_[0] = a;
    return e;
}
inline ChainRingElement ChainRingParams::from_int(int64_t v) const {
    ChainRingElement e = zero();
    e.c_[0] = field_->from_int(v);
    return e;
}
inline ChainRingElement ChainRingParams::u(int power) const {
    ChainRingElement e = zero();
    if (power < k_) e.c_[static_cast<size_t>(power)] = field_->one();
    return e;
}
inline ChainRingElement ChainRingParams::from_coeffs(std::vector<FieldElement> c) const {
    if (static_cast<int>(c.size()) > k_) throw BadParams("too many u-coefficients");
    ChainRingElement e = zero();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].field() != field_.get()) throw MismatchedField("coefficient from wrong field");
        e.c_[i] = c[i];
    }
    return e;
}
inline ChainRingElement ChainRingParams::element_at(uint64_t idx) const {
    ChainRingElement e = zero();
    for (int i = k_ - 1; i >= 0; --i) {
        e.c_[static_cast<size_t>(i)] = field_->element_at(idx % field_->q());
        idx /= field_->q();
    }
    return e;
}
inline uint64_t ChainRingParams::index_of(const ChainRingElement& a) const {
    uint64_t idx = 0;
    for (int i = 0; i < k_; ++i) idx = idx * field_->q() + field_->index_of(a.coeff(i));
    return idx;
}

/// mu: kill <u>, landing in the residue field.
inline FieldElement mu(const ChainRingElement& a) { return a.coeff(0); }

/// pi: kill u^{k-1}, landing in R_{k-1} (target params supplied by caller).
inline ChainRingElement pi(const ChainRingElement& a, const std::shared_ptr<const ChainRingParams>& target) {
    const ChainRingParams* R = a.ring();
    if (R->k() < 2) throw KTooSmall("pi requires k >= 2");
    if (target->k() != R->k() - 1 || target->field() != R->field())
        throw MismatchedRing("pi target must be R_{k-1} over the same field");
    std::vector<FieldElement> c;
    for (int i = 0; i < R->k() - 1; ++i) c.push_back(a.coeff(i));
    return target->from_coeffs(std::move(c));
}

/// Automorphism Theta_{theta, eta_1, ..., eta_{k-1}} of R_k:
///   sum a_i u^i  |->  sum theta(a_i) (prod eta_j)^i u^i
/// with eta_1 in F*, eta_i in 1 + u^{i-1} F for 2 <= i <= k-1. The stored
/// data (theta exponent, eta_1, and the F-parameters of eta_2..eta_{k-1}) is
/// canonical, so equality is plain comparison.
class RingAutomorphism {
  public:
    static RingAutomorphism identity(std::shared_ptr<const ChainRingParams> ring) {
        RingAutomorphism phi;
        phi.ring_ = std::move(ring);
        phi.theta_ = {0};
        phi.eta_params_.assign(phi.ring_->k() >= 2 ? static_cast<size_t>(phi.ring_->k() - 1) : 0,
                               phi.ring_->field()->zero());
        if (!phi.eta_params_.empty()) phi.eta_params_[0] = phi.ring_->field()->one();
        phi.rebuild();
        return phi;
    }

    /// eta_params: for k >= 2 a list of k-1 field elements (eta_1, c_2, ...,
    /// c_{k-1}) with eta_i = 1 + c_i u^{i-1}; empty for k = 1.
    static RingAutomorphism make(std::shared_ptr<const ChainRingParams> ring, int theta_exponent,
                                 std::vector<FieldElement> eta_params = {}) {
        RingAutomorphism phi;
        phi.ring_ = std::move(ring);
        const int m = phi.ring_->field()->m();
        phi.theta_ = {((theta_exponent % m) + m) % m};
        const size_t want = phi.ring_->k() >= 2 ? static_cast<size_t>(phi.ring_->k() - 1) : 0;
        if (eta_params.empty() && want > 0) {
            eta_params.assign(want, phi.ring_->field()->zero());
            eta_params[0] = phi.ring_->field()->one();
        }
        if (eta_params.size() != want) throw BadParams("automorphism needs k-1 eta parameters");
        if (want > 0 && eta_params[0].is_zero()) throw BadParams("eta_1 must be a unit of the residue field");
        phi.eta_params_ = std::move(eta_params);
        phi.rebuild();
        return phi;
    }

    /// Recover the canonical eta-parameters from the image of u: the unit M
    /// with Theta(u) = M u factors uniquely as eta_1 (1 + c_2 u) ... and only
    /// M mod u^{k-1} matters.
    static RingAutomorphism from_multiplier(std::shared_ptr<const ChainRingParams> ring, int theta_exponent,
                                            const ChainRingElement& M) {
        const int k = ring->k();
        if (k == 1) return make(std::move(ring), theta_exponent);
        if (!M.is_unit()) throw NotAUnit("u-multiplier must be a unit");
        std::vector<FieldElement> params;
        params.reserve(static_cast<size_t>(k - 1));
        ChainRingElement rest = M;
        params.push_back(mu(M));
        rest = rest.scaled(mu(M).inverse());  // now in 1 + uF + ...
        for (int i = 2; i <= k - 1; ++i) {
            FieldElement ci = rest.coeff(i - 1);
            params.push_back(ci);
            ChainRingElement etai = ring->one() + ring->u(i - 1).scaled(ci);
            rest = rest * etai.inverse();
        }
        return make(std::move(ring), theta_exponent, std::move(params));
    }

    const ChainRingParams* ring() const { return ring_.get(); }
    std::shared_ptr<const ChainRingParams> ring_ptr() const { return ring_; }
    const FieldAutomorphism& theta() const { return theta_; }
    const std::vector<FieldElement>& eta_params() const { return eta_params_; }
    /// M = prod eta_j, the image multiplier of u.
    const ChainRingElement& multiplier() const { return multiplier_; }

    bool is_identity() const {
        if (theta_.exponent != 0) return false;
        return multiplier_trunc_is_one();
    }

    bool operator==(const RingAutomorphism& rhs) const {
        if (ring_.get() != rhs.ring_.get()) throw MismatchedRing("automorphisms of different rings");
        if (theta_.exponent != rhs.theta_.exponent) return false;
        for (size_t i = 0; i < eta_params_.size(); ++i)
            if (!(eta_params_[i] == rhs.eta_params_[i])) return false;
        return true;
    }
    bool operator!=(const RingAutomorphism& rhs) const { return !(*this == rhs); }

    ChainRingElement apply(const ChainRingElement& a) const {
        if (a.ring() != ring_.get()) throw MismatchedRing("element from different ring");
        const int k = ring_->k();
        ChainRingElement out = ring_->zero();
        ChainRingElement mpow = ring_->one();
        for (int i = 0; i < k; ++i) {
            FieldElement t = frobenius(a.coeff(i), theta_.exponent);
            if (!t.is_zero()) out = out + mpow.scaled(t).u_shifted(i);
            if (i + 1 < k) mpow = mpow * multiplier_;
        }
        return out;
    }

    /// this after rhs: (this o rhs)(a) = this(rhs(a)).
    RingAutomorphism compose(const RingAutomorphism& rhs) const {
        if (ring_.get() != rhs.ring_.get()) throw MismatchedRing("automorphisms of different rings");
        const int m = ring_->field()->m();
        int e = (theta_.exponent + rhs.theta_.exponent) % m;
        if (ring_->k() == 1) return make(ring_, e);
        ChainRingElement M = apply(rhs.multiplier_) * multiplier_;
        return from_multiplier(ring_, e, M);
    }

    RingAutomorphism inverse() const {
        const int m = ring_->field()->m();
        int e = (m - theta_.exponent) % m;
        if (ring_->k() == 1) return make(ring_, e);
        // Solve Theta(M') = M^{-1} layer by layer; preimages under Theta are
        // triangular with unit diagonal.
        ChainRingElement Mp = preimage(multiplier_.inverse());
        return from_multiplier(ring_, e, Mp);
    }

    /// Preimage of t under this automorphism (forward triangular solve).
    ChainRingElement preimage(const ChainRingElement& t) const {
        if (t.ring() != ring_.get()) throw MismatchedRing("element from different ring");
        const int k = ring_->k();
        const int m = ring_->field()->m();
        const int einv = (m - theta_.exponent) % m;
        ChainRingElement a = ring_->zero();
        std::vector<ChainRingElement> mpow;
        mpow.push_back(ring_->one());
        for (int i = 1; i < k; ++i) mpow.push_back(mpow.back() * multiplier_);
        for (int j = 0; j < k; ++j) {
            // layer j of Theta(a): sum_{i<=j} theta(a_i) * (M^i)_{j-i}
            FieldElement acc = t.coeff(j);
            for (int i = 0; i < j; ++i)
                acc = acc - frobenius(a.coeff(i), theta_.exponent) * mpow[static_cast<size_t>(i)].coeff(j - i);
            FieldElement diag = mpow[static_cast<size_t>(j)].coeff(0);  // = mu(M)^j, a unit
            FieldElement aj = frobenius(acc * diag.inverse(), einv);
            if (!aj.is_zero()) a = a + ring_->from_field(aj).u_shifted(j);
        }
        return a;
    }

    /// Least t >= 1 with phi^t = identity.
    uint64_t order() const {
        RingAutomorphism cur = *this;
        uint64_t t = 1;
        const uint64_t bound = group_order(*ring_);
        while (!cur.is_identity()) {
            cur = compose(cur);
            ++t;
            if (t > bound) throw Error("automorphism order exceeded group order bound");
        }
        return t;
    }

    /// |Aut(R_k)| = m for k = 1, else m (q-1) q^{k-2}.
    static uint64_t group_order(const ChainRingParams& R) {
        const uint64_t q = R.field()->q();
        const uint64_t m = static_cast<uint64_t>(R.field()->m());
        if (R.k() == 1) return m;
        uint64_t n = m * (q - 1);
        for (int i = 0; i < R.k() - 2; ++i) n *= q;
        return n;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "theta=" << theta_.exponent;
        if (!eta_params_.empty()) {
            os << ";eta1=" << eta_params_[0].to_string();
            for (size_t i = 1; i < eta_params_.size(); ++i)
                os << ";eta" << (i + 1) << "=" << eta_params_[i].to_string();
        }
        return os.str();
    }

  private:
    bool multiplier_trunc_is_one() const {
        // identity needs M = 1 mod u^{k-1}
        const int k = ring_->k();
        if (k == 1) return true;
        if (!multiplier_.coeff(0).is_one()) return false;
        for (int i = 1; i < k - 1; ++i)
            if (!multiplier_.coeff(i).is_zero()) return false;
        return true;
    }
    void rebuild() {
        multiplier_ = ring_->one();
        if (ring_->k() < 2) return;
        multiplier_ = multiplier_.scaled(eta_params_[0]);
        for (size_t i = 1; i < eta_params_.size(); ++i) {
            ChainRingElement etai = ring_->one() + ring_->u(static_cast<int>(i)).scaled(eta_params_[i]);
            multiplier_ = multiplier_ * etai;
        }
    }

    std::shared_ptr<const ChainRingParams> ring_;
    FieldAutomorphism theta_;
    std::vector<FieldElement> eta_params_;  // eta_1, c_2, ..., c_{k-1}
    ChainRingElement multiplier_;
};

/// Every automorphism exactly once, in (theta, eta_1, c_2, ...) scan order.
inline std::vector<RingAutomorphism> enumerate_automorphisms(std::shared_ptr<const ChainRingParams> ring,
                                                             uint64_t cap = 100000) {
    const uint64_t total = RingAutomorphism::group_order(*ring);
    if (total > cap) throw CapExceeded("automorphism group of size " + std::to_string(total) + " above cap");
    const FieldParams* F = ring->field();
    std::vector<RingAutomorphism> out;
    out.reserve(total);
    const int k = ring->k();
    const int nparams = k >= 2 ? k - 1 : 0;
    std::vector<uint64_t> idx(static_cast<size_t>(nparams), 0);
    for (int e = 0; e < F->m(); ++e) {
        if (nparams == 0) {
            out.push_back(RingAutomorphism::make(ring, e));
            continue;
        }
        // odometer over (eta_1 in F*, c_i in F)
        idx.assign(static_cast<size_t>(nparams), 0);
        bool done = false;
        while (!done) {
            std::vector<FieldElement> params;
            params.reserve(static_cast<size_t>(nparams));
            params.push_back(F->element_at(idx[0] + 1));  // skip zero: eta_1 unit
            for (int i = 1; i < nparams; ++i) params.push_back(F->element_at(idx[static_cast<size_t>(i)]));
            out.push_back(RingAutomorphism::make(ring, e, std::move(params)));
            int pos = nparams - 1;
            while (pos >= 0) {
                uint64_t lim = pos == 0 ? F->q() - 1 : F->q();
                if (++idx[static_cast<size_t>(pos)] < lim) break;
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            done = pos < 0;
        }
    }
    return out;
}

inline ChainRingElement ChainRingParams::parse_element(std::string_view text) const {
    // terms over u with field-element coefficients, e.g. "(2+3*w)*u^2+1+w":
    // parenthesised coefficients bind to the following *u^i, bare terms are
    // accumulated into the appropriate layer.
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty chain ring element");
    std::vector<FieldElement> layers(static_cast<size_t>(k_), field_->zero());
    size_t pos = 0;
    while (pos < s.size()) {
        // take one additive term, respecting parentheses
        size_t end = pos;
        int depth = 0;
        while (end < s.size() && (depth > 0 || s[end] != '+')) {
            if (s[end] == '(') ++depth;
            if (s[end] == ')') --depth;
            ++end;
        }
        std::string term = s.substr(pos, end - pos);
        pos = end < s.size() ? end + 1 : end;
        if (term.empty()) throw ParseError("empty term in chain ring element");
        // split "coef*u^i" | "coef*u" | "u^i" | "u" | "coef"
        int upow = 0;
        std::string coef = term;
        size_t up = term.rfind('u');
        bool has_u = false;
        if (up != std::string::npos && (up == 0 || term[up - 1] == '*' || term[up - 1] == '(')) {
            // ensure this u is the ring variable, not inside a field coefficient
            has_u = true;
            std::string rest = term.substr(up + 1);
            upow = 1;
            if (!rest.empty()) {
                if (rest[0] != '^') throw ParseError("bad u power in '" + term + "'");
                upow = static_cast<int>(std::stoll(rest.substr(1)));
            }
            coef = up == 0 ? "" : term.substr(0, up - 1);  // strip "*" or take empty
            if (up > 0 && term[up - 1] == '(') throw ParseError("unbalanced parenthesis in '" + term + "'");
        }
        FieldElement c = field_->one();
        if (!coef.empty()) {
            if (coef.front() == '(' && coef.back() == ')') coef = coef.substr(1, coef.size() - 2);
            c = field_->parse_element(coef);
        } else if (!has_u) {
            throw ParseError("empty coefficient in '" + term + "'");
        }
        if (upow >= k_) continue;  // u^k = 0
        layers[static_cast<size_t>(upow)] = layers[static_cast<size_t>(upow)] + c;
    }
    return from_coeffs(std::move(layers));
}

}  // namespace skewcc
