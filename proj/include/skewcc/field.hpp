/**************************************************************************
 * field.hpp
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

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "skewcc/conway.hpp"
#include "skewcc/errors.hpp"

namespace skewcc {

class FieldParams;

/// Maximum extension degree; irreducibility of the modulus is certified by
/// trial division, which stays cheap only at desk scale.
inline constexpr int kMaxExtensionDegree = 8;

/// Largest allowed field size p^m.
inline constexpr uint64_t kMaxFieldSize = 10'000'000;

/// Element of F_{p^m}: residue polynomial in the generator w, coefficients
/// low-to-high, each in [0, p).
class FieldElement {
  public:
    FieldElement() : field_(nullptr) { coeff_.fill(0); }

    const FieldParams* field() const { return field_; }
    uint32_t coeff(int i) const { return coeff_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

  private:
    friend class FieldParams;
    friend FieldElement frobenius(const FieldElement&, int);

    const FieldParams* field_;
    std::array<uint32_t, kMaxExtensionDegree> coeff_;
};

/// a -> a^{p^e}, as FieldParams-relative data. Composition adds exponents
/// mod m; the order is m / gcd(m, e).
struct FieldAutomorphism {
    int exponent = 0;

    FieldAutomorphism compose(const FieldAutomorphism& rhs, int m) const {
        return {(exponent + rhs.exponent) % m};
    }
    int order(int m) const {
        int g = std::gcd(m, exponent % m);
        return m / (g == 0 ? m : g);
    }
    bool operator==(const FieldAutomorphism& rhs) const { return exponent == rhs.exponent; }
};

namespace detail {

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Dense polynomial arithmetic over F_p, used only to validate moduli.
struct FpPoly {
    static std::vector<uint32_t> trim(std::vector<uint32_t> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }
    // remainder of a by monic b
    static std::vector<uint32_t> rem(std::vector<uint32_t> a, const std::vector<uint32_t>& b, int64_t p) {
        a = trim(a);
        const int db = static_cast<int>(b.size()) - 1;
        while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
            const int sh = static_cast<int>(a.size()) - 1 - db;
            const uint64_t c = a.back();
            for (int j = 0; j <= db; ++j) {
                uint64_t t = (static_cast<uint64_t>(a[static_cast<size_t>(sh + j)]) +
                              c * (static_cast<uint64_t>(p) - b[static_cast<size_t>(j)])) %
                             static_cast<uint64_t>(p);
                a[static_cast<size_t>(sh + j)] = static_cast<uint32_t>(t);
            }
            a = trim(a);
        }
        return a;
    }
    static bool divides(const std::vector<uint32_t>& d, const std::vector<uint32_t>& f, int64_t p) {
        return rem(f, d, p).empty();
    }
};

inline std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// Immutable description of F_{p^m}: odd prime p, extension degree m, and a
/// monic irreducible modulus of degree m over F_p. Construction verifies all
/// invariants; instances are safely shareable across threads afterwards.
class FieldParams {
  public:
    static std::shared_ptr<const FieldParams> make(int64_t p, int m, std::vector<uint32_t> modulus) {
        return std::shared_ptr<const FieldParams>(new FieldParams(p, m, std::move(modulus)));
    }

    /// Field with the built-in Conway modulus.
    static std::shared_ptr<const FieldParams> make_conway(int64_t p, int m) {
        if (m == 1) return make(p, 1, {0, 1});
        auto c = conway_polynomial(p, m);
        if (!c) throw ModulusUnavailable("no built-in Conway polynomial for p=" + std::to_string(p) +
                                         ", m=" + std::to_string(m));
        return make(p, m, *c);
    }

    /// "p", "p^m" (Conway default) or "p^m:c0,c1,...,cm".
    static std::shared_ptr<const FieldParams> parse(std::string_view spec);

    int64_t p() const { return p_; }
    int m() const { return m_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    const std::vector<uint64_t>& unit_group_prime_factors() const { return q1_primes_; }

    FieldElement zero() const { return from_coeffs({}); }
    FieldElement one() const { return from_int(1); }
    FieldElement from_int(int64_t v) const {
        FieldElement e;
        e.field_ = this;
        int64_t r = v % p_;
        if (r < 0) r += p_;
        e.coeff_[0] = static_cast<uint32_t>(r);
        return e;
    }
    FieldElement from_coeffs(const std::vector<int64_t>& c) const {
        if (static_cast<int>(c.size()) > m_) throw BadParams("too many coefficients for field element");
        FieldElement e;
        e.field_ = this;
        for (size_t i = 0; i < c.size(); ++i) {
            int64_t r = c[i] % p_;
            if (r < 0) r += p_;
            e.coeff_[i] = static_cast<uint32_t>(r);
        }
        return e;
    }
    /// The residue class of w (= x mod modulus); 1 for m = 1, where F_p needs
    /// no generator beyond the unit.
    FieldElement generator_element() const {
        if (m_ == 1) return from_int(1);
        std::vector<int64_t> c(2, 0);
        c[1] = 1;
        return from_coeffs(c);
    }

    /// Enumeration in tie-break order: lexicographic on (a_0,...,a_{m-1}),
    /// low-degree coefficient compared first.
    FieldElement element_at(uint64_t idx) const {
        if (idx >= q_) throw IndexOutOfRange("field element index out of range");
        FieldElement e;
        e.field_ = this;
        for (int i = m_ - 1; i >= 0; --i) {
            e.coeff_[static_cast<size_t>(i)] = static_cast<uint32_t>(idx % static_cast<uint64_t>(p_));
            idx /= static_cast<uint64_t>(p_);
        }
        return e;
    }
    uint64_t index_of(const FieldElement& e) const {
        uint64_t idx = 0;
        for (int i = 0; i < m_; ++i) idx = idx * static_cast<uint64_t>(p_) + e.coeff(i);
        return idx;
    }

    /// Deterministic multiplicative generator: the least-encoded element of
    /// order q - 1.
    const FieldElement& multiplicative_generator() const { return gen_; }

    const std::vector<uint32_t>& frobenius_matrix(int e) const { return frob_mats_[static_cast<size_t>(e)]; }

    FieldElement parse_element(std::string_view text) const;

    bool operator==(const FieldParams& rhs) const {
        return p_ == rhs.p_ && m_ == rhs.m_ && modulus_ == rhs.modulus_;
    }

    FieldElement mul_raw(const FieldElement& a, const FieldElement& b) const;

  private:
    FieldParams(int64_t p, int m, std::vector<uint32_t> modulus)
        : p_(p), m_(m), modulus_(std::move(modulus)) {
        if (p_ < 3 || p_ % 2 == 0 || !detail::is_prime_u64(static_cast<uint64_t>(p_)))
            throw BadParams("p must be an odd prime");
        if (m_ < 1) throw BadParams("extension degree must be >= 1");
        if (m_ > kMaxExtensionDegree)
            throw BadParams("extension degree above desk-scale cap " + std::to_string(kMaxExtensionDegree));
        q_ = 1;
        for (int i = 0; i < m_; ++i) {
            q_ *= static_cast<uint64_t>(p_);
            if (q_ > kMaxFieldSize) throw BadParams("field size p^m above cap 10^7");
        }
        validate_modulus();
        build_frobenius();
        q1_primes_ = detail::prime_factors(q_ - 1);
        find_generator();
    }

    void validate_modulus() {
        if (static_cast<int>(modulus_.size()) != m_ + 1 || modulus_.back() != 1)
            throw BadParams("modulus must be monic of degree m");
        for (uint32_t c : modulus_)
            if (c >= static_cast<uint32_t>(p_)) throw BadParams("modulus coefficient out of range");
        // trial factorization: no monic divisor of degree 1..m/2
        for (int d = 1; 2 * d <= m_; ++d) {
            std::vector<uint32_t> cand(static_cast<size_t>(d) + 1, 0);
            cand.back() = 1;
            uint64_t count = 1;
            for (int i = 0; i < d; ++i) count *= static_cast<uint64_t>(p_);
            for (uint64_t n = 0; n < count; ++n) {
                uint64_t t = n;
                for (int i = 0; i < d; ++i) {
                    cand[static_cast<size_t>(i)] = static_cast<uint32_t>(t % static_cast<uint64_t>(p_));
                    t /= static_cast<uint64_t>(p_);
                }
                if (detail::FpPoly::divides(cand, modulus_, p_))
                    throw BadParams("modulus is reducible over F_p");
            }
        }
    }

    void build_frobenius() {
        frob_mats_.resize(static_cast<size_t>(m_));
        for (int e = 0; e < m_; ++e) {
            auto& mat = frob_mats_[static_cast<size_t>(e)];
            mat.assign(static_cast<size_t>(m_) * static_cast<size_t>(m_), 0);
            // basis image x^j -> x^{j p^e} mod modulus
            uint64_t pe = 1;
            for (int i = 0; i < e; ++i) pe *= static_cast<uint64_t>(p_);
            FieldElement xq = raw_x_power(pe);
            FieldElement img = one_internal();
            for (int j = 0; j < m_; ++j) {
                for (int i = 0; i < m_; ++i)
                    mat[static_cast<size_t>(i) * static_cast<size_t>(m_) + static_cast<size_t>(j)] = img.coeff(i);
                img = mul_raw(img, xq);
            }
        }
    }

    FieldElement one_internal() const {
        FieldElement e;
        e.field_ = this;
        e.coeff_[0] = 1;
        return e;
    }
    FieldElement raw_x_power(uint64_t e) const {
        FieldElement x;
        x.field_ = this;
        if (m_ == 1) {
            // x is congruent to the root of the degree-1 modulus
            x.coeff_[0] = static_cast<uint32_t>((p_ - modulus_[0]) % p_);
        } else {
            x.coeff_[1] = 1;
        }
        FieldElement r = one_internal();
        FieldElement b = x;
        while (e) {
            if (e & 1) r = mul_raw(r, b);
            b = mul_raw(b, b);
            e >>= 1;
        }
        return r;
    }

    void find_generator() {
        for (uint64_t idx = 1; idx < q_; ++idx) {
            FieldElement cand = element_at(idx);
            bool ok = true;
            for (uint64_t r : q1_primes_) {
                if (cand.pow((q_ - 1) / r).is_one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen_ = cand;
                return;
            }
        }
        throw BadParams("no multiplicative generator found");
    }

    int64_t p_;
    int m_;
    std::vector<uint32_t> modulus_;
    uint64_t q_;
    std::vector<std::vector<uint32_t>> frob_mats_;
    std::vector<uint64_t> q1_primes_;
    FieldElement gen_;
};

namespace detail {
inline void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field()) throw MismatchedField("field elements from different fields");
}
}  // namespace detail

inline bool FieldElement::is_zero() const {
    for (int i = 0; i < (field_ ? field_->m() : 0); ++i)
        if (coeff_[static_cast<size_t>(i)]) return false;
    return field_ != nullptr;
}

inline bool FieldElement::is_one() const {
    if (!field_ || coeff_[0] != 1) return false;
    for (int i = 1; i < field_->m(); ++i)
        if (coeff_[static_cast<size_t>(i)]) return false;
    return true;
}

inline bool FieldElement::operator==(const FieldElement& rhs) const {
    detail::check_same_field(*this, rhs);
    for (int i = 0; i < field_->m(); ++i)
        if (coeff_[static_cast<size_t>(i)] != rhs.coeff_[static_cast<size_t>(i)]) return false;
    return true;
}

inline FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    detail::check_same_field(*this, rhs);
    FieldElement out;
    out.field_ = field_;
    const uint32_t p = static_cast<uint32_t>(field_->p());
    for (int i = 0; i < field_->m(); ++i) {
        uint32_t s = coeff_[static_cast<size_t>(i)] + rhs.coeff_[static_cast<size_t>(i)];
        out.coeff_[static_cast<size_t>(i)] = s >= p ? s - p : s;
    }
    return out;
}

inline FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    detail::check_same_field(*this, rhs);
    FieldElement out;
    out.field_ = field_;
    const uint32_t p = static_cast<uint32_t>(field_->p());
    for (int i = 0; i < field_->m(); ++i) {
        uint32_t a = coeff_[static_cast<size_t>(i)], b = rhs.coeff_[static_cast<size_t>(i)];
        out.coeff_[static_cast<size_t>(i)] = a >= b ? a - b : a + p - b;
    }
    return out;
}

inline FieldElement FieldElement::operator-() const {
    FieldElement out;
    out.field_ = field_;
    const uint32_t p = static_cast<uint32_t>(field_->p());
    for (int i = 0; i < field_->m(); ++i) {
        uint32_t a = coeff_[static_cast<size_t>(i)];
        out.coeff_[static_cast<size_t>(i)] = a == 0 ? 0 : p - a;
    }
    return out;
}

inline FieldElement FieldParams::mul_raw(const FieldElement& a, const FieldElement& b) const {
    FieldElement out;
    out.field_ = this;
    const uint64_t p = static_cast<uint64_t>(p_);
    if (m_ == 1) {
        out.coeff_[0] = static_cast<uint32_t>((static_cast<uint64_t>(a.coeff_[0]) * b.coeff_[0]) % p);
        return out;
    }
    std::array<uint64_t, 2 * kMaxExtensionDegree> conv{};
    for (int i = 0; i < m_; ++i) {
        const uint64_t ai = a.coeff_[static_cast<size_t>(i)];
        if (!ai) continue;
        for (int j = 0; j < m_; ++j)
            conv[static_cast<size_t>(i + j)] += ai * b.coeff_[static_cast<size_t>(j)];
    }
    for (int i = 2 * m_ - 2; i >= m_; --i) {
        const uint64_t c = conv[static_cast<size_t>(i)] % p;
        conv[static_cast<size_t>(i)] = 0;
        if (!c) continue;
        for (int j = 0; j < m_; ++j)
            conv[static_cast<size_t>(i - m_ + j)] += c * (p - modulus_[static_cast<size_t>(j)]);
    }
    for (int i = 0; i < m_; ++i) out.coeff_[static_cast<size_t>(i)] = static_cast<uint32_t>(conv[static_cast<size_t>(i)] % p);
    return out;
}

inline FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    detail::check_same_field(*this, rhs);
    return field_->mul_raw(*this, rhs);
}

inline FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement r = field_->one();
    FieldElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

inline FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    return pow(field_->q() - 2);
}

inline FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    detail::check_same_field(*this, rhs);
    if (rhs.is_zero()) throw DivisionByZero("division by zero field element");
    return *this * rhs.inverse();
}

/// Frobenius a -> a^{p^e}, applied as a precomputed F_p-linear map.
inline FieldElement frobenius(const FieldElement& a, int e) {
    const FieldParams* F = a.field();
    const int m = F->m();
    e %= m;
    if (e < 0) e += m;
    if (e == 0) return a;
    const auto& mat = F->frobenius_matrix(e);
    FieldElement out;
    out.field_ = F;
    const uint64_t p = static_cast<uint64_t>(F->p());
    for (int i = 0; i < m; ++i) {
        uint64_t acc = 0;
        for (int j = 0; j < m; ++j)
            acc += static_cast<uint64_t>(mat[static_cast<size_t>(i) * static_cast<size_t>(m) + static_cast<size_t>(j)]) *
                   a.coeff(j);
        out.coeff_[static_cast<size_t>(i)] = static_cast<uint32_t>(acc % p);
    }
    return out;
}

inline FieldElement apply(const FieldAutomorphism& phi, const FieldElement& a) {
    return frobenius(a, phi.exponent);
}

inline uint64_t element_order(const FieldElement& a) {
    if (a.is_zero()) throw ZeroInput("order of zero element");
    const FieldParams* F = a.field();
    uint64_t o = F->q() - 1;
    for (uint64_t r : F->unit_group_prime_factors())
        while (o % r == 0 && a.pow(o / r).is_one()) o /= r;
    return o;
}

/// Discrete log base the field's canonical generator, by baby-step/giant-step.
inline uint64_t discrete_log(const FieldElement& a) {
    if (a.is_zero()) throw ZeroInput("discrete log of zero");
    const FieldParams* F = a.field();
    const FieldElement& g = F->multiplicative_generator();
    const uint64_t n = F->q() - 1;
    uint64_t mstep = 1;
    while (mstep * mstep < n) ++mstep;
    std::unordered_map<uint64_t, uint64_t> baby;
    baby.reserve(mstep * 2);
    FieldElement cur = F->one();
    for (uint64_t j = 0; j < mstep; ++j) {
        baby.emplace(F->index_of(cur), j);
        cur = cur * g;
    }
    const FieldElement giant = g.pow(n - (mstep % n)); // g^{-m}
    cur = a;
    for (uint64_t i = 0; i <= mstep; ++i) {
        auto it = baby.find(F->index_of(cur));
        if (it != baby.end()) return (i * mstep + it->second) % n;
        cur = cur * giant;
    }
    throw Error("discrete log failure");
}

/// All cube roots of a nonzero element, sorted by encoding. Exactly one root
/// when 3 does not divide q-1; zero or three roots otherwise.
inline std::vector<FieldElement> cube_roots(const FieldElement& a) {
    if (a.is_zero()) throw ZeroInput("cube root of zero");
    const FieldParams* F = a.field();
    const uint64_t n = F->q() - 1;
    if (n % 3 != 0) {
        // 3 invertible mod n: unique root a^{3^{-1} mod n}
        uint64_t inv3 = 0;
        for (uint64_t t = 1; t < 3; ++t)
            if ((1 + t * n) % 3 == 0) inv3 = (1 + t * n) / 3;
        FieldElement r = a.pow(inv3);
        return {r};
    }
    const uint64_t y = discrete_log(a);
    if (y % 3 != 0) return {};
    const FieldElement& g = F->multiplicative_generator();
    std::vector<FieldElement> roots;
    for (uint64_t t = 0; t < 3; ++t) roots.push_back(g.pow(y / 3 + t * (n / 3)));
    std::sort(roots.begin(), roots.end(), [&](const FieldElement& x, const FieldElement& z) {
        return F->index_of(x) < F->index_of(z);
    });
    return roots;
}

/// The unique b with b^{p^s} = a, via the division s = qm + r and
/// b = a^{p^{m-r}}; the defining identity is re-checked before returning.
inline FieldElement pth_power_root(const FieldElement& a, int s) {
    if (a.is_zero()) throw ZeroInput("p^s-th root of zero");
    if (s < 0) throw BadParams("negative root exponent");
    const FieldParams* F = a.field();
    const int m = F->m();
    const int r = s % m;
    FieldElement b = (r == 0) ? a : frobenius(a, m - r);
    if (frobenius(b, s % m) != a) throw Error("p^s-th root verification failed");
    return b;
}

/// Least-encoded primitive cube root of unity, when 3 | q - 1.
inline std::optional<FieldElement> primitive_cube_root_of_unity(const FieldParams& F) {
    if ((F.q() - 1) % 3 != 0) return std::nullopt;
    FieldElement w = F.multiplicative_generator().pow((F.q() - 1) / 3);
    FieldElement w2 = w * w;
    FieldElement least = F.index_of(w) <= F.index_of(w2) ? w : w2;
    return least;
}

/// Deterministic element of exact multiplicative order n (n | q-1 required).
inline FieldElement element_of_order(const FieldParams& F, uint64_t n) {
    if (n == 0 || (F.q() - 1) % n != 0) throw BadParams("order does not divide q-1");
    return F.multiplicative_generator().pow((F.q() - 1) / n);
}

inline std::string FieldElement::to_string() const {
    if (!field_) return "<invalid>";
    std::ostringstream os;
    bool first = true;
    for (int i = field_->m() - 1; i >= 0; --i) {
        uint32_t c = coeff_[static_cast<size_t>(i)];
        if (!c) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

inline FieldElement FieldParams::parse_element(std::string_view text) const {
    std::vector<int64_t> out(static_cast<size_t>(m_), 0);
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty field element");
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw ParseError("empty term in field element");
        int64_t c = 1;
        int deg = 0;
        size_t wp = term.find('w');
        if (wp == std::string::npos) {
            c = std::stoll(term);
        } else {
            std::string coef = term.substr(0, wp);
            if (!coef.empty()) {
                if (coef.back() == '*') coef.pop_back();
                if (!coef.empty()) c = std::stoll(coef);
            }
            deg = 1;
            std::string rest = term.substr(wp + 1);
            if (!rest.empty()) {
                if (rest[0] != '^') throw ParseError("bad generator power in '" + term + "'");
                deg = static_cast<int>(std::stoll(rest.substr(1)));
            }
        }
        if (deg >= m_) throw ParseError("generator power exceeds extension degree");
        out[static_cast<size_t>(deg)] += c;
    }
    return from_coeffs(out);
}

inline std::shared_ptr<const FieldParams> FieldParams::parse(std::string_view spec) {
    std::string s(spec);
    int64_t p = 0;
    int m = 1;
    std::string coeffs;
    size_t colon = s.find(':');
    std::string head = colon == std::string::npos ? s : s.substr(0, colon);
    if (colon != std::string::npos) coeffs = s.substr(colon + 1);
    size_t caret = head.find('^');
    try {
        if (caret == std::string::npos) {
            p = std::stoll(head);
        } else {
            p = std::stoll(head.substr(0, caret));
            m = static_cast<int>(std::stoll(head.substr(caret + 1)));
        }
    } catch (const std::exception&) {
        throw ParseError("bad field spec '" + s + "'");
    }
    if (coeffs.empty()) return make_conway(p, m);
    std::vector<uint32_t> mod;
    size_t pos = 0;
    while (pos <= coeffs.size()) {
        size_t next = coeffs.find(',', pos);
        std::string tok = coeffs.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty()) throw ParseError("bad modulus coefficient list");
        int64_t v = std::stoll(tok) % p;
        if (v < 0) v += p;
        mod.push_back(static_cast<uint32_t>(v));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return make(p, m, std::move(mod));
}

}  // namespace skewcc
