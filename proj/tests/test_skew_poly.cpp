#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skewcc/skew.hpp"

using namespace skewcc;

namespace {

SkewPoly random_poly(const std::shared_ptr<const SkewRing>& ctx, int max_deg, std::mt19937_64& rng,
                     bool monic = false) {
    const ChainRingParams* R = ctx->ring();
    int d = static_cast<int>(rng() % static_cast<uint64_t>(max_deg + 1));
    std::vector<ChainRingElement> c;
    for (int i = 0; i <= d; ++i) c.push_back(R->element_at(rng() % R->size()));
    if (monic) c.back() = R->one();
    return SkewPoly::from_coeffs(ctx, std::move(c));
}

// classical commutative product, used as the theta = id oracle
SkewPoly plain_product(const SkewPoly& f, const SkewPoly& g) {
    const ChainRingParams* R = f.ctx()->ring();
    if (f.is_zero() || g.is_zero()) return SkewPoly::zero(f.ctx());
    std::vector<ChainRingElement> out(f.coeff_count() + g.coeff_count() - 1, R->zero());
    for (size_t i = 0; i < f.coeff_count(); ++i)
        for (size_t j = 0; j < g.coeff_count(); ++j)
            out[i + j] = out[i + j] + f.coeff(static_cast<int>(i)) * g.coeff(static_cast<int>(j));
    return SkewPoly::from_coeffs(f.ctx(), std::move(out));
}

struct Contexts {
    std::shared_ptr<const SkewRing> f9_frob;   // F_9[x; a->a^3]
    std::shared_ptr<const SkewRing> f7_id;     // F_7[x]
    std::shared_ptr<const SkewRing> r2f7_eta;  // (F_7 + uF_7)[x; u->3u]
    std::shared_ptr<const SkewRing> f55_frob;  // F_{5^5}[x; a->a^5]
    Contexts() {
        auto F9 = FieldParams::make(3, 2, {1, 0, 1});
        auto R9 = ChainRingParams::make(F9, 1);
        f9_frob = SkewRing::make(R9, RingAutomorphism::make(R9, 1));
        auto F7 = FieldParams::make_conway(7, 1);
        f7_id = SkewRing::make_commutative(ChainRingParams::make(F7, 1));
        auto R2 = ChainRingParams::make(F7, 2);
        r2f7_eta = SkewRing::make(R2, RingAutomorphism::make(R2, 0, {F7->from_int(3)}));
        auto F55 = FieldParams::make_conway(5, 5);
        auto R55 = ChainRingParams::make(F55, 1);
        f55_frob = SkewRing::make(R55, RingAutomorphism::make(R55, 1));
    }
};

}  // namespace

TEST_CASE("context construction rejects mismatches") {
    auto F9 = FieldParams::make(3, 2, {1, 0, 1});
    auto Ra = ChainRingParams::make(F9, 1);
    auto Rb = ChainRingParams::make(F9, 1);
    CHECK_THROWS_AS(SkewRing::make(Ra, RingAutomorphism::make(Rb, 1)), MismatchedRing);
}

TEST_CASE("twisted multiplication") {
    Contexts C;
    const ChainRingParams* R9 = C.f9_frob->ring();
    ChainRingElement t = R9->from_field(R9->field()->generator_element());

    SkewPoly x = SkewPoly::x_power(C.f9_frob, 1);
    SkewPoly tc = SkewPoly::constant(C.f9_frob, t);
    // x t = (2t) x  since t^3 = 2t
    SkewPoly lhs = x * tc;
    SkewPoly rhs = SkewPoly::x_power(C.f9_frob, 1, t.scaled(R9->field()->from_int(2)));
    CHECK(lhs == rhs);

    // (x - t)(x - 2t) and (x - 2t)(x - t) differ: the ring is not commutative
    ChainRingElement t2 = t.scaled(R9->field()->from_int(2));
    SkewPoly f1 = SkewPoly::binomial(C.f9_frob, 1, t);
    SkewPoly f2 = SkewPoly::binomial(C.f9_frob, 1, t2);
    CHECK(f1 * f2 != f2 * f1);

    // theta = id reduces to the ordinary product
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        SkewPoly a = random_poly(C.f7_id, 6, rng), b = random_poly(C.f7_id, 6, rng);
        CHECK(a * b == plain_product(a, b));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("multiplication is associative") {
    Contexts C;
    std::mt19937_64 rng(18);
    for (auto ctx : {C.f9_frob, C.r2f7_eta, C.f55_frob}) {
        for (int i = 0; i < 500; ++i) {
            SkewPoly a = random_poly(ctx, 4, rng), b = random_poly(ctx, 4, rng), c = random_poly(ctx, 4, rng);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("right division") {
    Contexts C;
    // commutative sanity: (x^2-1) / (x-1) = (x+1, 0)
    SkewPoly f = SkewPoly::binomial(C.f7_id, 2, C.f7_id->ring()->one());
    SkewPoly d = SkewPoly::binomial(C.f7_id, 1, C.f7_id->ring()->one());
    auto [q, r] = right_divmod(f, d);
    CHECK(r.is_zero());
    CHECK(q == SkewPoly::parse(C.f7_id, "1 + x"));

    std::mt19937_64 rng(19);
    for (auto ctx : {C.f9_frob, C.r2f7_eta}) {
        for (int i = 0; i < 500; ++i) {
            SkewPoly g = random_poly(ctx, 6, rng);
            SkewPoly h = random_poly(ctx, 3, rng, /*monic=*/true);
            if (g.is_zero()) continue;
            auto [qq, rr] = right_divmod(g, h);
            CHECK(qq * h + rr == g);
            if (!rr.is_zero()) CHECK(rr.degree() < h.degree());
            // f / f = (1, 0)
            auto [q1, r1] = right_divmod(h, h);
            CHECK(q1.is_one());
            CHECK(r1.is_zero());
        }
    }

    // uniqueness: reconstructing g from a chosen (q', r') returns exactly them
    for (int i = 0; i < 500; ++i) {
        SkewPoly h = random_poly(C.f9_frob, 3, rng, true);
        SkewPoly q2 = random_poly(C.f9_frob, 4, rng);
        SkewPoly r2 = random_poly(C.f9_frob, h.degree() > 0 ? h.degree() - 1 : 0, rng);
        if (h.degree() == 0) r2 = SkewPoly::zero(C.f9_frob);
        SkewPoly g = q2 * h + r2;
        auto [q3, r3] = right_divmod(g, h);
        CHECK(q3 == q2);
        CHECK(r3 == r2);
    }

    // non-unit leading coefficient is rejected over the chain ring
    SkewPoly bad = SkewPoly::x_power(C.r2f7_eta, 2, C.r2f7_eta->ring()->u());
    SkewPoly any = SkewPoly::x_power(C.r2f7_eta, 3);
    CHECK_THROWS_AS(right_divmod(any, bad), NonUnitLeadingCoeff);
}

TEST_CASE("left division mirrors right division") {
    Contexts C;
    std::mt19937_64 rng(20);
    // theta = id: identical to right division
    for (int i = 0; i < 200; ++i) {
        SkewPoly g = random_poly(C.f7_id, 6, rng);
        SkewPoly h = random_poly(C.f7_id, 3, rng, true);
        auto [qr, rr] = right_divmod(g, h);
        auto [ql, rl] = left_divmod(g, h);
        CHECK(qr == ql);
        CHECK(rr == rl);
    }
    for (auto ctx : {C.f9_frob, C.r2f7_eta}) {
        for (int i = 0; i < 500; ++i) {
            SkewPoly g = random_poly(ctx, 6, rng);
            SkewPoly h = random_poly(ctx, 3, rng, true);
            auto [q, r] = left_divmod(g, h);
            CHECK(h * q + r == g);
            if (!r.is_zero()) CHECK(r.degree() < h.degree());
        }
    }
}

TEST_CASE("extended right gcd") {
    Contexts C;
    // gcd(f, 0) is the monic normalization of f
    SkewPoly f = SkewPoly::parse(C.f7_id, "3 + 3*x^2");
    auto g0 = gcd_r_extended(f, SkewPoly::zero(C.f7_id));
    CHECK(g0.d == SkewPoly::parse(C.f7_id, "1 + x^2"));

    // commutative oracle: gcd(x^2-1, x^2+x) = x+1
    SkewPoly a = SkewPoly::parse(C.f7_id, "6 + x^2");
    SkewPoly b = SkewPoly::parse(C.f7_id, "x + x^2");
    CHECK(gcd_r(a, b) == SkewPoly::parse(C.f7_id, "1 + x"));

    // the two central blocks of x^15 - 1 over F_{5^5}[x;theta] are coprime
    SkewPoly f1 = SkewPoly::binomial(C.f55_frob, 5, C.f55_frob->ring()->one());
    SkewPoly f2 = SkewPoly::parse(C.f55_frob, "1 + x^5 + x^10");
    auto eg = gcd_r_extended(f1, f2);
    CHECK(eg.d.is_one());
    CHECK(eg.a * f1 + eg.b * f2 == SkewPoly::one(C.f55_frob));

    // random gcds divide both inputs (certified inside gcd_r_extended too)
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        SkewPoly u = random_poly(C.f9_frob, 5, rng);
        SkewPoly v = random_poly(C.f9_frob, 5, rng);
        if (u.is_zero() && v.is_zero()) continue;
        auto e = gcd_r_extended(u, v);
        CHECK(e.a * u + e.b * v == e.d);
        if (!u.is_zero()) CHECK(right_divmod(u, e.d).second.is_zero());
        if (!v.is_zero()) CHECK(right_divmod(v, e.d).second.is_zero());
    }
}

TEST_CASE("centrality") {
    // x^7 - 2 is central in F_{7^7}[x; a->a^7]
    auto F77 = FieldParams::make_conway(7, 7);
    auto R77 = ChainRingParams::make(F77, 1);
    auto ctx77 = SkewRing::make(R77, RingAutomorphism::make(R77, 1));
    SkewPoly mod = SkewPoly::binomial(ctx77, 7, R77->from_int(2));
    CHECK(is_central(mod).central);

    // x - 1 is not central in F_9[x; Frob]: theta^1 != id
    Contexts C;
    SkewPoly xm1 = SkewPoly::binomial(C.f9_frob, 1, C.f9_frob->ring()->one());
    auto rep = is_central(xm1);
    CHECK_FALSE(rep.central);
    CHECK(rep.violated_condition == 3);

    // non-theta-fixed coefficient is reported with its index
    ChainRingElement t = C.f9_frob->ring()->from_field(C.f9_frob->ring()->field()->generator_element());
    SkewPoly g = SkewPoly::binomial(C.f9_frob, 2, t);
    auto rep2 = is_central(g);
    CHECK_FALSE(rep2.central);
    CHECK(rep2.violated_condition == 1);
    CHECK(rep2.coefficient_index == 0);

    // theta = id: every monic polynomial is central
    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i) {
        SkewPoly f = random_poly(C.f7_id, 5, rng, true);
        CHECK(is_central(f).central);
    }

    // a central polynomial commutes with everything
    SkewPoly c55 = SkewPoly::binomial(C.f55_frob, 5, C.f55_frob->ring()->one());
    REQUIRE(is_central(c55).central);
    for (int i = 0; i < 100; ++i) {
        SkewPoly g2 = random_poly(C.f55_frob, 4, rng);
        CHECK(c55 * g2 == g2 * c55);
    }

    CHECK_THROWS_AS(is_central(SkewPoly::parse(C.f7_id, "2*x^2")), NonMonic);
}

TEST_CASE("reciprocal") {
    Contexts C;
    // (x^2 + dx + d^2)* = d^2 x^2 + dx + 1 for theta-fixed d
    auto F55 = C.f55_frob->ring()->field();
    ChainRingElement d = C.f55_frob->ring()->from_int(3);  // F_5 is the fixed subfield
    SkewPoly f = SkewPoly::from_coeffs(C.f55_frob, {d * d, d, C.f55_frob->ring()->one()});
    SkewPoly fs = reciprocal(f);
    CHECK(fs == SkewPoly::from_coeffs(C.f55_frob, {C.f55_frob->ring()->one(), d, d * d}));
    static_cast<void>(F55);

    // (x^n)* = 1
    CHECK(reciprocal(SkewPoly::x_power(C.f9_frob, 4)).is_one());

    // theta = id keeps palindromes fixed
    SkewPoly pal = SkewPoly::parse(C.f7_id, "2 + 5*x + 2*x^2");
    CHECK(reciprocal(pal) == pal);

    // anti-homomorphism on central theta-fixed-coefficient polynomials
    SkewPoly c1 = SkewPoly::binomial(C.f55_frob, 5, C.f55_frob->ring()->from_int(2));
    SkewPoly c2 = SkewPoly::parse(C.f55_frob, "1 + 2*x^5 + x^10");
    REQUIRE(is_central(c1).central);
    REQUIRE(is_central(c2).central);
    CHECK(reciprocal(c1 * c2) == reciprocal(c2) * reciprocal(c1));

    CHECK_THROWS_AS(reciprocal(SkewPoly::zero(C.f7_id)), ZeroPolynomial);
}

TEST_CASE("right evaluation by norms") {
    Contexts C;
    std::mt19937_64 rng(23);
    // f = x - a evaluates to zero at a
    for (int i = 0; i < 50; ++i) {
        ChainRingElement a = C.f9_frob->ring()->element_at(rng() % C.f9_frob->ring()->size());
        SkewPoly f = SkewPoly::binomial(C.f9_frob, 1, a);
        CHECK(eval_right_remainder(f, a).is_zero());
    }
    // theta = id: classical evaluation
    for (int i = 0; i < 200; ++i) {
        SkewPoly f = random_poly(C.f7_id, 6, rng);
        ChainRingElement a = C.f7_id->ring()->element_at(rng() % 7);
        ChainRingElement classical = C.f7_id->ring()->zero();
        ChainRingElement ap = C.f7_id->ring()->one();
        for (size_t j = 0; j < f.coeff_count(); ++j) {
            classical = classical + f.coeff(static_cast<int>(j)) * ap;
            ap = ap * a;
        }
        CHECK(eval_right_remainder(f, a) == classical);
    }
    // matches the right_divmod remainder
    for (auto ctx : {C.f9_frob, C.r2f7_eta}) {
        for (int i = 0; i < 500; ++i) {
            SkewPoly f = random_poly(ctx, 6, rng);
            ChainRingElement a = ctx->ring()->element_at(rng() % ctx->ring()->size());
            SkewPoly lin = SkewPoly::binomial(ctx, 1, a);
            SkewPoly r = right_divmod(f, lin).second;
            ChainRingElement expect = r.is_zero() ? ctx->ring()->zero() : r.coeff(0);
            CHECK(eval_right_remainder(f, a) == expect);
        }
    }
}

TEST_CASE("powers") {
    Contexts C;
    SkewPoly f = SkewPoly::parse(C.f9_frob, "1 + x");
    CHECK(f.pow(0).is_one());

    // freshman's dream: (x-1)^p = x^p - 1 over F_p[x]
    SkewPoly xm1 = SkewPoly::binomial(C.f7_id, 1, C.f7_id->ring()->one());
    CHECK(xm1.pow(7) == SkewPoly::binomial(C.f7_id, 7, C.f7_id->ring()->one()));

    // (x^3 - l0)^{p^s} = x^{3 p^s} - l0^{p^s} for theta-fixed l0, p=5, s=1
    ChainRingElement l0 = C.f55_frob->ring()->from_int(2);
    SkewPoly base = SkewPoly::binomial(C.f55_frob, 3, l0);
    SkewPoly pw = base.pow(5);
    CHECK(pw == SkewPoly::binomial(C.f55_frob, 15, l0.scaled(l0.coeff(0).pow(4))));
    // oracle: repeated multiplication
    SkewPoly slow = SkewPoly::one(C.f55_frob);
    for (int i = 0; i < 5; ++i) slow = slow * base;
    CHECK(pw == slow);
}

TEST_CASE("automorphism power cache handles both signs") {
    Contexts C;
    const auto& th = C.r2f7_eta->theta();
    ChainRingElement a = C.r2f7_eta->ring()->parse_element("3+2*u");
    CHECK(C.r2f7_eta->twist(3, a) == th.apply(th.apply(th.apply(a))));
    CHECK(C.r2f7_eta->twist(-2, C.r2f7_eta->twist(2, a)) == a);
    CHECK(C.r2f7_eta->twist(0, a) == a);
}
