#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "skewcc/chain_ring.hpp"

using namespace skewcc;

namespace {

ChainRingElement random_element(const ChainRingParams& R, std::mt19937_64& rng) {
    return R.element_at(rng() % R.size());
}

// Brute-force oracle for m = 1: a ring endomorphism of R_k fixes F_p and is
// determined by the image z of u, with phi(sum a_i u^i) = sum a_i z^i.
// Collect the u-images of all bijective multiplicative maps of this shape.
std::set<uint64_t> brute_force_automorphism_u_images(const ChainRingParams& R) {
    REQUIRE(R.field()->m() == 1);
    std::set<uint64_t> images;
    const uint64_t n = R.size();
    for (uint64_t zi = 0; zi < n; ++zi) {
        ChainRingElement z = R.element_at(zi);
        auto apply = [&](const ChainRingElement& a) {
            ChainRingElement acc = R.zero();
            ChainRingElement zp = R.one();
            for (int i = 0; i < R.k(); ++i) {
                acc = acc + zp.scaled(a.coeff(i));
                zp = zp * z;
            }
            return acc;
        };
        // multiplicative on all pairs, and a bijection
        bool ok = true;
        std::set<uint64_t> seen;
        for (uint64_t ai = 0; ai < n && ok; ++ai) {
            ChainRingElement a = R.element_at(ai);
            seen.insert(R.index_of(apply(a)));
            for (uint64_t bi = 0; bi < n && ok; ++bi) {
                ChainRingElement b = R.element_at(bi);
                if (apply(a * b) != apply(a) * apply(b)) ok = false;
            }
        }
        if (ok && seen.size() == n) images.insert(zi);
    }
    return images;
}

}  // namespace

TEST_CASE("basic ring arithmetic") {
    auto F7 = FieldParams::make_conway(7, 1);
    auto R2 = ChainRingParams::make(F7, 2);
    ChainRingElement u = R2->u();
    CHECK((u * u).is_zero());

    auto F5 = FieldParams::make_conway(5, 1);
    auto R3 = ChainRingParams::make(F5, 3);
    ChainRingElement a = R3->one() + R3->u();
    ChainRingElement b = R3->one() - R3->u();
    ChainRingElement u2 = R3->u(2);
    CHECK(a * b == R3->one() - u2);

    // (3+6u)^3 = 6+u over R_2/F_7, by repeated multiplication
    ChainRingElement c = R2->from_int(3) + R2->u().scaled(F7->from_int(6));
    ChainRingElement cube = c * c * c;
    CHECK(cube == R2->from_int(6) + R2->u());
}

TEST_CASE("characteristic p") {
    auto F5 = FieldParams::make_conway(5, 1);
    auto R3 = ChainRingParams::make(F5, 3);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        ChainRingElement a = random_element(*R3, rng);
        ChainRingElement s = R3->zero();
        for (int j = 0; j < 5; ++j) s = s + a;
        CHECK(s.is_zero());
    }
}

TEST_CASE("inversion") {
    auto F7 = FieldParams::make_conway(7, 1);
    auto R2 = ChainRingParams::make(F7, 2);
    CHECK((R2->one() + R2->u()).inverse() == R2->one() - R2->u());
    CHECK(R2->from_int(3).inverse() == R2->from_int(5));

    auto F5 = FieldParams::make_conway(5, 1);
    auto R3 = ChainRingParams::make(F5, 3);
    CHECK((R3->one() + R3->u()).inverse() == R3->one() - R3->u() + R3->u(2));
    CHECK_THROWS_AS(R3->u().inverse(), NotAUnit);
}

TEST_CASE("unit criterion matches residue projection exhaustively") {
    // exhaustive for all rings with p^{mk} <= 10^4
    for (auto R : {ChainRingParams::parse("3|2"), ChainRingParams::parse("3|3"),
                   ChainRingParams::parse("5|2"), ChainRingParams::parse("3^2|2"),
                   ChainRingParams::parse("7|2"), ChainRingParams::parse("5|3")}) {
        for (uint64_t i = 0; i < R->size(); ++i) {
            ChainRingElement a = R->element_at(i);
            CHECK(a.is_unit() == !mu(a).is_zero());
            if (a.is_unit()) CHECK(a * a.inverse() == R->one());
        }
    }
}

TEST_CASE("projections mu and pi") {
    auto F7 = FieldParams::make_conway(7, 1);
    auto R2 = ChainRingParams::make(F7, 2);
    auto R3 = ChainRingParams::make(F7, 3);
    ChainRingElement a = R2->from_int(3) + R2->u().scaled(F7->from_int(5));
    CHECK(mu(a) == F7->from_int(3));
    CHECK(mu(R2->u()).is_zero());

    ChainRingElement b = R3->from_int(1) + R3->u().scaled(F7->from_int(2)) + R3->u(2).scaled(F7->from_int(4));
    ChainRingElement pb = pi(b, R2);
    CHECK(pb == R2->from_int(1) + R2->u().scaled(F7->from_int(2)));
    auto R1 = ChainRingParams::make(F7, 1);
    CHECK_THROWS_AS(pi(R1->one(), R1), KTooSmall);
}

TEST_CASE("automorphism action follows the closed formula") {
    auto F7 = FieldParams::make_conway(7, 1);
    auto R2 = ChainRingParams::make(F7, 2);

    auto id = RingAutomorphism::identity(R2);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        ChainRingElement a = random_element(*R2, rng);
        CHECK(id.apply(a) == a);
    }

    // k=2, theta=id, eta_1=2: u -> 2u
    auto phi = RingAutomorphism::make(R2, 0, {F7->from_int(2)});
    CHECK(phi.apply(R2->u()) == R2->u().scaled(F7->from_int(2)));

    // k=3 over F_3, theta=id, eta_1=2, eta_2=1+u: u -> 2u+2u^2
    auto F3 = FieldParams::make_conway(3, 1);
    auto R3 = ChainRingParams::make(F3, 3);
    auto psi = RingAutomorphism::make(R3, 0, {F3->from_int(2), F3->from_int(1)});
    CHECK(psi.apply(R3->u()) == R3->u().scaled(F3->from_int(2)) + R3->u(2).scaled(F3->from_int(2)));

    // homomorphism property on random pairs
    std::mt19937_64 rng2(3);
    for (int i = 0; i < 50; ++i) {
        ChainRingElement a = random_element(*R3, rng2), b = random_element(*R3, rng2);
        CHECK(psi.apply(a + b) == psi.apply(a) + psi.apply(b));
        CHECK(psi.apply(a * b) == psi.apply(a) * psi.apply(b));
    }
}

TEST_CASE("automorphism composition, inverse and order") {
    auto F55 = FieldParams::make_conway(5, 5);
    auto R1 = ChainRingParams::make(F55, 1);
    auto frob = RingAutomorphism::make(R1, 1);
    CHECK(frob.order() == 5);
    CHECK(RingAutomorphism::identity(R1).order() == 1);

    auto F7 = FieldParams::make_conway(7, 1);
    auto R2 = ChainRingParams::make(F7, 2);
    auto phi = RingAutomorphism::make(R2, 0, {F7->from_int(3)});
    CHECK(phi.order() == 6);  // order of 3 in F_7^*

    // inverse composes to the identity, on data and on action
    auto F3 = FieldParams::make_conway(3, 1);
    auto R3 = ChainRingParams::make(F3, 3);
    std::mt19937_64 rng(4);
    for (const auto& psi : enumerate_automorphisms(R3)) {
        auto inv = psi.inverse();
        CHECK(psi.compose(inv).is_identity());
        CHECK(inv.compose(psi).is_identity());
        for (int i = 0; i < 10; ++i) {
            ChainRingElement a = random_element(*R3, rng);
            CHECK(inv.apply(psi.apply(a)) == a);
        }
        CHECK(RingAutomorphism::group_order(*R3) % psi.order() == 0);
    }
}

TEST_CASE("automorphism enumeration matches brute-force endomorphism search") {
    struct Case { int64_t p; int k; uint64_t count; };
    for (auto [p, k, count] : {Case{3, 2, 2}, Case{3, 3, 6}, Case{5, 2, 4}}) {
        auto F = FieldParams::make_conway(p, 1);
        auto R = ChainRingParams::make(F, k);
        auto autos = enumerate_automorphisms(R);
        CHECK(autos.size() == count);
        CHECK(autos.size() == RingAutomorphism::group_order(*R));
        // exactly once
        std::set<std::string> reprs;
        for (const auto& a : autos) reprs.insert(a.to_string());
        CHECK(reprs.size() == autos.size());
        // same set as the brute force over all ring endomorphisms (m = 1:
        // an endomorphism is determined by the image of u)
        std::set<uint64_t> brute = brute_force_automorphism_u_images(*R);
        std::set<uint64_t> ours;
        for (const auto& a : autos) ours.insert(R->index_of(a.apply(R->u())));
        CHECK(brute == ours);
    }
    auto F9 = FieldParams::make_conway(3, 2);
    CHECK(enumerate_automorphisms(ChainRingParams::make(F9, 1)).size() == 2);
    CHECK_THROWS_AS(enumerate_automorphisms(ChainRingParams::parse("5^2|4"), 100), CapExceeded);
}

TEST_CASE("canonical multiplier factorization round-trips") {
    auto R = ChainRingParams::parse("5|3");
    std::mt19937_64 rng(6);
    for (int i = 0; i < 40; ++i) {
        ChainRingElement M = random_element(*R, rng);
        if (!M.is_unit()) continue;
        auto phi = RingAutomorphism::from_multiplier(R, 0, M);
        // the action on u only sees M mod u^{k-1}
        CHECK(mu(phi.multiplier()) == mu(M));
        CHECK(phi.apply(R->u()) == M * R->u());
    }
}

TEST_CASE("element text round-trip") {
    auto R = ChainRingParams::parse("5^2|3");
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        ChainRingElement a = random_element(*R, rng);
        CHECK(R->parse_element(a.to_string()) == a);
    }
    CHECK(R->parse_element("(2+3*w)*u^2+1+w") ==
          R->from_coeffs({R->field()->parse_element("1+w"), R->field()->zero(),
                          R->field()->parse_element("2+3*w")}));
}

TEST_CASE("ring spec parsing") {
    auto R = ChainRingParams::parse("7^2:3,6,1|2");
    CHECK(R->field()->p() == 7);
    CHECK(R->field()->m() == 2);
    CHECK(R->k() == 2);
    CHECK(ChainRingParams::parse("5")->k() == 1);
}
