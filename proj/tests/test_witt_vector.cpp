#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/witt_vector.hpp"

using namespace witt;

namespace {

const RingPtr zz = RingDescriptor::integers();

WittVector make_vec(const RingPtr& ring, const Profile& profile, const std::vector<long>& vals) {
    std::vector<RingElement> comps;
    for (long v : vals) comps.push_back(int_image(v, ring));
    return WittVector(profile, ring, std::move(comps));
}

WittVector random_vec(const RingPtr& ring, const Profile& profile, std::mt19937_64& rng) {
    std::vector<RingElement> comps;
    for (std::size_t i = 0; i < profile.size(); ++i) comps.push_back(random_element(ring, rng));
    return WittVector(profile, ring, std::move(comps));
}

} // namespace

TEST_CASE("ghost map") {
    const Profile p3 = Profile::full(3);
    const GhostVector g = ghost(make_vec(zz, p3, {1, 2, 3}));
    CHECK(g.component(1) == int_image(1, zz));
    CHECK(g.component(2) == int_image(5, zz));
    CHECK(g.component(3) == int_image(10, zz));
    // Teichmuller ghosts are powers
    const GhostVector gt = ghost(teichmuller(int_image(7, zz), Profile::full(4)));
    for (long long n = 1; n <= 4; ++n) CHECK(gt.component(n) == int_image(mpz_class(7), zz).pow(static_cast<unsigned long>(n)));
    CHECK(ghost(witt_zero(zz, p3)).components() ==
          std::vector<RingElement>(3, RingElement::zero(zz)));
}

TEST_CASE("unghost") {
    const Profile p3 = Profile::full(3);
    std::vector<RingElement> comps{int_image(1, zz), int_image(5, zz), int_image(10, zz)};
    CHECK(unghost(GhostVector(p3, zz, comps)) == make_vec(zz, p3, {1, 2, 3}));
    // (0, 1, 0) is not a ghost vector over Z: x_1 = 0 forces 2 x_2 = 1
    std::vector<RingElement> bad{int_image(0, zz), int_image(1, zz), int_image(0, zz)};
    CHECK_THROWS_AS(unghost(GhostVector(p3, zz, bad)), NotInGhostImage);
    // torsion rings are refused with AmbiguousDivision
    const RingPtr z4 = RingDescriptor::integers_mod(4);
    std::vector<RingElement> torsion{RingElement::zero(z4), RingElement::zero(z4)};
    CHECK_THROWS_AS(unghost(GhostVector(Profile::full(2), z4, torsion)), AmbiguousDivision);
    std::mt19937_64 rng(3);
    const RingPtr q = RingDescriptor::rationals();
    for (int t = 0; t < 50; ++t) {
        const WittVector x = random_vec(q, Profile::full(8), rng);
        CHECK(unghost(ghost(x)) == x);
    }
}

TEST_CASE("addition matches strict p-ring carrying") {
    const RingPtr f2 = RingDescriptor::prime_field(2);
    const Profile ptyp = Profile::p_typical(2, 1);
    const WittVector one = make_vec(f2, ptyp, {1, 0});
    CHECK(witt_add(one, one) == make_vec(f2, ptyp, {0, 1})); // 1 + 1 = 2 in Z_2
}

TEST_CASE("teichmuller is multiplicative") {
    const Profile p4 = Profile::full(4);
    CHECK(witt_mul(teichmuller(int_image(2, zz), p4), teichmuller(int_image(3, zz), p4)) ==
          teichmuller(int_image(6, zz), p4));
    CHECK(teichmuller(RingElement::zero(zz), p4) == witt_zero(zz, p4));
    // [a] x = (a^n x_n)
    std::mt19937_64 rng(5);
    const RingPtr z9 = RingDescriptor::integers_mod(9);
    const Profile p6 = Profile::full(6);
    for (int t = 0; t < 25; ++t) {
        const RingElement a = random_element(z9, rng);
        const WittVector x = random_vec(z9, p6, rng);
        std::vector<RingElement> expected;
        for (long long n : p6.indices())
            expected.push_back(a.pow(static_cast<unsigned long>(n)) * x.component(n));
        CHECK(witt_mul(teichmuller(a, p6), x) == WittVector(p6, z9, expected));
    }
    CHECK(witt_mul(teichmuller(int_image(2, zz), Profile::full(3)), make_vec(zz, Profile::full(3), {1, 1, 1})) ==
          make_vec(zz, Profile::full(3), {2, 4, 8}));
}

TEST_CASE("negation") {
    const Profile p2 = Profile::full(2);
    CHECK(witt_neg(witt_one(zz, p2)) == make_vec(zz, p2, {-1, -1})); // ghost (-1, -1)
    std::mt19937_64 rng(6);
    const RingPtr z6 = RingDescriptor::integers_mod(6);
    for (int t = 0; t < 25; ++t) {
        const WittVector x = random_vec(z6, Profile::full(6), rng);
        CHECK(witt_add(x, witt_neg(x)) == witt_zero(z6, Profile::full(6)));
    }
}

TEST_CASE("verschiebung") {
    const Profile p6 = Profile::full(6);
    const Profile p3 = Profile::full(3);
    const WittVector x = make_vec(zz, p3, {4, 5, 6});
    CHECK(verschiebung(2, x, p6) == make_vec(zz, p6, {0, 4, 0, 5, 0, 6}));
    // p-typical shift
    const RingPtr f3 = RingDescriptor::prime_field(3);
    const WittVector y = make_vec(f3, Profile::p_typical(3, 1), {1, 2});
    CHECK(verschiebung(3, y, Profile::p_typical(3, 2)) ==
          make_vec(f3, Profile::p_typical(3, 2), {0, 1, 2}));
    // ghost rule: 0 off multiples of n, n*w_{m/n} on them
    const GhostVector gv = ghost(verschiebung(2, x, p6));
    const GhostVector gx = ghost(x);
    for (long long m : p6.indices()) {
        if (m % 2 == 0)
            CHECK(gv.component(m) == int_image(2, zz) * gx.component(m / 2));
        else
            CHECK(gv.component(m).is_zero());
    }
    CHECK_THROWS_AS(verschiebung(2, x, Profile::full(8)), ProfileMismatch);
}

TEST_CASE("frobenius") {
    const Profile p6 = Profile::full(6);
    std::mt19937_64 rng(8);
    // F_2[a] = [a^2]
    const WittVector t7 = teichmuller(int_image(7, zz), p6);
    CHECK(frobenius(2, t7) == teichmuller(int_image(49, zz), Profile::full(3)));
    // F_2 V_2 [1] has ghost (2,2,2)
    const WittVector v = verschiebung(2, teichmuller(int_image(1, zz), Profile::full(3)), p6);
    CHECK(frobenius(2, v) == make_vec(zz, Profile::full(3), {2, -1, -2}));
    // F_p(x) = x_m^p mod p componentwise over Z
    for (long long p : {2LL, 3LL}) {
        const WittVector x = random_vec(zz, Profile::full(8), rng);
        const WittVector fx = frobenius(p, x);
        const Profile reduced = Profile::full(8).quotient(p);
        for (long long m : reduced.indices()) {
            const RingElement diff = fx.component(m) - x.component(m).pow(static_cast<unsigned long>(p));
            CHECK_NOTHROW(exact_div_int(diff, p));
        }
    }
    CHECK_THROWS_AS(frobenius(5, make_vec(zz, Profile::full(4), {1, 2, 3, 4})), EmptyOutputProfile);
}

TEST_CASE("frobenius verschiebung interactions") {
    std::mt19937_64 rng(9);
    const RingPtr z6 = RingDescriptor::integers_mod(6);
    const Profile p6 = Profile::full(6);
    for (long long n : {2LL, 3LL}) {
        const Profile src = p6.quotient(n);
        for (int t = 0; t < 20; ++t) {
            const WittVector x = random_vec(z6, src, rng);
            CHECK(frobenius(n, verschiebung(n, x, p6)) == int_mul(n, x));
            const WittVector y = random_vec(z6, p6, rng);
            CHECK(verschiebung(n, witt_mul(frobenius(n, y), x), p6) ==
                  witt_mul(y, verschiebung(n, x, p6)));
        }
    }
    for (int t = 0; t < 20; ++t) {
        const WittVector x = random_vec(z6, Profile::full(12), rng);
        CHECK(frobenius(2, frobenius(3, x)) == frobenius(6, x));
        CHECK(frobenius(3, frobenius(2, x)) == frobenius(6, x));
    }
}

TEST_CASE("frobenius congruence fails for composite indices") {
    // w_6 = x1^6 + 3x3^2 + 2x2^3 + 6x6 is not congruent to x1^6 mod 6
    const RingPtr z6 = RingDescriptor::integers_mod(6);
    const WittVector x = make_vec(z6, Profile::full(6), {1, 1, 1, 0, 0, 0});
    CHECK(frobenius(6, x).component(1) != x.component(1).pow(6));
    const RingPtr z4 = RingDescriptor::integers_mod(4);
    const WittVector y = make_vec(z4, Profile::full(4), {1, 1, 0, 0});
    CHECK(frobenius(4, y).component(1) != y.component(1).pow(4));
}

TEST_CASE("projection") {
    std::mt19937_64 rng(10);
    const RingPtr z6 = RingDescriptor::integers_mod(6);
    const Profile p8 = Profile::full(8);
    const WittVector x = random_vec(z6, p8, rng);
    CHECK(project(x, Profile::full(1)).component(1) == x.component(1));
    CHECK(project(x, p8) == x);
    const Profile p4 = Profile::full(4);
    for (int t = 0; t < 20; ++t) {
        const WittVector a = random_vec(z6, p8, rng);
        const WittVector b = random_vec(z6, p8, rng);
        CHECK(project(witt_add(a, b), p4) == witt_add(project(a, p4), project(b, p4)));
        CHECK(project(witt_mul(a, b), p4) == witt_mul(project(a, p4), project(b, p4)));
    }
    CHECK_THROWS_AS(project(x, Profile::full(9)), ProfileMismatch);
}

TEST_CASE("decompose and reassemble") {
    const Profile p6 = Profile::full(6);
    const RingPtr z6 = RingDescriptor::integers_mod(6);
    CHECK(decompose(witt_zero(z6, p6)).empty());
    const auto teich_parts = decompose(teichmuller(int_image(4, z6), p6));
    REQUIRE(teich_parts.size() == 1);
    CHECK(teich_parts[0].first == 1);
    CHECK(teich_parts[0].second == int_image(4, z6));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const WittVector x = random_vec(z6, p6, rng);
        CHECK(reassemble(decompose(x), z6, p6) == x);
    }
}

TEST_CASE("zero and one") {
    const Profile p4 = Profile::full(4);
    CHECK(witt_one(zz, p4).component(1).is_one());
    for (long long n : {2LL, 3LL, 4LL}) CHECK(witt_one(zz, p4).component(n).is_zero());
    std::mt19937_64 rng(12);
    const WittVector x = random_vec(zz, p4, rng);
    CHECK(witt_add(x, witt_zero(zz, p4)) == x);
    CHECK(witt_mul(x, witt_one(zz, p4)) == x);
    CHECK(witt_mul(x, witt_zero(zz, p4)) == witt_zero(zz, p4));
}

TEST_CASE("mismatch errors") {
    const WittVector a = make_vec(zz, Profile::full(2), {1, 2});
    const WittVector b = make_vec(zz, Profile::full(3), {1, 2, 3});
    CHECK_THROWS_AS(witt_add(a, b), ProfileMismatch);
    const WittVector c = make_vec(RingDescriptor::integers_mod(6), Profile::full(2), {1, 2});
    CHECK_THROWS_AS(witt_add(a, c), RingMismatch);
    CHECK_THROWS_AS(WittVector(Profile::full(3), zz, {int_image(1, zz)}), ProfileMismatch);
}

TEST_CASE("multiplication by p in characteristic p is the shifted power map") {
    const RingPtr f2 = RingDescriptor::prime_field(2);
    const Profile ptyp = Profile::p_typical(2, 3);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        const WittVector x = random_vec(f2, ptyp, rng);
        std::vector<RingElement> shifted(ptyp.size(), RingElement::zero(f2));
        for (std::size_t i = 0; i + 1 < ptyp.size(); ++i)
            shifted[i + 1] = x.components()[i].pow(2UL);
        CHECK(int_mul(2, x) == WittVector(ptyp, f2, shifted));
    }
}

TEST_CASE("ghost fast path agrees with the universal path") {
    std::mt19937_64 rng(14);
    for (const auto& ring : {RingDescriptor::rationals(), RingDescriptor::localized_rationals(5)}) {
        const Profile p6 = Profile::full(6);
        for (int t = 0; t < 20; ++t) {
            const WittVector x = random_vec(ring, p6, rng);
            const WittVector y = random_vec(ring, p6, rng);
            set_ghost_fast_path_enabled(true);
            const WittVector fast = witt_mul(x, y);
            set_ghost_fast_path_enabled(false);
            const WittVector slow = witt_mul(x, y);
            set_ghost_fast_path_enabled(true);
            CHECK(fast == slow);
        }
    }
}
