#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/canonical_maps.hpp"

using namespace witt;

namespace {

WittVector random_vec(const RingPtr& ring, const Profile& profile, std::mt19937_64& rng) {
    std::vector<RingElement> comps;
    for (std::size_t i = 0; i < profile.size(); ++i) comps.push_back(random_element(ring, rng));
    return WittVector(profile, ring, std::move(comps));
}

} // namespace

TEST_CASE("lift specs satisfy the Frobenius-lift hypotheses") {
    std::mt19937_64 rng(41);
    for (const auto& spec :
         {FrobeniusLiftSpec::identity_on_integers(), FrobeniusLiftSpec::power_substitution()}) {
        for (int t = 0; t < 50; ++t) {
            const RingElement a = random_element(spec.ring(), rng);
            for (long long p : {2LL, 3LL, 5LL})
                CHECK_NOTHROW(exact_div_int(spec.sigma(p, a) - a.pow(static_cast<unsigned long>(p)), p));
            CHECK(spec.sigma(2, spec.sigma(3, a)) == spec.sigma(3, spec.sigma(2, a)));
            CHECK(spec.sigma(6, a) == spec.sigma(2, spec.sigma(3, a)));
        }
    }
}

TEST_CASE("phi on the identity spec") {
    const FrobeniusLiftSpec spec = FrobeniusLiftSpec::identity_on_integers();
    const RingElement two = int_image(2, spec.ring());
    const WittVector y = phi(spec, two, Profile::full(4));
    CHECK(y.component(1) == int_image(2, spec.ring()));
    CHECK(y.component(2) == int_image(-1, spec.ring()));
    CHECK(y.component(3) == int_image(-2, spec.ring()));
    CHECK(y.component(4) == int_image(-4, spec.ring()));
    CHECK(phi(spec, RingElement::one(spec.ring()), Profile::full(4)) ==
          witt_one(spec.ring(), Profile::full(4)));
}

TEST_CASE("phi on the power-substitution spec") {
    const FrobeniusLiftSpec spec = FrobeniusLiftSpec::power_substitution();
    const RingPtr zu = spec.ring();
    const RingElement u = parse_element(zu, "0,1");
    CHECK(phi(spec, u, Profile::full(5)) == teichmuller(u, Profile::full(5)));
    const WittVector y = phi(spec, parse_element(zu, "1,1"), Profile::full(3));
    CHECK(y.component(1) == parse_element(zu, "1,1"));   // 1 + u
    CHECK(y.component(2) == parse_element(zu, "0,-1"));  // -u
    CHECK(y.component(3) == parse_element(zu, "0,-1,-1")); // -u - u^2
}

TEST_CASE("phi is a ring homomorphism with ghost sigma") {
    std::mt19937_64 rng(42);
    const Profile p6 = Profile::full(6);
    for (const auto& spec :
         {FrobeniusLiftSpec::identity_on_integers(), FrobeniusLiftSpec::power_substitution()}) {
        for (int t = 0; t < 30; ++t) {
            const RingElement a = random_element(spec.ring(), rng);
            const RingElement b = random_element(spec.ring(), rng);
            const WittVector pa = phi(spec, a, p6);
            const WittVector pb = phi(spec, b, p6);
            CHECK(phi(spec, a + b, p6) == witt_add(pa, pb));
            CHECK(phi(spec, a * b, p6) == witt_mul(pa, pb));
            const GhostVector g = ghost(pa);
            for (long long n : p6.indices()) CHECK(g.component(n) == spec.sigma(n, a));
        }
    }
}

TEST_CASE("delta identities") {
    std::mt19937_64 rng(43);
    const RingPtr zz = RingDescriptor::integers();
    for (const auto& [a, b] :
         std::vector<std::pair<long long, long long>>{{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        const Profile pab = Profile::full(a * b);
        for (int t = 0; t < 15; ++t) {
            const WittVector x = random_vec(zz, pab, rng);
            const NestedWittVector y = delta(x, a, b);
            for (long long n = 1; n <= a; ++n)
                CHECK(nested_outer_ghost(y, n) == project(frobenius(n, x), Profile::full(b)));
            for (long long n = 1; n <= b; ++n)
                CHECK(nested_apply_inner_ghost(y, n) == project(frobenius(n, x), Profile::full(a)));
        }
    }
}

TEST_CASE("delta on Teichmuller lifts collapses to the first outer component") {
    std::mt19937_64 rng(44);
    const RingPtr zz = RingDescriptor::integers();
    for (int t = 0; t < 30; ++t) {
        const RingElement v = random_element(zz, rng);
        const NestedWittVector y = delta(teichmuller(v, Profile::full(4)), 2, 2);
        CHECK(y.component(1) == teichmuller(v, Profile::full(2)));
        CHECK(y.component(2).is_zero());
        CHECK(y.component(1) == project(teichmuller(v, Profile::full(4)), Profile::full(2)));
    }
}

TEST_CASE("ghost exchange relation on nested vectors") {
    std::mt19937_64 rng(45);
    const RingPtr zz = RingDescriptor::integers();
    for (int t = 0; t < 30; ++t) {
        const NestedWittVector y = delta(random_vec(zz, Profile::full(4), rng), 2, 2);
        for (long long m : {1LL, 2LL})
            for (long long n : {1LL, 2LL})
                CHECK(ghost(nested_apply_inner_ghost(y, n)).component(m) ==
                      ghost(nested_outer_ghost(y, m)).component(n));
    }
}

TEST_CASE("delta input validation") {
    std::mt19937_64 rng(46);
    const RingPtr zz = RingDescriptor::integers();
    CHECK_THROWS_AS(delta(random_vec(zz, Profile::full(5), rng), 2, 2), ProfileMismatch);
    CHECK_THROWS_AS(phi(FrobeniusLiftSpec::identity_on_integers(),
                        parse_element(RingDescriptor::polynomial_ring(zz, "u"), "0,1"),
                        Profile::full(3)),
                    RingMismatch);
}
