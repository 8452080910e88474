#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/padic.hpp"

using namespace witt;

namespace {

WittVector digits(const RingPtr& field, const Profile& profile, const std::vector<long>& vals) {
    std::vector<RingElement> comps;
    for (long v : vals) comps.push_back(int_image(v, field));
    return WittVector(profile, field, std::move(comps));
}

} // namespace

TEST_CASE("teichmuller lifts") {
    const RingPtr f5 = RingDescriptor::prime_field(5);
    CHECK(teichmuller_lift(RingElement::zero(f5), 3).value() == 0);
    CHECK(teichmuller_lift(RingElement::one(f5), 3).value() == 1);
    // iterate 2 -> 2^5 mod 125 to stability: tau(2) = 57
    const PAdicTrunc t2 = teichmuller_lift(int_image(2, f5), 3);
    CHECK(t2.value() == 57);
    mpz_class power;
    mpz_powm_ui(power.get_mpz_t(), t2.value().get_mpz_t(), 5, t2.modulus().get_mpz_t());
    CHECK(power == t2.value());
    std::mt19937_64 rng(51);
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        const RingPtr field = RingDescriptor::prime_field(mpz_from_ll(p));
        for (int k = 1; k <= 4; ++k) {
            for (int t = 0; t < 20; ++t) {
                const RingElement a = random_element(field, rng);
                const RingElement b = random_element(field, rng);
                const PAdicTrunc ta = teichmuller_lift(a, k);
                mpz_class pw;
                mpz_powm(pw.get_mpz_t(), ta.value().get_mpz_t(), mpz_from_ll(p).get_mpz_t(),
                         ta.modulus().get_mpz_t());
                CHECK(pw == ta.value()); // fixed point
                CHECK(mpz_class((ta.value() - std::get<mpz_class>(a.payload())) % mpz_from_ll(p)) == 0);
                CHECK(ta * teichmuller_lift(b, k) == teichmuller_lift(a * b, k));
            }
        }
    }
}

TEST_CASE("witt_to_padic digit sums") {
    const RingPtr f2 = RingDescriptor::prime_field(2);
    const Profile ptyp = Profile::p_typical(2, 2);
    CHECK(witt_to_padic(digits(f2, ptyp, {1, 0, 0})).value() == 1);
    CHECK(witt_to_padic(digits(f2, ptyp, {1, 1, 0})).value() == 3);
    // all 8 digit vectors map to distinct residues
    std::vector<bool> seen(8, false);
    for (int v = 0; v < 8; ++v) {
        const PAdicTrunc image = witt_to_padic(digits(f2, ptyp, {v & 1, (v >> 1) & 1, (v >> 2) & 1}));
        const std::size_t idx = image.value().get_ui();
        CHECK_FALSE(seen[idx]);
        seen[idx] = true;
    }
    CHECK_THROWS_AS(witt_to_padic(digits(f2, Profile::full(3), {1, 0, 1})), ProfileMismatch);
}

TEST_CASE("carrying arithmetic examples") {
    const RingPtr f2 = RingDescriptor::prime_field(2);
    const Profile ptyp = Profile::p_typical(2, 2);
    // images 3 + 5 = 8 = 0 mod 8
    const WittVector x = digits(f2, ptyp, {1, 1, 0});
    const WittVector y = digits(f2, ptyp, {1, 0, 1});
    CHECK(witt_add(x, y) == digits(f2, ptyp, {0, 0, 0}));
    CHECK(witt_to_padic(witt_add(x, y)).value() == 0);
    // x + 0 maps to image(x)
    CHECK(witt_to_padic(witt_add(x, witt_zero(f2, ptyp))) == witt_to_padic(x));
}

TEST_CASE("oracle exhaustive small cases") {
    const OracleReport r23 = oracle_check(2, 3, 0, true, 0);
    CHECK(r23.ok);
    CHECK(r23.pairs_checked == 64);
    const OracleReport r32 = oracle_check(3, 2, 0, true, 0);
    CHECK(r32.ok);
    CHECK(r32.pairs_checked == 81);
}

TEST_CASE("oracle randomized") {
    for (const auto& [p, len] : std::vector<std::pair<long long, int>>{{2, 4}, {3, 3}, {5, 2}}) {
        const OracleReport r = oracle_check(p, len, 60, false, 0xabcdef);
        CHECK(r.ok);
        CHECK(r.pairs_checked == 60);
    }
}

TEST_CASE("frobenius compatibility through the digit map") {
    std::mt19937_64 rng(52);
    for (long long p : {2LL, 3LL}) {
        const RingPtr field = RingDescriptor::prime_field(mpz_from_ll(p));
        const Profile ptyp = Profile::p_typical(p, 3);
        for (int t = 0; t < 20; ++t) {
            std::vector<RingElement> comps;
            for (std::size_t i = 0; i < ptyp.size(); ++i) comps.push_back(random_element(field, rng));
            const WittVector x(ptyp, field, comps);
            CHECK(witt_to_padic(frobenius(p, x)) ==
                  witt_to_padic(project(x, Profile::p_typical(p, 2))));
        }
    }
}

TEST_CASE("padic truncation arithmetic") {
    const PAdicTrunc a(2, 3, 5);
    const PAdicTrunc b(2, 3, 6);
    CHECK((a + b).value() == 3);  // 11 mod 8
    CHECK((a * b).value() == 6);  // 30 mod 8
    CHECK((a - b).value() == 7);  // -1 mod 8
    CHECK_THROWS_AS(PAdicTrunc(4, 2, 1), NotPrime);
    CHECK_THROWS_AS(PAdicTrunc(2, 0, 1), DomainError);
    const PAdicTrunc c(3, 2, 5);
    CHECK_THROWS_AS(a + c, DomainError);
}
