#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/lambda.hpp"

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

TruncatedSeries linear_factor(const RingPtr& ring, const RingElement& a, long long order) {
    std::vector<RingElement> c(static_cast<std::size_t>(order) + 1, RingElement::zero(ring));
    c[0] = RingElement::one(ring);
    c[1] = -a;
    return TruncatedSeries(ring, std::move(c));
}

} // namespace

TEST_CASE("witt_to_lambda closed forms") {
    const Profile p4 = Profile::full(4);
    const TruncatedSeries t = witt_to_lambda(teichmuller(int_image(5, zz), p4));
    CHECK(t.coeff(0).is_one());
    CHECK(t.coeff(1) == int_image(-5, zz));
    for (long long i = 2; i <= 4; ++i) CHECK(t.coeff(i).is_zero());
    CHECK(witt_to_lambda(witt_zero(zz, p4)) == TruncatedSeries::one(zz, 4));
    // (x1, x2) at N = 2: 1 - x1 t - x2 t^2
    const TruncatedSeries f = witt_to_lambda(make_vec(zz, Profile::full(2), {3, 4}));
    CHECK(f.coeff(1) == int_image(-3, zz));
    CHECK(f.coeff(2) == int_image(-4, zz));
    CHECK_THROWS_AS(witt_to_lambda(make_vec(zz, Profile::p_typical(2, 2), {1, 1, 1})), ProfileMismatch);
}

TEST_CASE("lambda_to_witt closed forms and round trips") {
    std::vector<RingElement> c{RingElement::one(zz), RingElement::one(zz), RingElement::zero(zz),
                               RingElement::zero(zz)};
    const WittVector x = lambda_to_witt(TruncatedSeries(zz, c)); // 1 + t
    CHECK(x == make_vec(zz, Profile::full(3), {-1, 0, 0}));
    CHECK(lambda_to_witt(TruncatedSeries::one(zz, 4)) == witt_zero(zz, Profile::full(4)));
    std::mt19937_64 rng(21);
    const RingPtr z6 = RingDescriptor::integers_mod(6);
    for (int t = 0; t < 50; ++t) {
        const WittVector v = random_vec(z6, Profile::full(8), rng);
        CHECK(lambda_to_witt(witt_to_lambda(v)) == v);
    }
}

TEST_CASE("d_operator") {
    const RingPtr z9 = RingDescriptor::integers_mod(9);
    // D(1 - a t) = sum a^n t^n
    const RingElement a = int_image(5, z9);
    const TruncatedSeries d = d_operator(linear_factor(z9, a, 6));
    CHECK(d.coeff(0).is_zero());
    for (long long n = 1; n <= 6; ++n) CHECK(d.coeff(n) == a.pow(static_cast<unsigned long>(n)));
    // D(f_x) = ghost(x) and D(fg) = D(f) + D(g)
    std::mt19937_64 rng(22);
    for (int t = 0; t < 30; ++t) {
        const WittVector x = random_vec(z9, Profile::full(8), rng);
        const WittVector y = random_vec(z9, Profile::full(8), rng);
        const TruncatedSeries f = witt_to_lambda(x);
        const TruncatedSeries g = witt_to_lambda(y);
        const GhostVector gx = ghost(x);
        const TruncatedSeries df = d_operator(f);
        for (long long n = 1; n <= 8; ++n) CHECK(df.coeff(n) == gx.component(n));
        const TruncatedSeries dfg = d_operator(series_mul(f, g));
        const TruncatedSeries dg = d_operator(g);
        for (long long n = 1; n <= 8; ++n) CHECK(dfg.coeff(n) == df.coeff(n) + dg.coeff(n));
    }
}

TEST_CASE("lambda addition and negation") {
    const Profile p5 = Profile::full(5);
    const RingElement a = int_image(3, zz), b = int_image(4, zz);
    // (1 - at)(1 - bt) corresponds to [a] + [b]
    const TruncatedSeries sum = lambda_witt_add(linear_factor(zz, a, 5), linear_factor(zz, b, 5));
    CHECK(lambda_to_witt(sum) == witt_add(teichmuller(a, p5), teichmuller(b, p5)));
    // reciprocal of (1 - t) at N = 3 is 1 + t + t^2 + t^3 and corresponds to -[1]
    const TruncatedSeries r = lambda_witt_neg(linear_factor(zz, RingElement::one(zz), 3));
    for (long long i = 0; i <= 3; ++i) CHECK(r.coeff(i).is_one());
    CHECK(lambda_to_witt(r) == witt_neg(teichmuller(RingElement::one(zz), Profile::full(3))));
    // f * recip(f) = 1
    std::mt19937_64 rng(23);
    const RingPtr z6 = RingDescriptor::integers_mod(6);
    for (int t = 0; t < 30; ++t) {
        const TruncatedSeries f = witt_to_lambda(random_vec(z6, Profile::full(8), rng));
        CHECK(series_mul(f, series_recip(f)) == TruncatedSeries::one(z6, 8));
    }
}

TEST_CASE("lambda multiplication") {
    const RingElement a = int_image(3, zz), b = int_image(5, zz);
    const TruncatedSeries prod = lambda_witt_mul(linear_factor(zz, a, 4), linear_factor(zz, b, 4));
    CHECK(prod == linear_factor(zz, a * b, 4)); // [a][b] = [ab]
    // multiplication by Witt zero (the series 1) gives 1
    const TruncatedSeries onef = TruncatedSeries::one(zz, 4);
    CHECK(lambda_witt_mul(linear_factor(zz, a, 4), onef) == onef);
    // full agreement with witt_core over Z/6 and F_3
    std::mt19937_64 rng(24);
    for (const auto& ring : {RingDescriptor::integers_mod(6), RingDescriptor::prime_field(3)}) {
        for (int t = 0; t < 50; ++t) {
            const WittVector x = random_vec(ring, Profile::full(8), rng);
            const WittVector y = random_vec(ring, Profile::full(8), rng);
            const TruncatedSeries f = witt_to_lambda(x);
            const TruncatedSeries g = witt_to_lambda(y);
            CHECK(lambda_to_witt(lambda_witt_add(f, g)) == witt_add(x, y));
            CHECK(lambda_to_witt(lambda_witt_mul(f, g)) == witt_mul(x, y));
            CHECK(lambda_to_witt(lambda_witt_neg(f)) == witt_neg(x));
        }
    }
}

TEST_CASE("frobenius and verschiebung on series") {
    const RingElement a = int_image(7, zz);
    CHECK(frobenius_lambda(2, linear_factor(zz, a, 6)) == linear_factor(zz, a * a, 3));
    const TruncatedSeries v = verschiebung_lambda(2, linear_factor(zz, a, 3), 6);
    CHECK(v.coeff(0).is_one());
    CHECK(v.coeff(2) == -a);
    for (long long i : {1LL, 3LL, 4LL, 5LL, 6LL}) CHECK(v.coeff(i).is_zero());
    CHECK_THROWS_AS(verschiebung_lambda(2, linear_factor(zz, a, 4), 6), DomainError);
    // V through the conversion matches the Witt-side Verschiebung
    std::mt19937_64 rng(25);
    const RingPtr z6 = RingDescriptor::integers_mod(6);
    const Profile p8 = Profile::full(8);
    for (int t = 0; t < 30; ++t)
        for (long long n : {2LL, 3LL}) {
            const WittVector x = random_vec(z6, p8.quotient(n), rng);
            CHECK(lambda_to_witt(verschiebung_lambda(n, witt_to_lambda(x), 8)) ==
                  verschiebung(n, x, p8));
        }
}

TEST_CASE("frobenius is the norm on split products") {
    std::mt19937_64 rng(26);
    const RingPtr z6 = RingDescriptor::integers_mod(6);
    for (int t = 0; t < 30; ++t)
        for (long long n : {2LL, 3LL}) {
            std::vector<RingElement> roots;
            for (int i = 0; i < 3; ++i) roots.push_back(random_element(z6, rng));
            TruncatedSeries f = TruncatedSeries::one(z6, 6);
            TruncatedSeries expected = TruncatedSeries::one(z6, 6 / n);
            for (const auto& a : roots) {
                f = series_mul(f, linear_factor(z6, a, 6));
                expected = series_mul(expected,
                                      linear_factor(z6, a.pow(static_cast<unsigned long>(n)), 6 / n));
            }
            CHECK(frobenius_lambda(n, f) == expected);
        }
}

TEST_CASE("series text forms") {
    const TruncatedSeries f = linear_factor(zz, int_image(3, zz), 3);
    CHECK(f.to_string() == "1 - 3*t");
    CHECK(parse_series(zz, "1 - 3*t", 3) == f);
    CHECK(parse_series(zz, "1 + 0*t - 3*t", 3) == f);
    const TruncatedSeries g = parse_series(zz, "1 + 2*t + t^3", 4);
    CHECK(g.coeff(1) == int_image(2, zz));
    CHECK(g.coeff(3).is_one());
    CHECK(g.coeff(4).is_zero());
    CHECK(g.to_string() == "1 + 2*t + 1*t^3");
    CHECK(parse_series(zz, g.to_string(), 4) == g);
    const RingPtr f4 = RingDescriptor::finite_field(2, 2);
    const TruncatedSeries h = parse_series(f4, "1 + [1,1]*t^2", 2);
    CHECK(h.coeff(2) == parse_element(f4, "1,1"));
    CHECK(h.to_string() == "[1,0] + [1,1]*t^2");
    CHECK(parse_series(f4, h.to_string(), 2) == h);
}
