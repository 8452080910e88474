#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/rings.hpp"

using namespace witt;

namespace {

RingElement make_int(long v) { return int_image(v, RingDescriptor::integers()); }

} // namespace

TEST_CASE("int_image basics") {
    const auto rings = {RingDescriptor::integers(),      RingDescriptor::rationals(),
                        RingDescriptor::integers_mod(6), RingDescriptor::prime_field(5),
                        RingDescriptor::finite_field(2, 2),
                        RingDescriptor::polynomial_ring(RingDescriptor::integers(), "u")};
    for (const auto& ring : rings) {
        CHECK(int_image(0, ring).is_zero());
        CHECK(int_image(1, ring).is_one());
    }
    CHECK(int_image(5, RingDescriptor::integers_mod(3)) ==
          int_image(2, RingDescriptor::integers_mod(3)));
    // 7 lands in the prime subfield of F_4
    CHECK(int_image(7, RingDescriptor::finite_field(2, 2)).is_one());
}

TEST_CASE("int_image is a ring homomorphism") {
    std::mt19937_64 rng(7);
    const auto rings = {RingDescriptor::integers_mod(12), RingDescriptor::prime_field(7),
                        RingDescriptor::finite_field(3, 2), RingDescriptor::rationals()};
    for (const auto& ring : rings) {
        for (int t = 0; t < 100; ++t) {
            const long a = static_cast<long>(rng() % 200) - 100;
            const long b = static_cast<long>(rng() % 200) - 100;
            CHECK(int_image(a + b, ring) == int_image(a, ring) + int_image(b, ring));
            CHECK(int_image(mpz_class(a) * b, ring) == int_image(a, ring) * int_image(b, ring));
        }
    }
}

TEST_CASE("exact_div_int over the integers") {
    CHECK(exact_div_int(make_int(6), 3) == make_int(2));
    CHECK_THROWS_AS(exact_div_int(make_int(3), 2), NotDivisible);
    CHECK_THROWS_AS(exact_div_int(make_int(3), 0), DomainError);
}

TEST_CASE("exact_div_int over Z[u]") {
    const RingPtr zu = RingDescriptor::polynomial_ring(RingDescriptor::integers(), "u");
    const RingElement two_u_plus_4 = parse_element(zu, "4,2");
    CHECK(exact_div_int(two_u_plus_4, 2) == parse_element(zu, "2,1")); // u + 2
    CHECK_THROWS_AS(exact_div_int(parse_element(zu, "1,2"), 2), NotDivisible);
}

TEST_CASE("exact_div_int ambiguity in torsion rings") {
    const RingPtr z4 = RingDescriptor::integers_mod(4);
    CHECK_THROWS_AS(exact_div_int(RingElement::zero(z4), 2), NotUnique);
    CHECK_THROWS_AS(exact_div_int(RingElement::one(z4), 2), NotDivisible);
    // gcd(3, 4) = 1: uniquely divisible
    CHECK(exact_div_int(int_image(1, z4), 3) == int_image(3, z4));
    const RingPtr f5 = RingDescriptor::prime_field(5);
    CHECK_THROWS_AS(exact_div_int(RingElement::zero(f5), 5), NotUnique);
    CHECK_THROWS_AS(exact_div_int(RingElement::one(f5), 5), NotDivisible);
}

TEST_CASE("exact_div_int in localized rationals") {
    const RingPtr z2 = RingDescriptor::localized_rationals(2);
    const RingElement x = RingElement(z2, mpq_class(6));
    CHECK(exact_div_int(x, 3) == RingElement(z2, mpq_class(2)));
    CHECK(exact_div_int(x, 2) == RingElement(z2, mpq_class(3)));
    CHECK_THROWS_AS(exact_div_int(RingElement(z2, mpq_class(1)), 2), NotDivisible);
}

TEST_CASE("pth_root") {
    const RingPtr f7 = RingDescriptor::prime_field(7);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const RingElement a = random_element(f7, rng);
        CHECK(pth_root(a) == a);
    }
    // F_4 with modulus g^2 + g + 1: sqrt(g) = g + 1
    const RingPtr f4 = RingDescriptor::finite_field(2, 2, {1, 1, 1});
    const RingElement g = parse_element(f4, "0,1");
    CHECK(pth_root(g) == parse_element(f4, "1,1"));
    CHECK(pth_root(RingElement::zero(f4)).is_zero());
    for (int t = 0; t < 50; ++t) {
        const RingElement a = random_element(f4, rng);
        const RingElement b = random_element(f4, rng);
        CHECK(pth_root(a).pow(2UL) == a);
        CHECK(pth_root(a + b) == pth_root(a) + pth_root(b));
    }
    CHECK_THROWS_AS(pth_root(make_int(4)), UnsupportedRing);
}

TEST_CASE("localized rationals reject denominators divisible by p") {
    const RingPtr z5 = RingDescriptor::localized_rationals(5);
    CHECK_THROWS_AS(RingElement(z5, mpq_class(1, 5)), NotPIntegral);
    CHECK_THROWS_AS(RingElement(z5, mpq_class(3, 10)), NotPIntegral);
    CHECK_NOTHROW(RingElement(z5, mpq_class(5, 3)));
    CHECK_THROWS_AS(parse_element(z5, "1/5"), NotPIntegral);
}

TEST_CASE("fractions stored reduced with structural equality") {
    const RingPtr q = RingDescriptor::rationals();
    CHECK(RingElement(q, mpq_class(2, 6)) == RingElement(q, mpq_class(1, 3)));
    CHECK(parse_element(q, "4/6").to_string() == "2/3");
    CHECK(parse_element(q, "-4/2").to_string() == "-2");
}

TEST_CASE("finite field construction checks") {
    // x^2 + x = x(x+1) is reducible
    CHECK_THROWS_AS(RingDescriptor::finite_field(2, 2, {0, 1, 1}), DomainError);
    CHECK_THROWS_AS(RingDescriptor::finite_field(2, 2, {1, 1}), DomainError);
    CHECK_THROWS_AS(RingDescriptor::finite_field(4, 2), NotPrime);
    const RingPtr f8 = RingDescriptor::finite_field(2, 3);
    CHECK(f8->irreducibility_verified());
    CHECK(f8->field_modulus() == std::vector<mpz_class>{1, 1, 0, 1}); // x^3 + x + 1
    const RingPtr f4 = RingDescriptor::finite_field(2, 2);
    CHECK(f4->field_modulus() == std::vector<mpz_class>{1, 1, 1});
    // degree 5: accepted but flagged unverified
    const RingPtr f32 = RingDescriptor::finite_field(2, 5, {1, 0, 1, 0, 0, 1});
    CHECK_FALSE(f32->irreducibility_verified());
}

TEST_CASE("modular residues are canonical") {
    const RingPtr z7 = RingDescriptor::integers_mod(7);
    CHECK(RingElement(z7, mpz_class(-1)) == int_image(6, z7));
    CHECK(int_image(-15, z7).to_string() == "6");
    CHECK_THROWS_AS(RingDescriptor::integers_mod(1), DomainError);
}

TEST_CASE("ring axioms randomized") {
    std::mt19937_64 rng(42);
    const auto rings = {RingDescriptor::integers(),
                        RingDescriptor::rationals(),
                        RingDescriptor::localized_rationals(3),
                        RingDescriptor::integers_mod(6),
                        RingDescriptor::integers_mod(9),
                        RingDescriptor::prime_field(2),
                        RingDescriptor::prime_field(3),
                        RingDescriptor::finite_field(2, 2),
                        RingDescriptor::polynomial_ring(RingDescriptor::integers(), "u")};
    for (const auto& ring : rings) {
        for (int t = 0; t < 100; ++t) {
            const RingElement a = random_element(ring, rng);
            const RingElement b = random_element(ring, rng);
            const RingElement c = random_element(ring, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + RingElement::zero(ring) == a);
            CHECK(a * RingElement::one(ring) == a);
            CHECK((a + (-a)).is_zero());
        }
    }
}

TEST_CASE("descriptor text round trips") {
    for (const std::string text :
         {"int", "rat", "zloc:3", "zmod:12", "gf:7", "gf:2^3:1,1,0,1", "poly:int:u",
          "poly:gf:5:x", "poly:poly:int:u:v"}) {
        const RingPtr ring = RingDescriptor::parse(text);
        CHECK(ring->to_string() == text);
        CHECK(*RingDescriptor::parse(ring->to_string()) == *ring);
    }
    CHECK_THROWS_AS(RingDescriptor::parse("celestial"), witt::ParseError);
    CHECK_THROWS_AS(RingDescriptor::parse("zmod:x"), witt::ParseError);
    CHECK_THROWS_AS(RingDescriptor::parse("int:extra"), witt::ParseError);
}

TEST_CASE("element text round trips") {
    const RingPtr zu = RingDescriptor::polynomial_ring(RingDescriptor::integers(), "u");
    CHECK(parse_element(zu, "0").is_zero());
    CHECK(parse_element(zu, "2,1").to_string() == "2,1");
    CHECK(parse_element(zu, "2,1,0").to_string() == "2,1"); // trailing zeros trimmed
    const RingPtr zuv = RingDescriptor::polynomial_ring(zu, "v");
    const RingElement nested = parse_element(zuv, "[1,2],[0,1]");
    CHECK(nested.to_string() == "[1,2],[0,1]");
    const RingPtr f9 = RingDescriptor::finite_field(3, 2);
    CHECK(parse_element(f9, "2,1").to_string() == "2,1");
    CHECK(parse_element(f9, "2").to_string() == "2,0"); // padded to full degree
    CHECK(int_image(4, f9).to_string() == "1,0");
}

TEST_CASE("polynomial ring nesting is capped at depth 2") {
    const RingPtr zu = RingDescriptor::polynomial_ring(RingDescriptor::integers(), "u");
    const RingPtr zuv = RingDescriptor::polynomial_ring(zu, "v");
    CHECK_THROWS_AS(RingDescriptor::polynomial_ring(zuv, "w"), DomainError);
    CHECK(zuv->polynomial_depth() == 2);
    CHECK(zuv->characteristic() == 0);
    CHECK(RingDescriptor::finite_field(3, 2)->characteristic() == 3);
}

TEST_CASE("is_zp_algebra matches the declared list") {
    CHECK(RingDescriptor::localized_rationals(2)->is_zp_algebra(2));
    CHECK(RingDescriptor::integers_mod(8)->is_zp_algebra(2));
    CHECK_FALSE(RingDescriptor::integers_mod(6)->is_zp_algebra(2));
    CHECK(RingDescriptor::prime_field(3)->is_zp_algebra(3));
    CHECK(RingDescriptor::finite_field(3, 2)->is_zp_algebra(3));
    CHECK_FALSE(RingDescriptor::rationals()->is_zp_algebra(3));
    CHECK_FALSE(RingDescriptor::localized_rationals(3)->is_zp_algebra(2));
}
