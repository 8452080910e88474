#include "witt/selfcheck.hpp"

#include <functional>
#include <random>

#include "witt/artin_hasse.hpp"
#include "witt/canonical_maps.hpp"
#include "witt/lambda.hpp"
#include "witt/padic.hpp"
#include "witt/universal.hpp"

namespace witt {

namespace {

struct Suite {
    std::vector<CheckResult> results;

    void check(const std::string& name, const std::function<bool(std::string&)>& fn) {
        CheckResult r{name, false, ""};
        try {
            std::string detail;
            r.passed = fn(detail);
            r.detail = r.passed ? "" : (detail.empty() ? "assertion failed" : detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
};

std::vector<RingPtr> axiom_rings() {
    return {
        RingDescriptor::integers(),
        RingDescriptor::rationals(),
        RingDescriptor::localized_rationals(3),
        RingDescriptor::integers_mod(6),
        RingDescriptor::integers_mod(9),
        RingDescriptor::prime_field(2),
        RingDescriptor::prime_field(3),
        RingDescriptor::finite_field(2, 2),
        RingDescriptor::polynomial_ring(RingDescriptor::integers(), "u"),
    };
}

std::vector<Profile> axiom_profiles() {
    return {Profile::full(8), Profile::p_typical(2, 3), Profile::p_typical(3, 3),
            Profile::p_typical(5, 2)};
}

WittVector random_witt(const RingPtr& ring, const Profile& profile, std::mt19937_64& rng) {
    std::vector<RingElement> comps;
    comps.reserve(profile.size());
    for (std::size_t i = 0; i < profile.size(); ++i) comps.push_back(random_element(ring, rng));
    return WittVector(profile, ring, std::move(comps));
}

} // namespace

// ---------------------------------------------------------------------------
// rings
// ---------------------------------------------------------------------------

std::vector<CheckResult> selfcheck_rings(const SelfcheckOptions& opt) {
    Suite s;
    for (const auto& ring : axiom_rings()) {
        s.check("rings/axioms/" + ring->to_string(), [&](std::string& detail) {
            std::mt19937_64 rng(opt.seed);
            for (long long t = 0; t < opt.trials; ++t) {
                const RingElement a = random_element(ring, rng);
                const RingElement b = random_element(ring, rng);
                const RingElement c = random_element(ring, rng);
                const RingElement zero = RingElement::zero(ring);
                const RingElement one = RingElement::one(ring);
                if ((a + b) + c != a + (b + c)) { detail = "add associativity"; return false; }
                if (a + b != b + a) { detail = "add commutativity"; return false; }
                if ((a * b) * c != a * (b * c)) { detail = "mul associativity"; return false; }
                if (a * b != b * a) { detail = "mul commutativity"; return false; }
                if (a * (b + c) != a * b + a * c) { detail = "distributivity"; return false; }
                if (a + zero != a || a * one != a) { detail = "identities"; return false; }
                if (a + (-a) != zero) { detail = "additive inverse"; return false; }
            }
            return true;
        });
        s.check("rings/int_image_hom/" + ring->to_string(), [&](std::string& detail) {
            std::mt19937_64 rng(opt.seed + 1);
            for (long long t = 0; t < opt.trials; ++t) {
                const long a = static_cast<long>(rng() % 200) - 100;
                const long b = static_cast<long>(rng() % 200) - 100;
                if (int_image(a + b, ring) != int_image(a, ring) + int_image(b, ring)) {
                    detail = "additivity";
                    return false;
                }
                if (int_image(mpz_class(a) * b, ring) != int_image(a, ring) * int_image(b, ring)) {
                    detail = "multiplicativity";
                    return false;
                }
            }
            return true;
        });
    }
    for (const auto& ring :
         {RingDescriptor::prime_field(2), RingDescriptor::prime_field(5),
          RingDescriptor::finite_field(2, 2), RingDescriptor::finite_field(3, 2)}) {
        s.check("rings/pth_root/" + ring->to_string(), [&](std::string& detail) {
            std::mt19937_64 rng(opt.seed + 2);
            const unsigned long p = ring->modulus().get_ui();
            for (long long t = 0; t < opt.trials; ++t) {
                const RingElement a = random_element(ring, rng);
                const RingElement b = random_element(ring, rng);
                if (pth_root(a).pow(p) != a) { detail = "root property"; return false; }
                if (pth_root(a + b) != pth_root(a) + pth_root(b)) {
                    detail = "additivity in characteristic p";
                    return false;
                }
            }
            return pth_root(RingElement::zero(ring)).is_zero();
        });
    }
    s.check("rings/zloc_rejects_1_over_p", [&](std::string& detail) {
        try {
            RingElement(RingDescriptor::localized_rationals(5), mpq_class(1, 5));
        } catch (const NotPIntegral&) {
            return true;
        }
        detail = "construction of 1/p was accepted";
        return false;
    });
    s.check("rings/exact_div_distinguishes_failures", [&](std::string& detail) {
        const RingPtr z4 = RingDescriptor::integers_mod(4);
        try {
            exact_div_int(RingElement::zero(z4), 2);
            detail = "0/2 in Z/4 did not fail";
            return false;
        } catch (const NotUnique&) {
        }
        try {
            exact_div_int(RingElement::one(z4), 2);
            detail = "1/2 in Z/4 did not fail";
            return false;
        } catch (const NotDivisible&) {
        }
        return true;
    });
    return s.results;
}

// ---------------------------------------------------------------------------
// profiles
// ---------------------------------------------------------------------------

std::vector<CheckResult> selfcheck_profiles(const SelfcheckOptions&) {
    Suite s;
    s.check("profiles/full_membership", [](std::string&) {
        const Profile p = Profile::full(12);
        for (long long n = 1; n <= 20; ++n)
            if (p.contains(n) != (n <= 12)) return false;
        return true;
    });
    s.check("profiles/moebius_divisor_sums", [](std::string& detail) {
        for (long long n = 1; n <= 1000; ++n) {
            long long sum = 0;
            for (long long d : divisors_of(n)) sum += moebius(d);
            if (sum != (n == 1 ? 1 : 0)) {
                detail = "divisor sum wrong at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });
    s.check("profiles/validate_idempotent", [](std::string&) {
        const std::vector<long long> idx{1, 2, 3, 4, 6, 12};
        const Profile once = Profile::validate(idx);
        return Profile::validate(once.indices()) == once;
    });
    s.check("profiles/validate_reports_offender", [](std::string& detail) {
        try {
            Profile::validate({1, 4});
        } catch (const NotDivisorStable& e) {
            if (e.divisor() == 2 && e.element() == 4) return true;
            detail = "wrong offending pair";
            return false;
        }
        detail = "no error raised";
        return false;
    });
    return s.results;
}

// ---------------------------------------------------------------------------
// universal polynomials
// ---------------------------------------------------------------------------

namespace {

// substitution map X_d -> component_d for symbolic identity checks
std::vector<std::pair<std::uint64_t, UPoly>> family_substitution(
    long long n, const std::function<const UPoly&(long long)>& component) {
    std::vector<std::pair<std::uint64_t, UPoly>> out;
    for (long long d : divisors_of(n))
        out.emplace_back(UVar::x(static_cast<std::uint32_t>(d)).key(), component(d));
    return out;
}

UPoly witt_poly_in_y(long long n) {
    std::vector<std::pair<std::uint64_t, UPoly>> sub;
    for (long long d : divisors_of(n))
        sub.emplace_back(UVar::x(static_cast<std::uint32_t>(d)).key(),
                         UPoly::variable(UVar::y(static_cast<std::uint32_t>(d))));
    return substitute_upoly(witt_polynomial(n), sub);
}

} // namespace

std::vector<CheckResult> selfcheck_universal(const SelfcheckOptions& opt) {
    Suite s;
    const long long level = opt.universal_level;
    s.check("universal/golden_small_polynomials", [](std::string& detail) {
        const UPoly s1 = UPoly::variable(UVar::x(1)) + UPoly::variable(UVar::y(1));
        if (structural_poly(StructuralKind::Sum, 1) != s1) { detail = "S_1"; return false; }
        const UPoly x1 = UPoly::variable(UVar::x(1));
        const UPoly x2 = UPoly::variable(UVar::x(2));
        const UPoly y1 = UPoly::variable(UVar::y(1));
        const UPoly y2 = UPoly::variable(UVar::y(2));
        if (structural_poly(StructuralKind::Sum, 2) != x2 + y2 - x1 * y1) { detail = "S_2"; return false; }
        if (structural_poly(StructuralKind::Product, 1) != x1 * y1) { detail = "Z_1"; return false; }
        if (structural_poly(StructuralKind::Product, 2) !=
            x1 * x1 * y2 + x2 * y1 * y1 + (x2 * y2).scaled(2)) { detail = "Z_2"; return false; }
        if (structural_poly(StructuralKind::Neg, 1) != -x1) { detail = "I_1"; return false; }
        if (structural_poly(StructuralKind::Neg, 2) != -(x1 * x1) - x2) { detail = "I_2"; return false; }
        const UPoly w6 = UPoly::variable(UVar::x(1)).pow(6) +
                         UPoly::variable(UVar::x(2)).pow(3).scaled(2) +
                         UPoly::variable(UVar::x(3)).pow(2).scaled(3) +
                         UPoly::variable(UVar::x(6)).scaled(6);
        if (witt_polynomial(6) != w6) { detail = "w_6"; return false; }
        return true;
    });
    s.check("universal/ghost_identities_to_" + std::to_string(level), [&](std::string& detail) {
        for (long long n = 1; n <= level; ++n) {
            const UPoly wx = witt_polynomial(n);
            const UPoly wy = witt_poly_in_y(n);
            const UPoly lhs_sum = substitute_upoly(
                wx, family_substitution(n, [](long long d) -> const UPoly& {
                    return structural_poly(StructuralKind::Sum, d);
                }));
            if (lhs_sum != wx + wy) { detail = "sum identity at n = " + std::to_string(n); return false; }
            const UPoly lhs_prod = substitute_upoly(
                wx, family_substitution(n, [](long long d) -> const UPoly& {
                    return structural_poly(StructuralKind::Product, d);
                }));
            if (lhs_prod != wx * wy) { detail = "product identity at n = " + std::to_string(n); return false; }
            const UPoly lhs_neg = substitute_upoly(
                wx, family_substitution(n, [](long long d) -> const UPoly& {
                    return structural_poly(StructuralKind::Neg, d);
                }));
            if (lhs_neg != -wx) { detail = "negation identity at n = " + std::to_string(n); return false; }
        }
        return true;
    });
    s.check("universal/sum_support_divides_level", [&](std::string& detail) {
        for (long long n = 1; n <= level; ++n)
            for (const UVar& v : structural_poly(StructuralKind::Sum, n).support())
                if (n % v.index != 0) {
                    detail = "variable " + v.name() + " in S_" + std::to_string(n);
                    return false;
                }
        return true;
    });
    s.check("universal/frobenius_composition_to_12", [](std::string& detail) {
        for (long long n = 2; n <= 6; ++n)
            for (long long m = 2; m <= 6; ++m) {
                if (n * m > 12) continue;
                for (long long k = 1; n * m * k <= 24; ++k) {
                    std::vector<std::pair<std::uint64_t, UPoly>> sub;
                    for (long long d : divisors_of(n * k))
                        sub.emplace_back(UVar::x(static_cast<std::uint32_t>(d)).key(),
                                         frobenius_poly(m, d));
                    if (substitute_upoly(frobenius_poly(n, k), sub) != frobenius_poly(n * m, k)) {
                        detail = "F_" + std::to_string(n) + " o F_" + std::to_string(m) +
                                 " at component " + std::to_string(k);
                        return false;
                    }
                }
            }
        return true;
    });
    s.check("universal/integrality", [&](std::string& detail) {
        for (long long n = 1; n <= level; ++n) {
            if (!assert_integral(structural_poly(StructuralKind::Sum, n), Locality::Global) ||
                !assert_integral(structural_poly(StructuralKind::Product, n), Locality::Global) ||
                !assert_integral(structural_poly(StructuralKind::Neg, n), Locality::Global)) {
                detail = "structural at n = " + std::to_string(n);
                return false;
            }
        }
        for (long long p : {2LL, 3LL})
            for (long long m = 1; p * m <= level; ++m)
                if (!assert_integral(frobenius_poly(p, m), Locality::Global)) {
                    detail = "frobenius (" + std::to_string(p) + "," + std::to_string(m) + ")";
                    return false;
                }
        for (long long p : {2LL, 3LL, 5LL})
            for (const UPoly& e : epsilon_polys(p, 16))
                if (!assert_integral(e, Locality::AtPrime, mpz_from_ll(p))) {
                    detail = "epsilon at p = " + std::to_string(p);
                    return false;
                }
        return true;
    });
    s.check("universal/cache_transparency", [](std::string&) {
        const UPoly& a = structural_poly(StructuralKind::Sum, 6);
        const UPoly& b = structural_poly(StructuralKind::Sum, 6);
        return &a == &b && a == b;
    });
    return s.results;
}

// ---------------------------------------------------------------------------
// witt core
// ---------------------------------------------------------------------------

std::vector<CheckResult> selfcheck_witt(const SelfcheckOptions& opt) {
    Suite s;
    for (const auto& ring : axiom_rings()) {
        for (const auto& profile : axiom_profiles()) {
            s.check("witt/axioms/" + ring->to_string() + "/" + profile.to_string(),
                    [&](std::string& detail) {
                        std::mt19937_64 rng(opt.seed + 3);
                        for (long long t = 0; t < opt.trials; ++t) {
                            const WittVector x = random_witt(ring, profile, rng);
                            const WittVector y = random_witt(ring, profile, rng);
                            const WittVector z = random_witt(ring, profile, rng);
                            const WittVector zero = witt_zero(ring, profile);
                            const WittVector one = witt_one(ring, profile);
                            const WittVector xy = witt_add(x, y);
                            const WittVector xyp = witt_mul(x, y);
                            if (witt_add(xy, z) != witt_add(x, witt_add(y, z))) {
                                detail = "add associativity"; return false;
                            }
                            if (xy != witt_add(y, x)) { detail = "add commutativity"; return false; }
                            if (witt_mul(xyp, z) != witt_mul(x, witt_mul(y, z))) {
                                detail = "mul associativity"; return false;
                            }
                            if (xyp != witt_mul(y, x)) { detail = "mul commutativity"; return false; }
                            if (witt_mul(x, witt_add(y, z)) != witt_add(xyp, witt_mul(x, z))) {
                                detail = "distributivity"; return false;
                            }
                            if (witt_add(x, zero) != x || witt_mul(x, one) != x) {
                                detail = "identities"; return false;
                            }
                            if (witt_add(x, witt_neg(x)) != zero) { detail = "inverse"; return false; }
                        }
                        return true;
                    });
        }
    }
    for (const auto& ring :
         {RingDescriptor::integers(),
          RingDescriptor::polynomial_ring(RingDescriptor::integers(), "u")}) {
        s.check("witt/ghost_homomorphism/" + ring->to_string(), [&](std::string& detail) {
            std::mt19937_64 rng(opt.seed + 4);
            const Profile profile = Profile::full(8);
            for (long long t = 0; t < opt.trials; ++t) {
                const WittVector x = random_witt(ring, profile, rng);
                const WittVector y = random_witt(ring, profile, rng);
                const GhostVector gx = ghost(x);
                const GhostVector gy = ghost(y);
                const GhostVector gsum = ghost(witt_add(x, y));
                const GhostVector gdiff = ghost(witt_sub(x, y));
                const GhostVector gprod = ghost(witt_mul(x, y));
                for (std::size_t i = 0; i < profile.size(); ++i) {
                    if (gsum.components()[i] != gx.components()[i] + gy.components()[i]) {
                        detail = "sum ghost"; return false;
                    }
                    if (gdiff.components()[i] != gx.components()[i] - gy.components()[i]) {
                        detail = "difference ghost"; return false;
                    }
                    if (gprod.components()[i] != gx.components()[i] * gy.components()[i]) {
                        detail = "product ghost"; return false;
                    }
                }
            }
            return true;
        });
    }

    const RingPtr z6 = RingDescriptor::integers_mod(6);
    const RingPtr zint = RingDescriptor::integers();
    for (const auto& ring : {z6, zint}) {
        s.check("witt/frobenius_verschiebung_identities/" + ring->to_string(),
                [&](std::string& detail) {
                    std::mt19937_64 rng(opt.seed + 5);
                    const long long trials = std::max<long long>(1, opt.trials / 4);
                    for (long long t = 0; t < trials; ++t)
                        for (long long n : {2LL, 3LL}) {
                            const Profile p6 = Profile::full(6);
                            const Profile src = p6.quotient(n);
                            // F_n V_n = n
                            const WittVector x = random_witt(ring, src, rng);
                            if (frobenius(n, verschiebung(n, x, p6)) != int_mul(n, x)) {
                                detail = "F_n V_n = n at n = " + std::to_string(n);
                                return false;
                            }
                            // V_n(F_n(x) y) = x V_n(y)
                            const WittVector xx = random_witt(ring, p6, rng);
                            const WittVector yy = random_witt(ring, src, rng);
                            if (verschiebung(n, witt_mul(frobenius(n, xx), yy), p6) !=
                                witt_mul(xx, verschiebung(n, yy, p6))) {
                                detail = "projection formula at n = " + std::to_string(n);
                                return false;
                            }
                            // (V_n x)^m = n^{m-1} V_n(x^m)
                            for (unsigned long m : {2UL, 3UL}) {
                                mpz_class scale;
                                mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n), m - 1);
                                if (witt_pow(verschiebung(n, x, p6), m) !=
                                    int_mul(scale, verschiebung(n, witt_pow(x, m), p6))) {
                                    detail = "V power rule at n = " + std::to_string(n) +
                                             ", m = " + std::to_string(m);
                                    return false;
                                }
                            }
                        }
                    // F_n F_m = F_nm, V_n V_m = V_nm, commuting for coprime pairs
                    for (long long t = 0; t < trials; ++t) {
                        for (auto [n, m] : {std::pair<long long, long long>{2, 2}, {2, 3}, {3, 2}}) {
                            const Profile p12 = Profile::full(12);
                            const WittVector x = random_witt(ring, p12, rng);
                            if (frobenius(n, frobenius(m, x)) != frobenius(n * m, x)) {
                                detail = "F composition at (" + std::to_string(n) + "," +
                                         std::to_string(m) + ")";
                                return false;
                            }
                        }
                        {
                            const Profile p18 = Profile::full(18);
                            const WittVector x = random_witt(ring, p18, rng);
                            if (frobenius(3, frobenius(3, x)) != frobenius(9, x)) {
                                detail = "F composition at (3,3)";
                                return false;
                            }
                        }
                        {
                            const Profile p12 = Profile::full(12);
                            const Profile p2 = Profile::full(2);
                            const WittVector x = random_witt(ring, p2, rng);
                            if (verschiebung(3, verschiebung(2, x, Profile::full(4)), p12) !=
                                verschiebung(6, x, p12)) {
                                detail = "V composition";
                                return false;
                            }
                        }
                        {
                            // V_3 F_2 = F_2 V_3 on full:6 vectors
                            const Profile p6 = Profile::full(6);
                            const Profile p9 = Profile::full(9);
                            const Profile p18 = Profile::full(18);
                            const WittVector x = random_witt(ring, p6, rng);
                            const WittVector lhs = verschiebung(3, frobenius(2, x), p9);
                            const WittVector rhs = frobenius(2, verschiebung(3, x, p18));
                            if (lhs != rhs) {
                                detail = "V_3 F_2 = F_2 V_3";
                                return false;
                            }
                        }
                    }
                    return true;
                });
    }

    s.check("witt/frobenius_lifts_frobenius_mod_p", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 6);
        const Profile p8 = Profile::full(8);
        for (long long p : {2LL, 3LL}) {
            for (long long t = 0; t < opt.trials / 2; ++t) {
                const WittVector x = random_witt(zint, p8, rng);
                const Profile target = p8.quotient(p);
                const WittVector diff =
                    witt_sub(frobenius(p, x), project(witt_pow(x, static_cast<unsigned long>(p)), target));
                // divisibility by p inside W: divide the ghost, pull back
                const GhostVector g = ghost(diff);
                std::vector<RingElement> halves;
                for (const auto& c : g.components()) halves.push_back(exact_div_int(c, p));
                const WittVector y = unghost(GhostVector(target, zint, std::move(halves)));
                if (int_mul(p, y) != diff) {
                    detail = "p * (diff/p) != diff at p = " + std::to_string(p);
                    return false;
                }
                // componentwise congruence y_m = x_m^p mod p
                const WittVector fx = frobenius(p, x);
                for (long long m : target.indices()) {
                    const RingElement c = fx.component(m) - x.component(m).pow(static_cast<unsigned long>(p));
                    exact_div_int(c, p); // throws if not divisible
                }
            }
        }
        return true;
    });

    s.check("witt/multiplication_by_p_in_char_p", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 7);
        const std::vector<std::pair<RingPtr, long long>> cases = {
            {RingDescriptor::prime_field(2), 2},
            {RingDescriptor::prime_field(3), 3},
            {RingDescriptor::finite_field(2, 2), 2},
        };
        for (const auto& [ring, p] : cases) {
            const Profile profile = Profile::p_typical(p, 3);
            for (long long t = 0; t < opt.trials / 2; ++t) {
                const WittVector x = random_witt(ring, profile, rng);
                std::vector<RingElement> shifted(profile.size(), RingElement::zero(ring));
                for (std::size_t i = 0; i + 1 < profile.size(); ++i)
                    shifted[i + 1] = x.components()[i].pow(static_cast<unsigned long>(p));
                if (int_mul(p, x) != WittVector(profile, ring, std::move(shifted))) {
                    detail = "p*x != shifted powers over " + ring->to_string();
                    return false;
                }
            }
        }
        return true;
    });

    s.check("witt/disjoint_support_addition", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 8);
        const Profile p8 = Profile::full(8);
        for (long long t = 0; t < opt.trials; ++t) {
            std::vector<RingElement> xs, ys;
            for (std::size_t i = 0; i < p8.size(); ++i) {
                const RingElement v = random_element(z6, rng);
                if (rng() & 1) {
                    xs.push_back(v);
                    ys.push_back(RingElement::zero(z6));
                } else {
                    xs.push_back(RingElement::zero(z6));
                    ys.push_back(v);
                }
            }
            const WittVector x(p8, z6, xs), y(p8, z6, ys);
            std::vector<RingElement> expected;
            for (std::size_t i = 0; i < p8.size(); ++i) expected.push_back(xs[i] + ys[i]);
            if (witt_add(x, y) != WittVector(p8, z6, std::move(expected))) {
                detail = "componentwise rule failed";
                return false;
            }
        }
        return true;
    });

    s.check("witt/non_congruence_for_composite_frobenius", [&](std::string& detail) {
        // the mod-6 congruence for F_6 must FAIL for some x; same for F_4 mod 4
        bool found6 = false;
        const Profile p6 = Profile::full(6);
        std::mt19937_64 rng(opt.seed + 9);
        for (long long t = 0; t < 200 && !found6; ++t) {
            const WittVector x = random_witt(z6, p6, rng);
            if (frobenius(6, x).component(1) != x.component(1).pow(6)) found6 = true;
        }
        if (!found6) { detail = "F_6 first component always congruent"; return false; }
        bool found4 = false;
        const RingPtr z4 = RingDescriptor::integers_mod(4);
        const Profile p4 = Profile::full(4);
        for (long long t = 0; t < 200 && !found4; ++t) {
            const WittVector x = random_witt(z4, p4, rng);
            if (frobenius(4, x).component(1) != x.component(1).pow(4)) found4 = true;
        }
        if (!found4) { detail = "F_4 first component always congruent"; return false; }
        return true;
    });

    s.check("witt/teichmuller_multiplicative", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 10);
        const RingPtr z9 = RingDescriptor::integers_mod(9);
        const Profile p6 = Profile::full(6);
        for (long long t = 0; t < opt.trials; ++t) {
            const RingElement a = random_element(z9, rng);
            const WittVector x = random_witt(z9, p6, rng);
            std::vector<RingElement> expected;
            for (std::size_t i = 0; i < p6.size(); ++i)
                expected.push_back(a.pow(static_cast<unsigned long>(p6.indices()[i])) * x.components()[i]);
            if (witt_mul(teichmuller(a, p6), x) != WittVector(p6, z9, std::move(expected))) {
                detail = "[a]x != (a^n x_n)";
                return false;
            }
            const RingElement b = random_element(z9, rng);
            if (witt_mul(teichmuller(a, p6), teichmuller(b, p6)) != teichmuller(a * b, p6)) {
                detail = "[a][b] != [ab]";
                return false;
            }
        }
        return true;
    });

    s.check("witt/projection_ring_homomorphism", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 11);
        const Profile p8 = Profile::full(8);
        const Profile p4 = Profile::full(4);
        for (long long t = 0; t < opt.trials; ++t) {
            const WittVector x = random_witt(z6, p8, rng);
            const WittVector y = random_witt(z6, p8, rng);
            if (project(witt_add(x, y), p4) != witt_add(project(x, p4), project(y, p4))) {
                detail = "projection vs add";
                return false;
            }
            if (project(witt_mul(x, y), p4) != witt_mul(project(x, p4), project(y, p4))) {
                detail = "projection vs mul";
                return false;
            }
            if (project(x, p8) != x) {
                detail = "identity projection";
                return false;
            }
        }
        return true;
    });

    s.check("witt/decompose_reassemble", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 12);
        const Profile p6 = Profile::full(6);
        for (long long t = 0; t < opt.trials; ++t) {
            const WittVector x = random_witt(z6, p6, rng);
            if (reassemble(decompose(x), z6, p6) != x) {
                detail = "sum of V_n[x_n] differs from x";
                return false;
            }
        }
        return true;
    });

    s.check("witt/ghost_bijection_over_q", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 13);
        const RingPtr q = RingDescriptor::rationals();
        const Profile p8 = Profile::full(8);
        for (long long t = 0; t < opt.trials; ++t) {
            const WittVector x = random_witt(q, p8, rng);
            if (unghost(ghost(x)) != x) {
                detail = "round trip failed";
                return false;
            }
        }
        return true;
    });

    s.check("witt/fast_path_matches_universal", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 14);
        for (const auto& ring : {RingDescriptor::rationals(), RingDescriptor::localized_rationals(3)}) {
            const Profile p6 = Profile::full(6);
            for (long long t = 0; t < opt.trials / 2; ++t) {
                const WittVector x = random_witt(ring, p6, rng);
                const WittVector y = random_witt(ring, p6, rng);
                set_ghost_fast_path_enabled(true);
                const WittVector fast_sum = witt_add(x, y);
                const WittVector fast_prod = witt_mul(x, y);
                const WittVector fast_neg = witt_neg(x);
                set_ghost_fast_path_enabled(false);
                const bool ok = witt_add(x, y) == fast_sum && witt_mul(x, y) == fast_prod &&
                                witt_neg(x) == fast_neg;
                set_ghost_fast_path_enabled(true);
                if (!ok) {
                    detail = "fast path diverged over " + ring->to_string();
                    return false;
                }
            }
        }
        return true;
    });
    return s.results;
}

// ---------------------------------------------------------------------------
// lambda
// ---------------------------------------------------------------------------

std::vector<CheckResult> selfcheck_lambda(const SelfcheckOptions& opt) {
    Suite s;
    const long long order = 8;
    const Profile p8 = Profile::full(order);

    for (const auto& ring :
         {RingDescriptor::integers(), RingDescriptor::integers_mod(6), RingDescriptor::prime_field(3),
          RingDescriptor::finite_field(2, 2), RingDescriptor::rationals()}) {
        s.check("lambda/conversion_bijection/" + ring->to_string(), [&](std::string& detail) {
            std::mt19937_64 rng(opt.seed + 20);
            for (long long t = 0; t < opt.trials; ++t) {
                const WittVector x = random_witt(ring, p8, rng);
                if (lambda_to_witt(witt_to_lambda(x)) != x) {
                    detail = "witt -> lambda -> witt differs";
                    return false;
                }
            }
            return true;
        });
    }

    for (const auto& ring : {RingDescriptor::integers_mod(6), RingDescriptor::prime_field(3)}) {
        s.check("lambda/dual_implementation_agreement/" + ring->to_string(),
                [&](std::string& detail) {
                    std::mt19937_64 rng(opt.seed + 21);
                    for (long long t = 0; t < 2 * opt.trials; ++t) {
                        const WittVector x = random_witt(ring, p8, rng);
                        const WittVector y = random_witt(ring, p8, rng);
                        const TruncatedSeries f = witt_to_lambda(x);
                        const TruncatedSeries g = witt_to_lambda(y);
                        if (lambda_to_witt(lambda_witt_add(f, g)) != witt_add(x, y)) {
                            detail = "addition differs";
                            return false;
                        }
                        if (lambda_to_witt(lambda_witt_mul(f, g)) != witt_mul(x, y)) {
                            detail = "multiplication differs";
                            return false;
                        }
                        if (lambda_to_witt(lambda_witt_neg(f)) != witt_neg(x)) {
                            detail = "negation differs";
                            return false;
                        }
                    }
                    return true;
                });
    }

    s.check("lambda/d_operator_ghost_and_additivity", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 22);
        const RingPtr z9 = RingDescriptor::integers_mod(9);
        for (long long t = 0; t < opt.trials; ++t) {
            const WittVector x = random_witt(z9, p8, rng);
            const WittVector y = random_witt(z9, p8, rng);
            const TruncatedSeries f = witt_to_lambda(x);
            const TruncatedSeries g = witt_to_lambda(y);
            const TruncatedSeries df = d_operator(f);
            const GhostVector gx = ghost(x);
            for (long long n = 1; n <= order; ++n)
                if (df.coeff(n) != gx.component(n)) {
                    detail = "D(f_x) != ghost(x)";
                    return false;
                }
            const TruncatedSeries dsum = d_operator(series_mul(f, g));
            const TruncatedSeries dg = d_operator(g);
            for (long long n = 1; n <= order; ++n)
                if (dsum.coeff(n) != df.coeff(n) + dg.coeff(n)) {
                    detail = "D(fg) != D(f) + D(g)";
                    return false;
                }
        }
        return true;
    });

    s.check("lambda/frobenius_verschiebung_through_conversion", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 23);
        const RingPtr z6 = RingDescriptor::integers_mod(6);
        for (long long t = 0; t < opt.trials; ++t)
            for (long long n : {2LL, 3LL}) {
                const Profile src = p8.quotient(n);
                const WittVector x = random_witt(z6, src, rng);
                const TruncatedSeries vf =
                    verschiebung_lambda(n, witt_to_lambda(x), order);
                if (lambda_to_witt(vf) != verschiebung(n, x, p8)) {
                    detail = "V mismatch at n = " + std::to_string(n);
                    return false;
                }
                const WittVector xx = random_witt(z6, p8, rng);
                if (lambda_to_witt(frobenius_lambda(n, witt_to_lambda(xx))) != frobenius(n, xx)) {
                    detail = "F mismatch at n = " + std::to_string(n);
                    return false;
                }
            }
        return true;
    });

    s.check("lambda/frobenius_norm_on_split_products", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 24);
        const RingPtr z6 = RingDescriptor::integers_mod(6);
        for (long long t = 0; t < opt.trials; ++t)
            for (long long n : {2LL, 3LL}) {
                // f = prod (1 - a_i t) -> F_n(f) = prod (1 - a_i^n t)
                std::vector<RingElement> roots;
                for (int i = 0; i < 3; ++i) roots.push_back(random_element(z6, rng));
                TruncatedSeries f = TruncatedSeries::one(z6, order);
                TruncatedSeries expected = TruncatedSeries::one(z6, order / n);
                for (const auto& a : roots) {
                    std::vector<RingElement> lin(static_cast<std::size_t>(order) + 1,
                                                 RingElement::zero(z6));
                    lin[0] = RingElement::one(z6);
                    lin[1] = -a;
                    f = series_mul(f, TruncatedSeries(z6, std::move(lin)));
                    std::vector<RingElement> linn(static_cast<std::size_t>(order / n) + 1,
                                                  RingElement::zero(z6));
                    linn[0] = RingElement::one(z6);
                    linn[1] = -a.pow(static_cast<unsigned long>(n));
                    expected = series_mul(expected, TruncatedSeries(z6, std::move(linn)));
                }
                if (frobenius_lambda(n, f) != expected) {
                    detail = "norm characterization failed at n = " + std::to_string(n);
                    return false;
                }
            }
        return true;
    });
    return s.results;
}

// ---------------------------------------------------------------------------
// artin-hasse
// ---------------------------------------------------------------------------

std::vector<CheckResult> selfcheck_artin_hasse(const SelfcheckOptions& opt) {
    Suite s;
    s.check("artin_hasse/product_expansion_to_32", [](std::string& detail) {
        for (long long p : {2LL, 3LL, 5LL})
            if (hexp_coeffs(p, 32) != hexp_moebius(p, 32)) {
                detail = "expansions differ at p = " + std::to_string(p);
                return false;
            }
        return true;
    });
    s.check("artin_hasse/p_integrality_to_64", [](std::string& detail) {
        for (long long p : {2LL, 3LL, 5LL, 7LL}) {
            // construction already asserts; double-check through the public test
            const AHSeries h = hexp_coeffs(p, 64);
            for (const auto& c : h.coeffs())
                if (mpz_divisible_p(c.get_den().get_mpz_t(), mpz_from_ll(p).get_mpz_t())) {
                    detail = "denominator divisible by p = " + std::to_string(p);
                    return false;
                }
        }
        return true;
    });
    s.check("artin_hasse/epsilon_idempotent_additive", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 30);
        const std::vector<std::pair<long long, RingPtr>> cases = {
            {2, RingDescriptor::localized_rationals(2)},
            {2, RingDescriptor::integers_mod(4)},
            {2, RingDescriptor::finite_field(2, 2)},
            {3, RingDescriptor::prime_field(3)},
            {3, RingDescriptor::localized_rationals(3)},
        };
        for (const auto& [p, ring] : cases) {
            const Profile p8 = Profile::full(8);
            for (long long t = 0; t < opt.trials / 2; ++t) {
                const WittVector x = random_witt(ring, p8, rng);
                const WittVector y = random_witt(ring, p8, rng);
                const WittVector ex = epsilon_p(p, x);
                if (epsilon_p(p, ex) != ex) {
                    detail = "idempotence failed over " + ring->to_string();
                    return false;
                }
                if (epsilon_p(p, witt_add(x, y)) != witt_add(ex, epsilon_p(p, y))) {
                    detail = "additivity failed over " + ring->to_string();
                    return false;
                }
            }
        }
        return true;
    });
    s.check("artin_hasse/iota_section_additive", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 31);
        const std::vector<std::tuple<long long, int, long long, RingPtr>> cases = {
            {2, 3, 8, RingDescriptor::prime_field(2)},
            {2, 2, 6, RingDescriptor::localized_rationals(2)},
            {3, 1, 6, RingDescriptor::prime_field(3)},
            {3, 1, 6, RingDescriptor::localized_rationals(3)},
            {5, 1, 6, RingDescriptor::prime_field(5)},
        };
        for (const auto& [p, r, order, ring] : cases) {
            const Profile ptyp = Profile::p_typical(p, r);
            for (long long t = 0; t < opt.trials / 2; ++t) {
                const WittVector x = random_witt(ring, ptyp, rng);
                const WittVector y = random_witt(ring, ptyp, rng);
                const WittVector ix = iota_p(p, x, order);
                if (project(ix, ptyp) != x) {
                    detail = "not a section over " + ring->to_string();
                    return false;
                }
                if (iota_p(p, witt_add(x, y), order) != witt_add(ix, iota_p(p, y, order))) {
                    detail = "not additive over " + ring->to_string();
                    return false;
                }
            }
            if (!iota_p(p, witt_zero(ring, ptyp), order).is_zero()) {
                detail = "iota(0) != 0";
                return false;
            }
        }
        return true;
    });
    s.check("artin_hasse/iota_ghosts_vanish_off_p_powers", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 32);
        for (long long p : {2LL, 3LL}) {
            const RingPtr ring = RingDescriptor::localized_rationals(mpz_from_ll(p));
            const int r = p == 2 ? 3 : 1;
            const long long order = 8;
            const Profile ptyp = Profile::p_typical(p, r);
            for (long long t = 0; t < opt.trials / 2; ++t) {
                const WittVector x = random_witt(ring, ptyp, rng);
                const WittVector ix = iota_p(p, x, order);
                const GhostVector g = ghost(ix);
                const GhostVector gx = ghost(x);
                for (long long n = 1; n <= order; ++n) {
                    long long rest = n;
                    while (rest % p == 0) rest /= p;
                    if (rest == 1 && ptyp.contains(n)) {
                        if (g.component(n) != gx.component(n)) {
                            detail = "p-power ghost not preserved";
                            return false;
                        }
                    } else if (rest != 1 && !g.component(n).is_zero()) {
                        detail = "ghost at non-p-power index " + std::to_string(n) + " nonzero";
                        return false;
                    }
                }
            }
        }
        return true;
    });
    s.check("artin_hasse/nth_root_p_integrality", [](std::string& detail) {
        const std::vector<std::tuple<long long, long long, long long>> cases = {
            {2, 3, 1}, {3, 2, 1}, {5, 4, 2}, {2, 5, 3}};
        for (const auto& [p, n, m] : cases) {
            std::vector<mpq_class> f(21, mpq_class(0));
            f[0] = 1;
            f[static_cast<std::size_t>(m)] = -1; // 1 - x^m
            const auto g = qseries_fractional_power(f, mpq_class(mpz_class(1), mpz_from_ll(n)));
            for (const auto& c : g)
                if (mpz_divisible_p(c.get_den().get_mpz_t(), mpz_from_ll(p).get_mpz_t())) {
                    detail = "root coefficients not p-integral at p = " + std::to_string(p);
                    return false;
                }
        }
        return true;
    });
    s.check("artin_hasse/hexp_product_orientation_fixture", [](std::string& detail) {
        for (long long p : {2LL, 3LL})
            if (determine_epsilon_product_form(p, p == 2 ? 8 : 9) != epsilon_product_form()) {
                detail = "recorded orientation is not the empirical one at p = " + std::to_string(p);
                return false;
            }
        return true;
    });
    s.check("artin_hasse/epsilon_matches_hexp_product", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 33);
        for (long long p : {2LL, 3LL}) {
            const RingPtr ring = RingDescriptor::localized_rationals(mpz_from_ll(p));
            const Profile p8 = Profile::full(8);
            for (long long t = 0; t < opt.trials / 4; ++t) {
                const WittVector x = random_witt(ring, p8, rng);
                if (epsilon_via_hexp_product(p, x, epsilon_product_form()) != epsilon_p(p, x)) {
                    detail = "universal route and hexp product disagree at p = " + std::to_string(p);
                    return false;
                }
            }
        }
        return true;
    });
    return s.results;
}

// ---------------------------------------------------------------------------
// canonical maps
// ---------------------------------------------------------------------------

std::vector<CheckResult> selfcheck_canonical(const SelfcheckOptions& opt) {
    Suite s;
    s.check("canonical/lift_spec_hypotheses", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 40);
        const FrobeniusLiftSpec specs[] = {FrobeniusLiftSpec::identity_on_integers(),
                                           FrobeniusLiftSpec::power_substitution()};
        for (const auto& spec : specs) {
            for (long long t = 0; t < opt.trials; ++t) {
                const RingElement a = random_element(spec.ring(), rng);
                for (long long p : {2LL, 3LL, 5LL}) {
                    const RingElement diff =
                        spec.sigma(p, a) - a.pow(static_cast<unsigned long>(p));
                    exact_div_int(diff, p); // sigma_p(a) = a^p mod p
                }
                if (spec.sigma(2, spec.sigma(3, a)) != spec.sigma(3, spec.sigma(2, a))) {
                    detail = "sigma_2 and sigma_3 do not commute";
                    return false;
                }
            }
        }
        return true;
    });
    s.check("canonical/phi_ring_homomorphism_with_ghost_sigma", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 41);
        const Profile p6 = Profile::full(6);
        const FrobeniusLiftSpec specs[] = {FrobeniusLiftSpec::identity_on_integers(),
                                           FrobeniusLiftSpec::power_substitution()};
        for (const auto& spec : specs) {
            if (phi(spec, RingElement::one(spec.ring()), p6) != witt_one(spec.ring(), p6)) {
                detail = "phi(1) != 1";
                return false;
            }
            for (long long t = 0; t < opt.trials; ++t) {
                const RingElement a = random_element(spec.ring(), rng);
                const RingElement b = random_element(spec.ring(), rng);
                const WittVector pa = phi(spec, a, p6);
                const WittVector pb = phi(spec, b, p6);
                if (phi(spec, a + b, p6) != witt_add(pa, pb)) {
                    detail = "phi not additive";
                    return false;
                }
                if (phi(spec, a * b, p6) != witt_mul(pa, pb)) {
                    detail = "phi not multiplicative";
                    return false;
                }
                const GhostVector g = ghost(pa);
                for (long long n : p6.indices())
                    if (g.component(n) != spec.sigma(n, a)) {
                        detail = "ghost(phi(a))_n != sigma_n(a)";
                        return false;
                    }
            }
        }
        return true;
    });
    s.check("canonical/delta_identities", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 42);
        const RingPtr zint = RingDescriptor::integers();
        const std::vector<std::pair<long long, long long>> levels = {
            {1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 1}, {2, 3}, {3, 2}};
        for (const auto& [a, b] : levels) {
            const Profile pab = Profile::full(a * b);
            const Profile pa = Profile::full(a);
            const Profile pb = Profile::full(b);
            const long long trials = std::max<long long>(1, opt.trials / 8);
            for (long long t = 0; t < trials; ++t) {
                const WittVector x = random_witt(zint, pab, rng);
                const NestedWittVector y = delta(x, a, b);
                for (long long n = 1; n <= a; ++n)
                    if (nested_outer_ghost(y, n) != project(frobenius(n, x), pb)) {
                        detail = "outer ghost identity at n = " + std::to_string(n);
                        return false;
                    }
                for (long long n = 1; n <= b; ++n)
                    if (nested_apply_inner_ghost(y, n) != project(frobenius(n, x), pa)) {
                        detail = "mapped inner ghost identity at n = " + std::to_string(n);
                        return false;
                    }
            }
        }
        return true;
    });
    s.check("canonical/ghost_exchange_relation", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 43);
        const RingPtr zint = RingDescriptor::integers();
        const Profile p4 = Profile::full(4);
        for (long long t = 0; t < opt.trials / 2; ++t) {
            const WittVector x = random_witt(zint, p4, rng);
            const NestedWittVector y = delta(x, 2, 2);
            for (long long m : {1LL, 2LL})
                for (long long n : {1LL, 2LL}) {
                    const RingElement lhs = ghost(nested_apply_inner_ghost(y, n)).component(m);
                    const RingElement rhs = ghost(nested_outer_ghost(y, m)).component(n);
                    if (lhs != rhs) {
                        detail = "w_m o W(w_n) != w_n o \\hat w_m";
                        return false;
                    }
                }
        }
        return true;
    });
    s.check("canonical/delta_teichmuller_collapses", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 44);
        const RingPtr zint = RingDescriptor::integers();
        for (long long t = 0; t < opt.trials; ++t) {
            const RingElement v = random_element(zint, rng);
            const NestedWittVector y = delta(teichmuller(v, Profile::full(4)), 2, 2);
            if (y.component(1) != teichmuller(v, Profile::full(2))) {
                detail = "first outer component is not the projection";
                return false;
            }
            if (!y.component(2).is_zero()) {
                detail = "higher outer component of a Teichmuller lift is nonzero";
                return false;
            }
        }
        return true;
    });
    return s.results;
}

// ---------------------------------------------------------------------------
// p-adic oracle
// ---------------------------------------------------------------------------

std::vector<CheckResult> selfcheck_padic(const SelfcheckOptions& opt) {
    Suite s;
    s.check("padic/teichmuller_fixed_point_multiplicative", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 50);
        for (long long p : {2LL, 3LL, 5LL}) {
            const RingPtr field = RingDescriptor::prime_field(mpz_from_ll(p));
            for (int precision : {1, 2, 3, 4}) {
                for (long long t = 0; t < opt.trials / 4; ++t) {
                    const RingElement a = random_element(field, rng);
                    const RingElement b = random_element(field, rng);
                    const PAdicTrunc ta = teichmuller_lift(a, precision);
                    mpz_class power;
                    mpz_powm(power.get_mpz_t(), ta.value().get_mpz_t(), mpz_from_ll(p).get_mpz_t(),
                             ta.modulus().get_mpz_t());
                    if (power != ta.value()) {
                        detail = "tau(a)^p != tau(a)";
                        return false;
                    }
                    if (mpz_class((ta.value() - std::get<mpz_class>(a.payload())) % mpz_from_ll(p)) != 0) {
                        detail = "tau(a) != a mod p";
                        return false;
                    }
                    if (ta * teichmuller_lift(b, precision) != teichmuller_lift(a * b, precision)) {
                        detail = "tau not multiplicative";
                        return false;
                    }
                }
            }
        }
        return true;
    });
    s.check("padic/witt_to_padic_bijective_small", [](std::string& detail) {
        const RingPtr f2 = RingDescriptor::prime_field(2);
        const Profile ptyp = Profile::p_typical(2, 2);
        std::vector<bool> seen(8, false);
        for (int v = 0; v < 8; ++v) {
            std::vector<RingElement> comps;
            for (int i = 0; i < 3; ++i) comps.push_back(int_image((v >> i) & 1, f2));
            const PAdicTrunc image = witt_to_padic(WittVector(ptyp, f2, std::move(comps)));
            const std::size_t idx = static_cast<std::size_t>(image.value().get_ui());
            if (seen[idx]) {
                detail = "collision at residue " + image.to_string();
                return false;
            }
            seen[idx] = true;
        }
        return true;
    });
    s.check("padic/oracle_exhaustive", [](std::string& detail) {
        for (const auto& [p, len] : std::vector<std::pair<long long, int>>{{2, 3}, {3, 2}}) {
            const OracleReport r = oracle_check(p, len, 0, true, 0);
            if (!r.ok) {
                detail = r.counterexample;
                return false;
            }
        }
        return true;
    });
    s.check("padic/oracle_randomized", [&](std::string& detail) {
        for (const auto& [p, len] :
             std::vector<std::pair<long long, int>>{{2, 4}, {3, 3}, {5, 3}}) {
            const OracleReport r = oracle_check(p, len, 500, false, opt.seed + 51);
            if (!r.ok) {
                detail = r.counterexample;
                return false;
            }
        }
        return true;
    });
    s.check("padic/frobenius_compatibility", [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 52);
        for (long long p : {2LL, 3LL}) {
            const RingPtr field = RingDescriptor::prime_field(mpz_from_ll(p));
            const Profile ptyp = Profile::p_typical(p, 3);
            for (long long t = 0; t < opt.trials / 2; ++t) {
                const WittVector x = random_witt(field, ptyp, rng);
                if (witt_to_padic(frobenius(p, x)) !=
                    witt_to_padic(project(x, Profile::p_typical(p, 2)))) {
                    detail = "digitwise Frobenius image mismatch";
                    return false;
                }
            }
        }
        return true;
    });
    return s.results;
}

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opt) {
    std::vector<CheckResult> all;
    for (auto* suite : {&selfcheck_rings, &selfcheck_profiles, &selfcheck_universal, &selfcheck_witt,
                        &selfcheck_lambda, &selfcheck_artin_hasse, &selfcheck_canonical,
                        &selfcheck_padic}) {
        auto results = (*suite)(opt);
        all.insert(all.end(), results.begin(), results.end());
    }
    return all;
}

} // namespace witt
