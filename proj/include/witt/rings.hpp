#ifndef WITT_RINGS_HPP
#define WITT_RINGS_HPP

#include <gmpxx.h>

#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "witt/errors.hpp"

namespace witt {

enum class RingKind {
    Integers,
    Rationals,
    LocalizedRationals, // Z_(p): rationals with denominator coprime to p
    IntegersMod,        // Z/m
    PrimeField,         // F_p
    FiniteField,        // F_{p^k}, polynomial basis mod a monic irreducible
    PolynomialRing,     // base[var], nesting depth <= 2
};

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

/// Identifies a coefficient ring.  Immutable; share freely between threads.
class RingDescriptor {
public:
    static RingPtr integers();
    static RingPtr rationals();
    static RingPtr localized_rationals(const mpz_class& p);
    static RingPtr integers_mod(const mpz_class& m); // m >= 2
    static RingPtr prime_field(const mpz_class& p);
    // Picks the least monic irreducible of degree k (by coefficient value, low
    // digits first) as the defining polynomial.
    static RingPtr finite_field(const mpz_class& p, unsigned k);
    // modulus = c0,...,ck low-to-high, monic (ck = 1).  Irreducibility is fully
    // verified for k <= 4; larger fields are accepted with the verified flag off.
    static RingPtr finite_field(const mpz_class& p, unsigned k, std::vector<mpz_class> modulus);
    static RingPtr polynomial_ring(RingPtr base, std::string variable);

    RingKind kind() const { return kind_; }
    const mpz_class& modulus() const { return modulus_; } // m, or p for p-based kinds
    unsigned degree() const { return degree_; }
    const std::vector<mpz_class>& field_modulus() const { return field_modulus_; }
    bool irreducibility_verified() const { return irreducibility_verified_; }
    const RingPtr& base() const { return base_; }
    const std::string& variable() const { return variable_; }

    // 0 for Z, Q, Z_(p) and polynomial rings over them; m or p otherwise.
    mpz_class characteristic() const;
    int polynomial_depth() const; // 0 for scalars, 1 for base[u], 2 for base[u][v]
    bool is_zp_algebra(const mpz_class& p) const; // admits p-integral scalars

    bool operator==(const RingDescriptor& other) const;
    bool operator!=(const RingDescriptor& other) const { return !(*this == other); }

    // Text syntax: int, rat, zloc:<p>, zmod:<m>, gf:<p>, gf:<p>^<k>:<c0,...,1>,
    // poly:<base>:<var>.
    std::string to_string() const;
    static RingPtr parse(std::string_view text);

private:
    RingDescriptor() = default;

    RingKind kind_ = RingKind::Integers;
    mpz_class modulus_ = 0;
    unsigned degree_ = 1;
    std::vector<mpz_class> field_modulus_;
    bool irreducibility_verified_ = true;
    RingPtr base_;
    std::string variable_;
};

/// A value in one of the supported rings.  Immutable after construction.
class RingElement {
public:
    // Integers/IntegersMod/PrimeField -> mpz_class (residues canonical in [0,m));
    // Rationals/LocalizedRationals    -> mpq_class (reduced, positive denominator);
    // FiniteField                     -> k residues mod p, low-to-high;
    // PolynomialRing                  -> base coefficients low-to-high, trimmed.
    using Payload = std::variant<mpz_class, mpq_class, std::vector<mpz_class>, std::vector<RingElement>>;

    RingElement() = default; // zero of Integers
    RingElement(RingPtr ring, Payload payload); // normalizes and validates

    static RingElement zero(const RingPtr& ring);
    static RingElement one(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    const Payload& payload() const { return payload_; }

    bool is_zero() const;
    bool is_one() const;

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement operator-() const;
    bool operator==(const RingElement& other) const;
    bool operator!=(const RingElement& other) const { return !(*this == other); }

    RingElement pow(unsigned long e) const;
    RingElement pow(const mpz_class& e) const; // e >= 0

    std::string to_string() const;

private:
    RingPtr ring_;
    Payload payload_ = mpz_class(0);
};

// gmpxx has no long long constructor
inline mpz_class mpz_from_ll(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "needs an LP64 target");
    return mpz_class(static_cast<long>(v));
}

// The unique ring map Z -> A.
RingElement int_image(const mpz_class& n, const RingPtr& ring);
inline RingElement int_image(long long n, const RingPtr& ring) {
    return int_image(mpz_from_ll(n), ring);
}

// y with n*y = x when y exists and is unique; throws NotDivisible / NotUnique.
RingElement exact_div_int(const RingElement& x, const mpz_class& n);
inline RingElement exact_div_int(const RingElement& x, long long n) {
    return exact_div_int(x, mpz_from_ll(n));
}

// Image of a rational scalar a/b; requires b invertible in the ring
// (denominator-1 scalars work everywhere).  Throws NotDivisible/NotUnique.
RingElement rational_image(const mpq_class& q, const RingPtr& ring);

// y with y^p = x, for PrimeField/FiniteField only (x^{p^{k-1}}).
RingElement pth_root(const RingElement& x);

// Small random element, suitable for randomized property trials.
RingElement random_element(const RingPtr& ring, std::mt19937_64& rng);

// Element text syntax: integers decimal; rationals a/b; FiniteField and
// polynomial elements as comma-separated coefficient lists low-to-high
// (nested coefficients bracketed).
RingElement parse_element(const RingPtr& ring, std::string_view text);

// True when the canonical text of this ring's elements can contain commas
// (then vectors of elements are joined with ';' instead of ',').
bool element_text_has_commas(const RingDescriptor& ring);

bool is_probable_prime(const mpz_class& n);

} // namespace witt

#endif
