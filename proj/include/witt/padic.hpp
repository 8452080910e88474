#ifndef WITT_PADIC_HPP
#define WITT_PADIC_HPP

#include <cstdint>

#include "witt/witt_vector.hpp"

namespace witt {

/// Residue arithmetic mod p^K: the independent model of Z_p used to validate
/// the strict-p-ring isomorphism.  Deliberately ignorant of Witt machinery.
class PAdicTrunc {
public:
    PAdicTrunc(mpz_class p, int precision, const mpz_class& value);

    const mpz_class& p() const { return p_; }
    int precision() const { return precision_; }
    const mpz_class& value() const { return value_; }
    const mpz_class& modulus() const { return modulus_; }

    friend PAdicTrunc operator+(const PAdicTrunc& a, const PAdicTrunc& b);
    friend PAdicTrunc operator*(const PAdicTrunc& a, const PAdicTrunc& b);
    friend PAdicTrunc operator-(const PAdicTrunc& a, const PAdicTrunc& b);
    bool operator==(const PAdicTrunc& other) const;
    bool operator!=(const PAdicTrunc& other) const { return !(*this == other); }

    std::string to_string() const { return value_.get_str(); }

private:
    mpz_class p_;
    int precision_;
    mpz_class modulus_;
    mpz_class value_;
};

/// tau(a) mod p^K by iterating x -> x^p until stable; satisfies
/// tau(a)^p = tau(a) and tau(a) = a mod p.
PAdicTrunc teichmuller_lift(const RingElement& a, int precision);

/// The isomorphism W_p(F_p) -> Z/p^L on a vector over ptyp:p:L-1:
/// sum tau(x_{p^n}) p^n (p-th roots are the identity on F_p).
PAdicTrunc witt_to_padic(const WittVector& x);

struct OracleReport {
    long long p = 0;
    int length = 0;
    bool exhaustive = false;
    unsigned long long pairs_checked = 0;
    bool ok = true;
    std::string counterexample; // empty when ok
};

/// Compares W_p(F_p) arithmetic against Z/p^L carry arithmetic on `trials`
/// random pairs (or all p^L x p^L pairs when exhaustive).
OracleReport oracle_check(long long p, int length, long long trials, bool exhaustive,
                          std::uint64_t seed);

} // namespace witt

#endif
