#ifndef WITT_ARTIN_HASSE_HPP
#define WITT_ARTIN_HASSE_HPP

#include "witt/witt_vector.hpp"

namespace witt {

/// Truncated series with exact rational, p-integral coefficients and
/// constant term 1 (checked at construction).
class AHSeries {
public:
    AHSeries(long long p, std::vector<mpq_class> coeffs);

    long long p() const { return p_; }
    long long order() const { return static_cast<long long>(coeffs_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    const mpq_class& coeff(long long i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    bool operator==(const AHSeries& other) const {
        return p_ == other.p_ && coeffs_ == other.coeffs_;
    }

private:
    long long p_;
    std::vector<mpq_class> coeffs_;
};

// exact rational truncated-series helpers (dense, index = power of x)
std::vector<mpq_class> qseries_mul(const std::vector<mpq_class>& a,
                                   const std::vector<mpq_class>& b, std::size_t order);
std::vector<mpq_class> qseries_exp(const std::vector<mpq_class>& u); // u_0 = 0
std::vector<mpq_class> qseries_log(const std::vector<mpq_class>& f); // f_0 = 1
// f^e = exp(e log f), f_0 = 1
std::vector<mpq_class> qseries_fractional_power(const std::vector<mpq_class>& f,
                                                const mpq_class& e);

/// exp(x + x^p/p + x^{p^2}/p^2 + ...) mod x^{N+1}.
AHSeries hexp_coeffs(long long p, long long order);

/// prod_{n <= N, p not| n} (1 - x^n)^{-mu(n)/n} mod x^{N+1}.
AHSeries hexp_moebius(long long p, long long order);

/// Evaluates the epsilon_p component polynomials at the p-power components of
/// x.  The ring must be a Z_(p)-algebra: Z_(p), Z/p^k, F_p or F_{p^k}.
WittVector epsilon_p(long long p, const WittVector& x);

/// Section of the projection W -> W_p: embeds x at p-power indices and applies
/// epsilon_p; additive, and ghosts vanish away from p-power indices.
WittVector iota_p(long long p, const WittVector& x, long long target_order);

/// Orientation of the hexp product that reproduces the ghost specification of
/// epsilon_p; determined empirically (see determine_epsilon_product_form).
enum class EpsilonProductForm {
    DirectFromR1,     // prod_{r>=1} hexp(x_{p^r} t^{p^r})
    DirectFromR0,     // prod_{r>=0} hexp(x_{p^r} t^{p^r})
    ReciprocalFromR1, // prod_{r>=1} hexp(x_{p^r} t^{p^r})^{-1}
    ReciprocalFromR0, // prod_{r>=0} hexp(x_{p^r} t^{p^r})^{-1}
};

/// The recorded form: ReciprocalFromR0.
EpsilonProductForm epsilon_product_form();

/// epsilon_p computed through the hexp product in the given orientation;
/// ring must host p-integral rationals (Q or Z_(p)).  Used as a cross-check
/// of the universal-polynomial route.
WittVector epsilon_via_hexp_product(long long p, const WittVector& x, EpsilonProductForm form);

/// Tries all four orientations against the universal-polynomial epsilon_p on
/// a generic test vector and returns the unique match.
EpsilonProductForm determine_epsilon_product_form(long long p, long long order);

} // namespace witt

#endif
