#ifndef WITT_LAMBDA_HPP
#define WITT_LAMBDA_HPP

#include "witt/witt_vector.hpp"

namespace witt {

/// Power series a_0 + a_1 t + ... + a_N t^N, exact at order N.  Lambda
/// elements have a_0 = 1; raw series with other constant terms appear only as
/// intermediates.
class TruncatedSeries {
public:
    TruncatedSeries(RingPtr ring, std::vector<RingElement> coeffs);

    static TruncatedSeries one(const RingPtr& ring, long long order);

    const RingPtr& ring() const { return ring_; }
    long long order() const { return static_cast<long long>(coeffs_.size()) - 1; }
    const std::vector<RingElement>& coeffs() const { return coeffs_; }
    const RingElement& coeff(long long i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    bool is_lambda_element() const { return coeffs_[0].is_one(); }

    bool operator==(const TruncatedSeries& other) const;
    bool operator!=(const TruncatedSeries& other) const { return !(*this == other); }

    // Syntax: 1 + c1*t + c2*t^2 + ... (coefficients with commas in brackets).
    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<RingElement> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_recip(const TruncatedSeries& f); // needs a_0 = 1

// f_x(t) = prod (1 - x_n t^n) mod t^{N+1}; x must live over a full profile.
TruncatedSeries witt_to_lambda(const WittVector& x);

// Unique Witt coordinates with f = prod (1 - y_n t^n); total for a_0 = 1.
WittVector lambda_to_witt(const TruncatedSeries& f);

// D = -t f' / f; sends f_x to the generating series of ghost components.
// Defined over every ring (no logarithm involved).
TruncatedSeries d_operator(const TruncatedSeries& f);

// Witt addition is series multiplication; negation is the series reciprocal.
TruncatedSeries lambda_witt_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries lambda_witt_neg(const TruncatedSeries& f);

// prod_{d,e} (1 - x_d^{m/d} y_e^{m/e} t^m)^{gcd(d,e)}, m = lcm(d,e).
TruncatedSeries lambda_witt_mul(const TruncatedSeries& f, const TruncatedSeries& g);

// F_n through Witt coordinates; result order floor(N/n).
TruncatedSeries frobenius_lambda(long long n, const TruncatedSeries& f);

// V_n(f)(t) = f(t^n); f must have order floor(target_order/n).
TruncatedSeries verschiebung_lambda(long long n, const TruncatedSeries& f, long long target_order);

TruncatedSeries parse_series(const RingPtr& ring, std::string_view text, long long order);

} // namespace witt

#endif
