#include "witt/lambda.hpp"

#include <numeric>

namespace witt {

namespace {

void require_lambda(const TruncatedSeries& f, const char* where) {
    if (!f.is_lambda_element())
        throw DomainError(std::string(where) + ": series must have constant term 1");
}

void require_full(const Profile& p, const char* where) {
    if (p.size() != static_cast<std::size_t>(p.max_index()))
        throw ProfileMismatch(std::string(where) + ": needs a full profile, got " + p.to_string());
}

// in-place multiply by (1 + c t^n)
void mul_sparse(std::vector<RingElement>& a, const RingElement& c, long long n) {
    if (c.is_zero()) return;
    for (long long i = static_cast<long long>(a.size()) - 1; i >= n; --i)
        a[static_cast<std::size_t>(i)] =
            a[static_cast<std::size_t>(i)] + c * a[static_cast<std::size_t>(i - n)];
}

} // namespace

TruncatedSeries::TruncatedSeries(RingPtr ring, std::vector<RingElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("series needs at least the constant coefficient");
    for (const auto& c : coeffs_)
        if (*c.ring() != *ring_) throw RingMismatch("series coefficient outside the declared ring");
}

TruncatedSeries TruncatedSeries::one(const RingPtr& ring, long long order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    std::vector<RingElement> c(static_cast<std::size_t>(order) + 1, RingElement::zero(ring));
    c[0] = RingElement::one(ring);
    return TruncatedSeries(ring, std::move(c));
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
    return *ring_ == *other.ring_ && coeffs_ == other.coeffs_;
}

std::string TruncatedSeries::to_string() const {
    const bool bracket = element_text_has_commas(*ring_);
    std::string s = coeffs_[0].to_string();
    if (bracket && s.find(',') != std::string::npos) s = '[' + s + ']';
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        std::string c = coeffs_[i].to_string();
        std::string sign = " + ";
        if (!bracket && c.size() > 1 && c[0] == '-') {
            sign = " - ";
            c = c.substr(1);
        }
        if (bracket) c = '[' + c + ']';
        s += sign + c + "*t";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (*f.ring() != *g.ring()) throw RingMismatch("series factors over different rings");
    const long long n = std::min(f.order(), g.order());
    std::vector<RingElement> c(static_cast<std::size_t>(n) + 1, RingElement::zero(f.ring()));
    for (long long i = 0; i <= f.order(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (long long j = 0; i + j <= n && j <= g.order(); ++j)
            c[static_cast<std::size_t>(i + j)] =
                c[static_cast<std::size_t>(i + j)] + f.coeff(i) * g.coeff(j);
    }
    return TruncatedSeries(f.ring(), std::move(c));
}

TruncatedSeries series_recip(const TruncatedSeries& f) {
    require_lambda(f, "series_recip");
    std::vector<RingElement> b(static_cast<std::size_t>(f.order()) + 1, RingElement::zero(f.ring()));
    b[0] = RingElement::one(f.ring());
    for (long long i = 1; i <= f.order(); ++i) {
        RingElement acc = RingElement::zero(f.ring());
        for (long long j = 1; j <= i; ++j)
            acc = acc + f.coeff(j) * b[static_cast<std::size_t>(i - j)];
        b[static_cast<std::size_t>(i)] = -acc;
    }
    return TruncatedSeries(f.ring(), std::move(b));
}

TruncatedSeries witt_to_lambda(const WittVector& x) {
    require_full(x.profile(), "witt_to_lambda");
    const long long n = x.profile().max_index();
    std::vector<RingElement> c(static_cast<std::size_t>(n) + 1, RingElement::zero(x.ring()));
    c[0] = RingElement::one(x.ring());
    for (long long d = 1; d <= n; ++d) mul_sparse(c, -x.component(d), d);
    return TruncatedSeries(x.ring(), std::move(c));
}

WittVector lambda_to_witt(const TruncatedSeries& f) {
    require_lambda(f, "lambda_to_witt");
    const long long n = f.order();
    if (n < 1) throw DomainError("lambda_to_witt: needs order >= 1");
    std::vector<RingElement> g = f.coeffs();
    std::vector<RingElement> y;
    y.reserve(static_cast<std::size_t>(n));
    for (long long d = 1; d <= n; ++d) {
        const RingElement yd = -g[static_cast<std::size_t>(d)];
        y.push_back(yd);
        // divide by (1 - y_d t^d): forward substitution
        for (long long i = d; i <= n; ++i)
            g[static_cast<std::size_t>(i)] =
                g[static_cast<std::size_t>(i)] + yd * g[static_cast<std::size_t>(i - d)];
    }
    return WittVector(Profile::full(n), f.ring(), std::move(y));
}

TruncatedSeries d_operator(const TruncatedSeries& f) {
    require_lambda(f, "d_operator");
    const long long n = f.order();
    const TruncatedSeries r = series_recip(f);
    // h = f' * r, truncated at order n-1; D-coefficient at t^k is -h_{k-1}
    std::vector<RingElement> out(static_cast<std::size_t>(n) + 1, RingElement::zero(f.ring()));
    for (long long k = 1; k <= n; ++k) {
        RingElement acc = RingElement::zero(f.ring());
        for (long long i = 1; i <= k; ++i)
            acc = acc + int_image(i, f.ring()) * f.coeff(i) * r.coeff(k - i);
        out[static_cast<std::size_t>(k)] = -acc;
    }
    return TruncatedSeries(f.ring(), std::move(out));
}

TruncatedSeries lambda_witt_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_lambda(f, "lambda_witt_add");
    require_lambda(g, "lambda_witt_add");
    if (f.order() != g.order()) throw DomainError("lambda_witt_add: orders differ");
    return series_mul(f, g);
}

TruncatedSeries lambda_witt_neg(const TruncatedSeries& f) {
    require_lambda(f, "lambda_witt_neg");
    return series_recip(f);
}

TruncatedSeries lambda_witt_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_lambda(f, "lambda_witt_mul");
    require_lambda(g, "lambda_witt_mul");
    if (f.order() != g.order()) throw DomainError("lambda_witt_mul: orders differ");
    const long long n = f.order();
    const WittVector x = lambda_to_witt(f);
    const WittVector y = lambda_to_witt(g);
    std::vector<RingElement> c(static_cast<std::size_t>(n) + 1, RingElement::zero(f.ring()));
    c[0] = RingElement::one(f.ring());
    for (long long d = 1; d <= n; ++d)
        for (long long e = 1; e <= n; ++e) {
            const long long m = std::lcm(d, e);
            if (m > n) continue;
            const RingElement factor = -(x.component(d).pow(static_cast<unsigned long>(m / d)) *
                                         y.component(e).pow(static_cast<unsigned long>(m / e)));
            const long long times = std::gcd(d, e); // = d*e/m
            for (long long k = 0; k < times; ++k) mul_sparse(c, factor, m);
        }
    return TruncatedSeries(f.ring(), std::move(c));
}

TruncatedSeries frobenius_lambda(long long n, const TruncatedSeries& f) {
    require_lambda(f, "frobenius_lambda");
    return witt_to_lambda(frobenius(n, lambda_to_witt(f)));
}

TruncatedSeries verschiebung_lambda(long long n, const TruncatedSeries& f, long long target_order) {
    require_lambda(f, "verschiebung_lambda");
    if (n < 1) throw DomainError("verschiebung_lambda: n must be positive");
    if (f.order() != target_order / n)
        throw DomainError("verschiebung_lambda: input order must be floor(target/n)");
    std::vector<RingElement> c(static_cast<std::size_t>(target_order) + 1,
                               RingElement::zero(f.ring()));
    for (long long i = 0; i <= f.order(); ++i) c[static_cast<std::size_t>(i * n)] = f.coeff(i);
    return TruncatedSeries(f.ring(), std::move(c));
}

TruncatedSeries parse_series(const RingPtr& ring, std::string_view text, long long order) {
    if (order < 0) throw ParseError("series order must be >= 0");
    std::vector<RingElement> c(static_cast<std::size_t>(order) + 1, RingElement::zero(ring));
    // split into signed terms at top level
    std::string s(text);
    std::size_t pos = 0;
    bool negate = false;
    auto flush_term = [&](std::string term) {
        // trim
        const auto a = term.find_first_not_of(" \t");
        const auto b = term.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty term in series");
        term = term.substr(a, b - a + 1);
        long long power = 0;
        std::string coeff = term;
        if (const auto star = term.rfind("*t"); star != std::string::npos &&
                                                (star + 2 == term.size() || term[star + 2] == '^')) {
            coeff = term.substr(0, star);
            power = (star + 2 == term.size()) ? 1 : std::stoll(term.substr(star + 3));
        } else if (term == "t") {
            coeff = "1";
            power = 1;
        } else if (term.size() > 2 && term.substr(0, 2) == "t^") {
            coeff = "1";
            power = std::stoll(term.substr(2));
        }
        if (power > order) throw ParseError("series term exceeds declared order");
        RingElement v = parse_element(ring, coeff);
        if (negate) v = -v;
        c[static_cast<std::size_t>(power)] = c[static_cast<std::size_t>(power)] + v;
    };
    int depth = 0;
    std::size_t start = 0;
    for (pos = 0; pos < s.size(); ++pos) {
        if (s[pos] == '[') ++depth;
        else if (s[pos] == ']') --depth;
        else if (depth == 0 && (s[pos] == '+' || s[pos] == '-') && pos > start &&
                 s[pos - 1] == ' ') {
            flush_term(s.substr(start, pos - start));
            negate = s[pos] == '-';
            start = pos + 1;
        }
    }
    flush_term(s.substr(start));
    return TruncatedSeries(ring, std::move(c));
}

} // namespace witt
