#include "witt/artin_hasse.hpp"

#include "witt/lambda.hpp"

namespace witt {

namespace {

void require_p_integral(const std::vector<mpq_class>& c, long long p, const char* what) {
    const mpz_class pz = mpz_from_ll(p);
    for (const auto& q : c)
        if (mpz_divisible_p(q.get_den().get_mpz_t(), pz.get_mpz_t()))
            throw PIntegralityViolation(std::string(what) + ": coefficient " + q.get_str() +
                                        " is not " + std::to_string(p) + "-integral");
}

std::vector<std::pair<std::uint64_t, RingElement>> p_power_assignment(long long p,
                                                                      const WittVector& x) {
    std::vector<std::pair<std::uint64_t, RingElement>> a;
    for (long long q = 1; q <= x.profile().max_index(); q *= p) {
        if (x.profile().contains(q))
            a.emplace_back(UVar::x(static_cast<std::uint32_t>(q)).key(), x.component(q));
        if (q > x.profile().max_index() / p) break;
    }
    return a;
}

} // namespace

AHSeries::AHSeries(long long p, std::vector<mpq_class> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
    if (!is_prime_ll(p_)) throw NotPrime("AHSeries: " + std::to_string(p_) + " is not prime");
    if (coeffs_.empty() || coeffs_[0] != 1)
        throw DomainError("AHSeries: constant term must be 1");
    require_p_integral(coeffs_, p_, "AHSeries");
}

std::vector<mpq_class> qseries_mul(const std::vector<mpq_class>& a,
                                   const std::vector<mpq_class>& b, std::size_t order) {
    std::vector<mpq_class> c(order + 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

std::vector<mpq_class> qseries_exp(const std::vector<mpq_class>& u) {
    if (u.empty() || u[0] != 0) throw DomainError("qseries_exp: constant term must be 0");
    const std::size_t n = u.size() - 1;
    std::vector<mpq_class> e(n + 1, mpq_class(0));
    e[0] = 1;
    // E' = u'E:  m e_m = sum_{k=1..m} k u_k e_{m-k}
    for (std::size_t m = 1; m <= n; ++m) {
        mpq_class acc = 0;
        for (std::size_t k = 1; k <= m; ++k)
            if (u[k] != 0) acc += mpq_class(k) * u[k] * e[m - k];
        e[m] = acc / mpq_class(m);
    }
    return e;
}

std::vector<mpq_class> qseries_log(const std::vector<mpq_class>& f) {
    if (f.empty() || f[0] != 1) throw DomainError("qseries_log: constant term must be 1");
    const std::size_t n = f.size() - 1;
    std::vector<mpq_class> l(n + 1, mpq_class(0));
    // L'f = f':  m f_m = sum_{k=1..m} k l_k f_{m-k}
    for (std::size_t m = 1; m <= n; ++m) {
        mpq_class acc = mpq_class(m) * f[m];
        for (std::size_t k = 1; k < m; ++k)
            if (l[k] != 0) acc -= mpq_class(k) * l[k] * f[m - k];
        l[m] = acc / mpq_class(m);
    }
    return l;
}

std::vector<mpq_class> qseries_fractional_power(const std::vector<mpq_class>& f,
                                                const mpq_class& e) {
    std::vector<mpq_class> l = qseries_log(f);
    for (auto& c : l) c *= e;
    return qseries_exp(l);
}

AHSeries hexp_coeffs(long long p, long long order) {
    if (!is_prime_ll(p)) throw NotPrime("hexp_coeffs: " + std::to_string(p) + " is not prime");
    if (order < 1) throw DomainError("hexp_coeffs: order must be >= 1");
    std::vector<mpq_class> u(static_cast<std::size_t>(order) + 1, mpq_class(0));
    mpz_class power = 1; // p^i
    for (long long q = 1; q <= order; q *= p) {
        u[static_cast<std::size_t>(q)] = mpq_class(mpz_class(1), power);
        power *= mpz_from_ll(p);
        if (q > order / p) break;
    }
    std::vector<mpq_class> e = qseries_exp(u);
    require_p_integral(e, p, "hexp_coeffs"); // the integrality theorem, asserted
    return AHSeries(p, std::move(e));
}

AHSeries hexp_moebius(long long p, long long order) {
    if (!is_prime_ll(p)) throw NotPrime("hexp_moebius: " + std::to_string(p) + " is not prime");
    if (order < 1) throw DomainError("hexp_moebius: order must be >= 1");
    const std::size_t n = static_cast<std::size_t>(order);
    std::vector<mpq_class> acc(n + 1, mpq_class(0));
    acc[0] = 1;
    for (long long k = 1; k <= order; ++k) {
        if (k % p == 0) continue;
        const int mu = moebius(k);
        if (mu == 0) continue;
        std::vector<mpq_class> f(n + 1, mpq_class(0));
        f[0] = 1;
        f[static_cast<std::size_t>(k)] = -1; // 1 - x^k
        acc = qseries_mul(acc, qseries_fractional_power(f, mpq_class(mpz_class(-mu), mpz_from_ll(k))), n);
    }
    return AHSeries(p, std::move(acc));
}

WittVector epsilon_p(long long p, const WittVector& x) {
    if (!is_prime_ll(p)) throw NotPrime("epsilon_p: " + std::to_string(p) + " is not prime");
    if (!x.ring()->is_zp_algebra(mpz_from_ll(p)))
        throw UnsupportedRing("epsilon_p needs a Z_(" + std::to_string(p) + ")-algebra, got " +
                              x.ring()->to_string());
    const Profile& P = x.profile();
    if (P.size() != static_cast<std::size_t>(P.max_index()))
        throw ProfileMismatch("epsilon_p: needs a full profile, got " + P.to_string());
    const auto assignment = p_power_assignment(p, x);
    std::vector<RingElement> comps;
    comps.reserve(P.size());
    for (long long m : P.indices())
        comps.push_back(evaluate_upoly(epsilon_poly(p, m), x.ring(), assignment));
    return WittVector(P, x.ring(), std::move(comps));
}

WittVector iota_p(long long p, const WittVector& x, long long target_order) {
    if (!is_prime_ll(p)) throw NotPrime("iota_p: " + std::to_string(p) + " is not prime");
    // the source must be p-typical
    long long q = 1;
    for (long long idx : x.profile().indices()) {
        if (idx != q)
            throw ProfileMismatch("iota_p: source must be a p-typical profile, got " +
                                  x.profile().to_string());
        q *= p;
    }
    if (target_order < x.profile().max_index())
        throw DomainError("iota_p: target order must reach the top p-power index");
    // the source must carry every p-power index of the target, or the zero
    // extension destroys additivity at index p^{r+1}
    if (target_order >= x.profile().max_index() * p)
        throw DomainError("iota_p: target order " + std::to_string(target_order) +
                          " reaches p^" + std::to_string(x.profile().size()) +
                          "; extend the source to ptyp:" + std::to_string(p) + ":" +
                          std::to_string(x.profile().size()));
    const Profile full = Profile::full(target_order);
    std::vector<RingElement> comps;
    comps.reserve(full.size());
    for (long long m : full.indices()) {
        if (x.profile().contains(m)) comps.push_back(x.component(m));
        else comps.push_back(RingElement::zero(x.ring()));
    }
    return epsilon_p(p, WittVector(full, x.ring(), std::move(comps)));
}

EpsilonProductForm epsilon_product_form() { return EpsilonProductForm::ReciprocalFromR0; }

WittVector epsilon_via_hexp_product(long long p, const WittVector& x, EpsilonProductForm form) {
    const Profile& P = x.profile();
    if (P.size() != static_cast<std::size_t>(P.max_index()))
        throw ProfileMismatch("epsilon_via_hexp_product: needs a full profile");
    const long long n = P.max_index();
    const RingPtr& ring = x.ring();
    const bool reciprocal = form == EpsilonProductForm::ReciprocalFromR0 ||
                            form == EpsilonProductForm::ReciprocalFromR1;
    const long long r_start = (form == EpsilonProductForm::DirectFromR0 ||
                               form == EpsilonProductForm::ReciprocalFromR0)
                                  ? 0
                                  : 1;
    const AHSeries h = hexp_coeffs(p, n);
    TruncatedSeries acc = TruncatedSeries::one(ring, n);
    long long power = 1, r = 0;
    for (; power <= n; power *= p, ++r) {
        if (r >= r_start) {
            // hexp(x_{p^r} t^{p^r}) truncated at t^n
            std::vector<RingElement> c(static_cast<std::size_t>(n) + 1, RingElement::zero(ring));
            for (long long j = 0; j * power <= n; ++j)
                c[static_cast<std::size_t>(j * power)] =
                    rational_image(h.coeff(j), ring) * x.component(power).pow(static_cast<unsigned long>(j));
            TruncatedSeries factor(ring, std::move(c));
            if (reciprocal) factor = series_recip(factor);
            acc = series_mul(acc, factor);
        }
        if (power > n / p) break;
    }
    return lambda_to_witt(acc);
}

EpsilonProductForm determine_epsilon_product_form(long long p, long long order) {
    const RingPtr ring = RingDescriptor::rationals();
    const Profile full = Profile::full(order);
    std::mt19937_64 rng(20070101);
    std::vector<RingElement> comps;
    comps.reserve(full.size());
    for (std::size_t i = 0; i < full.size(); ++i) comps.push_back(random_element(ring, rng));
    const WittVector x(full, ring, std::move(comps));

    // reference straight from the ghost specification, over Q where the ghost
    // map is bijective: keep p-power ghosts, kill the rest
    const GhostVector gx = ghost(x);
    std::vector<RingElement> gc;
    gc.reserve(full.size());
    for (long long m : full.indices()) {
        long long rest = m;
        while (rest % p == 0) rest /= p;
        gc.push_back(rest == 1 ? gx.component(m) : RingElement::zero(ring));
    }
    const WittVector reference = unghost(GhostVector(full, ring, std::move(gc)));

    const EpsilonProductForm forms[] = {
        EpsilonProductForm::DirectFromR1, EpsilonProductForm::DirectFromR0,
        EpsilonProductForm::ReciprocalFromR1, EpsilonProductForm::ReciprocalFromR0};
    bool found = false;
    EpsilonProductForm match{};
    for (EpsilonProductForm f : forms) {
        if (epsilon_via_hexp_product(p, x, f) == reference) {
            if (found) throw DomainError("epsilon product orientation is not unique");
            match = f;
            found = true;
        }
    }
    if (!found) throw DomainError("no epsilon product orientation matches");
    return match;
}

} // namespace witt
