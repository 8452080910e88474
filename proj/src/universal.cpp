#include "witt/universal.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "witt/profiles.hpp"

namespace witt {

namespace {

std::atomic<long long> g_index_cap{24};

bool is_prime_power(long long n) {
    if (n == 1) return true;
    auto f = factorize(n);
    return f.size() == 1;
}

void check_index_allowed(long long n, const char* what) {
    if (n < 1) throw DomainError(std::string(what) + ": index must be positive");
    const long long cap = g_index_cap.load();
    if (n > cap && !is_prime_power(n))
        throw DomainError(std::string(what) + ": index " + std::to_string(n) +
                          " exceeds the configured cap " + std::to_string(cap));
}

// process-wide memo; concurrent readers, at-most-once storage per key
// (duplicate concurrent computation harmless: results are deterministic)
class UniversalCache {
public:
    enum Tag : int { WittPoly, Sum, Product, Neg, Frobenius, Epsilon, DeltaGhost, DeltaComp };
    using Key = std::tuple<int, long long, long long>;

    template <typename Fn>
    const UPoly& get(Key key, Fn&& compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = entries_.find(key);
            if (it != entries_.end()) return *it->second;
        }
        auto value = std::make_shared<const UPoly>(compute()); // no lock held while computing
        std::unique_lock lock(mutex_);
        auto [it, inserted] = entries_.emplace(key, std::move(value));
        return *it->second;
    }

    static UniversalCache& instance() {
        static UniversalCache cache;
        return cache;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const UPoly>> entries_;
};

UPoly witt_poly_in(UVar::Family family, long long n) {
    UPoly acc;
    for (long long d : divisors_of(n)) {
        UVar v{family, static_cast<std::uint32_t>(d)};
        acc += UPoly::variable(v).pow(static_cast<unsigned long>(n / d)).scaled(mpq_class(mpz_from_ll(d)));
    }
    return acc;
}

UPoly compute_structural(StructuralKind kind, long long n) {
    UPoly target;
    const UPoly wx = witt_poly_in(UVar::Family::X, n);
    switch (kind) {
        case StructuralKind::Sum: target = wx + witt_poly_in(UVar::Family::Y, n); break;
        case StructuralKind::Product: target = wx * witt_poly_in(UVar::Family::Y, n); break;
        case StructuralKind::Neg: target = -wx; break;
    }
    for (long long d : divisors_of(n)) {
        if (d == n) continue;
        target -= structural_poly(kind, d).pow(static_cast<unsigned long>(n / d)).scaled(mpq_class(mpz_from_ll(d)));
    }
    target.divide_by_int(mpz_from_ll(n));
    if (!target.is_integral())
        throw IntegralityViolation("structural polynomial at level " + std::to_string(n) +
                                   " has a non-integer coefficient");
    return target;
}

UPoly compute_frobenius(long long n, long long m) {
    UPoly target = witt_polynomial(n * m);
    for (long long d : divisors_of(m)) {
        if (d == m) continue;
        target -= frobenius_poly(n, d).pow(static_cast<unsigned long>(m / d)).scaled(mpq_class(mpz_from_ll(d)));
    }
    target.divide_by_int(mpz_from_ll(m));
    if (!target.is_integral())
        throw IntegralityViolation("Frobenius component (" + std::to_string(n) + ", " +
                                   std::to_string(m) + ") has a non-integer coefficient");
    return target;
}

bool is_power_of(long long n, long long p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

UPoly compute_epsilon(long long p, long long n) {
    UPoly target;
    if (is_power_of(n, p)) target = witt_polynomial(n); // variables X_{p^r} only
    for (long long d : divisors_of(n)) {
        if (d == n) continue;
        target -= epsilon_poly(p, d).pow(static_cast<unsigned long>(n / d)).scaled(mpq_class(mpz_from_ll(d)));
    }
    target.divide_by_int(mpz_from_ll(n));
    if (!target.is_p_integral(mpz_from_ll(p)))
        throw PIntegralityViolation("epsilon component " + std::to_string(n) + " is not " +
                                    std::to_string(p) + "-integral");
    return target;
}

// j-th ghost component of Delta(X)_n, an element of the rational universal ring
const UPoly& delta_ghost(long long n, long long j) {
    return UniversalCache::instance().get({UniversalCache::DeltaGhost, n, j}, [n, j] {
        UPoly target = witt_polynomial(n * j);
        for (long long d : divisors_of(n)) {
            if (d == n) continue;
            target -= delta_ghost(d, j).pow(static_cast<unsigned long>(n / d)).scaled(mpq_class(mpz_from_ll(d)));
        }
        target.divide_by_int(mpz_from_ll(n));
        return target;
    });
}

const UPoly& delta_component(long long n, long long m) {
    check_index_allowed(n * m, "delta_poly");
    return UniversalCache::instance().get({UniversalCache::DeltaComp, n, m}, [n, m] {
        UPoly target = delta_ghost(n, m);
        for (long long e : divisors_of(m)) {
            if (e == m) continue;
            target -= delta_component(n, e).pow(static_cast<unsigned long>(m / e)).scaled(mpq_class(mpz_from_ll(e)));
        }
        target.divide_by_int(mpz_from_ll(m));
        if (!target.is_integral())
            throw IntegralityViolation("delta component (" + std::to_string(n) + ", " +
                                       std::to_string(m) + ") has a non-integer coefficient");
        return target;
    });
}

} // namespace

const UPoly& witt_polynomial(long long n) {
    if (n < 1) throw DomainError("witt_polynomial: index must be positive");
    return UniversalCache::instance().get({UniversalCache::WittPoly, n, 0},
                                          [n] { return witt_poly_in(UVar::Family::X, n); });
}

const UPoly& structural_poly(StructuralKind kind, long long n) {
    check_index_allowed(n, "structural_poly");
    const int tag = kind == StructuralKind::Sum      ? UniversalCache::Sum
                    : kind == StructuralKind::Product ? UniversalCache::Product
                                                      : UniversalCache::Neg;
    return UniversalCache::instance().get({tag, n, 0}, [kind, n] { return compute_structural(kind, n); });
}

const UPoly& frobenius_poly(long long n, long long m) {
    if (n < 1 || m < 1) throw DomainError("frobenius_poly: indices must be positive");
    check_index_allowed(n * m, "frobenius_poly");
    return UniversalCache::instance().get({UniversalCache::Frobenius, n, m},
                                          [n, m] { return compute_frobenius(n, m); });
}

const UPoly& epsilon_poly(long long p, long long n) {
    if (!is_prime_ll(p)) throw NotPrime("epsilon_poly: " + std::to_string(p) + " is not prime");
    check_index_allowed(n, "epsilon_poly");
    return UniversalCache::instance().get({UniversalCache::Epsilon, p, n},
                                          [p, n] { return compute_epsilon(p, n); });
}

std::vector<UPoly> epsilon_polys(long long p, long long N) {
    if (N < 1) throw DomainError("epsilon_polys: order must be positive");
    std::vector<UPoly> out;
    out.reserve(static_cast<std::size_t>(N));
    for (long long n = 1; n <= N; ++n) out.push_back(epsilon_poly(p, n));
    return out;
}

const UPoly& delta_poly(long long a, long long b, long long n, long long m) {
    if (n < 1 || m < 1 || a < 1 || b < 1) throw DomainError("delta_poly: indices must be positive");
    if (n > a) throw DomainError("delta_poly: outer index exceeds outer level");
    if (m > b) throw DomainError("delta_poly: inner index exceeds inner level");
    return delta_component(n, m);
}

bool assert_integral(const UPoly& poly, Locality locality, const mpz_class& p) {
    if (locality == Locality::Global) return poly.is_integral();
    if (p <= 1) throw DomainError("assert_integral: AtPrime needs a prime");
    return poly.is_p_integral(p);
}

void set_universal_index_cap(long long cap) {
    if (cap < 1) throw DomainError("universal index cap must be positive");
    g_index_cap.store(cap);
}

long long universal_index_cap() { return g_index_cap.load(); }

} // namespace witt
