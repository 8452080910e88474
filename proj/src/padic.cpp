#include "witt/padic.hpp"

namespace witt {

namespace {

mpz_class pow_mod(const mpz_class& base, const mpz_class& e, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

void require_prime_field_vector(const WittVector& x, const char* where) {
    if (x.ring()->kind() != RingKind::PrimeField)
        throw UnsupportedRing(std::string(where) + ": coefficients must live in a prime field");
    long long q = 1;
    const long long p = x.ring()->modulus().get_si();
    for (long long idx : x.profile().indices()) {
        if (idx != q)
            throw ProfileMismatch(std::string(where) + ": profile must be p-typical for p = " +
                                  std::to_string(p));
        q *= p;
    }
}

} // namespace

PAdicTrunc::PAdicTrunc(mpz_class p, int precision, const mpz_class& value)
    : p_(std::move(p)), precision_(precision) {
    if (!is_probable_prime(p_)) throw NotPrime("PAdicTrunc: " + p_.get_str() + " is not prime");
    if (precision_ < 1) throw DomainError("PAdicTrunc: precision must be >= 1");
    mpz_pow_ui(modulus_.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(precision_));
    mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

namespace {

void require_same_padic(const PAdicTrunc& a, const PAdicTrunc& b) {
    if (a.p() != b.p() || a.precision() != b.precision())
        throw DomainError("p-adic operands disagree in p or precision");
}

} // namespace

PAdicTrunc operator+(const PAdicTrunc& a, const PAdicTrunc& b) {
    require_same_padic(a, b);
    return PAdicTrunc(a.p(), a.precision(), a.value() + b.value());
}

PAdicTrunc operator*(const PAdicTrunc& a, const PAdicTrunc& b) {
    require_same_padic(a, b);
    return PAdicTrunc(a.p(), a.precision(), a.value() * b.value());
}

PAdicTrunc operator-(const PAdicTrunc& a, const PAdicTrunc& b) {
    require_same_padic(a, b);
    return PAdicTrunc(a.p(), a.precision(), a.value() - b.value());
}

bool PAdicTrunc::operator==(const PAdicTrunc& other) const {
    return p_ == other.p_ && precision_ == other.precision_ && value_ == other.value_;
}

PAdicTrunc teichmuller_lift(const RingElement& a, int precision) {
    if (a.ring()->kind() != RingKind::PrimeField)
        throw UnsupportedRing("teichmuller_lift: element must live in a prime field");
    const mpz_class& p = a.ring()->modulus();
    mpz_class modulus;
    mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(precision));
    // x -> x^p converges in at most `precision` steps
    mpz_class x = std::get<mpz_class>(a.payload());
    for (int i = 0; i < precision; ++i) {
        const mpz_class next = pow_mod(x, p, modulus);
        if (next == x) break;
        x = next;
    }
    return PAdicTrunc(p, precision, x);
}

PAdicTrunc witt_to_padic(const WittVector& x) {
    require_prime_field_vector(x, "witt_to_padic");
    const mpz_class& p = x.ring()->modulus();
    const int precision = static_cast<int>(x.profile().size());
    mpz_class acc = 0;
    mpz_class scale = 1;
    for (long long idx : x.profile().indices()) {
        acc += scale * teichmuller_lift(x.component(idx), precision).value();
        scale *= p;
    }
    return PAdicTrunc(p, precision, acc);
}

OracleReport oracle_check(long long p, int length, long long trials, bool exhaustive,
                          std::uint64_t seed) {
    OracleReport report;
    report.p = p;
    report.length = length;
    report.exhaustive = exhaustive;
    if (length < 1) throw DomainError("oracle_check: length must be >= 1");
    const RingPtr field = RingDescriptor::prime_field(mpz_from_ll(p));
    const Profile profile = Profile::p_typical(p, length - 1);

    auto vector_from_digits = [&](unsigned long long v) {
        std::vector<RingElement> comps;
        comps.reserve(profile.size());
        for (std::size_t i = 0; i < profile.size(); ++i) {
            comps.push_back(int_image(mpz_class(static_cast<unsigned long>(
                                          v % static_cast<unsigned long long>(p))),
                                      field));
            v /= static_cast<unsigned long long>(p);
        }
        return WittVector(profile, field, std::move(comps));
    };

    auto describe = [](const WittVector& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.components().size(); ++i) {
            if (i) s += ',';
            s += v.components()[i].to_string();
        }
        return s + ")";
    };

    auto check_pair = [&](const WittVector& x, const WittVector& y) {
        const PAdicTrunc ix = witt_to_padic(x);
        const PAdicTrunc iy = witt_to_padic(y);
        ++report.pairs_checked;
        if (witt_to_padic(witt_add(x, y)) != ix + iy) {
            report.ok = false;
            report.counterexample = "sum mismatch at x=" + describe(x) + " y=" + describe(y);
            return false;
        }
        if (witt_to_padic(witt_mul(x, y)) != ix * iy) {
            report.ok = false;
            report.counterexample = "product mismatch at x=" + describe(x) + " y=" + describe(y);
            return false;
        }
        return true;
    };

    if (exhaustive) {
        unsigned long long total = 1;
        for (int i = 0; i < length; ++i) total *= static_cast<unsigned long long>(p);
        for (unsigned long long a = 0; a < total; ++a)
            for (unsigned long long b = 0; b < total; ++b)
                if (!check_pair(vector_from_digits(a), vector_from_digits(b))) return report;
    } else {
        std::mt19937_64 rng(seed);
        for (long long t = 0; t < trials; ++t) {
            std::vector<RingElement> xs, ys;
            for (std::size_t i = 0; i < profile.size(); ++i) {
                xs.push_back(random_element(field, rng));
                ys.push_back(random_element(field, rng));
            }
            if (!check_pair(WittVector(profile, field, std::move(xs)),
                            WittVector(profile, field, std::move(ys))))
                return report;
        }
    }
    return report;
}

} // namespace witt
