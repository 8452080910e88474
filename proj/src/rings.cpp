#include "witt/rings.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace witt {

namespace {

mpz_class mod_canonical(const mpz_class& v, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

void require_prime(const mpz_class& p, const char* where) {
    if (!is_probable_prime(p))
        throw NotPrime(std::string(where) + ": " + p.get_str() + " is not prime");
}

// ---- arithmetic on F_p coefficient vectors (low-to-high) ----

void fp_trim(std::vector<mpz_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<mpz_class> fp_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                              const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    for (auto& v : c) v = mod_canonical(v, p);
    fp_trim(c);
    return c;
}

// Remainder of c modulo the monic polynomial f, coefficients mod p.
std::vector<mpz_class> fp_mod(std::vector<mpz_class> c, const std::vector<mpz_class>& f,
                              const mpz_class& p) {
    for (auto& v : c) v = mod_canonical(v, p);
    fp_trim(c);
    const std::size_t k = f.size() - 1;
    while (c.size() > k) {
        const mpz_class lead = c.back();
        const std::size_t shift = c.size() - 1 - k;
        if (lead != 0)
            for (std::size_t i = 0; i <= k; ++i)
                c[shift + i] = mod_canonical(c[shift + i] - lead * f[i], p);
        c.pop_back();
        fp_trim(c);
    }
    return c;
}

bool fp_poly_is_zero(const std::vector<mpz_class>& c) {
    return std::all_of(c.begin(), c.end(), [](const mpz_class& v) { return v == 0; });
}

mpz_class fp_eval(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& p) {
    mpz_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod_canonical(acc * x + *it, p);
    return acc;
}

bool fp_divides(const std::vector<mpz_class>& divisor, const std::vector<mpz_class>& f,
                const mpz_class& p) {
    return fp_poly_is_zero(fp_mod(f, divisor, p));
}

// Full check for k <= 4 (no roots, and for quartics no quadratic factors).
bool fp_irreducible_small(const std::vector<mpz_class>& f, const mpz_class& p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    for (mpz_class a = 0; a < p; ++a)
        if (fp_eval(f, a, p) == 0) return false;
    if (k <= 3) return true;
    // quartic: rule out monic quadratic factors
    for (mpz_class c1 = 0; c1 < p; ++c1)
        for (mpz_class c0 = 0; c0 < p; ++c0) {
            std::vector<mpz_class> q{c0, c1, 1};
            if (fp_divides(q, f, p)) return false;
        }
    return true;
}

int descriptor_poly_depth(const RingDescriptor& r) {
    if (r.kind() != RingKind::PolynomialRing) return 0;
    return 1 + descriptor_poly_depth(*r.base());
}

} // namespace

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// ---------------------------------------------------------------------------
// RingDescriptor
// ---------------------------------------------------------------------------

RingPtr RingDescriptor::integers() {
    static const RingPtr r = [] {
        auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
        d->kind_ = RingKind::Integers;
        return d;
    }();
    return r;
}

RingPtr RingDescriptor::rationals() {
    static const RingPtr r = [] {
        auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
        d->kind_ = RingKind::Rationals;
        return d;
    }();
    return r;
}

RingPtr RingDescriptor::localized_rationals(const mpz_class& p) {
    require_prime(p, "localized_rationals");
    auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    d->kind_ = RingKind::LocalizedRationals;
    d->modulus_ = p;
    return d;
}

RingPtr RingDescriptor::integers_mod(const mpz_class& m) {
    if (m < 2) throw DomainError("integers_mod: modulus must be >= 2");
    auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    d->kind_ = RingKind::IntegersMod;
    d->modulus_ = m;
    return d;
}

RingPtr RingDescriptor::prime_field(const mpz_class& p) {
    require_prime(p, "prime_field");
    auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    d->kind_ = RingKind::PrimeField;
    d->modulus_ = p;
    return d;
}

RingPtr RingDescriptor::finite_field(const mpz_class& p, unsigned k) {
    require_prime(p, "finite_field");
    if (k < 1) throw DomainError("finite_field: degree must be >= 1");
    if (k > 4)
        throw DomainError("finite_field: no default modulus search above degree 4; supply one");
    // enumerate constant..subleading coefficients as a base-p counter
    mpz_class count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (mpz_class v = 0; v < count; ++v) {
        std::vector<mpz_class> f(k + 1, mpz_class(0));
        mpz_class rest = v;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = mod_canonical(rest, p);
            rest /= p;
        }
        f[k] = 1;
        if (fp_irreducible_small(f, p)) return finite_field(p, k, std::move(f));
    }
    throw DomainError("finite_field: no irreducible polynomial found"); // unreachable
}

RingPtr RingDescriptor::finite_field(const mpz_class& p, unsigned k, std::vector<mpz_class> modulus) {
    require_prime(p, "finite_field");
    if (k < 1) throw DomainError("finite_field: degree must be >= 1");
    if (modulus.size() != k + 1)
        throw DomainError("finite_field: modulus must list k+1 coefficients");
    for (auto& c : modulus) c = mod_canonical(c, p);
    if (modulus.back() != 1) throw DomainError("finite_field: modulus must be monic");
    auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    d->kind_ = RingKind::FiniteField;
    d->modulus_ = p;
    d->degree_ = k;
    if (k <= 4) {
        if (!fp_irreducible_small(modulus, p))
            throw DomainError("finite_field: modulus is reducible over F_" + p.get_str());
        d->irreducibility_verified_ = true;
    } else {
        d->irreducibility_verified_ = false; // trusted, flagged
    }
    d->field_modulus_ = std::move(modulus);
    return d;
}

RingPtr RingDescriptor::polynomial_ring(RingPtr base, std::string variable) {
    if (!base) throw DomainError("polynomial_ring: null base");
    if (variable.empty()) throw DomainError("polynomial_ring: empty variable name");
    if (descriptor_poly_depth(*base) >= 2)
        throw DomainError("polynomial_ring: nesting depth limited to 2");
    auto d = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    d->kind_ = RingKind::PolynomialRing;
    d->base_ = std::move(base);
    d->variable_ = std::move(variable);
    return d;
}

mpz_class RingDescriptor::characteristic() const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Rationals:
        case RingKind::LocalizedRationals: return 0;
        case RingKind::IntegersMod:
        case RingKind::PrimeField:
        case RingKind::FiniteField: return modulus_;
        case RingKind::PolynomialRing: return base_->characteristic();
    }
    return 0;
}

int RingDescriptor::polynomial_depth() const { return descriptor_poly_depth(*this); }

bool RingDescriptor::is_zp_algebra(const mpz_class& p) const {
    switch (kind_) {
        case RingKind::LocalizedRationals:
        case RingKind::PrimeField:
        case RingKind::FiniteField: return modulus_ == p;
        case RingKind::IntegersMod: {
            mpz_class m = modulus_;
            while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) m /= p;
            return m == 1;
        }
        default: return false;
    }
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Rationals: return true;
        case RingKind::LocalizedRationals:
        case RingKind::IntegersMod:
        case RingKind::PrimeField: return modulus_ == other.modulus_;
        case RingKind::FiniteField:
            return modulus_ == other.modulus_ && degree_ == other.degree_ &&
                   field_modulus_ == other.field_modulus_;
        case RingKind::PolynomialRing:
            return variable_ == other.variable_ && *base_ == *other.base_;
    }
    return false;
}

std::string RingDescriptor::to_string() const {
    switch (kind_) {
        case RingKind::Integers: return "int";
        case RingKind::Rationals: return "rat";
        case RingKind::LocalizedRationals: return "zloc:" + modulus_.get_str();
        case RingKind::IntegersMod: return "zmod:" + modulus_.get_str();
        case RingKind::PrimeField: return "gf:" + modulus_.get_str();
        case RingKind::FiniteField: {
            std::string s = "gf:" + modulus_.get_str() + "^" + std::to_string(degree_) + ":";
            for (std::size_t i = 0; i < field_modulus_.size(); ++i) {
                if (i) s += ',';
                s += field_modulus_[i].get_str();
            }
            return s;
        }
        case RingKind::PolynomialRing:
            return "poly:" + base_->to_string() + ":" + variable_;
    }
    return "?";
}

// ---------------------------------------------------------------------------
// descriptor parsing
// ---------------------------------------------------------------------------

namespace {

mpz_class parse_mpz(std::string_view s) {
    if (s.empty()) throw ParseError("expected an integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("expected an integer, got '" + std::string(s) + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected an integer, got '" + std::string(s) + "'");
    return mpz_class(std::string(s), 10);
}

// consumes a leading integer from `rest`
mpz_class take_mpz(std::string_view& rest) {
    std::size_t i = 0;
    if (i < rest.size() && (rest[i] == '-' || rest[i] == '+')) ++i;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
    mpz_class v = parse_mpz(rest.substr(0, i));
    rest.remove_prefix(i);
    return v;
}

void expect(std::string_view& rest, char c) {
    if (rest.empty() || rest[0] != c)
        throw ParseError(std::string("expected '") + c + "' in ring descriptor");
    rest.remove_prefix(1);
}

RingPtr parse_descriptor_prefix(std::string_view& rest) {
    auto starts = [&](std::string_view kw) {
        if (rest.substr(0, kw.size()) != kw) return false;
        rest.remove_prefix(kw.size());
        return true;
    };
    if (starts("int")) return RingDescriptor::integers();
    if (starts("rat")) return RingDescriptor::rationals();
    if (starts("zloc:")) return RingDescriptor::localized_rationals(take_mpz(rest));
    if (starts("zmod:")) return RingDescriptor::integers_mod(take_mpz(rest));
    if (starts("gf:")) {
        mpz_class p = take_mpz(rest);
        if (rest.empty() || rest[0] != '^') return RingDescriptor::prime_field(p);
        rest.remove_prefix(1);
        mpz_class kz = take_mpz(rest);
        unsigned k = static_cast<unsigned>(kz.get_ui());
        expect(rest, ':');
        std::vector<mpz_class> mod;
        for (unsigned i = 0; i <= k; ++i) {
            if (i) expect(rest, ',');
            mod.push_back(take_mpz(rest));
        }
        return RingDescriptor::finite_field(p, k, std::move(mod));
    }
    if (starts("poly:")) {
        RingPtr base = parse_descriptor_prefix(rest);
        expect(rest, ':');
        std::size_t i = 0;
        while (i < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[i])) || rest[i] == '_'))
            ++i;
        if (i == 0) throw ParseError("expected a variable name in poly:<base>:<var>");
        std::string var(rest.substr(0, i));
        rest.remove_prefix(i);
        return RingDescriptor::polynomial_ring(std::move(base), std::move(var));
    }
    throw ParseError("unknown ring descriptor '" + std::string(rest) + "'");
}

} // namespace

RingPtr RingDescriptor::parse(std::string_view text) {
    std::string_view rest = text;
    RingPtr r = parse_descriptor_prefix(rest);
    if (!rest.empty())
        throw ParseError("trailing input in ring descriptor: '" + std::string(rest) + "'");
    return r;
}

// ---------------------------------------------------------------------------
// RingElement
// ---------------------------------------------------------------------------

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (*a.ring() != *b.ring())
        throw RingMismatch("operands belong to different rings: " + a.ring()->to_string() +
                           " vs " + b.ring()->to_string());
}

} // namespace

RingElement::RingElement(RingPtr ring, Payload payload)
    : ring_(std::move(ring)), payload_(std::move(payload)) {
    if (!ring_) throw DomainError("RingElement: null ring");
    switch (ring_->kind()) {
        case RingKind::Integers:
            std::get<mpz_class>(payload_);
            break;
        case RingKind::Rationals: {
            auto& q = std::get<mpq_class>(payload_);
            q.canonicalize();
            break;
        }
        case RingKind::LocalizedRationals: {
            auto& q = std::get<mpq_class>(payload_);
            q.canonicalize();
            if (mpz_divisible_p(q.get_den().get_mpz_t(), ring_->modulus().get_mpz_t()))
                throw NotPIntegral("denominator of " + q.get_str() + " is divisible by " +
                                   ring_->modulus().get_str());
            break;
        }
        case RingKind::IntegersMod:
        case RingKind::PrimeField: {
            auto& v = std::get<mpz_class>(payload_);
            v = mod_canonical(v, ring_->modulus());
            break;
        }
        case RingKind::FiniteField: {
            auto& c = std::get<std::vector<mpz_class>>(payload_);
            c = fp_mod(std::move(c), ring_->field_modulus(), ring_->modulus());
            c.resize(ring_->degree(), mpz_class(0));
            break;
        }
        case RingKind::PolynomialRing: {
            auto& c = std::get<std::vector<RingElement>>(payload_);
            for (const auto& coeff : c)
                if (*coeff.ring() != *ring_->base())
                    throw RingMismatch("polynomial coefficient in wrong base ring");
            while (!c.empty() && c.back().is_zero()) c.pop_back();
            break;
        }
    }
}

RingElement RingElement::zero(const RingPtr& ring) {
    switch (ring->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
        case RingKind::PrimeField: return RingElement(ring, mpz_class(0));
        case RingKind::Rationals:
        case RingKind::LocalizedRationals: return RingElement(ring, mpq_class(0));
        case RingKind::FiniteField: return RingElement(ring, std::vector<mpz_class>{});
        case RingKind::PolynomialRing: return RingElement(ring, std::vector<RingElement>{});
    }
    throw DomainError("zero: bad ring");
}

RingElement RingElement::one(const RingPtr& ring) { return int_image(1, ring); }

bool RingElement::is_zero() const {
    switch (ring_->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
        case RingKind::PrimeField: return std::get<mpz_class>(payload_) == 0;
        case RingKind::Rationals:
        case RingKind::LocalizedRationals: return std::get<mpq_class>(payload_) == 0;
        case RingKind::FiniteField: return fp_poly_is_zero(std::get<std::vector<mpz_class>>(payload_));
        case RingKind::PolynomialRing: return std::get<std::vector<RingElement>>(payload_).empty();
    }
    return false;
}

bool RingElement::is_one() const { return *this == one(ring_); }

bool RingElement::operator==(const RingElement& other) const {
    if (*ring_ != *other.ring_) return false;
    return payload_ == other.payload_;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const RingPtr& ring = a.ring();
    switch (ring->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
        case RingKind::PrimeField:
            return RingElement(ring, mpz_class(std::get<mpz_class>(a.payload()) + std::get<mpz_class>(b.payload())));
        case RingKind::Rationals:
        case RingKind::LocalizedRationals:
            return RingElement(ring,
                               mpq_class(std::get<mpq_class>(a.payload()) + std::get<mpq_class>(b.payload())));
        case RingKind::FiniteField: {
            const auto& ca = std::get<std::vector<mpz_class>>(a.payload());
            const auto& cb = std::get<std::vector<mpz_class>>(b.payload());
            std::vector<mpz_class> c(ring->degree(), mpz_class(0));
            for (unsigned i = 0; i < ring->degree(); ++i) c[i] = ca[i] + cb[i];
            return RingElement(ring, std::move(c));
        }
        case RingKind::PolynomialRing: {
            const auto& ca = std::get<std::vector<RingElement>>(a.payload());
            const auto& cb = std::get<std::vector<RingElement>>(b.payload());
            std::vector<RingElement> c;
            const std::size_t n = std::max(ca.size(), cb.size());
            c.reserve(n);
            const RingElement z = RingElement::zero(ring->base());
            for (std::size_t i = 0; i < n; ++i)
                c.push_back((i < ca.size() ? ca[i] : z) + (i < cb.size() ? cb[i] : z));
            return RingElement(ring, std::move(c));
        }
    }
    throw DomainError("operator+: bad ring");
}

RingElement RingElement::operator-() const {
    switch (ring_->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
        case RingKind::PrimeField: return RingElement(ring_, mpz_class(-std::get<mpz_class>(payload_)));
        case RingKind::Rationals:
        case RingKind::LocalizedRationals:
            return RingElement(ring_, mpq_class(-std::get<mpq_class>(payload_)));
        case RingKind::FiniteField: {
            auto c = std::get<std::vector<mpz_class>>(payload_);
            for (auto& v : c) v = -v;
            return RingElement(ring_, std::move(c));
        }
        case RingKind::PolynomialRing: {
            auto c = std::get<std::vector<RingElement>>(payload_);
            for (auto& v : c) v = -v;
            return RingElement(ring_, std::move(c));
        }
    }
    throw DomainError("negate: bad ring");
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const RingPtr& ring = a.ring();
    switch (ring->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
        case RingKind::PrimeField:
            return RingElement(ring, mpz_class(std::get<mpz_class>(a.payload()) * std::get<mpz_class>(b.payload())));
        case RingKind::Rationals:
        case RingKind::LocalizedRationals:
            return RingElement(ring,
                               mpq_class(std::get<mpq_class>(a.payload()) * std::get<mpq_class>(b.payload())));
        case RingKind::FiniteField:
            return RingElement(ring, fp_mul(std::get<std::vector<mpz_class>>(a.payload()),
                                            std::get<std::vector<mpz_class>>(b.payload()),
                                            ring->modulus()));
        case RingKind::PolynomialRing: {
            const auto& ca = std::get<std::vector<RingElement>>(a.payload());
            const auto& cb = std::get<std::vector<RingElement>>(b.payload());
            if (ca.empty() || cb.empty()) return RingElement::zero(ring);
            std::vector<RingElement> c(ca.size() + cb.size() - 1, RingElement::zero(ring->base()));
            for (std::size_t i = 0; i < ca.size(); ++i) {
                if (ca[i].is_zero()) continue;
                for (std::size_t j = 0; j < cb.size(); ++j) c[i + j] = c[i + j] + ca[i] * cb[j];
            }
            return RingElement(ring, std::move(c));
        }
    }
    throw DomainError("operator*: bad ring");
}

RingElement RingElement::pow(unsigned long e) const {
    RingElement acc = one(ring_);
    RingElement base = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e) base = base * base;
    }
    return acc;
}

RingElement RingElement::pow(const mpz_class& e) const {
    if (e < 0) throw DomainError("pow: negative exponent");
    RingElement acc = one(ring_);
    RingElement base = *this;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// named operations
// ---------------------------------------------------------------------------

RingElement int_image(const mpz_class& n, const RingPtr& ring) {
    switch (ring->kind()) {
        case RingKind::Integers: return RingElement(ring, n);
        case RingKind::Rationals:
        case RingKind::LocalizedRationals: return RingElement(ring, mpq_class(n));
        case RingKind::IntegersMod:
        case RingKind::PrimeField: return RingElement(ring, n);
        case RingKind::FiniteField: return RingElement(ring, std::vector<mpz_class>{n});
        case RingKind::PolynomialRing: {
            RingElement c = int_image(n, ring->base());
            if (c.is_zero()) return RingElement::zero(ring);
            return RingElement(ring, std::vector<RingElement>{std::move(c)});
        }
    }
    throw DomainError("int_image: bad ring");
}

RingElement exact_div_int(const RingElement& x, const mpz_class& n) {
    if (n == 0) throw DomainError("exact_div_int: divisor must be nonzero");
    const RingPtr& ring = x.ring();
    switch (ring->kind()) {
        case RingKind::Integers: {
            const auto& v = std::get<mpz_class>(x.payload());
            if (!mpz_divisible_p(v.get_mpz_t(), n.get_mpz_t()))
                throw NotDivisible(v.get_str() + " is not divisible by " + n.get_str());
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
            return RingElement(ring, q);
        }
        case RingKind::Rationals:
            return RingElement(ring, mpq_class(std::get<mpq_class>(x.payload()) / mpq_class(n)));
        case RingKind::LocalizedRationals: {
            mpq_class q = std::get<mpq_class>(x.payload()) / mpq_class(n);
            q.canonicalize();
            if (mpz_divisible_p(q.get_den().get_mpz_t(), ring->modulus().get_mpz_t()))
                throw NotDivisible("quotient " + q.get_str() + " is not " +
                                   ring->modulus().get_str() + "-integral");
            return RingElement(ring, q);
        }
        case RingKind::IntegersMod: {
            const mpz_class& m = ring->modulus();
            const mpz_class nr = mod_canonical(n, m);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), nr.get_mpz_t(), m.get_mpz_t());
            const auto& v = std::get<mpz_class>(x.payload());
            if (g == 1) {
                mpz_class inv;
                mpz_invert(inv.get_mpz_t(), nr.get_mpz_t(), m.get_mpz_t());
                return RingElement(ring, mpz_class(inv * v));
            }
            if (mpz_divisible_p(v.get_mpz_t(), g.get_mpz_t()))
                throw NotUnique("division of " + v.get_str() + " by " + n.get_str() + " mod " +
                                m.get_str() + " has " + g.get_str() + " solutions");
            throw NotDivisible(v.get_str() + " is not divisible by " + n.get_str() + " mod " +
                               m.get_str());
        }
        case RingKind::PrimeField:
        case RingKind::FiniteField: {
            const mpz_class& p = ring->modulus();
            const mpz_class nr = mod_canonical(n, p);
            if (nr == 0) {
                if (x.is_zero())
                    throw NotUnique("division of 0 by a multiple of the characteristic is ambiguous");
                throw NotDivisible("nonzero element is not divisible by a multiple of the characteristic");
            }
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), nr.get_mpz_t(), p.get_mpz_t());
            return int_image(inv, ring) * x;
        }
        case RingKind::PolynomialRing: {
            const auto& c = std::get<std::vector<RingElement>>(x.payload());
            std::vector<RingElement> q;
            q.reserve(c.size());
            for (const auto& coeff : c) q.push_back(exact_div_int(coeff, n));
            return RingElement(ring, std::move(q));
        }
    }
    throw DomainError("exact_div_int: bad ring");
}

RingElement rational_image(const mpq_class& q, const RingPtr& ring) {
    RingElement num = int_image(q.get_num(), ring);
    if (q.get_den() == 1) return num;
    return exact_div_int(num, q.get_den());
}

RingElement pth_root(const RingElement& x) {
    const RingPtr& ring = x.ring();
    switch (ring->kind()) {
        case RingKind::PrimeField:
            return x; // x^p = x in F_p
        case RingKind::FiniteField: {
            mpz_class e;
            mpz_pow_ui(e.get_mpz_t(), ring->modulus().get_mpz_t(), ring->degree() - 1);
            return x.pow(e);
        }
        default:
            throw UnsupportedRing("pth_root requires a perfect ring of characteristic p, got " +
                                  ring->to_string());
    }
}

RingElement random_element(const RingPtr& ring, std::mt19937_64& rng) {
    auto small = [&rng](long lo, long hi) {
        return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
    };
    switch (ring->kind()) {
        case RingKind::Integers: return RingElement(ring, mpz_class(small(-20, 20)));
        case RingKind::Rationals:
            return RingElement(ring, mpq_class(small(-20, 20), small(1, 12)));
        case RingKind::LocalizedRationals: {
            long den = small(1, 12);
            while (mpz_class(den) % ring->modulus() == 0) den = small(1, 12);
            return RingElement(ring, mpq_class(small(-20, 20), den));
        }
        case RingKind::IntegersMod:
        case RingKind::PrimeField:
            return RingElement(ring, mod_canonical(mpz_class(static_cast<unsigned long>(rng())),
                                                   ring->modulus()));
        case RingKind::FiniteField: {
            std::vector<mpz_class> c(ring->degree());
            for (auto& v : c)
                v = mod_canonical(mpz_class(static_cast<unsigned long>(rng())), ring->modulus());
            return RingElement(ring, std::move(c));
        }
        case RingKind::PolynomialRing: {
            std::vector<RingElement> c;
            const long deg = small(0, 2);
            for (long i = 0; i <= deg; ++i) c.push_back(random_element(ring->base(), rng));
            return RingElement(ring, std::move(c));
        }
    }
    throw DomainError("random_element: bad ring");
}

// ---------------------------------------------------------------------------
// element text I/O
// ---------------------------------------------------------------------------

bool element_text_has_commas(const RingDescriptor& ring) {
    if (ring.kind() == RingKind::FiniteField) return ring.degree() >= 2;
    return ring.kind() == RingKind::PolynomialRing;
}

std::string RingElement::to_string() const {
    switch (ring_->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
        case RingKind::PrimeField: return std::get<mpz_class>(payload_).get_str();
        case RingKind::Rationals:
        case RingKind::LocalizedRationals: return std::get<mpq_class>(payload_).get_str();
        case RingKind::FiniteField: {
            const auto& c = std::get<std::vector<mpz_class>>(payload_);
            std::string s;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ',';
                s += c[i].get_str();
            }
            return s;
        }
        case RingKind::PolynomialRing: {
            const auto& c = std::get<std::vector<RingElement>>(payload_);
            if (c.empty()) return "0";
            const bool bracket = element_text_has_commas(*ring_->base());
            std::string s;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ',';
                if (bracket) s += '[' + c[i].to_string() + ']';
                else s += c[i].to_string();
            }
            return s;
        }
    }
    return "?";
}

namespace {

// splits on `sep` at bracket depth zero
std::vector<std::string_view> split_outside_brackets(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[') ++depth;
        else if (s[i] == ']') {
            if (--depth < 0) throw ParseError("unbalanced ']' in '" + std::string(s) + "'");
        } else if (s[i] == sep && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced '[' in '" + std::string(s) + "'");
    out.push_back(s.substr(start));
    return out;
}

// strips one bracket pair only when it encloses the whole string
std::string_view strip_brackets(std::string_view s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') return s;
    int depth = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == '[') ++depth;
        else if (s[i] == ']' && --depth == 0) return s; // the first '[' closes early
    }
    return s.substr(1, s.size() - 2);
}

mpq_class parse_mpq(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return mpq_class(parse_mpz(s));
    mpz_class num = parse_mpz(s.substr(0, slash));
    mpz_class den = parse_mpz(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

RingElement parse_element(const RingPtr& ring, std::string_view text) {
    switch (ring->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
        case RingKind::PrimeField: return RingElement(ring, parse_mpz(strip_brackets(text)));
        case RingKind::Rationals:
        case RingKind::LocalizedRationals: return RingElement(ring, parse_mpq(strip_brackets(text)));
        case RingKind::FiniteField: {
            auto parts = split_outside_brackets(strip_brackets(text), ',');
            if (parts.size() > ring->degree())
                throw ParseError("too many coefficients for " + ring->to_string());
            std::vector<mpz_class> c;
            for (auto part : parts) c.push_back(parse_mpz(part));
            return RingElement(ring, std::move(c));
        }
        case RingKind::PolynomialRing: {
            auto parts = split_outside_brackets(strip_brackets(text), ',');
            std::vector<RingElement> c;
            for (auto part : parts) c.push_back(parse_element(ring->base(), part));
            return RingElement(ring, std::move(c));
        }
    }
    throw ParseError("parse_element: bad ring");
}

} // namespace witt
