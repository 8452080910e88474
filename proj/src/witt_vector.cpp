#include "witt/witt_vector.hpp"

#include <atomic>

namespace witt {

namespace {

std::atomic<bool> g_ghost_fast_path{true};

void check_shape(const Profile& profile, const RingPtr& ring,
                 const std::vector<RingElement>& components) {
    if (components.size() != profile.size())
        throw ProfileMismatch("component count " + std::to_string(components.size()) +
                              " does not match profile " + profile.to_string());
    for (const auto& c : components)
        if (*c.ring() != *ring) throw RingMismatch("component outside the declared ring");
}

void require_compatible(const WittVector& x, const WittVector& y) {
    if (x.profile() != y.profile())
        throw ProfileMismatch("profiles differ: " + x.profile().to_string() + " vs " +
                              y.profile().to_string());
    if (*x.ring() != *y.ring())
        throw RingMismatch("rings differ: " + x.ring()->to_string() + " vs " +
                           y.ring()->to_string());
}

bool fast_path_ring(const RingPtr& ring) {
    return ring->kind() == RingKind::Rationals || ring->kind() == RingKind::LocalizedRationals;
}


std::vector<std::pair<std::uint64_t, RingElement>> xy_assignment(const WittVector& x,
                                                                 const WittVector& y) {
    auto a = component_assignment(x);
    a.reserve(2 * a.size());
    for (std::size_t i = 0; i < y.profile().size(); ++i)
        a.emplace_back(UVar::y(static_cast<std::uint32_t>(y.profile().indices()[i])).key(),
                       y.components()[i]);
    return a;
}

enum class GhostOp { Add, Sub, Mul, Neg };

WittVector universal_binary(StructuralKind kind, const WittVector& x, const WittVector& y) {
    const auto assignment = xy_assignment(x, y);
    std::vector<RingElement> comps;
    comps.reserve(x.profile().size());
    for (long long n : x.profile().indices())
        comps.push_back(evaluate_upoly(structural_poly(kind, n), x.ring(), assignment));
    return WittVector(x.profile(), x.ring(), std::move(comps));
}

WittVector ghost_binary(GhostOp op, const WittVector& x, const WittVector& y) {
    const GhostVector gx = ghost(x);
    const GhostVector gy = ghost(y);
    std::vector<RingElement> comps;
    comps.reserve(gx.components().size());
    for (std::size_t i = 0; i < gx.components().size(); ++i) {
        switch (op) {
            case GhostOp::Add: comps.push_back(gx.components()[i] + gy.components()[i]); break;
            case GhostOp::Sub: comps.push_back(gx.components()[i] - gy.components()[i]); break;
            case GhostOp::Mul: comps.push_back(gx.components()[i] * gy.components()[i]); break;
            case GhostOp::Neg: break;
        }
    }
    return unghost(GhostVector(x.profile(), x.ring(), std::move(comps)));
}

} // namespace

WittVector::WittVector(Profile profile, RingPtr ring, std::vector<RingElement> components)
    : profile_(std::move(profile)), ring_(std::move(ring)), components_(std::move(components)) {
    check_shape(profile_, ring_, components_);
}

bool WittVector::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

bool WittVector::operator==(const WittVector& other) const {
    return profile_ == other.profile_ && *ring_ == *other.ring_ && components_ == other.components_;
}

GhostVector::GhostVector(Profile profile, RingPtr ring, std::vector<RingElement> components)
    : profile_(std::move(profile)), ring_(std::move(ring)), components_(std::move(components)) {
    check_shape(profile_, ring_, components_);
}

bool GhostVector::operator==(const GhostVector& other) const {
    return profile_ == other.profile_ && *ring_ == *other.ring_ && components_ == other.components_;
}

WittVector witt_zero(const RingPtr& ring, const Profile& profile) {
    return WittVector(profile, ring,
                      std::vector<RingElement>(profile.size(), RingElement::zero(ring)));
}

WittVector witt_one(const RingPtr& ring, const Profile& profile) {
    std::vector<RingElement> comps(profile.size(), RingElement::zero(ring));
    comps[0] = RingElement::one(ring); // index 1 is always first
    return WittVector(profile, ring, std::move(comps));
}

GhostVector ghost(const WittVector& x) {
    const auto assignment = component_assignment(x);
    std::vector<RingElement> comps;
    comps.reserve(x.profile().size());
    for (long long n : x.profile().indices())
        comps.push_back(evaluate_upoly(witt_polynomial(n), x.ring(), assignment));
    return GhostVector(x.profile(), x.ring(), std::move(comps));
}

WittVector unghost(const GhostVector& g) {
    const RingPtr& ring = g.ring();
    std::vector<RingElement> comps;
    comps.reserve(g.profile().size());
    for (std::size_t i = 0; i < g.profile().size(); ++i) {
        const long long n = g.profile().indices()[i];
        RingElement rhs = g.components()[i];
        for (long long d : divisors_of(n)) {
            if (d == n) continue;
            rhs = rhs - int_image(d, ring) * comps[g.profile().position(d)].pow(
                                                 static_cast<unsigned long>(n / d));
        }
        try {
            comps.push_back(exact_div_int(rhs, n));
        } catch (const NotUnique& e) {
            throw AmbiguousDivision("unghost at index " + std::to_string(n) + ": " + e.what());
        } catch (const NotDivisible& e) {
            throw NotInGhostImage("unghost at index " + std::to_string(n) + ": " + e.what());
        }
    }
    return WittVector(g.profile(), ring, std::move(comps));
}

WittVector witt_add(const WittVector& x, const WittVector& y) {
    require_compatible(x, y);
    if (g_ghost_fast_path.load() && fast_path_ring(x.ring())) return ghost_binary(GhostOp::Add, x, y);
    return universal_binary(StructuralKind::Sum, x, y);
}

WittVector witt_mul(const WittVector& x, const WittVector& y) {
    require_compatible(x, y);
    if (g_ghost_fast_path.load() && fast_path_ring(x.ring())) return ghost_binary(GhostOp::Mul, x, y);
    return universal_binary(StructuralKind::Product, x, y);
}

WittVector witt_neg(const WittVector& x) {
    if (g_ghost_fast_path.load() && fast_path_ring(x.ring())) {
        const GhostVector gx = ghost(x);
        std::vector<RingElement> comps;
        comps.reserve(gx.components().size());
        for (const auto& c : gx.components()) comps.push_back(-c);
        return unghost(GhostVector(x.profile(), x.ring(), std::move(comps)));
    }
    const auto assignment = component_assignment(x);
    std::vector<RingElement> comps;
    comps.reserve(x.profile().size());
    for (long long n : x.profile().indices())
        comps.push_back(evaluate_upoly(structural_poly(StructuralKind::Neg, n), x.ring(), assignment));
    return WittVector(x.profile(), x.ring(), std::move(comps));
}

WittVector witt_sub(const WittVector& x, const WittVector& y) {
    require_compatible(x, y);
    if (g_ghost_fast_path.load() && fast_path_ring(x.ring())) return ghost_binary(GhostOp::Sub, x, y);
    return witt_add(x, witt_neg(y));
}

WittVector int_mul(const mpz_class& c, const WittVector& x) {
    if (c < 0) return int_mul(mpz_class(-c), witt_neg(x));
    WittVector acc = witt_zero(x.ring(), x.profile());
    WittVector base = x;
    mpz_class k = c;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = witt_add(acc, base);
        k >>= 1;
        if (k > 0) base = witt_add(base, base);
    }
    return acc;
}

WittVector witt_pow(const WittVector& x, unsigned long e) {
    WittVector acc = witt_one(x.ring(), x.profile());
    WittVector base = x;
    while (e > 0) {
        if (e & 1UL) acc = witt_mul(acc, base);
        e >>= 1UL;
        if (e) base = witt_mul(base, base);
    }
    return acc;
}

WittVector teichmuller(const RingElement& a, const Profile& profile) {
    std::vector<RingElement> comps(profile.size(), RingElement::zero(a.ring()));
    comps[0] = a;
    return WittVector(profile, a.ring(), std::move(comps));
}

WittVector verschiebung(long long n, const WittVector& x, const Profile& target) {
    if (n < 1) throw DomainError("verschiebung: n must be positive");
    if (x.profile() != target.quotient(n))
        throw ProfileMismatch("verschiebung source profile " + x.profile().to_string() +
                              " must equal " + target.to_string() + " / " + std::to_string(n));
    std::vector<RingElement> comps;
    comps.reserve(target.size());
    for (long long m : target.indices()) {
        if (m % n == 0) comps.push_back(x.component(m / n));
        else comps.push_back(RingElement::zero(x.ring()));
    }
    return WittVector(target, x.ring(), std::move(comps));
}

WittVector frobenius(long long n, const WittVector& x) {
    if (n < 1) throw DomainError("frobenius: n must be positive");
    if (!x.profile().contains(n))
        throw EmptyOutputProfile("frobenius: index " + std::to_string(n) + " not in profile " +
                                 x.profile().to_string());
    const Profile target = x.profile().quotient(n);
    const auto assignment = component_assignment(x);
    std::vector<RingElement> comps;
    comps.reserve(target.size());
    for (long long m : target.indices())
        comps.push_back(evaluate_upoly(frobenius_poly(n, m), x.ring(), assignment));
    return WittVector(target, x.ring(), std::move(comps));
}

WittVector project(const WittVector& x, const Profile& target) {
    if (!target.subset_of(x.profile()))
        throw ProfileMismatch("projection target " + target.to_string() +
                              " is not contained in " + x.profile().to_string());
    std::vector<RingElement> comps;
    comps.reserve(target.size());
    for (long long n : target.indices()) comps.push_back(x.component(n));
    return WittVector(target, x.ring(), std::move(comps));
}

std::vector<std::pair<long long, RingElement>> decompose(const WittVector& x) {
    std::vector<std::pair<long long, RingElement>> out;
    for (std::size_t i = 0; i < x.profile().size(); ++i)
        if (!x.components()[i].is_zero())
            out.emplace_back(x.profile().indices()[i], x.components()[i]);
    return out;
}

WittVector reassemble(const std::vector<std::pair<long long, RingElement>>& parts,
                      const RingPtr& ring, const Profile& profile) {
    WittVector acc = witt_zero(ring, profile);
    for (const auto& [n, a] : parts) {
        const WittVector lift = teichmuller(a, profile.quotient(n));
        acc = witt_add(acc, verschiebung(n, lift, profile));
    }
    return acc;
}

std::vector<std::pair<std::uint64_t, RingElement>> component_assignment(const WittVector& x) {
    std::vector<std::pair<std::uint64_t, RingElement>> a;
    a.reserve(x.profile().size());
    for (std::size_t i = 0; i < x.profile().size(); ++i)
        a.emplace_back(UVar::x(static_cast<std::uint32_t>(x.profile().indices()[i])).key(),
                       x.components()[i]);
    return a;
}

void set_ghost_fast_path_enabled(bool enabled) { g_ghost_fast_path.store(enabled); }
bool ghost_fast_path_enabled() { return g_ghost_fast_path.load(); }

} // namespace witt
