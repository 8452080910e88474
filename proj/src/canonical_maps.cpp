#include "witt/canonical_maps.hpp"

namespace witt {

FrobeniusLiftSpec FrobeniusLiftSpec::identity_on_integers() {
    return FrobeniusLiftSpec(LiftFamily::Identity, RingDescriptor::integers());
}

FrobeniusLiftSpec FrobeniusLiftSpec::power_substitution() {
    return FrobeniusLiftSpec(LiftFamily::PowerSubstitution,
                             RingDescriptor::polynomial_ring(RingDescriptor::integers(), "u"));
}

RingElement FrobeniusLiftSpec::sigma(long long n, const RingElement& a) const {
    if (n < 1) throw DomainError("sigma: n must be positive");
    if (*a.ring() != *ring_) throw RingMismatch("sigma: element outside the spec's ring");
    if (family_ == LiftFamily::Identity) return a;
    // u -> u^n, i.e. spread the coefficients with stride n
    const auto& c = std::get<std::vector<RingElement>>(a.payload());
    if (c.empty()) return a;
    std::vector<RingElement> out((c.size() - 1) * static_cast<std::size_t>(n) + 1,
                                 RingElement::zero(ring_->base()));
    for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(n)] = c[i];
    return RingElement(ring_, std::move(out));
}

WittVector phi(const FrobeniusLiftSpec& spec, const RingElement& a, const Profile& profile) {
    if (*a.ring() != *spec.ring()) throw RingMismatch("phi: element outside the spec's ring");
    const RingPtr& ring = spec.ring();
    std::vector<RingElement> comps;
    comps.reserve(profile.size());
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const long long n = profile.indices()[i];
        RingElement rhs = spec.sigma(n, a);
        for (long long d : divisors_of(n)) {
            if (d == n) continue;
            rhs = rhs - int_image(d, ring) *
                            comps[profile.position(d)].pow(static_cast<unsigned long>(n / d));
        }
        try {
            comps.push_back(exact_div_int(rhs, n));
        } catch (const DomainError& e) {
            throw DivisibilityViolation("phi recursion failed at index " + std::to_string(n) +
                                        ": " + e.what());
        }
    }
    return WittVector(profile, ring, std::move(comps));
}

NestedWittVector::NestedWittVector(Profile outer, std::vector<WittVector> components)
    : outer_(std::move(outer)), components_(std::move(components)) {
    if (components_.size() != outer_.size())
        throw ProfileMismatch("nested vector: component count does not match the outer profile");
    for (const auto& c : components_)
        if (c.profile() != components_[0].profile() || *c.ring() != *components_[0].ring())
            throw ProfileMismatch("nested vector: inner components disagree");
}

NestedWittVector delta(const WittVector& x, long long a, long long b) {
    if (a < 1 || b < 1) throw DomainError("delta: levels must be positive");
    if (x.profile() != Profile::full(a * b))
        throw ProfileMismatch("delta: input must live over full:" + std::to_string(a * b));
    const auto assignment = component_assignment(x);
    const Profile inner = Profile::full(b);
    std::vector<WittVector> outer;
    outer.reserve(static_cast<std::size_t>(a));
    for (long long n = 1; n <= a; ++n) {
        std::vector<RingElement> comps;
        comps.reserve(static_cast<std::size_t>(b));
        for (long long m = 1; m <= b; ++m)
            comps.push_back(evaluate_upoly(delta_poly(a, b, n, m), x.ring(), assignment));
        outer.emplace_back(inner, x.ring(), std::move(comps));
    }
    return NestedWittVector(Profile::full(a), std::move(outer));
}

WittVector nested_outer_ghost(const NestedWittVector& y, long long n) {
    if (!y.outer_profile().contains(n))
        throw ProfileMismatch("outer ghost index " + std::to_string(n) + " not in profile");
    WittVector acc = witt_zero(y.ring(), y.inner_profile());
    for (long long d : divisors_of(n))
        acc = witt_add(acc, int_mul(d, witt_pow(y.component(d), static_cast<unsigned long>(n / d))));
    return acc;
}

WittVector nested_apply_inner_ghost(const NestedWittVector& y, long long n) {
    if (!y.inner_profile().contains(n))
        throw ProfileMismatch("inner ghost index " + std::to_string(n) + " not in profile");
    std::vector<RingElement> comps;
    comps.reserve(y.outer_profile().size());
    for (long long m : y.outer_profile().indices())
        comps.push_back(ghost(y.component(m)).component(n));
    return WittVector(y.outer_profile(), y.ring(), std::move(comps));
}

} // namespace witt
