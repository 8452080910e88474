#ifndef WITT_CANONICAL_MAPS_HPP
#define WITT_CANONICAL_MAPS_HPP

#include "witt/witt_vector.hpp"

namespace witt {

enum class LiftFamily {
    Identity,          // sigma_p = id on Z (Fermat gives sigma_p(x) = x = x^p mod p)
    PowerSubstitution, // sigma_p : u -> u^p on Z[u]
};

/// A commuting family of Frobenius lifts on a torsion-free ring.
class FrobeniusLiftSpec {
public:
    static FrobeniusLiftSpec identity_on_integers();
    static FrobeniusLiftSpec power_substitution(); // on Z[u]

    LiftFamily family() const { return family_; }
    const RingPtr& ring() const { return ring_; }

    /// sigma_n = product of sigma_p over the prime factorization of n.
    RingElement sigma(long long n, const RingElement& a) const;

private:
    FrobeniusLiftSpec(LiftFamily family, RingPtr ring)
        : family_(family), ring_(std::move(ring)) {}
    LiftFamily family_;
    RingPtr ring_;
};

/// The unique ring map A -> W_P(A) with w_n(phi(a)) = sigma_n(a), computed by
/// the divisor recursion; the required divisibilities are guaranteed and
/// asserted (DivisibilityViolation if one ever fails).
WittVector phi(const FrobeniusLiftSpec& spec, const RingElement& a, const Profile& profile);

/// Element of W_{full:a}(W_{full:b}(A)).
class NestedWittVector {
public:
    NestedWittVector(Profile outer, std::vector<WittVector> components);

    const Profile& outer_profile() const { return outer_; }
    const Profile& inner_profile() const { return components_[0].profile(); }
    const RingPtr& ring() const { return components_[0].ring(); }
    const std::vector<WittVector>& components() const { return components_; }
    const WittVector& component(long long n) const { return components_[outer_.position(n)]; }

private:
    Profile outer_;
    std::vector<WittVector> components_;
};

/// Diagonal Delta: W_{full:ab} -> W_{full:a}(W_{full:b}); component (n, m) is
/// the universal integer polynomial delta_poly(a, b, n, m) evaluated at x.
NestedWittVector delta(const WittVector& x, long long a, long long b);

/// Outer ghost \hat w_n = sum_{d|n} d * (component_d)^{n/d} in W_b(A).
WittVector nested_outer_ghost(const NestedWittVector& y, long long n);

/// W(w_n): applies the inner ghost w_n to each outer component, landing in W_a(A).
WittVector nested_apply_inner_ghost(const NestedWittVector& y, long long n);

} // namespace witt

#endif
