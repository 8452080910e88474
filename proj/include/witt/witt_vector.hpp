#ifndef WITT_WITT_VECTOR_HPP
#define WITT_WITT_VECTOR_HPP

#include <utility>
#include <vector>

#include "witt/profiles.hpp"
#include "witt/rings.hpp"
#include "witt/universal.hpp"

namespace witt {

/// Truncated Witt vector: one coefficient-ring component per profile index.
class WittVector {
public:
    WittVector(Profile profile, RingPtr ring, std::vector<RingElement> components);

    const Profile& profile() const { return profile_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<RingElement>& components() const { return components_; }
    const RingElement& component(long long n) const { return components_[profile_.position(n)]; }
    bool is_zero() const;

    bool operator==(const WittVector& other) const;
    bool operator!=(const WittVector& other) const { return !(*this == other); }

private:
    Profile profile_;
    RingPtr ring_;
    std::vector<RingElement> components_;
};

/// Same shape as WittVector, holding ghost components w_n(x).
class GhostVector {
public:
    GhostVector(Profile profile, RingPtr ring, std::vector<RingElement> components);

    const Profile& profile() const { return profile_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<RingElement>& components() const { return components_; }
    const RingElement& component(long long n) const { return components_[profile_.position(n)]; }

    bool operator==(const GhostVector& other) const;
    bool operator!=(const GhostVector& other) const { return !(*this == other); }

private:
    Profile profile_;
    RingPtr ring_;
    std::vector<RingElement> components_;
};

WittVector witt_zero(const RingPtr& ring, const Profile& profile);
WittVector witt_one(const RingPtr& ring, const Profile& profile);

GhostVector ghost(const WittVector& x);

/// Inverse of ghost, solved by the divisor recursion.  Throws NotInGhostImage
/// when a division has no solution, AmbiguousDivision when the ring has
/// n-torsion making the solve non-unique.
WittVector unghost(const GhostVector& g);

// Ring laws via the universal polynomials (valid over every ring);
// a ghost-arithmetic shortcut is used over Q and Z_(p), see
// set_ghost_fast_path_enabled.
WittVector witt_add(const WittVector& x, const WittVector& y);
WittVector witt_sub(const WittVector& x, const WittVector& y);
WittVector witt_mul(const WittVector& x, const WittVector& y);
WittVector witt_neg(const WittVector& x);

WittVector int_mul(const mpz_class& c, const WittVector& x);
inline WittVector int_mul(long long c, const WittVector& x) { return int_mul(mpz_from_ll(c), x); }
WittVector witt_pow(const WittVector& x, unsigned long e);

/// [a] = (a, 0, 0, ...).
WittVector teichmuller(const RingElement& a, const Profile& profile);

/// V_n: component nm of the result is x_m; source profile must equal
/// {m : n*m in target}.
WittVector verschiebung(long long n, const WittVector& x, const Profile& target);

/// F_n: w_m(F_n x) = w_{nm}(x); output over {m : n*m in P}.
WittVector frobenius(long long n, const WittVector& x);

WittVector project(const WittVector& x, const Profile& target);

/// Nonzero components (n, x_n); sum of V_n[x_n] reassembles x.
std::vector<std::pair<long long, RingElement>> decompose(const WittVector& x);
WittVector reassemble(const std::vector<std::pair<long long, RingElement>>& parts,
                      const RingPtr& ring, const Profile& profile);

/// X-variable assignment (X_n -> x_n) for evaluating universal polynomials at
/// the components of x.
std::vector<std::pair<std::uint64_t, RingElement>> component_assignment(const WittVector& x);

/// Toggles the ghost-arithmetic shortcut for Q- and Z_(p)-coefficient vectors
/// (the universal-polynomial path stays the definitional route).
void set_ghost_fast_path_enabled(bool enabled);
bool ghost_fast_path_enabled();

} // namespace witt

#endif
