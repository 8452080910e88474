#ifndef WITT_UNIVERSAL_HPP
#define WITT_UNIVERSAL_HPP

#include <vector>

#include "witt/upoly.hpp"

namespace witt {

enum class StructuralKind { Sum, Product, Neg };
enum class Locality { Global, AtPrime };

/// w_n = sum_{d | n} d * X_d^{n/d}.
const UPoly& witt_polynomial(long long n);

/// The unique solution of the ghost equation at level n:
///   Sum:     w_n(S) = w_n(X) + w_n(Y)
///   Product: w_n(Z) = w_n(X) * w_n(Y)
///   Neg:     w_n(I) = -w_n(X)
/// solved over the rationals and verified to have integer coefficients.
const UPoly& structural_poly(StructuralKind kind, long long n);

/// m-th component of F_n, from w_m(F_n(x)) = w_{mn}(x).  Integer coefficients.
const UPoly& frobenius_poly(long long n, long long m);

/// n-th component of epsilon_p: ghost at p-power indices preserved, all other
/// ghosts killed.  Coefficients p-integral; variables are the X_{p^r} only.
const UPoly& epsilon_poly(long long p, long long n);
std::vector<UPoly> epsilon_polys(long long p, long long N); // components 1..N

/// Component (n, m) of the diagonal, from the outer ghost identity
/// \hat w_n(Delta x) = F_n(x) solved in the level-b Witt ring of the rational
/// universal ring.  Integer coefficients; independent of (a, b).
const UPoly& delta_poly(long long a, long long b, long long n, long long m);

/// Global: every coefficient an integer; AtPrime: every reduced denominator
/// coprime to p.
bool assert_integral(const UPoly& poly, Locality locality, const mpz_class& p = 0);

/// Composite full-profile indices above the cap are rejected (term explosion);
/// prime-power indices are always allowed.
void set_universal_index_cap(long long cap);
long long universal_index_cap();

} // namespace witt

#endif
