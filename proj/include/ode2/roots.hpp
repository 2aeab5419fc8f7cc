#ifndef ODE2_ROOTS_HPP
#define ODE2_ROOTS_HPP

#include <vector>

#include "ode2/poly.hpp"
#include "ode2/ratfun.hpp"

namespace ode2 {

struct RootEntry {
    Location location;  // exact QSurd or high-precision approximation
    int multiplicity = 1;
};

struct RootSet {
    std::vector<RootEntry> entries;  // sorted by (re, im)
    bool all_exact() const;
    int total_multiplicity() const;
};

// Roots of p over Q(sqrt d).  Rational roots are found exactly; irreducible
// quadratic factors produce conjugate surd pairs; what is left of degree >= 3
// is isolated numerically (entries flagged non-exact).  Square-free parts of
// higher degree are additionally probed for exact quadratic factors by
// pairing approximate roots and reconstructing rational coefficients.
RootSet find_roots(const Poly& p);

// Exact roots of a quadratic over its coefficient field extended by one
// square root; nullopt when the discriminant needs a second extension.
std::optional<std::pair<QSurd, QSurd>> quadratic_roots(const QSurd& a,
                                                       const QSurd& b,
                                                       const QSurd& c);

// Approximate roots of a square-free polynomial (Durand-Kerner + Newton).
std::vector<Complex> approximate_roots(const Poly& squarefree);

// Nearest rational p/q with |value - p/q| < 1e-24 and q <= 10^12, if any.
std::optional<Rational> reconstruct_rational(const BigFloat& value);

} // namespace ode2

#endif
