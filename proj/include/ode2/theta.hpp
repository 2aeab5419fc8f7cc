#ifndef ODE2_THETA_HPP
#define ODE2_THETA_HPP

#include <vector>

#include "ode2/singular.hpp"

namespace ode2 {

// theta-form of the equation at a center shifted to 0:
//   [A_0(theta) + x A_1(theta) + ... + x^m A_m(theta)] y = 0
// built from x^j D^i = x^(j-i) * theta(theta-1)...(theta-i+1) after
// pre-multiplying by x^sigma so no negative powers of x remain.
struct ThetaForm {
    Location center;
    PointKind center_kind = PointKind::Ordinary;
    int center_rank = 0;
    int sigma = 0;
    std::vector<Poly> A;  // A[0..m], polynomials in theta; A[0] != 0

    int depth() const { return static_cast<int>(A.size()) - 1; }
    const Poly& indicial_poly() const { return A[0]; }
};

// theta(theta-1)...(theta-i+1) as a polynomial
Poly falling_factorial_theta(int i);

// Center must be exact (or infinity, handled by inverting first).
ThetaForm theta_form(const ODE2& ode, const Location& center);

// Indicial polynomial and its exact roots, ordered by (re, im).
// Throws NotRegular unless the center is a regular singular point.
std::pair<Poly, std::pair<QSurd, QSurd>> indicial(const ThetaForm& tf);

} // namespace ode2

#endif
