#ifndef ODE2_SERIES_HPP
#define ODE2_SERIES_HPP

#include <vector>

#include "ode2/theta.hpp"

namespace ode2 {

// C_n A_0(n+r) + sum_{j=1..m} C_{n-j} A_j(n+r-j) = 0 for n >= 1.
struct Recurrence {
    int depth = 0;         // m
    std::vector<Poly> A;   // A_0..A_m
    QSurd exponent;        // r
};

Recurrence recurrence_from(const ThetaForm& tf, const QSurd& r);

struct SeriesSolution {
    Location center;
    bool at_infinity = false;      // series variable is 1/x
    QSurd exponent;                // r
    std::vector<QSurd> coeffs;     // C_0 = 1 .. C_N, exact
    BigFloat radius;               // distance to the nearest other singular point
};

// Exact coefficients C_0..C_N; IndicialResonance(n) when A_0(n+r) = 0.
SeriesSolution series_coeffs(const Recurrence& rec, int N);

enum class ExponentChoice { Larger, Smaller };

// Full pipeline: theta form, indicial roots, recurrence, coefficients,
// convergence radius.  The larger root is resonance-free.
SeriesSolution frobenius_series(const ODE2& ode, const Location& at, int N,
                                ExponentChoice choice = ExponentChoice::Larger);
// Same with an explicit indicial root.
SeriesSolution frobenius_series(const ODE2& ode, const Location& at, int N,
                                const QSurd& exponent);

// Guard band: |x - center| < 0.9 * radius unless overridden.
Complex series_eval(const SeriesSolution& sol, const Complex& x,
                    bool override_guard = false);

// Exact partial sum of the analytic factor sum C_n xi^n at rational xi.
QSurd series_partial_sum(const SeriesSolution& sol, const QSurd& xi);

// |f1 y'' + f2 y' + f3 y| for the truncated series at x.
BigFloat residual(const ODE2& ode, const SeriesSolution& sol, const Complex& x);

// series value and first two derivatives w.r.t. the series variable
void series_derivatives(const SeriesSolution& sol, const Complex& xi,
                        Complex& w, Complex& dw, Complex& ddw);

} // namespace ode2

#endif
