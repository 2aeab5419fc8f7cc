#include "ode2/series.hpp"
#include "ode2/errors.hpp"

#include <algorithm>

namespace ode2 {

Recurrence recurrence_from(const ThetaForm& tf, const QSurd& r) {
    return Recurrence{tf.depth(), tf.A, r};
}

SeriesSolution series_coeffs(const Recurrence& rec, int N) {
    SeriesSolution sol;
    sol.exponent = rec.exponent;
    sol.radius = std::numeric_limits<BigFloat>::infinity();
    sol.coeffs.resize(N + 1);
    sol.coeffs[0] = QSurd(1);
    const Poly& A0 = rec.A[0];
    for (int n = 1; n <= N; ++n) {
        QSurd denom = A0.eval(rec.exponent + QSurd((long)n));
        if (denom.is_zero()) {
            Error e(ErrorCode::IndicialResonance,
                    "A_0(" + (rec.exponent + QSurd((long)n)).str() +
                    ") = 0 at n = " + std::to_string(n) +
                    "; the second solution may be logarithmic");
            e.index = n;
            throw e;
        }
        QSurd acc;
        for (int j = 1; j <= std::min(n, rec.depth); ++j) {
            if (sol.coeffs[n - j].is_zero()) continue;
            acc += sol.coeffs[n - j] *
                   rec.A[j].eval(rec.exponent + QSurd((long)(n - j)));
        }
        sol.coeffs[n] = -acc / denom;
    }
    return sol;
}

namespace {

BigFloat distance_to_nearest(const ODE2& ode, const Location& center) {
    BigFloat best = std::numeric_limits<BigFloat>::infinity();
    Complex c = center.exact ? center.exact->approx() : center.approx;
    for (auto& sp : find_singular_points(ode)) {
        if (!sp.is_singular()) continue;
        if (sp.location.is_infinity()) continue;
        if (sp.location.same_as(center)) continue;
        BigFloat d = abs(sp.location.approx - c);
        best = (std::min)(best, d);
    }
    return best;
}

SeriesSolution build_series(const ODE2& ode, const Location& at, int N,
                            const QSurd* fixed_root, ExponentChoice choice) {
    if (at.is_infinity()) {
        SeriesSolution sol = build_series(invert(ode), Location::finite(QSurd(0)), N,
                                          fixed_root, choice);
        sol.center = Location::infinity();
        sol.at_infinity = true;
        return sol;
    }
    ThetaForm tf = theta_form(ode, at);
    auto [A0, roots] = indicial(tf);
    (void)A0;
    QSurd r;
    if (fixed_root) {
        if (!(*fixed_root == roots.first) && !(*fixed_root == roots.second))
            fail(ErrorCode::UsageError,
                 fixed_root->str() + " is not an indicial root at " + at.str());
        r = *fixed_root;
    } else {
        // roots are ordered by (re, im); the larger real part is resonance-free
        r = (choice == ExponentChoice::Larger) ? roots.second : roots.first;
    }
    SeriesSolution sol = series_coeffs(recurrence_from(tf, r), N);
    sol.center = at;
    sol.radius = distance_to_nearest(ode, at);
    return sol;
}

} // namespace

SeriesSolution frobenius_series(const ODE2& ode, const Location& at, int N,
                                ExponentChoice choice) {
    return build_series(ode, at, N, nullptr, choice);
}

SeriesSolution frobenius_series(const ODE2& ode, const Location& at, int N,
                                const QSurd& exponent) {
    return build_series(ode, at, N, &exponent, ExponentChoice::Larger);
}

static Complex series_variable(const SeriesSolution& sol, const Complex& x) {
    if (sol.at_infinity) return Complex(BigFloat(1)) / x;
    Complex c = sol.center.exact ? sol.center.exact->approx() : sol.center.approx;
    return x - c;
}

Complex series_eval(const SeriesSolution& sol, const Complex& x, bool override_guard) {
    Complex xi = series_variable(sol, x);
    if (!override_guard) {
        BigFloat guard = BigFloat("0.9") * sol.radius;
        if (!(abs(xi) < guard))
            fail(ErrorCode::OutsideDisk,
                 "point lies outside the guarded convergence disk (|xi| = " +
                 abs(xi).str(6) + ", guard = " + guard.str(6) + ")");
    }
    Complex s;
    for (int n = (int)sol.coeffs.size() - 1; n >= 0; --n)
        s = s * xi + sol.coeffs[n].approx();
    if (!sol.exponent.is_zero()) {
        if (sol.exponent.is_integer())
            s *= pow(xi, sol.exponent.a().get_num().get_si());
        else
            s *= pow(xi, sol.exponent.approx());
    }
    return s;
}

QSurd series_partial_sum(const SeriesSolution& sol, const QSurd& xi) {
    QSurd s;
    for (int n = (int)sol.coeffs.size() - 1; n >= 0; --n)
        s = s * xi + sol.coeffs[n];
    return s;
}

void series_derivatives(const SeriesSolution& sol, const Complex& xi,
                        Complex& w, Complex& dw, Complex& ddw) {
    // S_k = sum C_n n(n-1)...(n-k+1) xi^(n-k), then chain in the exponent
    Complex S0, S1, S2;
    for (int n = (int)sol.coeffs.size() - 1; n >= 2; --n) {
        Complex c = sol.coeffs[n].approx();
        S2 = S2 * xi + c * Complex(BigFloat((long)n * (n - 1)));
    }
    for (int n = (int)sol.coeffs.size() - 1; n >= 1; --n)
        S1 = S1 * xi + sol.coeffs[n].approx() * Complex(BigFloat((long)n));
    for (int n = (int)sol.coeffs.size() - 1; n >= 0; --n)
        S0 = S0 * xi + sol.coeffs[n].approx();
    if (sol.exponent.is_zero()) {
        w = S0;
        dw = S1;
        ddw = S2;
        return;
    }
    Complex r = sol.exponent.approx();
    Complex xr = pow(xi, r);
    Complex one(BigFloat(1));
    w = xr * S0;
    dw = xr * (S1 + r * S0 / xi);
    ddw = xr * (S2 + Complex(BigFloat(2)) * r * S1 / xi +
                r * (r - one) * S0 / (xi * xi));
}

BigFloat residual(const ODE2& ode, const SeriesSolution& sol, const Complex& x) {
    Complex xi = series_variable(sol, x);
    Complex w, dw, ddw;
    series_derivatives(sol, xi, w, dw, ddw);
    Complex y = w, yp, ypp;
    if (sol.at_infinity) {
        // xi = 1/x: y' = -xi^2 w', y'' = xi^4 w'' + 2 xi^3 w'
        Complex xi2 = xi * xi;
        yp = -(xi2 * dw);
        ypp = xi2 * xi2 * ddw + Complex(BigFloat(2)) * xi2 * xi * dw;
    } else {
        yp = dw;
        ypp = ddw;
    }
    Complex v = ode.f1().eval(x) * ypp + ode.f2().eval(x) * yp + ode.f3().eval(x) * y;
    return abs(v);
}

} // namespace ode2
