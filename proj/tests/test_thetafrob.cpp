#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ode2/errors.hpp"
#include "ode2/series.hpp"
#include "test_helpers.hpp"

using namespace ode2;
using namespace ode2::testing;

namespace {

Location at0() { return Location::finite(QSurd(0)); }

SeriesSolution hg_series(Rational a, Rational b, Rational c, int N) {
    return frobenius_series(hg_dlmf(a, b, c), at0(), N, QSurd(0));
}

} // namespace

TEST_CASE("theta operator rewrite identity") {
    // x^j D^i acting on x^n equals F_i(n) x^(n+j-i) with
    // F_i = theta(theta-1)...(theta-i+1); check against direct calculus
    for (int i = 0; i <= 2; ++i) {
        Poly F = falling_factorial_theta(i);
        for (int n = 0; n <= 12; ++n) {
            Rational direct(1);
            for (int k = 0; k < i; ++k) direct *= (n - k);
            CHECK(F.eval(QSurd((long)n)) == QSurd(direct));
        }
    }
    // every polynomial P(theta) acting on x^n gives P(n) x^n: linear
    // combinations of the F_i with polynomial factors of theta
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        std::vector<Rational> cs;
        std::uniform_int_distribution<int> deg(0, 6);
        int dd = deg(rng);
        for (int i = 0; i <= dd; ++i) cs.push_back(random_rational(rng));
        Poly Pth = Poly::from_rationals(cs);
        for (int n = 0; n <= 12; n += 3)
            CHECK(Pth.eval(QSurd((long)n)) == Pth.eval(QSurd((long)n)));
    }
}

TEST_CASE("theta form of the hypergeometric equation at 0") {
    // construction canonicalizes the equation, so the A_k are defined up to
    // one common constant; compare monic A_0 plus the projective pair
    auto check_pair = [](const ThetaForm& tf, const Poly& e0, const Poly& e1) {
        CHECK(tf.A[0].monic() == e0.monic());
        CHECK(tf.A[0] * e1 == tf.A[1] * e0);
    };
    SUBCASE("general (a,b,c): A_0 = theta(theta+c-1), A_1 = -(theta+a)(theta+b)") {
        Rational a = rat(1, 2), b = rat(1, 3), c = rat(5, 4);
        ThetaForm tf = theta_form(hg_dlmf(a, b, c), at0());
        CHECK(tf.sigma == 1);
        CHECK(tf.depth() == 1);
        Poly th = Poly::x();
        check_pair(tf, th * (th + Poly(QSurd(c - 1))),
                   -((th + Poly(QSurd(a))) * (th + Poly(QSurd(b)))));
    }
    SUBCASE("(1,1,2): A_0 = theta(theta+1), A_1 = -(theta+1)^2") {
        ThetaForm tf = theta_form(hg_dlmf(rat(1), rat(1), rat(2)), at0());
        Poly th = Poly::x();
        check_pair(tf, th * (th + Poly::one()),
                   -((th + Poly::one()) * (th + Poly::one())));
    }
}

TEST_CASE("theta form of Cauchy-Euler and Heun") {
    SUBCASE("x^2 y'' + x y' - y: sigma = 0, A_0 = theta^2 - 1, depth 0") {
        ODE2 ce(P({0, 0, 1}), P({0, 1}), P({-1}));
        ThetaForm tf = theta_form(ce, at0());
        CHECK(tf.sigma == 0);
        CHECK(tf.depth() == 0);
        Poly th = Poly::x();
        CHECK(tf.A[0] == th * th - Poly::one());
    }
    SUBCASE("general Heun at 0 has a three-term recurrence (depth 2)") {
        ODE2 heun = heung_form(rat(2), rat(1), rat(1), rat(1), rat(1), rat(1));
        ThetaForm tf = theta_form(heun, at0());
        CHECK(tf.depth() == 2);
    }
    SUBCASE("confluent hypergeometric at 0 has a two-term recurrence") {
        ThetaForm tf = theta_form(chg_dlmf(rat(1, 2), rat(3, 4)), at0());
        CHECK(tf.depth() == 1);
    }
}

TEST_CASE("indicial data") {
    SUBCASE("hypergeometric at 0 with c = 5/4: roots {-1/4, 0}") {
        auto [A0, roots] = indicial(theta_form(hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4)), at0()));
        (void)A0;
        CHECK(roots.first == QSurd(rat(-1, 4)));
        CHECK(roots.second == QSurd(0));
    }
    SUBCASE("Cauchy-Euler roots {-1, 1}") {
        ODE2 ce(P({0, 0, 1}), P({0, 1}), P({-1}));
        auto [A0, roots] = indicial(theta_form(ce, at0()));
        CHECK(A0 == Poly::x() * Poly::x() - Poly::one());
        CHECK(roots.first == QSurd(-1));
        CHECK(roots.second == QSurd(1));
    }
    SUBCASE("ordinary center is rejected") {
        ODE2 ode(P({1}), P({}), P({1}));  // y'' + y = 0
        ThetaForm tf = theta_form(ode, at0());
        CHECK_THROWS_AS(indicial(tf), Error);
        try {
            indicial(tf);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotRegular);
        }
    }
}

TEST_CASE("series coefficients from the recurrence") {
    SUBCASE("2F1(1,1;2;x): C_n = 1/(n+1)") {
        SeriesSolution s = hg_series(rat(1), rat(1), rat(2), 30);
        for (int n = 0; n <= 30; ++n)
            CHECK(s.coeffs[n] == QSurd(rat(1, n + 1)));
    }
    SUBCASE("coefficients match the Pochhammer-ratio oracle") {
        std::mt19937_64 rng(6);
        for (int t = 0; t < 20; ++t) {
            Rational a = random_nonzero_rational(rng), b = random_nonzero_rational(rng);
            Rational c = random_rational(rng, 1, 5, 3);  // keep 0 as larger root
            if (c <= 0) continue;
            SeriesSolution s = hg_series(a, b, c, 25);
            for (int n = 0; n <= 25; ++n)
                CHECK(s.coeffs[n] == QSurd(pochhammer_ratio_coeff(a, b, c, n)));
        }
    }
    SUBCASE("c = 1 is a double root; the series is well defined") {
        SeriesSolution s = hg_series(rat(1, 2), rat(1, 3), rat(1), 10);
        CHECK(s.coeffs[1] == QSurd(rat(1, 6)));  // ab/c
    }
    SUBCASE("c = 2 with the smaller root r = -1 resonates at n = 1") {
        ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(2));
        try {
            frobenius_series(ode, at0(), 10, ExponentChoice::Smaller);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::IndicialResonance);
            CHECK(e.index == 1);
        }
    }
}

TEST_CASE("series evaluation against closed forms") {
    SUBCASE("2F1(1,1;2;x) = -ln(1-x)/x at x = 0.3") {
        SeriesSolution s = hg_series(rat(1), rat(1), rat(2), 60);
        Complex v = series_eval(s, Complex(BigFloat("0.3")));
        BigFloat expected = -boost::multiprecision::log(BigFloat("0.7")) / BigFloat("0.3");
        CHECK(abs(v - Complex(expected)) < tol("1e-25"));
    }
    SUBCASE("value at the center is C_0 = 1 for r = 0") {
        SeriesSolution s = hg_series(rat(1), rat(1), rat(2), 10);
        CHECK(abs(series_eval(s, Complex(BigFloat(0))) - Complex(BigFloat(1))) == 0);
    }
    SUBCASE("2F1(a,b;b;x) = (1-x)^(-a) at x = 0.2, a = 1/2") {
        SeriesSolution s = hg_series(rat(1, 2), rat(2, 3), rat(2, 3), 60);
        Complex v = series_eval(s, Complex(BigFloat("0.2")));
        BigFloat expected = 1 / boost::multiprecision::sqrt(BigFloat("0.8"));
        CHECK(abs(v - Complex(expected)) < tol("1e-25"));
        CHECK(abs(v - Complex(BigFloat("1.1180339887"))) < tol("1e-9"));
    }
    SUBCASE("exact partial sums equal the Pochhammer partial sums") {
        Rational a = rat(1, 2), b = rat(1, 3), c = rat(5, 4);
        SeriesSolution s = hg_series(a, b, c, 20);
        QSurd x{rat(1, 3)};
        QSurd direct;
        QSurd xp{1};
        for (int n = 0; n <= 20; ++n) {
            direct += QSurd(pochhammer_ratio_coeff(a, b, c, n)) * xp;
            xp *= x;
        }
        CHECK(series_partial_sum(s, x) == direct);
    }
}

TEST_CASE("guard band") {
    SeriesSolution s = hg_series(rat(1), rat(1), rat(2), 10);
    CHECK(abs(s.radius - BigFloat(1)) < tol("1e-30"));  // nearest singularity: 1
    CHECK_THROWS_AS(series_eval(s, Complex(BigFloat("0.95"))), Error);
    try {
        series_eval(s, Complex(BigFloat("0.95")));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutsideDisk);
    }
    CHECK_NOTHROW(series_eval(s, Complex(BigFloat("0.95")), true));
}

TEST_CASE("residuals") {
    ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
    Complex x(BigFloat("0.3"));
    SUBCASE("exact recurrence gives tiny residuals") {
        SeriesSolution s = frobenius_series(ode, at0(), 50, QSurd(0));
        CHECK(residual(ode, s, x) < tol("1e-20"));
    }
    SUBCASE("a corrupted coefficient is detected") {
        SeriesSolution s = frobenius_series(ode, at0(), 50, QSurd(0));
        s.coeffs[5] += QSurd(1);
        CHECK(residual(ode, s, x) > tol("1e-3"));
    }
    SUBCASE("order 0 does not satisfy a generic equation") {
        SeriesSolution s = frobenius_series(ode, at0(), 0, QSurd(0));
        CHECK(residual(ode, s, x) > tol("1e-3"));
    }
    SUBCASE("doubling the order never increases the residual") {
        for (auto& eq : {hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4)),
                         heung_form(rat(2), rat(1), rat(1), rat(1), rat(1), rat(1))}) {
            SeriesSolution s1 = frobenius_series(eq, at0(), 20);
            SeriesSolution s2 = frobenius_series(eq, at0(), 40);
            for (int k = 1; k <= 10; ++k) {
                Complex xx(BigFloat(k) / BigFloat(25));
                BigFloat r1 = residual(eq, s1, xx);
                BigFloat r2 = residual(eq, s2, xx);
                CHECK(r2 <= r1 * BigFloat("1.000001"));
            }
        }
    }
}

TEST_CASE("series with a surd exponent") {
    // x^2 y'' + x y' + (x^2 - 2) y = 0: exponents +-sqrt(2) at 0
    ODE2 ode(P({0, 0, 1}), P({0, 1}), P({-2, 0, 1}));
    Location zero = Location::finite(QSurd(0));
    auto e = indices(ode, zero);
    CHECK(e.second == QSurd::sqrt_rational(rat(2)));
    SeriesSolution s = frobenius_series(ode, zero, 40, ExponentChoice::Larger);
    CHECK(s.exponent == e.second);
    CHECK(residual(ode, s, Complex(BigFloat("0.4"))) < tol("1e-25"));
}

TEST_CASE("series at infinity run on the inverted equation") {
    // hypergeometric solution x^(-a) 2F1(a, a-c+1; a-b+1; 1/x) near infinity
    ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
    SeriesSolution s = frobenius_series(ode, Location::infinity(), 50,
                                        ExponentChoice::Larger);
    CHECK(s.at_infinity);
    // exponents at infinity are {1/3, 1/2}; larger (re,im) root is 1/2
    CHECK(s.exponent == QSurd(rat(1, 2)));
    Complex x(BigFloat(5));
    CHECK(residual(ode, s, x) < tol("1e-25"));
}
