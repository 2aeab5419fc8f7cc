#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ode2/errors.hpp"
#include "ode2/singular.hpp"
#include "ode2/transform.hpp"
#include "test_helpers.hpp"

using namespace ode2;
using ode2::testing::hypergeometric;
using ode2::testing::random_rational;
using ode2::testing::random_nonzero_rational;

namespace {

ODE2 from_rationals(std::vector<Rational> f1, std::vector<Rational> f2,
                    std::vector<Rational> f3) {
    return ODE2(Poly::from_rationals(f1), Poly::from_rationals(f2),
                Poly::from_rationals(f3));
}

} // namespace

TEST_CASE("make_ode cancels content") {
    SUBCASE("(2x, 4x, 2x) reduces to (1, 2, 1)") {
        ODE2 ode = from_rationals({0, 2}, {0, 4}, {0, 2});
        CHECK(ode.f1() == Poly::one());
        CHECK(ode.f2() == Poly(QSurd(2)));
        CHECK(ode.f3() == Poly::one());
    }
    SUBCASE("content-free input is kept projectively") {
        ODE2 ode = from_rationals({0, 1, -1}, {rat(5, 4), rat(-11, 6)}, {rat(-1, 6)});
        ODE2 same = from_rationals({0, -12, 12}, {-15, 22}, {2});
        CHECK(ode == same);  // canonical equality after normalization
        CHECK(ode.projectively_equal(same));
        CHECK(Poly::gcd(Poly::gcd(ode.f1(), ode.f2()), ode.f3()).degree() == 0);
    }
    SUBCASE("zero f1 is rejected") {
        CHECK_THROWS_AS(from_rationals({}, {1}, {1}), Error);
    }
}

TEST_CASE("normal form") {
    SUBCASE("f1=1, f2=2x, f3=x^2+1 gives q' = 0") {
        ODE2 ode = from_rationals({1}, {0, 2}, {1, 0, 1});
        NormalForm nf = normal_form(ode);
        CHECK(nf.qprime.is_zero());
        CHECK(nf.prefactor_log_derivative == RatFun(Poly::from_rationals({0, -1})));
    }
    SUBCASE("p = 0 is a fixed point") {
        ODE2 ode = from_rationals({1}, {}, {3, 0, 1});
        NormalForm nf = normal_form(ode);
        CHECK(nf.qprime == ode.q());
    }
    SUBCASE("hypergeometric q' has double poles at 0 and 1") {
        ODE2 ode = hypergeometric(rat(1, 2), rat(1, 3), rat(5, 4));
        NormalForm nf = normal_form(ode);
        CHECK(nf.qprime.den().root_multiplicity(QSurd(0)) == 2);
        CHECK(nf.qprime.den().root_multiplicity(QSurd(1)) == 2);
    }
    SUBCASE("normal form is a projection") {
        std::mt19937_64 rng(9);
        for (int t = 0; t < 30; ++t) {
            ODE2 ode = from_rationals(
                {random_nonzero_rational(rng), random_rational(rng)},
                {random_rational(rng), random_rational(rng)},
                {random_rational(rng), random_rational(rng)});
            NormalForm nf = normal_form(ode);
            // w'' + q' w = 0 written with cleared denominators
            ODE2 w(nf.qprime.den(), Poly(), nf.qprime.num());
            CHECK(normal_form(w).qprime == nf.qprime);
        }
    }
}

TEST_CASE("power map x -> sqrt(t)") {
    SUBCASE("y'' + (1 - x^2) y = 0 becomes 4t u'' + 2u' + (1-t)u = 0") {
        ODE2 ode = from_rationals({1}, {}, {1, 0, -1});
        TransformRecord rec;
        ODE2 out = change_independent(ode, 2L, rec);
        ODE2 expected = from_rationals({0, 4}, {2}, {1, -1});
        CHECK(out == expected);
    }
    SUBCASE("odd first-derivative structure survives: y'' + x y' + y") {
        // 2[f1 + sqrt(t) f2] with f2 = x turns polynomial here
        ODE2 ode = from_rationals({1}, {0, 1}, {1});
        TransformRecord rec;
        ODE2 out = change_independent(ode, 2L, rec);
        CHECK(out == from_rationals({0, 4}, {2, 2}, {1}));
    }
    SUBCASE("mixed parity fails: y'' + y' + y") {
        ODE2 ode = from_rationals({1}, {1}, {1});
        TransformRecord rec;
        CHECK_THROWS_AS(change_independent(ode, 2L, rec), Error);
        try {
            change_independent(ode, 2L, rec);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonPolynomialResult);
        }
    }
}

TEST_CASE("Mobius changes of variable") {
    ODE2 hg = hypergeometric(rat(1, 2), rat(1, 3), rat(5, 4));
    SUBCASE("identity keeps the equation") {
        TransformRecord rec;
        ODE2 out = change_independent(hg, Mobius::identity(), rec);
        CHECK(out == hg);
    }
    SUBCASE("map then inverse map returns the equation") {
        std::mt19937_64 rng(21);
        for (int t = 0; t < 40; ++t) {
            QSurd a{random_rational(rng, -4, 4, 3)}, b{random_rational(rng, -4, 4, 3)};
            QSurd c{random_rational(rng, -4, 4, 3)}, d{random_rational(rng, -4, 4, 3)};
            if ((a * d - b * c).is_zero()) continue;
            Mobius m(a, b, c, d);
            TransformRecord rec;
            ODE2 mid = change_independent(hg, m, rec);
            ODE2 back = change_independent(mid, m.inverse(), rec);
            CHECK(back == hg);
        }
    }
    SUBCASE("three-point map sends the marked points") {
        Mobius m = Mobius::three_point(Location::finite(QSurd(-2)),
                                       Location::finite(QSurd(rat(1, 3))),
                                       Location::finite(QSurd(5)));
        CHECK(*m.apply(Location::finite(QSurd(-2))).exact == QSurd(0));
        CHECK(*m.apply(Location::finite(QSurd(rat(1, 3)))).exact == QSurd(1));
        CHECK(m.apply(Location::finite(QSurd(5))).is_infinity());
    }
}

TEST_CASE("power prefactor") {
    SUBCASE("Bessel-type shift by x^(1/2)") {
        // x^2 y'' + x y' + (x^2 - 1/4) y = 0 with rho = 1/2 at 0
        ODE2 ode = from_rationals({0, 0, 1}, {0, 1}, {rat(-1, 4), 0, 1});
        TransformRecord rec;
        ODE2 out = prefactor_power(ode, {{QSurd(0), QSurd(rat(1, 2))}}, rec);
        CHECK(out == from_rationals({0, 0, 1}, {0, 2}, {0, 0, 1}));
    }
    SUBCASE("zero shift is the identity") {
        ODE2 ode = hypergeometric(rat(1, 2), rat(1, 3), rat(5, 4));
        TransformRecord rec;
        ODE2 out = prefactor_power(ode, {{QSurd(0), QSurd(0)}}, rec);
        CHECK(out == ode);
    }
    SUBCASE("exponent shift law against the singular module") {
        std::mt19937_64 rng(77);
        int done = 0;
        while (done < 200) {
            Rational a = random_nonzero_rational(rng), b = random_nonzero_rational(rng);
            Rational c = random_rational(rng, -4, 4, 3);
            ODE2 ode = hypergeometric(a, b, c);
            QSurd rho0{random_rational(rng, -3, 3, 2)};
            QSurd rho1{random_rational(rng, -3, 3, 2)};
            TransformRecord rec;
            ODE2 out = prefactor_power(ode, {{QSurd(0), rho0}, {QSurd(1), rho1}}, rec);
            auto e_new0 = indices(out, Location::finite(QSurd(0)));
            auto e_old0 = indices(ode, Location::finite(QSurd(0)));
            // multiset equality of shifted exponents
            bool ok0 = (e_new0.first == e_old0.first - rho0 &&
                        e_new0.second == e_old0.second - rho0) ||
                       (e_new0.first == e_old0.second - rho0 &&
                        e_new0.second == e_old0.first - rho0);
            CHECK(ok0);
            auto e_newi = indices(out, Location::infinity());
            auto e_oldi = indices(ode, Location::infinity());
            QSurd s = rho0 + rho1;
            bool oki = (e_newi.first == e_oldi.first + s &&
                        e_newi.second == e_oldi.second + s) ||
                       (e_newi.first == e_oldi.second + s &&
                        e_newi.second == e_oldi.first + s);
            CHECK(oki);
            ++done;
        }
    }
}

TEST_CASE("exponential prefactor") {
    SUBCASE("lambda = 0 is the identity") {
        ODE2 ode = from_rationals({1}, {}, {-1});
        TransformRecord rec;
        CHECK(prefactor_exp(ode, QSurd(0), 1, rec) == ode);
    }
    SUBCASE("y'' - y = 0 with e^x becomes u'' + 2u' = 0") {
        ODE2 ode = from_rationals({1}, {}, {-1});
        TransformRecord rec;
        ODE2 out = prefactor_exp(ode, QSurd(1), 1, rec);
        CHECK(out == from_rationals({1}, {2}, {}));
    }
    SUBCASE("Kummer reflection") {
        // x y'' + (b - x) y' - a y with e^x gives x u'' + (b + x) u' + (b - a) u
        Rational a = rat(1, 3), b = rat(3, 2);
        ODE2 ode(Poly::x(), Poly::from_rationals({b, -1}), Poly::from_rationals({-a}));
        TransformRecord rec;
        ODE2 out = prefactor_exp(ode, QSurd(1), 1, rec);
        CHECK(out == ODE2(Poly::x(), Poly::from_rationals({b, 1}),
                          Poly::from_rationals({b - a})));
    }
}

TEST_CASE("Fuchs exponent sum is Mobius invariant") {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 25; ++t) {
        ODE2 ode = hypergeometric(random_nonzero_rational(rng),
                                  random_nonzero_rational(rng),
                                  random_rational(rng, -4, 4, 3));
        PSymbol before = psymbol(ode);
        QSurd a{random_rational(rng, -4, 4, 2)}, b{random_rational(rng, -4, 4, 2)};
        QSurd c{random_rational(rng, -4, 4, 2)}, d{random_rational(rng, -4, 4, 2)};
        if ((a * d - b * c).is_zero()) continue;
        TransformRecord rec;
        ODE2 out = change_independent(ode, Mobius(a, b, c, d), rec);
        PSymbol after = psymbol(out);
        CHECK(before.exponent_sum == after.exponent_sum);
        CHECK(after.fuchs_ok);
    }
}

TEST_CASE("inversion is an involution") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        ODE2 ode = from_rationals(
            {random_nonzero_rational(rng), random_rational(rng), random_rational(rng)},
            {random_rational(rng), random_rational(rng)},
            {random_rational(rng)});
        CHECK(invert(invert(ode)).projectively_equal(ode));
    }
}
