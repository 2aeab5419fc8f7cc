#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ode2/errors.hpp"
#include "ode2/report.hpp"
#include "test_helpers.hpp"

using namespace ode2;
using namespace ode2::testing;

TEST_CASE("signatures of the standard forms") {
    SUBCASE("DLMF Heun: four regular points {0, 1, a, inf}") {
        ODE2 ode = heung_form(rat(3), rat(1), rat(1, 2), rat(2), rat(1, 3), rat(1, 5));
        Signature sig = signature_of(ode);
        CHECK(type_of(sig) == EquationType::HeunGeneral);
        REQUIRE(sig.points.size() == 4);
        for (auto& sp : sig.points) CHECK(sp.kind == PointKind::Regular);
        CHECK(*sig.points[2].location.exact == QSurd(3));
    }
    SUBCASE("Maple confluent Heun: {0,1} regular plus rank-1 at infinity") {
        ODE2 ode = heunc_maple(rat(1), rat(1, 2), rat(1, 3), rat(2), rat(1));
        Signature sig = signature_of(ode);
        CHECK(type_of(sig) == EquationType::HeunConfluent);
        REQUIRE(sig.points.size() == 3);
        CHECK(sig.points[2].location.is_infinity());
        CHECK(sig.points[2].rank == 1);
    }
    SUBCASE("y'' + y = 0 is outside the seven families") {
        ODE2 ode(P({1}), P({}), P({1}));
        Signature sig = signature_of(ode);
        REQUIRE(sig.points.size() == 1);
        CHECK(sig.points[0].location.is_infinity());
        CHECK(sig.points[0].rank == 1);
        CHECK(type_of(sig) == EquationType::Unrecognized);
        CHECK_THROWS_AS(solve(ode), Error);
    }
}

TEST_CASE("already-standard equations standardize with an identity record") {
    ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
    auto [std1, rec] = standardize(ode, EquationType::Hypergeometric);
    CHECK(std1 == ode);
    CHECK(rec.argument_map().is_identity());
    for (auto& step : rec.steps) {
        if (step.kind == TransformStep::Kind::PowerPrefactor)
            for (auto& [pt, rho] : step.shifts) CHECK(rho.is_zero());
        if (step.kind == TransformStep::Kind::ExpPrefactor)
            CHECK(step.lambda.is_zero());
    }
}

TEST_CASE("Mobius-scrambled hypergeometric is recovered") {
    ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
    // send {0, 1, inf} to {-2, 1/3, 5}
    Mobius scramble = Mobius::three_point(Location::finite(QSurd(-2)),
                                          Location::finite(QSurd(rat(1, 3))),
                                          Location::finite(QSurd(5))).inverse();
    TransformRecord screc;
    ODE2 scrambled = change_independent(ode, scramble, screc);
    SUBCASE("exponent multisets move with the points") {
        auto e = indices(scrambled, Location::finite(QSurd(-2)));
        CHECK(e.first == QSurd(rat(-1, 4)));
        CHECK(e.second == QSurd(0));
    }
    SUBCASE("solve recovers an equivalent descriptor") {
        // the infinity-choice rule picks the point with the largest exponent
        // spread (here the image of 1, spread 5/12), so the recovered
        // parameters are the Kummer-equivalent set (1/3, 3/4, 5/4)
        SolveResult res = solve(scrambled);
        CHECK(res.type == EquationType::Hypergeometric);
        auto& pm = res.solutions[0].params;
        CHECK(pm.at("c") == QSurd(rat(5, 4)));
        CHECK(pm.at("a") == QSurd(rat(1, 3)));
        CHECK(pm.at("b") == QSurd(rat(3, 4)));
        CHECK(verify_descriptor(scrambled, res.solutions[0]) < tol("1e-15"));
    }
}

TEST_CASE("solve on the DLMF hypergeometric") {
    ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
    SolveResult res = solve(ode);
    CHECK(res.type == EquationType::Hypergeometric);
    CHECK(res.solutions[0].function == "Gauss2F1");
    CHECK(res.solutions[0].params.at("a") == QSurd(rat(1, 3)));
    CHECK(res.solutions[0].params.at("b") == QSurd(rat(1, 2)));
    CHECK(res.solutions[0].params.at("c") == QSurd(rat(5, 4)));
    CHECK(res.solutions[0].argument.is_identity());
    // c is not an integer: both local solutions exist
    REQUIRE(res.solutions.size() == 2);
    CHECK_FALSE(res.resonant);
    // second solution: x^(1-c) 2F1(a+1-c, b+1-c; 2-c; x)
    auto& pm2 = res.solutions[1].params;
    CHECK(pm2.at("c") == QSurd(rat(3, 4)));
    CHECK(*res.solutions[1].exponent == QSurd(rat(-1, 4)));
    CHECK(verify_descriptor(ode, res.solutions[1]) < tol("1e-15"));

    // integer c: one solution plus the resonance flag
    SolveResult res2 = solve(hg_dlmf(rat(1, 2), rat(1, 3), rat(2)));
    CHECK(res2.solutions.size() == 1);
    CHECK(res2.resonant);
}

TEST_CASE("power-map image of y'' + (1 - x^2) y = 0 solves as Kummer") {
    ODE2 ode(P({1}), P({}), P({1, 0, -1}));
    TransformRecord rec;
    ODE2 out = change_independent(ode, 2L, rec);
    CHECK(out == ODE2(P({0, 4}), P({2}), P({1, -1})));
    SolveResult res = solve(out);
    CHECK(res.type == EquationType::ConfluentHypergeometric);
    CHECK(res.solutions[0].function == "KummerM");
    CHECK(res.solutions[0].params.at("b") == QSurd(rat(1, 2)));
    CHECK(res.solutions[0].params.at("a").is_rational());
    CHECK(verify_descriptor(out, res.solutions[0]) < tol("1e-15"));
}

namespace {

void roundtrip_family(EquationType type, int trials, unsigned seed,
                      BigFloat residual_tol = BigFloat("1e-12")) {
    std::mt19937_64 rng(seed);
    int done = 0;
    while (done < trials) {
        ParameterMap pm;
        pm.type = type;
        auto nz = [&](long lo = -5, long hi = 5) {
            return QSurd(random_nonzero_rational(rng, lo, hi, 4));
        };
        auto any = [&](long lo = -5, long hi = 5) {
            return QSurd(random_rational(rng, lo, hi, 4));
        };
        switch (type) {
        case EquationType::Hypergeometric:
            pm.values["a"] = nz();
            pm.values["b"] = nz();
            pm.values["c"] = any();
            break;
        case EquationType::ConfluentHypergeometric:
            pm.values["a"] = nz();
            pm.values["b"] = any();
            break;
        case EquationType::HeunGeneral: {
            pm.values["a"] = QSurd(rat(2 + (long)(done % 3)));
            pm.values["q"] = any();
            pm.values["alpha"] = nz();
            pm.values["beta"] = nz();
            pm.values["gamma"] = nz();
            pm.values["delta"] = nz();
            QSurd eps = pm.at("alpha") + pm.at("beta") + QSurd(1) -
                        pm.at("gamma") - pm.at("delta");
            if (eps.is_zero()) continue;
            break;
        }
        case EquationType::HeunConfluent:
            pm.values["alpha"] = nz();
            pm.values["beta"] = any();
            pm.values["gamma"] = any();
            pm.values["mu"] = any();
            pm.values["nu"] = any();
            if (pm.at("beta") == QSurd(-1) || pm.at("gamma") == QSurd(-1)) continue;
            break;
        case EquationType::HeunDoubleConfluent:
            pm.values["q"] = any();
            pm.values["alpha"] = any();
            pm.values["gamma"] = nz();
            pm.values["delta"] = any();
            pm.values["epsilon"] = nz();
            break;
        case EquationType::HeunBiconfluent:
            pm.values["q"] = any();
            pm.values["alpha"] = any();
            pm.values["gamma"] = nz();
            pm.values["delta"] = any();
            pm.values["epsilon"] = nz();
            break;
        case EquationType::HeunTriconfluent:
            pm.values["q"] = any();
            pm.values["alpha"] = nz();
            pm.values["gamma"] = any();
            pm.values["delta"] = any();
            pm.values["epsilon"] = nz();
            break;
        default:
            return;
        }
        ODE2 ode = standard_equation(type, pm);
        if (classify(ode) != type) continue;  // degenerate draw
        SolveResult res = solve(ode);
        CHECK(res.type == type);
        auto& got = res.solutions[0].params;
        // regenerating from the recovered parameters must reproduce the input
        CHECK(standard_equation(type, got).projectively_equal(ode));
        // parameters match up to the documented orderings
        for (auto& [k, v] : pm.values) {
            if (type == EquationType::Hypergeometric && (k == "a" || k == "b")) {
                CHECK((got.at("a") == pm.at(k) || got.at("b") == pm.at(k)));
            } else if (type == EquationType::HeunGeneral &&
                       (k == "alpha" || k == "beta")) {
                CHECK((got.at("alpha") == pm.at(k) || got.at("beta") == pm.at(k)));
            } else {
                CHECK(got.at(k) == v);
            }
        }
        if (done % 5 == 0)
            CHECK(verify_descriptor(ode, res.solutions[0], 3, 40) < residual_tol);
        ++done;
    }
}

} // namespace

TEST_CASE("round trips per family") {
    roundtrip_family(EquationType::Hypergeometric, 12, 101);
    roundtrip_family(EquationType::ConfluentHypergeometric, 12, 102);
    roundtrip_family(EquationType::HeunGeneral, 8, 103);
    roundtrip_family(EquationType::HeunConfluent, 8, 104);
    roundtrip_family(EquationType::HeunDoubleConfluent, 8, 105);
    roundtrip_family(EquationType::HeunBiconfluent, 8, 106);
    roundtrip_family(EquationType::HeunTriconfluent, 8, 107);
}

TEST_CASE("Maple confluent Heun relations") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 10; ++t) {
        Rational alpha = random_nonzero_rational(rng, -4, 4, 3);
        Rational beta = random_rational(rng, -4, 4, 3);
        Rational gamma = random_rational(rng, -4, 4, 3);
        Rational delta = random_rational(rng, -4, 4, 3);
        Rational eta = random_rational(rng, -4, 4, 3);
        if (beta == -1 || gamma == -1) continue;
        ODE2 ode = heunc_maple(alpha, beta, gamma, delta, eta);
        SolveResult res = solve(ode);
        REQUIRE(res.type == EquationType::HeunConfluent);
        auto& pm = res.solutions[0].params;
        CHECK(pm.at("alpha") == QSurd(alpha));
        CHECK(pm.at("beta") == QSurd(beta));
        CHECK(pm.at("gamma") == QSurd(gamma));
        CHECK(pm.at("delta") == QSurd(delta));
        CHECK(pm.at("eta") == QSurd(eta));
        // the defining relations hold exactly for the recovered auxiliaries
        QSurd mu = pm.at("mu"), nu = pm.at("nu");
        CHECK(pm.at("delta") ==
              mu + nu - pm.at("alpha") * (pm.at("beta") + pm.at("gamma") + QSurd(2)) / QSurd(2));
        CHECK(pm.at("eta") ==
              ((pm.at("alpha") - pm.at("gamma")) * (pm.at("beta") + QSurd(1)) -
               pm.at("beta")) / QSurd(2) - mu);
    }
}

TEST_CASE("Maple double-confluent form maps to the Mathematica shape") {
    ODE2 ode = heund_maple(rat(1), rat(2), rat(1, 2), rat(3));
    Signature sig = signature_of(ode);
    CHECK(type_of(sig) == EquationType::HeunDoubleConfluent);
    SolveResult res = solve(ode);
    CHECK(res.solutions[0].function == "HeunD");
    // the placement sends {-1, 1} to {0, inf}
    Mobius arg = res.solutions[0].argument;
    CHECK(*arg.apply(Location::finite(QSurd(-1))).exact == QSurd(0));
    CHECK(arg.apply(Location::finite(QSurd(1))).is_infinity());
    CHECK(verify_descriptor(ode, res.solutions[0]) < tol("1e-12"));
}

TEST_CASE("classification is invariant under affine maps") {
    std::mt19937_64 rng(31337);
    std::vector<ODE2> corpus = {
        hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4)),
        chg_dlmf(rat(1, 2), rat(3, 4)),
        heung_form(rat(2), rat(1), rat(1), rat(1), rat(1), rat(1)),
        heunc_mathematica(rat(1), rat(1, 2), rat(1, 3), rat(2), rat(1)),
        heund_mathematica(rat(1, 2), rat(2), rat(1), rat(3), rat(1)),
        heunb_mathematica(rat(1), rat(2), rat(1), rat(1), rat(-2)),
        heunt_mathematica(rat(1), rat(2), rat(1), rat(1, 2), rat(1)),
    };
    for (auto& ode : corpus) {
        EquationType t0 = classify(ode);
        for (int t = 0; t < 6; ++t) {
            QSurd s{random_nonzero_rational(rng, -4, 4, 2)};
            QSurd b{random_rational(rng, -4, 4, 2)};
            TransformRecord rec;
            ODE2 out = change_independent(ode, Mobius(s, b, QSurd(0), QSurd(1)), rec);
            CHECK(classify(out) == t0);
        }
    }
}

TEST_CASE("epsilon constraint holds for extracted Heun parameters") {
    std::mt19937_64 rng(4096);
    for (int t = 0; t < 10; ++t) {
        Rational gamma = random_nonzero_rational(rng, -3, 3, 2);
        Rational delta = random_nonzero_rational(rng, -3, 3, 2);
        Rational alpha = random_nonzero_rational(rng, -3, 3, 2);
        Rational beta = random_nonzero_rational(rng, -3, 3, 2);
        if (alpha + beta + 1 - gamma - delta == 0) continue;
        ODE2 ode = heung_form(rat(3), random_rational(rng), alpha, beta, gamma, delta);
        if (classify(ode) != EquationType::HeunGeneral) continue;
        auto pm = solve(ode).solutions[0].params;
        CHECK(pm.at("gamma") + pm.at("delta") + pm.at("epsilon") ==
              pm.at("alpha") + pm.at("beta") + QSurd(1));
    }
}

TEST_CASE("surd-located hypergeometric stays exact") {
    // scramble 0 -> sqrt2, 1 -> -sqrt2, inf -> inf via x = sqrt2 - 2 sqrt2 t
    ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
    QSurd s2 = QSurd::sqrt_rational(rat(2));
    TransformRecord rec;
    // t = (x - sqrt2)/(-2 sqrt2)
    Mobius m(QSurd(1), -s2, QSurd(0), QSurd(0) - QSurd(2) * s2);
    ODE2 scrambled = change_independent(ode, m.inverse(), rec);
    Signature sig = signature_of(scrambled);
    CHECK(type_of(sig) == EquationType::Hypergeometric);
    SolveResult res = solve(scrambled);
    CHECK(res.solutions[0].params.at("c") == QSurd(rat(5, 4)));
}

TEST_CASE("0F1-shaped confluent equations are refused honestly") {
    // x y'' + b y' + c y = 0 is rank-1 at infinity but outside the Kummer
    // affine orbit
    ODE2 ode(P({0, 1}), P({rat(1, 2)}), P({rat(1)}));
    CHECK(classify(ode) == EquationType::ConfluentHypergeometric);
    try {
        solve(ode);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotStandardizable);
    }
}
