#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ode2/errors.hpp"
#include "ode2/theta.hpp"
#include "test_helpers.hpp"

using namespace ode2;
using namespace ode2::testing;

namespace {

const SingularPoint& point_of(const std::vector<SingularPoint>& pts,
                              const Location& loc) {
    for (auto& sp : pts)
        if (sp.location.same_as(loc)) return sp;
    REQUIRE(false);
    return pts.front();
}

Location at(long v) { return Location::finite(QSurd(v)); }

} // namespace

TEST_CASE("hypergeometric singularities are {0, 1, inf}, all regular") {
    ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
    auto pts = find_singular_points(ode);
    REQUIRE(pts.size() == 3);
    for (auto& sp : pts) CHECK(sp.kind == PointKind::Regular);
    CHECK(point_of(pts, at(0)).rank == 0);
    CHECK(point_of(pts, at(1)).rank == 0);
    CHECK(point_of(pts, Location::infinity()).kind == PointKind::Regular);
}

TEST_CASE("double-confluent and triconfluent signatures") {
    SUBCASE("Mathematica double-confluent: rank-1 at 0 and infinity") {
        ODE2 ode = heund_mathematica(rat(1, 2), rat(2), rat(1), rat(3), rat(1));
        auto pts = find_singular_points(ode);
        REQUIRE(pts.size() == 2);
        CHECK(point_of(pts, at(0)).kind == PointKind::Irregular);
        CHECK(point_of(pts, at(0)).rank == 1);
        CHECK(point_of(pts, Location::infinity()).rank == 1);
    }
    SUBCASE("triconfluent: single rank-3 point at infinity") {
        ODE2 ode = heunt_mathematica(rat(1), rat(2), rat(1), rat(1, 2), rat(1));
        auto pts = find_singular_points(ode);
        int singular = 0;
        for (auto& sp : pts)
            if (sp.is_singular()) ++singular;
        CHECK(singular == 1);
        auto& inf = point_of(pts, Location::infinity());
        CHECK(inf.kind == PointKind::Irregular);
        CHECK(inf.rank == 3);
    }
}

TEST_CASE("rank_at examples") {
    SUBCASE("biconfluent rank 2 at infinity") {
        ODE2 ode = heunb_mathematica(rat(1), rat(2), rat(1), rat(1), rat(-2));
        CHECK(rank_at(ode, Location::infinity()) == 2);
    }
    SUBCASE("regular singular points have rank 0") {
        ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
        CHECK(rank_at(ode, at(0)) == 0);
    }
    SUBCASE("Maple double-confluent has rank 1 at x = 1 and x = -1") {
        ODE2 ode = heund_maple(rat(1), rat(2), rat(1), rat(3));
        CHECK(rank_at(ode, at(1)) == 1);
        CHECK(rank_at(ode, at(-1)) == 1);
        CHECK_THROWS_AS(rank_at(ode, Location::infinity()), Error);  // ordinary
    }
    SUBCASE("ordinary points raise NotSingular") {
        ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
        CHECK_THROWS_AS(rank_at(ode, at(7)), Error);
    }
}

TEST_CASE("characteristic exponents") {
    ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
    SUBCASE("at infinity: {a, b} = {1/3, 1/2}") {
        auto e = indices(ode, Location::infinity());
        CHECK(e.first == QSurd(rat(1, 3)));
        CHECK(e.second == QSurd(rat(1, 2)));
    }
    SUBCASE("at 0: {1-c, 0} = {-1/4, 0}") {
        auto e = indices(ode, at(0));
        CHECK(e.first == QSurd(rat(-1, 4)));
        CHECK(e.second == QSurd(0));
    }
    SUBCASE("Cauchy-Euler x^2 y'' + x y' - y = 0 at 0: {-1, 1}") {
        ODE2 ce(P({0, 0, 1}), P({0, 1}), P({-1}));
        auto e = indices(ce, at(0));
        CHECK(e.first == QSurd(-1));
        CHECK(e.second == QSurd(1));
    }
    SUBCASE("irregular points refuse indices") {
        ODE2 chg = chg_dlmf(rat(1, 2), rat(3, 4));
        CHECK_THROWS_AS(indices(chg, Location::infinity()), Error);
    }
    SUBCASE("complex conjugate singular points carry conjugate exponents") {
        // f1 = x^2 + 1: singular at +-i
        ODE2 ode2(P({1, 0, 1}), P({0, 1}), P({1}));
        QSurd i(rat(0), rat(1), -1);
        auto ei = indices(ode2, Location::finite(i));
        auto emi = indices(ode2, Location::finite(-i));
        CHECK(((ei.first == emi.first.conj() && ei.second == emi.second.conj()) ||
               (ei.first == emi.second.conj() && ei.second == emi.first.conj())));
    }
}

TEST_CASE("P-symbol") {
    SUBCASE("hypergeometric (1/2, 1/3, 5/4)") {
        ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
        PSymbol ps = psymbol(ode);
        REQUIRE(ps.columns.size() == 3);
        CHECK(ps.columns[0].exponents.first == QSurd(rat(-1, 4)));
        CHECK(ps.columns[0].exponents.second == QSurd(0));
        CHECK(ps.columns[1].exponents.first == QSurd(0));
        CHECK(ps.columns[1].exponents.second == QSurd(rat(5, 12)));  // c-a-b
        CHECK(ps.columns[2].exponents.first == QSurd(rat(1, 3)));
        CHECK(ps.columns[2].exponents.second == QSurd(rat(1, 2)));
        CHECK(ps.exponent_sum == QSurd(1));
        CHECK(ps.fuchs_ok);
    }
    SUBCASE("general Heun has four columns and exponent sum 2") {
        ODE2 ode = heung_form(rat(3), rat(1, 2), rat(1), rat(2), rat(1, 2), rat(1, 3));
        PSymbol ps = psymbol(ode);
        CHECK(ps.columns.size() == 4);
        CHECK(ps.exponent_sum == QSurd(2));
        CHECK(ps.fuchs_ok);
    }
    SUBCASE("confluent hypergeometric is not Fuchsian") {
        ODE2 ode = chg_dlmf(rat(1, 2), rat(3, 4));
        try {
            psymbol(ode);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotFuchsian);
            CHECK(e.detail == "inf");
            CHECK(e.index == 1);  // rank
        }
    }
}

TEST_CASE("Fuchs relation on random Fuchsian equations") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        ODE2 hg = hg_dlmf(random_nonzero_rational(rng), random_nonzero_rational(rng),
                          random_rational(rng, -4, 4, 3));
        CHECK(psymbol(hg).exponent_sum == QSurd(1));
        Rational gamma = random_nonzero_rational(rng, -4, 4, 2);
        Rational delta = random_nonzero_rational(rng, -4, 4, 2);
        Rational alpha = random_nonzero_rational(rng, -4, 4, 2);
        Rational beta = random_nonzero_rational(rng, -4, 4, 2);
        if (alpha + beta + 1 - gamma - delta == 0) continue;
        ODE2 heun = heung_form(rat(2), random_rational(rng), alpha, beta, gamma, delta);
        CHECK(psymbol(heun).exponent_sum == QSurd(2));
    }
}

TEST_CASE("indices agree with the indicial polynomial roots") {
    std::mt19937_64 rng(1234);
    for (int t = 0; t < 50; ++t) {
        ODE2 ode = heung_form(rat(3), random_rational(rng),
                              random_nonzero_rational(rng), random_nonzero_rational(rng),
                              random_nonzero_rational(rng), random_nonzero_rational(rng));
        for (auto& sp : find_singular_points(ode)) {
            if (sp.kind != PointKind::Regular) continue;
            auto from_residues = indices(ode, sp.location);
            auto [A0, from_theta] = indicial(theta_form(ode, sp.location));
            (void)A0;
            CHECK(from_residues.first == from_theta.first);
            CHECK(from_residues.second == from_theta.second);
        }
    }
}

TEST_CASE("indices are Mobius covariant at finite images") {
    std::mt19937_64 rng(55);
    ODE2 ode = hg_dlmf(rat(1, 2), rat(1, 3), rat(5, 4));
    for (int t = 0; t < 30; ++t) {
        QSurd a{random_rational(rng, -4, 4, 2)}, b{random_rational(rng, -4, 4, 2)};
        QSurd c{random_rational(rng, -4, 4, 2)}, d{random_rational(rng, -4, 4, 2)};
        if ((a * d - b * c).is_zero()) continue;
        Mobius m(a, b, c, d);
        TransformRecord rec;
        ODE2 out = change_independent(ode, m, rec);
        for (long v : {0L, 1L}) {
            Location img = m.apply(at(v));
            if (img.is_infinity()) continue;
            auto e0 = indices(ode, at(v));
            auto e1 = indices(out, img);
            CHECK(e0.first == e1.first);
            CHECK(e0.second == e1.second);
        }
    }
}

TEST_CASE("rank is invariant under affine maps") {
    std::mt19937_64 rng(7);
    int trials = 0;
    while (trials < 200) {
        Rational s = random_nonzero_rational(rng, -4, 4, 2);
        Rational b = random_rational(rng, -4, 4, 2);
        ODE2 ode = (trials % 2 == 0)
                       ? heunb_mathematica(rat(1), rat(2), rat(1), rat(1), rat(-2))
                       : heund_mathematica(rat(1, 2), rat(2), rat(1), rat(3), rat(1));
        TransformRecord rec;
        // t = s x + b maps x0 to s x0 + b
        Mobius m(QSurd(s), QSurd(b), QSurd(0), QSurd(1));
        ODE2 out = change_independent(ode, m, rec);
        for (auto& sp : find_singular_points(ode)) {
            if (!sp.is_singular()) continue;
            Location img = sp.location.is_infinity() ? Location::infinity()
                                                     : m.apply(sp.location);
            CHECK(rank_at(out, img) == sp.rank);
        }
        ++trials;
    }
}

TEST_CASE("y'' = 0 has a single regular point at infinity with exponents {-1, 0}") {
    ODE2 ode(P({1}), P({}), P({}));
    auto pts = find_singular_points(ode);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].location.is_infinity());
    CHECK(pts[0].kind == PointKind::Regular);
    REQUIRE(pts[0].exponents.has_value());
    CHECK(pts[0].exponents->first == QSurd(-1));
    CHECK(pts[0].exponents->second == QSurd(0));
    PSymbol ps = psymbol(ode);
    CHECK(ps.fuchs_ok);  // sum = -1 = n - 2 with n = 1
}

TEST_CASE("approximate singular locations are flagged, not dropped") {
    // f1 = x^3 - 2 has an irreducible cubic root structure
    ODE2 ode(P({-2, 0, 0, 1}), P({1}), P({1}));
    auto pts = find_singular_points(ode);
    int approx = 0;
    for (auto& sp : pts)
        if (!sp.location.is_exact()) {
            ++approx;
            CHECK(sp.kind == PointKind::Regular);
            CHECK(sp.exponents_approx.has_value());
        }
    CHECK(approx == 3);
}
