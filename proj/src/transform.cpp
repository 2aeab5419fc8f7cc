#include "ode2/transform.hpp"
#include "ode2/errors.hpp"

#include <set>
#include <sstream>

namespace ode2 {

Mobius::Mobius(QSurd a_, QSurd b_, QSurd c_, QSurd d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (det().is_zero())
        fail(ErrorCode::UsageError, "degenerate Mobius map (zero determinant)");
    for (QSurd* e : {&a, &b, &c, &d}) {
        if (!e->is_zero()) {
            QSurd inv = QSurd(1) / *e;
            a *= inv; b *= inv; c *= inv; d *= inv;
            break;
        }
    }
}

bool Mobius::is_identity() const {
    return a == QSurd(1) && b.is_zero() && c.is_zero() && d == QSurd(1);
}

Mobius Mobius::inverse() const {
    return Mobius(d, -b, -c, a);
}

Mobius Mobius::compose_after(const Mobius& inner) const {
    return Mobius(a * inner.a + b * inner.c, a * inner.b + b * inner.d,
                  c * inner.a + d * inner.c, c * inner.b + d * inner.d);
}

Location Mobius::apply(const Location& z) const {
    if (z.is_infinity()) {
        if (c.is_zero()) return Location::infinity();
        return Location::finite(a / c);
    }
    if (!z.exact) {
        Complex den = c.approx() * z.approx + d.approx();
        return Location::approximate((a.approx() * z.approx + b.approx()) / den);
    }
    QSurd den = c * *z.exact + d;
    if (den.is_zero()) return Location::infinity();
    return Location::finite((a * *z.exact + b) / den);
}

Complex Mobius::apply(const Complex& z) const {
    return (a.approx() * z + b.approx()) / (c.approx() * z + d.approx());
}

Mobius Mobius::three_point(const Location& x1, const Location& x2, const Location& x3) {
    // t = (x2-x3)(x-x1) / ((x2-x1)(x-x3))
    if (x1.is_infinity()) {
        const QSurd &p2 = *x2.exact, &p3 = *x3.exact;
        return Mobius(QSurd(0), p2 - p3, QSurd(1), -p3);
    }
    if (x2.is_infinity()) {
        const QSurd &p1 = *x1.exact, &p3 = *x3.exact;
        return Mobius(QSurd(1), -p1, QSurd(1), -p3);
    }
    if (x3.is_infinity()) {
        const QSurd &p1 = *x1.exact, &p2 = *x2.exact;
        return Mobius(QSurd(1), -p1, QSurd(0), p2 - p1);
    }
    const QSurd &p1 = *x1.exact, &p2 = *x2.exact, &p3 = *x3.exact;
    QSurd u = p2 - p3, v = p2 - p1;
    return Mobius(u, -u * p1, v, -v * p3);
}

Mobius Mobius::two_point(const Location& to_zero, const Location& to_inf) {
    if (to_inf.is_infinity())
        return Mobius(QSurd(1), -*to_zero.exact, QSurd(0), QSurd(1));
    if (to_zero.is_infinity())
        return Mobius(QSurd(0), QSurd(1), QSurd(1), -*to_inf.exact);
    return Mobius(QSurd(1), -*to_zero.exact, QSurd(1), -*to_inf.exact);
}

Mobius Mobius::one_point_to_infinity(const Location& x0) {
    if (x0.is_infinity()) return identity();
    return Mobius(QSurd(0), QSurd(1), QSurd(1), -*x0.exact);
}

std::string Mobius::str(const std::string& var) const {
    Poly num({b, a}), den({d, c});
    if (c.is_zero() && d == QSurd(1)) return num.str(var);
    return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

Mobius TransformRecord::argument_map() const {
    Mobius m = Mobius::identity();
    for (auto& s : steps) {
        if (s.kind == TransformStep::Kind::MobiusMap)
            m = s.mobius.compose_after(m);
        else if (s.kind == TransformStep::Kind::PowerMap)
            fail(ErrorCode::Internal, "argument map with a power step is not a Mobius map");
    }
    return m;
}

bool TransformRecord::has_power_map() const {
    for (auto& s : steps)
        if (s.kind == TransformStep::Kind::PowerMap) return true;
    return false;
}

std::string TransformRecord::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& s : steps) {
        if (!first) os << "; ";
        first = false;
        switch (s.kind) {
        case TransformStep::Kind::MobiusMap:
            os << "t = " << s.mobius.str();
            break;
        case TransformStep::Kind::PowerMap:
            os << "t = x^" << s.power_k;
            break;
        case TransformStep::Kind::PowerPrefactor:
            os << "y = ";
            for (auto& [pt, rho] : s.shifts)
                os << "(x - (" << pt.str() << "))^(" << rho.str() << ") * ";
            os << "u";
            break;
        case TransformStep::Kind::ExpPrefactor:
            os << "y = exp((" << s.lambda.str() << ")*x^" << s.exp_m << ") * u";
            break;
        }
    }
    return os.str();
}

ODE2 change_independent(const ODE2& ode, const Mobius& map, TransformRecord& rec) {
    // x = phi(t) = (d t - b)/(-c t + a); with Q(t) = a - c t:
    //   t'(x) at phi(t) = Q^2/det,  t''(x) at phi(t) = -2c Q^3/det^2
    const Poly Q({map.a, -map.c});
    const Poly P({-map.b, map.d});
    QSurd det = map.det();

    auto compose = [&](const Poly& f) {
        // f(P/Q) = F/Q^deg(f); returns numerator F
        Poly F;
        int n = f.degree();
        for (int i = 0; i <= n; ++i) {
            if (f[i].is_zero()) continue;
            F += P.pow(i) * Q.pow(n - i) * f[i];
        }
        return F;
    };

    int n1 = std::max(ode.f1().degree(), 0);
    int n2 = std::max(ode.f2().degree(), 0);
    int n3 = std::max(ode.f3().degree(), 0);
    Poly F1 = compose(ode.f1());
    Poly F2 = compose(ode.f2());
    Poly F3 = compose(ode.f3());

    int K = std::max({n1 - 3, n2 - 2, n3, 0});
    QSurd det_inv = QSurd(1) / det;

    // common multiplier Q^K * det^2 applied to:
    //   u'': F1 Q^(4-n1)/det^2
    //   u' : -2c F1 Q^(3-n1)/det^2 + F2 Q^(2-n2)/det
    //   u  : F3 Q^(-n3)
    Poly g1 = F1 * Q.pow(K + 4 - n1);
    Poly g2 = F1 * Q.pow(K + 3 - n1) * (QSurd(-2) * map.c) +
              F2 * Q.pow(K + 2 - n2) * det;
    Poly g3 = F3 * Q.pow(K - n3) * (det * det);

    TransformStep step;
    step.kind = TransformStep::Kind::MobiusMap;
    step.mobius = map;
    rec.steps.push_back(step);
    return ODE2(g1, g2, g3);
}

ODE2 change_independent(const ODE2& ode, long power_k, TransformRecord& rec) {
    if (power_k < 2)
        fail(ErrorCode::UsageError, "power map requires an integer exponent k >= 2");
    int k = static_cast<int>(power_k);
    // t = x^k:  y' = k x^(k-1) u',  y'' = k^2 x^(2k-2) u'' + k(k-1) x^(k-2) u'
    Poly G2 = ode.f1() * QSurd((long)k * k);
    G2 = G2.times_power(2 * k - 2);
    Poly G1 = ode.f1().times_power(k - 2) * QSurd((long)k * (k - 1)) +
              ode.f2().times_power(k - 1) * QSurd((long)k);
    Poly G0 = ode.f3();

    // all exponents across the three coefficients must sit in one residue
    // class mod k, else fractional powers of t survive
    int residue = -1;
    for (const Poly* g : {&G2, &G1, &G0}) {
        for (int i = 0; i <= g->degree(); ++i) {
            if ((*g)[i].is_zero()) continue;
            int r = i % k;
            if (residue < 0) residue = r;
            else if (r != residue)
                fail(ErrorCode::NonPolynomialResult,
                     "power map t = x^" + std::to_string(k) +
                     " leaves fractional powers of t");
        }
    }
    if (residue < 0) residue = 0;
    auto project = [&](const Poly& g) {
        std::vector<QSurd> v;
        for (int i = residue; i <= g.degree(); i += k)
            v.push_back((g)[i]);
        return Poly(std::move(v));
    };
    // multiply the equation by x^(k - residue) when needed so powers are
    // multiples of k, i.e. shift the residue class to zero
    Poly H2 = project(G2);
    Poly H1 = project(G1);
    Poly H0 = project(G0);

    TransformStep step;
    step.kind = TransformStep::Kind::PowerMap;
    step.power_k = power_k;
    rec.steps.push_back(step);
    return ODE2(H2, H1, H0);
}

ODE2 prefactor_power(const ODE2& ode,
                     const std::vector<std::pair<QSurd, QSurd>>& shifts,
                     TransformRecord& rec) {
    std::vector<std::pair<QSurd, QSurd>> active;
    for (auto& s : shifts)
        if (!s.second.is_zero()) active.push_back(s);

    TransformStep step;
    step.kind = TransformStep::Kind::PowerPrefactor;
    step.shifts = shifts;

    if (active.empty()) {
        rec.steps.push_back(step);
        return ode;
    }
    {
        std::set<std::string> seen;
        for (auto& [pt, rho] : active) {
            (void)rho;
            if (!seen.insert(pt.str()).second)
                fail(ErrorCode::UsageError, "repeated prefactor point " + pt.str());
        }
    }

    // S = sum rho_i/(x - x_i);  y = prod (x-x_i)^rho_i u gives
    //   f1 u'' + (2 f1 S + f2) u' + (f1 (S^2 + S') + f2 S + f3) u = 0
    Poly D = Poly::one();
    for (auto& [pt, rho] : active) {
        (void)rho;
        D *= Poly({-pt, QSurd(1)});
    }
    Poly SD;        // S * D
    Poly SpD2;      // S' * D^2
    for (auto& [pt, rho] : active) {
        Poly others = Poly::one();
        for (auto& [pt2, rho2] : active) {
            (void)rho2;
            if (!(pt2 == pt)) others *= Poly({-pt2, QSurd(1)});
        }
        SD += others * rho;
        SpD2 -= others * others * rho;
    }
    Poly g1 = ode.f1() * D * D;
    Poly g2 = ode.f1() * SD * D * QSurd(2) + ode.f2() * D * D;
    Poly g3 = ode.f1() * (SD * SD + SpD2) + ode.f2() * SD * D + ode.f3() * D * D;

    rec.steps.push_back(step);
    return ODE2(g1, g2, g3);
}

ODE2 prefactor_exp(const ODE2& ode, const QSurd& lambda, long m, TransformRecord& rec) {
    if (m < 1) fail(ErrorCode::UsageError, "exponential prefactor requires m >= 1");
    TransformStep step;
    step.kind = TransformStep::Kind::ExpPrefactor;
    step.lambda = lambda;
    step.exp_m = m;
    if (lambda.is_zero()) {
        rec.steps.push_back(step);
        return ode;
    }
    // E = lambda m x^(m-1):
    //   f1 u'' + (2 E f1 + f2) u' + (f1 (E^2 + E') + f2 E + f3) u = 0
    Poly E = Poly::monomial((int)m - 1, lambda * QSurd(m));
    Poly g2 = ode.f1() * E * QSurd(2) + ode.f2();
    Poly g3 = ode.f1() * (E * E + E.derivative()) + ode.f2() * E + ode.f3();
    rec.steps.push_back(step);
    return ODE2(ode.f1(), g2, g3);
}

} // namespace ode2
