#include "ode2/theta.hpp"
#include "ode2/errors.hpp"
#include "ode2/roots.hpp"

#include <algorithm>

namespace ode2 {

Poly falling_factorial_theta(int i) {
    Poly r = Poly::one();
    for (int j = 0; j < i; ++j)
        r *= Poly({QSurd(-(long)j), QSurd(1)});
    return r;
}

ThetaForm theta_form(const ODE2& ode, const Location& center) {
    if (center.is_infinity()) {
        ThetaForm tf = theta_form(invert(ode), Location::finite(QSurd(0)));
        tf.center = Location::infinity();
        return tf;
    }
    if (!center.exact)
        fail(ErrorCode::ApproximateCenter,
             "theta form needs an exact center, got " + center.str());

    ThetaForm tf;
    tf.center = center;
    {
        // kind of the center on the original equation
        RatFun p = ode.p(), q = ode.q();
        int kp = p.den().root_multiplicity(*center.exact);
        int kq = q.den().root_multiplicity(*center.exact);
        if (kp == 0 && kq == 0) {
            tf.center_kind = PointKind::Ordinary;
        } else {
            int k = std::max(kp, (kq + 1) / 2);
            tf.center_rank = k - 1;
            tf.center_kind = (k == 1) ? PointKind::Regular : PointKind::Irregular;
        }
    }

    const Poly f[3] = {ode.f3().taylor_shift(*center.exact),
                       ode.f2().taylor_shift(*center.exact),
                       ode.f1().taylor_shift(*center.exact)};
    // sigma = max over nonzero monomials c x^j D^i of (i - j)
    int sigma = 0;
    for (int i = 0; i <= 2; ++i) {
        if (f[i].is_zero()) continue;
        sigma = std::max(sigma, i - f[i].valuation());
    }
    tf.sigma = sigma;

    int m = 0;
    for (int i = 0; i <= 2; ++i)
        if (!f[i].is_zero()) m = std::max(m, f[i].degree() - i + sigma);
    tf.A.assign(m + 1, Poly());

    for (int i = 0; i <= 2; ++i) {
        Poly ff = falling_factorial_theta(i);
        for (int j = 0; j <= f[i].degree(); ++j) {
            const QSurd& c = f[i][j];
            if (c.is_zero()) continue;
            tf.A[j - i + sigma] += ff * c;
        }
    }
    if (tf.A[0].is_zero())
        fail(ErrorCode::Internal, "theta form with vanishing A_0");
    return tf;
}

std::pair<Poly, std::pair<QSurd, QSurd>> indicial(const ThetaForm& tf) {
    if (tf.center_kind == PointKind::Ordinary)
        fail(ErrorCode::NotRegular,
             tf.center.str() + " is an ordinary point; no indicial data");
    if (tf.center_kind == PointKind::Irregular)
        fail(ErrorCode::NotRegular,
             tf.center.str() + " is an irregular singular point (rank " +
             std::to_string(tf.center_rank) + ")");
    const Poly& A0 = tf.indicial_poly();
    if (A0.degree() != 2)
        fail(ErrorCode::NotRegular,
             "indicial polynomial has degree " + std::to_string(A0.degree()) +
             " after sigma-normalization");
    auto roots = quadratic_roots(A0[2], A0[1], A0[0]);
    if (!roots)
        fail(ErrorCode::ApproximatePoint,
             "indicial roots are not representable in Q(sqrt d)");
    return {A0, *roots};
}

} // namespace ode2
