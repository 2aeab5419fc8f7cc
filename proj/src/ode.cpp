#include "ode2/ode.hpp"
#include "ode2/errors.hpp"

namespace ode2 {

namespace {

// common rational scale of all surd components, for primitive coefficients
Rational rational_content(const Poly* polys[3]) {
    Integer num_gcd(0), den_lcm(1);
    for (int k = 0; k < 3; ++k) {
        for (auto& c : polys[k]->coeffs()) {
            for (const Rational* part : {&c.a(), &c.b()}) {
                if (*part == 0) continue;
                Integer n = abs(part->get_num());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                        part->get_den().get_mpz_t());
            }
        }
    }
    if (num_gcd == 0) return Rational(1);
    return rat(num_gcd, den_lcm);
}

int leading_sign(const Poly& p) {
    const QSurd& lc = p.leading();
    if (lc.a() != 0) return sgn(lc.a());
    return sgn(lc.b());
}

} // namespace

ODE2::ODE2(Poly f1, Poly f2, Poly f3)
    : f1_(std::move(f1)), f2_(std::move(f2)), f3_(std::move(f3)) {
    if (f1_.is_zero())
        fail(ErrorCode::NotSecondOrder, "coefficient of y'' vanishes identically");
    Poly g = Poly::gcd(Poly::gcd(f1_, f2_), f3_);
    if (g.degree() > 0) {
        f1_ = Poly::divmod(f1_, g).first;
        f2_ = Poly::divmod(f2_, g).first;
        f3_ = Poly::divmod(f3_, g).first;
    }
    const Poly* ps[3] = {&f1_, &f2_, &f3_};
    Rational content = rational_content(ps);
    QSurd scale{Rational(1) / content};
    if (leading_sign(f1_) < 0) scale = -scale;
    if (!(scale == QSurd(1))) {
        f1_ = f1_ * scale;
        f2_ = f2_ * scale;
        f3_ = f3_ * scale;
    }
}

bool ODE2::projectively_equal(const ODE2& o) const {
    return f1_ * o.f2_ == o.f1_ * f2_ && f1_ * o.f3_ == o.f1_ * f3_;
}

std::string ODE2::str() const {
    std::string s = "(" + f1_.str() + ")*y''";
    if (!f2_.is_zero()) s += " + (" + f2_.str() + ")*y'";
    if (!f3_.is_zero()) s += " + (" + f3_.str() + ")*y";
    return s + " = 0";
}

NormalForm normal_form(const ODE2& ode) {
    RatFun p = ode.p();
    RatFun q = ode.q();
    RatFun half{Poly(QSurd(rat(1, 2)))};
    RatFun quarter{Poly(QSurd(rat(1, 4)))};
    NormalForm nf;
    nf.qprime = q - half * p.derivative() - quarter * p * p;
    nf.prefactor_log_derivative = -(half * p);
    return nf;
}

ODE2 invert(const ODE2& ode) {
    // y(x) = u(t), t = 1/x:  y' = -t^2 u',  y'' = t^4 u'' + 2 t^3 u'
    const Poly& f1 = ode.f1();
    const Poly& f2 = ode.f2();
    const Poly& f3 = ode.f3();
    int n = std::max({f1.degree(), f2.degree(), f3.degree()});
    // f(1/t) * t^n is polynomial for every coefficient
    auto lift = [n](const Poly& f) {
        return f.reversed().times_power(n - f.degree());
    };
    Poly F1 = lift(f1), F2 = lift(f2), F3 = lift(f3);
    Poly t4 = Poly::monomial(4, QSurd(1));
    Poly t3 = Poly::monomial(3, QSurd(1));
    Poly t2 = Poly::monomial(2, QSurd(1));
    return ODE2(F1 * t4, F1 * t3 * QSurd(2) - F2 * t2, F3);
}

} // namespace ode2
