#include "ode2/qsurd.hpp"
#include "ode2/errors.hpp"

#include <sstream>

namespace ode2 {

QSurd::QSurd(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    if (d_ == 0) { b_ = 0; d_ = 1; }          // sqrt(0) contributes nothing
    if (d_ == 1) { a_ += b_; b_ = 0; }
    if (b_ == 0) d_ = 1;
}

QSurd QSurd::sqrt_rational(const Rational& s) {
    if (s == 0) return QSurd();
    // sqrt(p/q) = sqrt(p*q)/q
    Integer pq = s.get_num() * s.get_den();
    auto [root, sqfree] = split_square(pq);
    Rational b = rat(root, s.get_den());
    long d = 1;
    if (sqfree > 1 || sqfree < 0) {
        if (!sqfree.fits_slong_p())
            fail(ErrorCode::Internal, "radicand too large");
        d = sqfree.get_si();
    }
    return QSurd(Rational(0), b, d);
}

std::optional<QSurd> QSurd::try_sqrt() const {
    if (is_rational()) return sqrt_rational(a_);
    // (u + v*sqrt(d))^2 = a + b*sqrt(d)  =>  u^2 + v^2 d = a, 2uv = b
    // u^2 = (a +- sqrt(a^2 - b^2 d)) / 2 must be a rational square.
    Rational n = norm();
    QSurd rn = sqrt_rational(n);
    if (!rn.is_rational()) return std::nullopt;
    Rational r = rn.a();
    for (int s = 0; s < 2; ++s) {
        Rational u2 = (a_ + (s ? -r : r)) / 2;
        if (sgn(u2) < 0) continue;
        QSurd u = sqrt_rational(u2);
        if (!u.is_rational() || u.a() == 0) continue;
        Rational v = b_ / (2 * u.a());
        QSurd cand(u.a(), v, d_);
        if (cand * cand == *this) return cand;
    }
    return std::nullopt;
}

std::optional<Rational> QSurd::as_rational() const {
    if (b_ == 0) return a_;
    return std::nullopt;
}

static long common_d(const QSurd& x, const QSurd& y) {
    if (x.d() == y.d()) return x.d();
    if (x.is_rational()) return y.d();
    if (y.is_rational()) return x.d();
    fail(ErrorCode::MixedRadicands,
         "cannot combine sqrt(" + std::to_string(x.d()) + ") with sqrt(" +
         std::to_string(y.d()) + ")");
}

QSurd operator+(const QSurd& x, const QSurd& y) {
    long d = common_d(x, y);
    return QSurd(x.a() + y.a(), x.b() + y.b(), d);
}

QSurd operator-(const QSurd& x, const QSurd& y) {
    long d = common_d(x, y);
    return QSurd(x.a() - y.a(), x.b() - y.b(), d);
}

QSurd operator*(const QSurd& x, const QSurd& y) {
    long d = common_d(x, y);
    return QSurd(x.a() * y.a() + x.b() * y.b() * d,
                 x.a() * y.b() + x.b() * y.a(), d);
}

QSurd operator/(const QSurd& x, const QSurd& y) {
    if (y.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
    long d = common_d(x, y);
    Rational n = y.norm();
    // for square-free d != 1, norm vanishes only at zero
    QSurd num = x * y.conj();
    return QSurd(num.a() / n, num.b() / n, d);
}

int sign_with_radicals(const Rational& r, const Rational& s1, const Integer& D1,
                       const Rational& s2, const Integer& D2) {
    Rational t1 = s1, t2 = s2;
    Integer E1 = D1, E2 = D2;
    Rational rr = r;
    // fold radicals that are actually rational
    auto fold = [&rr](Rational& s, Integer& D) {
        if (s == 0 || D == 0) { s = 0; D = 1; return; }
        if (mpz_perfect_square_p(D.get_mpz_t())) {
            Integer root;
            mpz_sqrt(root.get_mpz_t(), D.get_mpz_t());
            rr += s * root;
            s = 0;
            D = 1;
        }
    };
    fold(t1, E1);
    fold(t2, E2);
    if (t1 == 0 && t2 != 0) { std::swap(t1, t2); std::swap(E1, E2); }
    if (t1 != 0 && t2 != 0 && E1 == E2) { t1 += t2; t2 = 0; fold(t1, E1); }

    if (t1 == 0 && t2 == 0) return sgn(rr);

    if (t2 == 0) {
        // sign of rr + t1*sqrt(E1)
        if (rr == 0) return sgn(t1);
        if (sgn(rr) == sgn(t1)) return sgn(rr);
        Rational lhs = rr * rr, rhs = t1 * t1 * Rational(E1);
        int c = cmp(lhs, rhs);
        if (c == 0) return 0;
        return c > 0 ? sgn(rr) : sgn(t1);
    }

    // sign of A = t1*sqrt(E1) + t2*sqrt(E2)
    int sa;
    if (sgn(t1) == sgn(t2)) {
        sa = sgn(t1);
    } else {
        int c = cmp(t1 * t1 * Rational(E1), t2 * t2 * Rational(E2));
        sa = (c == 0) ? 0 : (c > 0 ? sgn(t1) : sgn(t2));
    }
    if (rr == 0) return sa;
    if (sa == 0) return sgn(rr);
    if (sgn(rr) == sa) return sa;
    // compare rr^2 against A^2 = t1^2 E1 + t2^2 E2 + 2 t1 t2 sqrt(E1 E2):
    // sign(rr^2 - A^2) = sign(T - 2 t1 t2 sqrt(E1 E2))
    Rational T = rr * rr - t1 * t1 * Rational(E1) - t2 * t2 * Rational(E2);
    int inner = sign_with_radicals(T, -2 * t1 * t2, E1 * E2, Rational(0), Integer(1));
    if (inner == 0) return 0;
    return inner > 0 ? sgn(rr) : sa;
}

// real part as (alpha, beta, D): value alpha + beta*sqrt(D), D >= 0
static void real_part(const QSurd& z, Rational& alpha, Rational& beta, Integer& D) {
    if (z.d() < 0) {
        alpha = z.a(); beta = 0; D = 1;
    } else {
        alpha = z.a(); beta = z.b(); D = z.d();
    }
}

static void imag_part(const QSurd& z, Rational& beta, Integer& D) {
    if (z.d() < 0) {
        beta = z.b(); D = -Integer(z.d());
    } else {
        beta = 0; D = 1;
    }
}

int QSurd::cmp(const QSurd& x, const QSurd& y) {
    Rational xa, xb, ya, yb;
    Integer xd, yd;
    real_part(x, xa, xb, xd);
    real_part(y, ya, yb, yd);
    int c = sign_with_radicals(xa - ya, xb, xd, -yb, yd);
    if (c != 0) return c;
    Rational xi, yi;
    Integer xe, ye;
    imag_part(x, xi, xe);
    imag_part(y, yi, ye);
    return sign_with_radicals(Rational(0), xi, xe, -yi, ye);
}

int QSurd::cmp_abs(const QSurd& x, const QSurd& y) {
    // |z|^2 is real: z real -> z^2; z complex -> a^2 + b^2 |d|
    auto abs2 = [](const QSurd& z) -> QSurd {
        if (z.is_real()) return z * z;
        return QSurd(z.a() * z.a() + z.b() * z.b() * rat(-z.d()));
    };
    return cmp(abs2(x), abs2(y));
}

Complex QSurd::approx() const {
    BigFloat av = to_bigfloat(a_);
    if (b_ == 0) return Complex(av);
    BigFloat bv = to_bigfloat(b_);
    BigFloat root = boost::multiprecision::sqrt(BigFloat(d_ < 0 ? -d_ : d_));
    if (d_ < 0) return Complex(av, bv * root);
    return Complex(av + bv * root);
}

std::string QSurd::str() const {
    if (b_ == 0) return to_string(a_);
    // write as (p + q*sqrt(d))/r with integer p, q and positive r
    Integer L;
    mpz_lcm(L.get_mpz_t(), a_.get_den().get_mpz_t(), b_.get_den().get_mpz_t());
    Integer p = a_.get_num() * (L / a_.get_den());
    Integer q = b_.get_num() * (L / b_.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), L.get_mpz_t());
    if (g > 1) { p /= g; q /= g; L /= g; }
    std::ostringstream os;
    std::string rad = "sqrt(" + std::to_string(d_) + ")";
    std::string core;
    if (p != 0) {
        core = p.get_str();
        if (q == 1) core += "+" + rad;
        else if (q == -1) core += "-" + rad;
        else if (q > 0) core += "+" + q.get_str() + "*" + rad;
        else core += q.get_str() + "*" + rad;
    } else {
        if (q == 1) core = rad;
        else if (q == -1) core = "-" + rad;
        else core = q.get_str() + "*" + rad;
    }
    if (L == 1) return core;
    return "(" + core + ")/" + L.get_str();
}

} // namespace ode2
