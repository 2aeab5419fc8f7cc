#ifndef ODE2_QSURD_HPP
#define ODE2_QSURD_HPP

#include <optional>
#include <string>

#include "ode2/bigfloat.hpp"
#include "ode2/rational.hpp"

namespace ode2 {

// Exact number a + b*sqrt(d) over Q.  d is a square-free integer; d = 1
// encodes pure rationals (then b = 0), d < 0 gives complex values.
// Arithmetic is closed for a fixed d and mixes freely with rationals;
// combining two genuinely different radicands throws MixedRadicands.
class QSurd {
public:
    QSurd() : a_(0), b_(0), d_(1) {}
    QSurd(const Rational& a) : a_(a), b_(0), d_(1) {}
    QSurd(long n) : a_(rat(n)), b_(0), d_(1) {}
    QSurd(const Rational& a, const Rational& b, long d);

    static QSurd sqrt_rational(const Rational& s);  // exact for every rational
    std::optional<QSurd> try_sqrt() const;          // sqrt within Q(sqrt d), if any

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_real() const { return d_ >= 1; }
    bool is_integer() const { return b_ == 0 && ode2::is_integer(a_); }
    std::optional<Rational> as_rational() const;

    QSurd conj() const { return QSurd(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - b_ * b_ * d_; }  // z * conj(z)

    QSurd operator-() const { return QSurd(-a_, -b_, d_); }

    friend QSurd operator+(const QSurd& x, const QSurd& y);
    friend QSurd operator-(const QSurd& x, const QSurd& y);
    friend QSurd operator*(const QSurd& x, const QSurd& y);
    friend QSurd operator/(const QSurd& x, const QSurd& y);
    QSurd& operator+=(const QSurd& o) { *this = *this + o; return *this; }
    QSurd& operator-=(const QSurd& o) { *this = *this - o; return *this; }
    QSurd& operator*=(const QSurd& o) { *this = *this * o; return *this; }
    QSurd& operator/=(const QSurd& o) { *this = *this / o; return *this; }

    bool operator==(const QSurd& o) const {
        return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
    }
    bool operator!=(const QSurd& o) const { return !(*this == o); }

    // Exact total order by (real part, imaginary part); works across
    // different radicands.
    static int cmp(const QSurd& x, const QSurd& y);
    // Exact comparison of |x| vs |y|.
    static int cmp_abs(const QSurd& x, const QSurd& y);

    Complex approx() const;
    std::string str() const;  // canonical: "-1/4", "(1+sqrt(5))/2", "sqrt(2)"

private:
    Rational a_, b_;
    long d_;
};

// Sign of r + s1*sqrt(D1) + s2*sqrt(D2) for integers D1, D2 >= 0
// (not necessarily square-free).  Exact.
int sign_with_radicals(const Rational& r, const Rational& s1, const Integer& D1,
                       const Rational& s2, const Integer& D2);

} // namespace ode2

#endif
