#include "ode2/bigfloat.hpp"
#include "ode2/errors.hpp"

#include <cmath>
#include <sstream>

namespace ode2 {

static unsigned g_precision_bits = 128;

void set_precision_bits(unsigned bits) {
    if (bits < 24) bits = 24;
    g_precision_bits = bits;
    // mpfr_float counts precision in decimal digits
    BigFloat::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
}

unsigned precision_bits() { return g_precision_bits; }

namespace {
struct PrecisionInit {
    PrecisionInit() { set_precision_bits(128); }
} precision_init_;
} // namespace

BigFloat to_bigfloat(const Rational& q) {
    BigFloat x(0);
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

BigFloat bigfloat_from_string(const std::string& s) {
    return BigFloat(s);
}

Complex Complex::operator/(const Complex& o) const {
    BigFloat n = o.re * o.re + o.im * o.im;
    if (n == 0) fail(ErrorCode::DivisionByZero, "complex division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

BigFloat abs(const Complex& z) {
    if (z.im == 0) return boost::multiprecision::abs(z.re);
    if (z.re == 0) return boost::multiprecision::abs(z.im);
    return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
}

Complex exp(const Complex& z) {
    BigFloat m = boost::multiprecision::exp(z.re);
    if (z.im == 0) return {m};
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex log(const Complex& z) {
    if (z.is_zero()) fail(ErrorCode::DivisionByZero, "log of zero");
    return {boost::multiprecision::log(abs(z)),
            boost::multiprecision::atan2(z.im, z.re)};
}

Complex pow(const Complex& z, const Complex& w) {
    if (z.is_zero()) {
        if (w.is_zero()) return Complex(BigFloat(1));
        return Complex();
    }
    if (w.is_zero()) return Complex(BigFloat(1));
    return exp(w * log(z));
}

Complex pow(const Complex& z, long n) {
    if (n < 0) return Complex(BigFloat(1)) / pow(z, -n);
    Complex r(BigFloat(1)), b = z;
    long e = n;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Complex sqrt(const Complex& z) {
    if (z.is_zero()) return z;
    return pow(z, Complex(BigFloat(0.5)));
}

std::string to_string(const Complex& z, int digits) {
    std::ostringstream os;
    os.precision(digits);
    if (z.im == 0) {
        os << z.re;
    } else {
        os << z.re << (z.im < 0 ? " - " : " + ")
           << boost::multiprecision::abs(z.im) << "*i";
    }
    return os.str();
}

} // namespace ode2
