#ifndef ODE2_BIGFLOAT_HPP
#define ODE2_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "ode2/rational.hpp"

namespace ode2 {

// Working-precision float for root isolation and series evaluation.
// Precision is process-global, default 128 bits.
using BigFloat = boost::multiprecision::mpfr_float;

void set_precision_bits(unsigned bits);
unsigned precision_bits();

BigFloat to_bigfloat(const Rational& q);
BigFloat bigfloat_from_string(const std::string& s);

struct Complex {
    BigFloat re, im;

    Complex() : re(0), im(0) {}
    Complex(BigFloat r) : re(std::move(r)), im(0) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(long v) : re(v), im(0) {}

    Complex operator-() const { return {-re, -im}; }
    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator/(const Complex& o) const;
    Complex& operator+=(const Complex& o) { *this = *this + o; return *this; }
    Complex& operator-=(const Complex& o) { *this = *this - o; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
    Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }

    bool is_zero() const { return re == 0 && im == 0; }
};

BigFloat abs(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);              // principal branch
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, long n);
Complex sqrt(const Complex& z);

std::string to_string(const Complex& z, int digits = 20);

} // namespace ode2

#endif
