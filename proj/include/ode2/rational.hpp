#ifndef ODE2_RATIONAL_HPP
#define ODE2_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace ode2 {

// Exact rational coefficients; GMP keeps them canonical
// (gcd(|num|, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

// "0.25" -> 1/4, "3" -> 3, "-7.50" -> -15/2.  Exact, no floating point.
Rational rational_from_decimal(const std::string& text);

bool is_integer(const Rational& q);
int sign(const Rational& q);

std::string to_string(const Rational& q);

// n = square * sqfree with sqfree square-free; returns (square_root, sqfree).
// Sign of n goes into sqfree.  Complete for |n| whose square part is
// reachable by trial division up to 10^6 (always the case in this corpus).
std::pair<Integer, Integer> split_square(const Integer& n);

// Divisors of |n| (unsorted); the factor base is found by trial division,
// any remaining cofactor is treated as prime.
std::vector<Integer> divisors(const Integer& n);

} // namespace ode2

#endif
