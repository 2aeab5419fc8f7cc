#ifndef ODE2_PARSE_HPP
#define ODE2_PARSE_HPP

#include <string>

#include "ode2/ode.hpp"

namespace ode2 {

// Grammar (whitespace insensitive):
//   equation := expr ("=" expr)?          rhs must reduce to 0
//   expr     := ("+"|"-")? term (("+"|"-") term)*
//   term     := factor (("*"|"/") factor)*
//   factor   := primary ("^" uint)?
//   primary  := number | "x" | "y" | "y'" | "y''" | "(" expr ")"
//   number   := uint | uint "/" uint | decimal
// Division is only defined by constants (NonPolynomialCoefficient
// otherwise); identifiers other than x, y raise FreeParameter; decimals
// convert exactly.
ODE2 parse_equation(const std::string& text);

// Command-line points: "inf", rationals, decimals and surds in the
// canonical forms "a+b*sqrt(d)", "(1+sqrt(5))/2", "sqrt(2)".
Location parse_point(const std::string& text);
QSurd parse_qsurd(const std::string& text);

} // namespace ode2

#endif
