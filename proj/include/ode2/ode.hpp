#ifndef ODE2_ODE_HPP
#define ODE2_ODE_HPP

#include <string>

#include "ode2/ratfun.hpp"

namespace ode2 {

// f1 y'' + f2 y' + f3 y = 0 with polynomial coefficients.  Construction
// cancels common polynomial and rational content and fixes the sign of the
// leading coefficient of f1, so projectively equal equations compare equal.
class ODE2 {
public:
    ODE2(Poly f1, Poly f2, Poly f3);

    const Poly& f1() const { return f1_; }
    const Poly& f2() const { return f2_; }
    const Poly& f3() const { return f3_; }

    RatFun p() const { return RatFun(f2_, f1_); }
    RatFun q() const { return RatFun(f3_, f1_); }

    bool operator==(const ODE2& o) const {
        return f1_ == o.f1_ && f2_ == o.f2_ && f3_ == o.f3_;
    }
    bool projectively_equal(const ODE2& o) const;

    // grammar-compatible text, e.g. "(x - x^2)*y'' + (2)*y' + (1)*y = 0"
    std::string str() const;

private:
    Poly f1_, f2_, f3_;
};

struct NormalForm {
    RatFun qprime;                    // q - p'/2 - p^2/4
    RatFun prefactor_log_derivative;  // -p/2 = g'/g for the suppressed g(x)
};

NormalForm normal_form(const ODE2& ode);

// the x -> 1/x image; analysis at infinity runs on this equation at 0
ODE2 invert(const ODE2& ode);

} // namespace ode2

#endif
