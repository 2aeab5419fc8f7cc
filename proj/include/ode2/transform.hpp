#ifndef ODE2_TRANSFORM_HPP
#define ODE2_TRANSFORM_HPP

#include <utility>
#include <vector>

#include "ode2/ode.hpp"

namespace ode2 {

// t = (a x + b)/(c x + d), ad - bc != 0.  Canonical scaling: the first
// nonzero entry of (a, b, c, d) is 1.
struct Mobius {
    QSurd a, b, c, d;

    Mobius() : a(1), b(0), c(0), d(1) {}
    Mobius(QSurd a_, QSurd b_, QSurd c_, QSurd d_);

    static Mobius identity() { return Mobius(); }
    static Mobius scaling(const QSurd& s) { return Mobius(s, QSurd(0), QSurd(0), QSurd(1)); }
    // three distinct points (finite or infinity) to 0, 1, infinity
    static Mobius three_point(const Location& x1, const Location& x2, const Location& x3);
    // two distinct points to 0 and infinity (one scaling degree left free)
    static Mobius two_point(const Location& to_zero, const Location& to_inf);
    // one point to infinity
    static Mobius one_point_to_infinity(const Location& x0);

    QSurd det() const { return a * d - b * c; }
    bool is_identity() const;
    Mobius inverse() const;
    Mobius compose_after(const Mobius& inner) const;  // this(inner(x))
    Location apply(const Location& z) const;
    Complex apply(const Complex& z) const;
    std::string str(const std::string& var = "x") const;
};

struct TransformStep {
    enum class Kind { MobiusMap, PowerMap, PowerPrefactor, ExpPrefactor };
    Kind kind;
    Mobius mobius;                                  // MobiusMap
    long power_k = 0;                               // PowerMap: t = x^k
    std::vector<std::pair<QSurd, QSurd>> shifts;    // PowerPrefactor: (point, rho)
    QSurd lambda;                                   // ExpPrefactor: exp(lambda x^m)
    long exp_m = 1;
};

// Ordered list of applied steps; replaying maps the original equation to
// the transformed one, and solutions pull back through it.
struct TransformRecord {
    std::vector<TransformStep> steps;

    // composition of all argument maps (Mobius steps only; throws if a
    // power map is present)
    Mobius argument_map() const;
    bool has_power_map() const;
    std::string str() const;
};

// Change of independent variable x -> t.  The Mobius form is always
// possible; the power map t = x^k (k >= 2) requires every monomial of the
// transformed coefficients to land on a single residue class mod k and
// throws NonPolynomialResult otherwise.
ODE2 change_independent(const ODE2& ode, const Mobius& map, TransformRecord& rec);
ODE2 change_independent(const ODE2& ode, long power_k, TransformRecord& rec);

// y = prod (x - x_i)^{rho_i} * u: exponents at x_i drop by rho_i, the
// exponents at infinity grow by sum(rho_i).
ODE2 prefactor_power(const ODE2& ode,
                     const std::vector<std::pair<QSurd, QSurd>>& shifts,
                     TransformRecord& rec);

// y = exp(lambda x^m) * u
ODE2 prefactor_exp(const ODE2& ode, const QSurd& lambda, long m, TransformRecord& rec);

} // namespace ode2

#endif
