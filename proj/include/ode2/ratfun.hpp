#ifndef ODE2_RATFUN_HPP
#define ODE2_RATFUN_HPP

#include <optional>
#include <string>
#include <vector>

#include "ode2/poly.hpp"

namespace ode2 {

// Reduced rational function: gcd(num, den) = 1, den monic and nonzero.
class RatFun {
public:
    RatFun() : num_(), den_(Poly::one()) {}
    explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& f, const RatFun& g);
    friend RatFun operator-(const RatFun& f, const RatFun& g);
    friend RatFun operator*(const RatFun& f, const RatFun& g);
    friend RatFun operator/(const RatFun& f, const RatFun& g);
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun derivative() const;
    QSurd eval(const QSurd& x) const;   // DivisionByZero at poles
    Complex eval(const Complex& x) const;
    std::string str(const std::string& var = "x") const;

private:
    Poly num_, den_;
};

struct Location {
    enum class Kind { Finite, Infinity };
    Kind kind = Kind::Finite;
    std::optional<QSurd> exact;  // finite exact value
    Complex approx;              // always meaningful for finite points

    static Location infinity() { Location l; l.kind = Kind::Infinity; return l; }
    static Location finite(const QSurd& v) {
        Location l;
        l.exact = v;
        l.approx = v.approx();
        return l;
    }
    static Location approximate(const Complex& v) {
        Location l;
        l.approx = v;
        return l;
    }

    bool is_infinity() const { return kind == Kind::Infinity; }
    bool is_exact() const { return is_infinity() || exact.has_value(); }
    bool same_as(const Location& o) const;
    std::string str() const;
};

// Exact local expansion of f at a finite exact point or at infinity.
// Coefficients run c_lead, c_{lead+1}, ... in powers of (x - x0), or in
// powers of 1/x at infinity (so the "residue at infinity" is the
// coefficient with exponent index 1, no sign flip).
struct LocalExpansion {
    int lead = 0;                  // valuation; negative at poles
    std::vector<QSurd> coeffs;     // nterms entries starting at exponent `lead`
    QSurd at(int exponent) const;  // 0 outside the stored window
    int pole_order() const { return lead < 0 ? -lead : 0; }
};

LocalExpansion local_expansion(const RatFun& f, const Location& at, int nterms);

// Same at an approximate finite point (pole order decided numerically).
struct LocalExpansionApprox {
    int lead = 0;
    std::vector<Complex> coeffs;
    Complex at(int exponent) const;
    int pole_order() const { return lead < 0 ? -lead : 0; }
};

LocalExpansionApprox local_expansion_approx(const RatFun& f, const Complex& at,
                                            int nterms);

// Spec-facing wrapper: pole order plus the principal part c_{-k}..c_{-1}.
struct Laurent {
    int pole_order = 0;
    bool exact = true;
    std::vector<QSurd> principal;          // exact entries when exact
    std::vector<Complex> principal_approx; // filled in both cases
};

Laurent laurent_data(const RatFun& f, const Location& at, int depth);

} // namespace ode2

#endif
