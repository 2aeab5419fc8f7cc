#ifndef ODE2_POLY_HPP
#define ODE2_POLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ode2/qsurd.hpp"

namespace ode2 {

// Dense univariate polynomial over Q(sqrt d), coefficients ascending,
// trailing zeros stripped.  degree() is -1 for the zero polynomial.
class Poly {
public:
    Poly() = default;
    explicit Poly(QSurd c) : c_{std::move(c)} { trim(); }
    explicit Poly(std::vector<QSurd> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<QSurd> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(QSurd(1)); }
    static Poly x() { return Poly({QSurd(0), QSurd(1)}); }
    static Poly monomial(int n, const QSurd& c);
    static Poly from_rationals(const std::vector<Rational>& coeffs);
    // product of (x - r) over given roots
    static Poly from_roots(const std::vector<QSurd>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const QSurd& operator[](int i) const;
    const QSurd& leading() const;
    int valuation() const;  // lowest nonzero index; 0 for the zero polynomial
    const std::vector<QSurd>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    Poly operator*(const QSurd& s) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative() const;
    QSurd eval(const QSurd& x) const;
    Complex eval(const Complex& x) const;
    Poly taylor_shift(const QSurd& c) const;  // p(x + c)
    Poly shifted_down(int k) const;           // divide by x^k (requires valuation >= k)
    Poly times_power(int k) const;            // multiply by x^k
    Poly reversed() const;                    // x^deg * p(1/x)
    Poly monic() const;
    Poly conj() const;                        // surd-conjugated coefficients
    bool is_rational() const;
    Poly pow(int n) const;

    // Euclidean division over the coefficient field; q nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);
    // true and sets quotient if q divides p exactly
    static bool try_divide(const Poly& p, const Poly& q, Poly& quotient);
    static Poly gcd(Poly p, Poly q);  // monic
    // Yun decomposition: list of (factor, multiplicity), factors monic
    // and square-free; their weighted product rebuilds p up to a constant.
    std::vector<std::pair<Poly, int>> square_free() const;
    // multiplicity of x0 as a root (0 if not a root)
    int root_multiplicity(const QSurd& x0) const;

    std::vector<Complex> approx_coeffs() const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<QSurd> c_;
};

// First nterms coefficients of the power-series quotient num/den
// (den[0] != 0), over QSurd or Complex coefficient vectors.
std::vector<QSurd> series_divide(const std::vector<QSurd>& num,
                                 const std::vector<QSurd>& den, int nterms);
std::vector<Complex> series_divide(const std::vector<Complex>& num,
                                   const std::vector<Complex>& den, int nterms);

// p(x + c) over complex coefficients (for expansions at approximate points)
std::vector<Complex> taylor_shift(const std::vector<Complex>& p, const Complex& c);

} // namespace ode2

#endif
