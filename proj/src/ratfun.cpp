#include "ode2/ratfun.hpp"
#include "ode2/errors.hpp"

namespace ode2 {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) { den_ = Poly::one(); return; }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    QSurd lc = den_.leading();
    if (!(lc == QSurd(1))) {
        QSurd inv = QSurd(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun operator+(const RatFun& f, const RatFun& g) {
    return RatFun(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFun operator-(const RatFun& f, const RatFun& g) {
    return RatFun(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RatFun operator*(const RatFun& f, const RatFun& g) {
    return RatFun(f.num_ * g.num_, f.den_ * g.den_);
}

RatFun operator/(const RatFun& f, const RatFun& g) {
    if (g.is_zero()) fail(ErrorCode::DivisionByZero, "rational function division by zero");
    return RatFun(f.num_ * g.den_, f.den_ * g.num_);
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

QSurd RatFun::eval(const QSurd& x) const {
    QSurd d = den_.eval(x);
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "evaluation at a pole");
    return num_.eval(x) / d;
}

Complex RatFun::eval(const Complex& x) const {
    return num_.eval(x) / den_.eval(x);
}

std::string RatFun::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

bool Location::same_as(const Location& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    if (exact && o.exact) return *exact == *o.exact;
    if (exact != o.exact) {
        // compare exact against approximate numerically
    }
    Complex d = approx - o.approx;
    return abs(d) < BigFloat("1e-25");
}

std::string Location::str() const {
    if (is_infinity()) return "inf";
    if (exact) return exact->str();
    return to_string(approx, 20);
}

QSurd LocalExpansion::at(int exponent) const {
    int i = exponent - lead;
    if (i < 0 || i >= (int)coeffs.size()) return QSurd();
    return coeffs[i];
}

Complex LocalExpansionApprox::at(int exponent) const {
    int i = exponent - lead;
    if (i < 0 || i >= (int)coeffs.size()) return Complex();
    return coeffs[i];
}

LocalExpansion local_expansion(const RatFun& f, const Location& at, int nterms) {
    LocalExpansion out;
    if (f.is_zero()) {
        out.lead = 0;
        out.coeffs.assign(nterms, QSurd());
        return out;
    }
    if (at.is_infinity()) {
        // expansion in u = 1/x: f = u^(dd-dn) * rev(num)(u)/rev(den)(u)
        int dn = f.num().degree(), dd = f.den().degree();
        out.lead = dd - dn;
        out.coeffs = series_divide(f.num().reversed().coeffs(),
                                   f.den().reversed().coeffs(), nterms);
        return out;
    }
    if (!at.exact) fail(ErrorCode::ApproximatePoint, "exact expansion at a non-exact point");
    const QSurd& x0 = *at.exact;
    Poly ns = f.num().taylor_shift(x0);
    Poly ds = f.den().taylor_shift(x0);
    int vn = ns.valuation(), vd = ds.valuation();
    out.lead = vn - vd;
    out.coeffs = series_divide(ns.shifted_down(vn).coeffs(),
                               ds.shifted_down(vd).coeffs(), nterms);
    return out;
}

LocalExpansionApprox local_expansion_approx(const RatFun& f, const Complex& at,
                                            int nterms) {
    LocalExpansionApprox out;
    if (f.is_zero()) {
        out.coeffs.assign(nterms, Complex());
        return out;
    }
    std::vector<Complex> ns = taylor_shift(f.num().approx_coeffs(), at);
    std::vector<Complex> ds = taylor_shift(f.den().approx_coeffs(), at);
    // numeric valuation: leading coefficients below tolerance count as zero
    BigFloat tol = BigFloat("1e-30");
    auto valuation = [&](std::vector<Complex>& v) {
        BigFloat scale(0);
        for (auto& c : v) scale = (std::max)(scale, abs(c));
        size_t k = 0;
        while (k < v.size() && abs(v[k]) < tol * scale) ++k;
        return (int)k;
    };
    int vn = valuation(ns), vd = valuation(ds);
    out.lead = vn - vd;
    std::vector<Complex> n2(ns.begin() + vn, ns.end());
    std::vector<Complex> d2(ds.begin() + vd, ds.end());
    out.coeffs = series_divide(n2, d2, nterms);
    return out;
}

Laurent laurent_data(const RatFun& f, const Location& at, int depth) {
    Laurent out;
    if (!at.is_exact()) {
        auto le = local_expansion_approx(f, at.approx, 1);
        out.exact = false;
        out.pole_order = le.pole_order();
        int k = std::min(out.pole_order, depth);
        auto full = local_expansion_approx(f, at.approx, out.pole_order);
        for (int e = -k; e <= -1; ++e) out.principal_approx.push_back(full.at(e));
        return out;
    }
    auto le = local_expansion(f, at, 1);
    out.pole_order = le.pole_order();
    int k = std::min(out.pole_order, depth);
    auto full = local_expansion(f, at, out.pole_order == 0 ? 1 : out.pole_order);
    for (int e = -k; e <= -1; ++e) {
        QSurd c = full.at(e);
        out.principal.push_back(c);
        out.principal_approx.push_back(c.approx());
    }
    return out;
}

} // namespace ode2
