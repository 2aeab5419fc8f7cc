#include "ode2/poly.hpp"
#include "ode2/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ode2 {

static const QSurd k_zero{};

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int n, const QSurd& c) {
    if (c.is_zero()) return Poly();
    std::vector<QSurd> v(n + 1);
    v[n] = c;
    return Poly(std::move(v));
}

Poly Poly::from_rationals(const std::vector<Rational>& coeffs) {
    std::vector<QSurd> v;
    v.reserve(coeffs.size());
    for (auto& q : coeffs) v.emplace_back(q);
    return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<QSurd>& roots) {
    Poly p = one();
    for (auto& r : roots) p *= Poly({-r, QSurd(1)});
    return p;
}

const QSurd& Poly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return k_zero;
    return c_[i];
}

const QSurd& Poly::leading() const {
    if (c_.empty()) return k_zero;
    return c_.back();
}

int Poly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return 0;
}

Poly Poly::operator-() const {
    std::vector<QSurd> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return Poly(std::move(v));
}

Poly operator+(const Poly& p, const Poly& q) {
    std::vector<QSurd> v(std::max(p.c_.size(), q.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = p[(int)i] + q[(int)i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& p, const Poly& q) {
    std::vector<QSurd> v(std::max(p.c_.size(), q.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = p[(int)i] - q[(int)i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<QSurd> v(p.c_.size() + q.c_.size() - 1);
    for (size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i].is_zero()) continue;
        for (size_t j = 0; j < q.c_.size(); ++j)
            v[i + j] += p.c_[i] * q.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::operator*(const QSurd& s) const {
    if (s.is_zero()) return Poly();
    std::vector<QSurd> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<QSurd> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * QSurd((long)i);
    return Poly(std::move(v));
}

QSurd Poly::eval(const QSurd& x) const {
    QSurd r;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

Complex Poly::eval(const Complex& x) const {
    Complex r;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i].approx();
    return r;
}

Poly Poly::taylor_shift(const QSurd& c) const {
    if (c.is_zero()) return *this;
    Poly r;
    Poly lin({c, QSurd(1)});
    for (int i = degree(); i >= 0; --i) r = r * lin + Poly(c_[i]);
    return r;
}

Poly Poly::shifted_down(int k) const {
    if (k <= 0) return *this;
    if (static_cast<int>(c_.size()) <= k) return Poly();
    return Poly(std::vector<QSurd>(c_.begin() + k, c_.end()));
}

Poly Poly::times_power(int k) const {
    if (is_zero() || k <= 0) return *this;
    std::vector<QSurd> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
}

Poly Poly::reversed() const {
    std::vector<QSurd> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    QSurd inv = QSurd(1) / leading();
    return *this * inv;
}

Poly Poly::conj() const {
    std::vector<QSurd> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].conj();
    return Poly(std::move(v));
}

bool Poly::is_rational() const {
    for (auto& c : c_)
        if (!c.is_rational()) return false;
    return true;
}

Poly Poly::pow(int n) const {
    Poly r = one(), b = *this;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (p.degree() < q.degree()) return {Poly(), p};
    std::vector<QSurd> rem = p.c_;
    std::vector<QSurd> quo(p.degree() - q.degree() + 1);
    QSurd inv = QSurd(1) / q.leading();
    for (int i = p.degree(); i >= q.degree(); --i) {
        QSurd f = rem[i] * inv;
        if (!f.is_zero()) {
            quo[i - q.degree()] = f;
            for (int j = 0; j <= q.degree(); ++j)
                rem[i - q.degree() + j] -= f * q[j];
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

bool Poly::try_divide(const Poly& p, const Poly& q, Poly& quotient) {
    auto [quo, rem] = divmod(p, q);
    if (!rem.is_zero()) return false;
    quotient = quo;
    return true;
}

Poly Poly::gcd(Poly p, Poly q) {
    while (!q.is_zero()) {
        auto [quo, rem] = divmod(p, q);
        (void)quo;
        p = std::move(q);
        q = rem.is_zero() ? rem : rem.monic();
    }
    if (p.is_zero()) return p;
    return p.monic();
}

std::vector<std::pair<Poly, int>> Poly::square_free() const {
    std::vector<std::pair<Poly, int>> out;
    if (degree() < 1) return out;
    Poly f = monic();
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = divmod(f, a).first;
    Poly c = divmod(fp, a).first;
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly ai = gcd(b, d);
        if (ai.degree() > 0) out.push_back({ai, i});
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

int Poly::root_multiplicity(const QSurd& x0) const {
    int m = 0;
    Poly f = *this;
    Poly lin({-x0, QSurd(1)});
    while (!f.is_zero() && f.eval(x0).is_zero()) {
        f = divmod(f, lin).first;
        ++m;
    }
    return m;
}

std::vector<Complex> Poly::approx_coeffs() const {
    std::vector<Complex> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].approx();
    return v;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const QSurd& c = c_[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = (cs[0] == '-');
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        bool needs_parens = cs.find_first_of("+-") != std::string::npos &&
                            cs.find("sqrt") != std::string::npos && i > 0;
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") {
                os << (needs_parens ? "(" + cs + ")" : cs) << "*";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<QSurd> series_divide(const std::vector<QSurd>& num,
                                 const std::vector<QSurd>& den, int nterms) {
    if (den.empty() || den[0].is_zero())
        fail(ErrorCode::Internal, "series division by zero constant term");
    std::vector<QSurd> out(nterms);
    for (int k = 0; k < nterms; ++k) {
        QSurd acc = (k < (int)num.size()) ? num[k] : QSurd();
        for (int j = 1; j <= k && j < (int)den.size(); ++j)
            acc -= den[j] * out[k - j];
        out[k] = acc / den[0];
    }
    return out;
}

std::vector<Complex> series_divide(const std::vector<Complex>& num,
                                   const std::vector<Complex>& den, int nterms) {
    std::vector<Complex> out(nterms);
    for (int k = 0; k < nterms; ++k) {
        Complex acc = (k < (int)num.size()) ? num[k] : Complex();
        for (int j = 1; j <= k && j < (int)den.size(); ++j)
            acc -= den[j] * out[k - j];
        out[k] = acc / den[0];
    }
    return out;
}

std::vector<Complex> taylor_shift(const std::vector<Complex>& p, const Complex& c) {
    std::vector<Complex> r;
    for (int i = (int)p.size() - 1; i >= 0; --i) {
        // r = r*(x + c) + p[i]
        std::vector<Complex> nr(r.size() + 1);
        for (size_t j = 0; j < r.size(); ++j) {
            nr[j + 1] += r[j];
            nr[j] += r[j] * c;
        }
        if (nr.empty()) nr.push_back(Complex());
        nr[0] += p[i];
        r = std::move(nr);
    }
    return r;
}

} // namespace ode2
