#include "ode2/roots.hpp"
#include "ode2/errors.hpp"

#include <algorithm>

namespace ode2 {

bool RootSet::all_exact() const {
    for (auto& e : entries)
        if (!e.location.is_exact()) return false;
    return true;
}

int RootSet::total_multiplicity() const {
    int s = 0;
    for (auto& e : entries) s += e.multiplicity;
    return s;
}

std::optional<std::pair<QSurd, QSurd>> quadratic_roots(const QSurd& a,
                                                       const QSurd& b,
                                                       const QSurd& c) {
    QSurd disc = b * b - QSurd(4) * a * c;
    std::optional<QSurd> s = disc.try_sqrt();
    if (!s) return std::nullopt;
    QSurd two_a = QSurd(2) * a;
    QSurd r1 = (-b - *s) / two_a;
    QSurd r2 = (-b + *s) / two_a;
    if (QSurd::cmp(r1, r2) > 0) std::swap(r1, r2);
    return std::make_pair(r1, r2);
}

std::vector<Complex> approximate_roots(const Poly& squarefree) {
    int n = squarefree.degree();
    std::vector<Complex> c = squarefree.monic().approx_coeffs();
    // Durand-Kerner on the monic polynomial
    BigFloat radius(1);
    for (int i = 0; i < n; ++i) radius = (std::max)(radius, abs(c[i]));
    radius += 1;
    std::vector<Complex> z(n);
    BigFloat pi = boost::multiprecision::atan2(BigFloat(0), BigFloat(-1));
    for (int k = 0; k < n; ++k) {
        BigFloat angle = 2 * pi * k / n + BigFloat("0.7");
        z[k] = Complex(radius * boost::multiprecision::cos(angle),
                       radius * boost::multiprecision::sin(angle));
    }
    auto eval = [&](const Complex& x) {
        Complex r(BigFloat(1));  // monic
        for (int i = n - 1; i >= 0; --i) r = r * x + c[i];
        return r;
    };
    BigFloat eps = boost::multiprecision::pow(BigFloat(10), -(int)(precision_bits() * 0.30103) + 6);
    for (int iter = 0; iter < 500; ++iter) {
        BigFloat maxstep(0);
        for (int k = 0; k < n; ++k) {
            Complex denom(BigFloat(1));
            for (int j = 0; j < n; ++j)
                if (j != k) denom *= (z[k] - z[j]);
            if (denom.is_zero()) { z[k].re += BigFloat("0.001"); continue; }
            Complex step = eval(z[k]) / denom;
            z[k] -= step;
            maxstep = (std::max)(maxstep, abs(step));
        }
        if (maxstep < eps) break;
    }
    // Newton polish
    Poly dp = squarefree.derivative();
    for (int k = 0; k < n; ++k) {
        for (int it = 0; it < 4; ++it) {
            Complex d = dp.eval(z[k]);
            if (d.is_zero()) break;
            z[k] -= squarefree.eval(z[k]) / d;
        }
        // snap tiny imaginary parts of genuinely real roots
        if (z[k].im != 0 && abs(Complex(z[k].im)) < eps * (1 + abs(z[k])))
            z[k].im = 0;
    }
    return z;
}

std::optional<Rational> reconstruct_rational(const BigFloat& value) {
    const BigFloat tol("1e-24");
    const Integer qmax = Integer("1000000000000");
    BigFloat x = value;
    Integer p0(1), q0(0), p1(0), q1(1);  // convergents
    for (int i = 0; i < 64; ++i) {
        BigFloat fl = boost::multiprecision::floor(x);
        Integer a;
        mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDN);
        Integer p = a * p0 + p1;
        Integer q = a * q0 + q1;
        if (q > qmax) return std::nullopt;
        if (q != 0) {
            BigFloat approx = BigFloat(p.get_str()) / BigFloat(q.get_str());
            if (boost::multiprecision::abs(value - approx) < tol)
                return rat(p, q);
        }
        p1 = p0; q1 = q0; p0 = p; q0 = q;
        BigFloat frac = x - fl;
        if (frac < tol) return std::nullopt;
        x = 1 / frac;
    }
    return std::nullopt;
}

namespace {

// exact rational roots of a rational-coefficient polynomial; deflates f
std::vector<Rational> rational_roots(Poly& f) {
    std::vector<Rational> found;
    if (f.degree() < 1) return found;
    // integerize: common denominator over all (rational) coefficients
    Integer den(1);
    for (auto& c : f.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.a().get_den().get_mpz_t());
    std::vector<Integer> ic(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        Rational v = f[i].a() * Rational(den);
        ic[i] = v.get_num();
    }
    while (true) {
        int deg = (int)ic.size() - 1;
        if (deg < 1) break;
        if (ic[0] == 0) {  // handled by caller (valuation), but stay safe
            found.push_back(Rational(0));
            ic.erase(ic.begin());
            continue;
        }
        if (deg == 1) {
            found.push_back(rat(-ic[0], ic[1]));
            ic.resize(1);
            break;
        }
        bool hit = false;
        std::vector<Integer> us = divisors(ic[0]);
        std::vector<Integer> vs = divisors(ic[deg]);
        for (auto& u : us) {
            for (auto& v : vs) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
                if (g != 1) continue;
                for (int s = 0; s < 2; ++s) {
                    Rational r = rat(s ? -u : u, v);
                    // synthetic evaluation/deflation in one pass
                    Rational acc(0);
                    std::vector<Rational> quo(deg);
                    for (int i = deg; i >= 1; --i) {
                        acc = acc * r + Rational(ic[i]);
                        quo[i - 1] = acc;
                    }
                    if (acc * r + Rational(ic[0]) == 0) {
                        found.push_back(r);
                        Integer qden(1);
                        for (auto& qc : quo)
                            mpz_lcm(qden.get_mpz_t(), qden.get_mpz_t(),
                                    qc.get_den().get_mpz_t());
                        std::vector<Integer> next(deg);
                        for (int i = 0; i < deg; ++i) {
                            Rational vq = quo[i] * Rational(qden);
                            next[i] = vq.get_num();
                        }
                        ic = std::move(next);
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
            if (hit) break;
        }
        if (!hit) break;
    }
    std::vector<QSurd> rest(ic.size());
    for (size_t i = 0; i < ic.size(); ++i) rest[i] = QSurd(rat(ic[i], Integer(1)));
    f = Poly(std::move(rest));
    return found;
}

void emit_quadratic(const Poly& quad, int mult, std::vector<RootEntry>& out) {
    auto rr = quadratic_roots(quad[2], quad[1], quad[0]);
    if (rr) {
        out.push_back({Location::finite(rr->first), mult});
        out.push_back({Location::finite(rr->second), mult});
    } else {
        for (auto& z : approximate_roots(quad))
            out.push_back({Location::approximate(z), mult});
    }
}

// roots of a square-free rational-coefficient factor
void roots_of_squarefree_rational(Poly f, int mult, std::vector<RootEntry>& out) {
    for (auto& r : rational_roots(f))
        out.push_back({Location::finite(QSurd(r)), mult});
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back({Location::finite(-f[0] / f[1]), mult});
        return;
    }
    if (f.degree() == 2) {
        emit_quadratic(f, mult, out);
        return;
    }
    // probe for exact quadratic factors by pairing approximate roots
    bool progress = true;
    while (f.degree() > 2 && progress) {
        progress = false;
        std::vector<Complex> zs = approximate_roots(f);
        int n = (int)zs.size();
        for (int i = 0; i < n && !progress; ++i) {
            for (int j = i + 1; j < n && !progress; ++j) {
                Complex s = zs[i] + zs[j], pr = zs[i] * zs[j];
                if (abs(Complex(s.im)) > BigFloat("1e-25") ||
                    abs(Complex(pr.im)) > BigFloat("1e-25"))
                    continue;
                auto S = reconstruct_rational(s.re);
                auto P = reconstruct_rational(pr.re);
                if (!S || !P) continue;
                Poly cand({QSurd(*P), QSurd(-*S), QSurd(1)});
                Poly quo;
                if (!Poly::try_divide(f, cand, quo)) continue;
                emit_quadratic(cand, mult, out);
                f = quo;
                progress = true;
            }
        }
    }
    if (f.degree() == 1) {
        out.push_back({Location::finite(-f[0] / f[1]), mult});
    } else if (f.degree() == 2) {
        emit_quadratic(f, mult, out);
    } else if (f.degree() > 2) {
        for (auto& z : approximate_roots(f))
            out.push_back({Location::approximate(z), mult});
    }
}

// roots of a square-free factor over Q(sqrt d): exact candidates come from
// the rational-coefficient norm f * conj(f)
void roots_of_squarefree_surd(Poly f, int mult, std::vector<RootEntry>& out) {
    long d = 1;
    for (auto& c : f.coeffs())
        if (!c.is_rational()) { d = c.d(); break; }
    Poly norm = f * f.conj();
    Poly nsf = Poly::one();
    for (auto& [g, m] : norm.square_free()) {
        (void)m;
        nsf *= g;
    }
    std::vector<RootEntry> candidates;
    roots_of_squarefree_rational(nsf, 1, candidates);
    for (auto& cand : candidates) {
        if (f.degree() < 1) break;
        if (!cand.location.is_exact()) continue;
        const QSurd& v = *cand.location.exact;
        if (!(v.d() == 1 || v.d() == d)) continue;  // outside the working field
        if (!f.eval(v).is_zero()) continue;
        int k = f.root_multiplicity(v);  // square-free => 1, but stay general
        for (int i = 0; i < k; ++i)
            f = Poly::divmod(f, Poly({-v, QSurd(1)})).first;
        out.push_back({Location::finite(v), mult});
    }
    if (f.degree() == 1) {
        out.push_back({Location::finite(-f[0] / f[1]), mult});
    } else if (f.degree() == 2) {
        emit_quadratic(f, mult, out);
    } else if (f.degree() > 2) {
        for (auto& z : approximate_roots(f))
            out.push_back({Location::approximate(z), mult});
    }
}

} // namespace

RootSet find_roots(const Poly& p) {
    if (p.degree() < 1) fail(ErrorCode::Internal, "find_roots needs degree >= 1");
    RootSet rs;
    int val = p.valuation();
    if (val > 0) rs.entries.push_back({Location::finite(QSurd(0)), val});
    Poly q = p.shifted_down(val);
    if (q.degree() >= 1) {
        for (auto& [g, m] : q.square_free()) {
            if (g.is_rational())
                roots_of_squarefree_rational(g, m, rs.entries);
            else
                roots_of_squarefree_surd(g, m, rs.entries);
        }
    }
    std::sort(rs.entries.begin(), rs.entries.end(),
              [](const RootEntry& x, const RootEntry& y) {
                  if (x.location.exact && y.location.exact)
                      return QSurd::cmp(*x.location.exact, *y.location.exact) < 0;
                  const Complex& a = x.location.approx;
                  const Complex& b = y.location.approx;
                  if (a.re != b.re) return a.re < b.re;
                  return a.im < b.im;
              });
    return rs;
}

} // namespace ode2
