#include "ode2/singular.hpp"
#include "ode2/errors.hpp"
#include "ode2/roots.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ode2 {

const char* point_kind_name(PointKind k) {
    switch (k) {
    case PointKind::Ordinary: return "ordinary";
    case PointKind::Regular: return "regular";
    case PointKind::Irregular: return "irregular";
    }
    return "?";
}

namespace {

struct LocalOrders {
    int kp = 0;  // pole order of p
    int kq = 0;  // pole order of q
};

PointKind classify_orders(const LocalOrders& o, int& rank) {
    if (o.kp == 0 && o.kq == 0) { rank = 0; return PointKind::Ordinary; }
    int k = std::max(o.kp, (o.kq + 1) / 2);
    rank = k - 1;
    return rank == 0 ? PointKind::Regular : PointKind::Irregular;
}

// exponents from the indicial equation r(r-1) + p* r + q* = 0
std::optional<std::pair<QSurd, QSurd>> exact_exponents(const QSurd& pstar,
                                                       const QSurd& qstar) {
    return quadratic_roots(QSurd(1), pstar - QSurd(1), qstar);
}

std::pair<Complex, Complex> approx_exponents(const Complex& pstar, const Complex& qstar) {
    Complex b = pstar - Complex(BigFloat(1));
    Complex disc = b * b - Complex(BigFloat(4)) * qstar;
    Complex s = sqrt(disc);
    Complex r1 = (-b - s) / Complex(BigFloat(2));
    Complex r2 = (-b + s) / Complex(BigFloat(2));
    if (r1.re > r2.re || (r1.re == r2.re && r1.im > r2.im)) std::swap(r1, r2);
    return {r1, r2};
}

// analysis of one finite point of (p, q)
SingularPoint analyze_finite(const RatFun& p, const RatFun& q, const Location& loc,
                             int kp, int kq) {
    SingularPoint sp;
    sp.location = loc;
    LocalOrders o{kp, kq};
    sp.kind = classify_orders(o, sp.rank);
    if (sp.kind != PointKind::Regular) return sp;
    if (loc.is_exact()) {
        auto pe = local_expansion(p, loc, 2);
        auto qe = local_expansion(q, loc, 3);
        QSurd pstar = pe.at(-1), qstar = qe.at(-2);
        sp.exponents = exact_exponents(pstar, qstar);
        if (sp.exponents) {
            sp.exponents_approx = {sp.exponents->first.approx(),
                                   sp.exponents->second.approx()};
        } else {
            sp.exponents_approx = approx_exponents(pstar.approx(), qstar.approx());
        }
    } else {
        auto pe = local_expansion_approx(p, loc.approx, 2);
        auto qe = local_expansion_approx(q, loc.approx, 3);
        sp.exponents_approx = approx_exponents(pe.at(-1), qe.at(-2));
    }
    return sp;
}

} // namespace

std::vector<SingularPoint> find_singular_points(const ODE2& ode) {
    RatFun p = ode.p(), q = ode.q();

    // pole orders by location across both denominators
    struct Entry { Location loc; int kp = 0, kq = 0; };
    std::vector<Entry> entries;
    auto merge = [&entries](const RootSet& rs, bool is_p) {
        for (auto& r : rs.entries) {
            Entry* hit = nullptr;
            for (auto& e : entries)
                if (e.loc.same_as(r.location)) { hit = &e; break; }
            if (!hit) {
                entries.push_back({r.location, 0, 0});
                hit = &entries.back();
            }
            (is_p ? hit->kp : hit->kq) = r.multiplicity;
        }
    };
    if (p.den().degree() > 0) merge(find_roots(p.den()), true);
    if (q.den().degree() > 0) merge(find_roots(q.den()), false);

    std::vector<SingularPoint> out;
    for (auto& e : entries)
        out.push_back(analyze_finite(p, q, e.loc, e.kp, e.kq));

    // infinity, via x -> 1/x at zero; reported whether singular or not
    ODE2 inv = invert(ode);
    RatFun pi = inv.p(), qi = inv.q();
    Location zero = Location::finite(QSurd(0));
    int kp = pi.den().root_multiplicity(QSurd(0));
    int kq = qi.den().root_multiplicity(QSurd(0));
    SingularPoint at_inf = analyze_finite(pi, qi, zero, kp, kq);
    at_inf.location = Location::infinity();
    out.push_back(at_inf);

    std::sort(out.begin(), out.end(), [](const SingularPoint& x, const SingularPoint& y) {
        if (x.location.is_infinity() != y.location.is_infinity())
            return y.location.is_infinity();
        if (x.location.is_infinity()) return false;
        if (x.location.exact && y.location.exact)
            return QSurd::cmp(*x.location.exact, *y.location.exact) < 0;
        const Complex &a = x.location.approx, &b = y.location.approx;
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return out;
}

namespace {

SingularPoint point_at(const ODE2& ode, const Location& at) {
    for (auto& sp : find_singular_points(ode))
        if (sp.location.same_as(at)) return sp;
    // not in the list: finite ordinary point
    SingularPoint sp;
    sp.location = at;
    sp.kind = PointKind::Ordinary;
    return sp;
}

} // namespace

int rank_at(const ODE2& ode, const Location& at) {
    SingularPoint sp = point_at(ode, at);
    if (sp.kind == PointKind::Ordinary)
        fail(ErrorCode::NotSingular, at.str() + " is an ordinary point");
    return sp.rank;
}

std::pair<QSurd, QSurd> indices(const ODE2& ode, const Location& at) {
    SingularPoint sp = point_at(ode, at);
    if (sp.kind == PointKind::Ordinary) return {QSurd(0), QSurd(1)};
    if (sp.kind == PointKind::Irregular)
        fail(ErrorCode::IrregularPoint,
             at.str() + " is an irregular singular point of rank " +
             std::to_string(sp.rank));
    if (!sp.exponents)
        fail(ErrorCode::ApproximatePoint,
             "exponents at " + at.str() + " are not representable in Q(sqrt d)");
    return *sp.exponents;
}

PSymbol psymbol(const ODE2& ode) {
    PSymbol ps;
    Rational rat_sum(0);
    std::map<long, Rational> radical_sum;
    for (auto& sp : find_singular_points(ode)) {
        if (sp.kind == PointKind::Ordinary) continue;
        if (sp.kind == PointKind::Irregular) {
            Error e(ErrorCode::NotFuchsian,
                    "irregular singular point of rank " + std::to_string(sp.rank) +
                    " at " + sp.location.str());
            e.detail = sp.location.str();
            e.index = sp.rank;
            throw e;
        }
        if (!sp.exponents)
            fail(ErrorCode::ApproximatePoint,
                 "exponents at " + sp.location.str() + " are not exactly representable");
        ps.columns.push_back({sp.location, *sp.exponents});
        for (const QSurd* e : {&sp.exponents->first, &sp.exponents->second}) {
            rat_sum += e->a();
            if (!e->is_rational()) radical_sum[e->d()] += e->b();
        }
    }
    long d = 1;
    Rational b(0);
    for (auto& [dd, bb] : radical_sum) {
        if (bb == 0) continue;
        if (d != 1)
            fail(ErrorCode::InconsistentExponents,
                 "exponent sum spans more than one quadratic extension");
        d = dd;
        b = bb;
    }
    ps.exponent_sum = QSurd(rat_sum, b, d);
    long n = static_cast<long>(ps.columns.size());
    ps.fuchs_ok = (ps.exponent_sum == QSurd(n - 2));
    return ps;
}

std::string PSymbol::str() const {
    std::ostringstream os;
    std::vector<std::vector<std::string>> rows(3);
    for (auto& col : columns) {
        rows[0].push_back(col.location.str());
        rows[1].push_back(col.exponents.first.str());
        rows[2].push_back(col.exponents.second.str());
    }
    std::vector<size_t> widths(columns.size(), 0);
    for (auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    const char* labels[3] = {"P { ", "    ", "    "};
    for (int r = 0; r < 3; ++r) {
        os << labels[r];
        for (size_t i = 0; i < rows[r].size(); ++i) {
            os << rows[r][i] << std::string(widths[i] - rows[r][i].size() + 2, ' ');
        }
        if (r == 0) os << "; x";
        if (r == 2) os << "}";
        os << "\n";
    }
    return os.str();
}

} // namespace ode2
