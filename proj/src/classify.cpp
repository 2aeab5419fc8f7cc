#include "ode2/classify.hpp"
#include "ode2/errors.hpp"
#include "ode2/roots.hpp"

#include <algorithm>
#include <sstream>

namespace ode2 {

const char* equation_type_name(EquationType t) {
    switch (t) {
    case EquationType::Hypergeometric: return "Hypergeometric";
    case EquationType::ConfluentHypergeometric: return "ConfluentHypergeometric";
    case EquationType::HeunGeneral: return "HeunGeneral";
    case EquationType::HeunConfluent: return "HeunConfluent";
    case EquationType::HeunDoubleConfluent: return "HeunDoubleConfluent";
    case EquationType::HeunBiconfluent: return "HeunBiconfluent";
    case EquationType::HeunTriconfluent: return "HeunTriconfluent";
    case EquationType::Unrecognized: return "Unrecognized";
    }
    return "?";
}

std::vector<const SingularPoint*> Signature::regular() const {
    std::vector<const SingularPoint*> out;
    for (auto& p : points)
        if (p.kind == PointKind::Regular) out.push_back(&p);
    return out;
}

std::vector<const SingularPoint*> Signature::irregular() const {
    std::vector<const SingularPoint*> out;
    for (auto& p : points)
        if (p.kind == PointKind::Irregular) out.push_back(&p);
    return out;
}

Signature signature_of(const ODE2& ode) {
    Signature sig;
    for (auto& sp : find_singular_points(ode)) {
        if (!sp.is_singular()) continue;
        if (!sp.location.is_exact())
            fail(ErrorCode::ApproximateLocations,
                 "classification requires exact singular points; " +
                 sp.location.str() + " is approximate");
        sig.points.push_back(sp);
    }
    return sig;
}

EquationType type_of(const Signature& sig) {
    int nreg = 0;
    std::vector<int> ranks;
    for (auto& p : sig.points) {
        if (p.kind == PointKind::Regular) ++nreg;
        else ranks.push_back(p.rank);
    }
    std::sort(ranks.begin(), ranks.end());
    if (ranks.empty()) {
        if (nreg == 3) return EquationType::Hypergeometric;
        if (nreg == 4) return EquationType::HeunGeneral;
        return EquationType::Unrecognized;
    }
    if (ranks == std::vector<int>{1}) {
        if (nreg == 1) return EquationType::ConfluentHypergeometric;
        if (nreg == 2) return EquationType::HeunConfluent;
        return EquationType::Unrecognized;
    }
    if (ranks == std::vector<int>{1, 1} && nreg == 0)
        return EquationType::HeunDoubleConfluent;
    if (ranks == std::vector<int>{2} && nreg == 1)
        return EquationType::HeunBiconfluent;
    if (ranks == std::vector<int>{3} && nreg == 0)
        return EquationType::HeunTriconfluent;
    return EquationType::Unrecognized;
}

EquationType classify(const ODE2& ode) {
    return type_of(signature_of(ode));
}

const QSurd& ParameterMap::at(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end())
        fail(ErrorCode::Internal, "missing parameter " + name);
    return it->second;
}

namespace {

const std::pair<QSurd, QSurd>& exponents_of(const SingularPoint& sp) {
    if (!sp.exponents)
        fail(ErrorCode::NotStandardizable,
             "exponents at " + sp.location.str() +
             " need a second quadratic extension");
    return *sp.exponents;
}

// the exponent to zero out: smaller |.|, ties toward the smaller (re, im)
QSurd pick_zero_exponent(const std::pair<QSurd, QSurd>& e, bool flip) {
    int c = QSurd::cmp_abs(e.first, e.second);
    QSurd primary = (c <= 0) ? e.first : e.second;   // pair is (re,im)-sorted
    QSurd secondary = (c <= 0) ? e.second : e.first;
    return flip ? secondary : primary;
}

// root of a monic quadratic to apply: prefer zero, else smaller |.|,
// ties toward the smaller (re, im)
QSurd pick_root(const QSurd& r1, const QSurd& r2) {
    if (r1.is_zero()) return r1;
    if (r2.is_zero()) return r2;
    int c = QSurd::cmp_abs(r1, r2);
    if (c < 0) return r1;
    if (c > 0) return r2;
    return QSurd::cmp(r1, r2) <= 0 ? r1 : r2;
}

bool location_is(const Location& loc, long v) {
    return !loc.is_infinity() && loc.exact && *loc.exact == QSurd(v);
}

struct Pipeline {
    ODE2 ode;
    TransformRecord rec;
    std::vector<SingularPoint> sp;

    explicit Pipeline(const ODE2& o) : ode(o) { refresh(); }
    void refresh() { sp = find_singular_points(ode); }

    const SingularPoint& at(const Location& loc) const {
        for (auto& s : sp)
            if (s.location.same_as(loc)) return s;
        fail(ErrorCode::Internal, "expected singular point at " + loc.str());
    }
    const SingularPoint& at_zero() const { return at(Location::finite(QSurd(0))); }
    const SingularPoint& at_inf() const { return at(Location::infinity()); }

    void mobius(const Mobius& m) {
        if (m.is_identity()) return;
        ode = change_independent(ode, m, rec);
        refresh();
    }
    void shift(const std::vector<std::pair<QSurd, QSurd>>& shifts) {
        bool any = false;
        for (auto& s : shifts)
            if (!s.second.is_zero()) any = true;
        if (!any) return;
        ode = prefactor_power(ode, shifts, rec);
        refresh();
    }
    void exp_step(const QSurd& lambda, long m) {
        if (lambda.is_zero()) return;
        ode = prefactor_exp(ode, lambda, m, rec);
        refresh();
    }

    // expansion coefficient of p or q at infinity: index 1 is the
    // coefficient of 1/x, index -1 the coefficient of x
    QSurd p_inf(int exponent, int nterms = 6) const {
        return local_expansion(ode.p(), Location::infinity(), nterms +
                               6).at(exponent);
    }
    QSurd q_inf(int exponent, int nterms = 6) const {
        return local_expansion(ode.q(), Location::infinity(), nterms +
                               10).at(exponent);
    }
};

// exponent-difference magnitude |e2 - e1|^2, for the infinity-choice rule
QSurd exponent_spread(const SingularPoint& sp) {
    auto& e = exponents_of(sp);
    QSurd d = e.second - e.first;
    if (d.is_real()) return d * d;
    return QSurd(d.a() * d.a() + d.b() * d.b() * rat(-d.d()));
}

// choose which point goes to infinity: largest exponent spread, ties
// broken by location order (infinity itself wins a tie)
size_t choose_infinity(const std::vector<const SingularPoint*>& pts) {
    size_t best = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
        int c = QSurd::cmp(exponent_spread(*pts[i]), exponent_spread(*pts[best]));
        if (c > 0) best = i;
        else if (c == 0 && pts[i]->location.is_infinity()) best = i;
    }
    return best;
}

QSurd sqrt_or_fail(const QSurd& v, const std::string& what) {
    auto s = v.try_sqrt();
    if (!s)
        fail(ErrorCode::NotStandardizable,
             what + " needs a second quadratic extension (sqrt of " + v.str() + ")");
    return *s;
}

// roots of z^2 + B z + C = 0 in Q(sqrt d)
std::pair<QSurd, QSurd> monic_quadratic_roots(const QSurd& B, const QSurd& C,
                                              const std::string& what) {
    QSurd s = sqrt_or_fail(B * B - QSurd(4) * C, what);
    QSurd two(2);
    return {(-B - s) / two, (-B + s) / two};
}

void standardize_fuchsian(Pipeline& pl, const Signature& sig, bool is_heun,
                          bool flip) {
    auto pts = sig.regular();
    bool canonical = false;
    {
        bool has0 = false, has1 = false, hasinf = false;
        for (auto* p : pts) {
            if (location_is(p->location, 0)) has0 = true;
            if (location_is(p->location, 1)) has1 = true;
            if (p->location.is_infinity()) hasinf = true;
        }
        canonical = has0 && has1 && hasinf;
    }
    if (!canonical) {
        size_t iinf = choose_infinity(pts);
        std::vector<const SingularPoint*> rest;
        for (size_t i = 0; i < pts.size(); ++i)
            if (i != iinf) rest.push_back(pts[i]);
        // rest is already in location order
        pl.mobius(Mobius::three_point(rest[0]->location, rest[1]->location,
                                      pts[iinf]->location));
    }
    // zero one exponent at each canonical finite regular point
    std::vector<std::pair<QSurd, QSurd>> shifts;
    std::vector<Location> finite_regs;
    finite_regs.push_back(Location::finite(QSurd(0)));
    finite_regs.push_back(Location::finite(QSurd(1)));
    if (is_heun) {
        for (auto& s : pl.sp) {
            if (s.kind != PointKind::Regular || s.location.is_infinity()) continue;
            if (location_is(s.location, 0) || location_is(s.location, 1)) continue;
            finite_regs.push_back(s.location);
        }
        if (finite_regs.size() != 3)
            fail(ErrorCode::NotStandardizable, "degenerate Heun point configuration");
    }
    for (auto& loc : finite_regs) {
        auto& s = pl.at(loc);
        bool flip_here = flip && location_is(loc, 0);
        QSurd rho = pick_zero_exponent(exponents_of(s), flip_here);
        shifts.push_back({*loc.exact, rho});
    }
    pl.shift(shifts);
}

void standardize_chg(Pipeline& pl, const Signature& sig, bool flip) {
    const SingularPoint* reg = sig.regular().at(0);
    const SingularPoint* irr = sig.irregular().at(0);
    if (!(location_is(reg->location, 0) && irr->location.is_infinity()))
        pl.mobius(Mobius::two_point(reg->location, irr->location));
    // lambda kills the constant term of q at infinity; the scaling then
    // moves the constant term of p to -1
    QSurd p0 = pl.p_inf(0), q0 = pl.q_inf(0);
    auto lr = monic_quadratic_roots(p0, q0, "confluent normalization");
    QSurd lambda = pick_root(lr.first, lr.second);
    QSurd slope = p0 + QSurd(2) * lambda;
    if (slope.is_zero())
        fail(ErrorCode::NotStandardizable,
             "vanishing slope at infinity (0F1/Bessel shape, outside the "
             "Kummer affine orbit)");
    QSurd scale = -slope;
    if (!(scale == QSurd(1))) pl.mobius(Mobius::scaling(scale));
    {
        auto& s0 = pl.at_zero();
        QSurd rho = pick_zero_exponent(exponents_of(s0), flip);
        pl.shift({{QSurd(0), rho}});
    }
    pl.exp_step(lambda / scale, 1);
}

void standardize_heunc(Pipeline& pl, const Signature& sig, bool flip) {
    auto regs = sig.regular();
    const SingularPoint* irr = sig.irregular().at(0);
    bool canonical = irr->location.is_infinity() &&
                     ((location_is(regs[0]->location, 0) && location_is(regs[1]->location, 1)) ||
                      (location_is(regs[0]->location, 1) && location_is(regs[1]->location, 0)));
    if (!canonical)
        pl.mobius(Mobius::three_point(regs[0]->location, regs[1]->location,
                                      irr->location));
    std::vector<std::pair<QSurd, QSurd>> shifts;
    for (long v : {0L, 1L}) {
        auto& s = pl.at(Location::finite(QSurd(v)));
        shifts.push_back({QSurd(v), pick_zero_exponent(exponents_of(s), flip && v == 0)});
    }
    pl.shift(shifts);
    QSurd p0 = pl.p_inf(0), q0 = pl.q_inf(0);
    if (!q0.is_zero()) {
        auto lr = monic_quadratic_roots(p0, q0, "confluent normalization");
        pl.exp_step(pick_root(lr.first, lr.second), 1);
    }
}

void standardize_heund(Pipeline& pl, const Signature& sig) {
    auto irrs = sig.irregular();
    bool canonical = (location_is(irrs[0]->location, 0) && irrs[1]->location.is_infinity());
    if (!canonical)
        pl.mobius(Mobius::two_point(irrs[0]->location, irrs[1]->location));
    // a power prefactor x^rho removes the x^-3 tail of q at 0
    // (gain rho * gamma with gamma the double-pole coefficient of p)
    QSurd c3 = local_expansion(pl.ode.q(), Location::finite(QSurd(0)), 6).at(-3);
    if (!c3.is_zero()) {
        QSurd gamma = local_expansion(pl.ode.p(), Location::finite(QSurd(0)), 4).at(-2);
        if (gamma.is_zero())
            fail(ErrorCode::NotStandardizable,
                 "rank-1 tail at 0 cannot be normalized (vanishing double pole of p)");
        pl.shift({{QSurd(0), -c3 / gamma}});
    }
    QSurd q0 = pl.q_inf(0);
    if (!q0.is_zero()) {
        QSurd eps = pl.p_inf(0);
        auto lr = monic_quadratic_roots(eps, q0, "double-confluent normalization");
        pl.exp_step(pick_root(lr.first, lr.second), 1);
    }
}

void standardize_heunb(Pipeline& pl, const Signature& sig, bool flip) {
    const SingularPoint* reg = sig.regular().at(0);
    const SingularPoint* irr = sig.irregular().at(0);
    if (!(location_is(reg->location, 0) && irr->location.is_infinity()))
        pl.mobius(Mobius::two_point(reg->location, irr->location));
    {
        auto& s0 = pl.at_zero();
        pl.shift({{QSurd(0), pick_zero_exponent(exponents_of(s0), flip)}});
    }
    // q = q2 x^2 + q1 x + ... at infinity; kill q2 with exp(lambda x^2),
    // then q1 with exp(mu x)
    QSurd q2 = pl.q_inf(-2);
    if (!q2.is_zero()) {
        QSurd eps = pl.p_inf(-1);
        // gain of the x^2 coefficient: 4 lambda^2 + 2 lambda eps
        auto lr = monic_quadratic_roots(eps / QSurd(2), q2 / QSurd(4),
                                        "biconfluent normalization");
        pl.exp_step(pick_root(lr.first, lr.second), 2);
    }
    QSurd q1 = pl.q_inf(-1);
    if (!q1.is_zero()) {
        QSurd eps = pl.p_inf(-1);
        if (eps.is_zero())
            fail(ErrorCode::NotStandardizable,
                 "rank-2 tail cannot be normalized (vanishing leading slope)");
        pl.exp_step(-q1 / eps, 1);
    }
}

void standardize_heunt(Pipeline& pl, const Signature& sig) {
    const SingularPoint* irr = sig.irregular().at(0);
    if (!irr->location.is_infinity())
        pl.mobius(Mobius::one_point_to_infinity(irr->location));
    QSurd q4 = pl.q_inf(-4);
    if (!q4.is_zero()) {
        QSurd eps = pl.p_inf(-2);
        // gain of the x^4 coefficient: 9 lambda^2 + 3 lambda eps
        auto lr = monic_quadratic_roots(eps / QSurd(3), q4 / QSurd(9),
                                        "triconfluent normalization");
        pl.exp_step(pick_root(lr.first, lr.second), 3);
    }
    QSurd q3 = pl.q_inf(-3);
    if (!q3.is_zero()) {
        QSurd eps = pl.p_inf(-2);
        if (eps.is_zero())
            fail(ErrorCode::NotStandardizable,
                 "rank-3 tail cannot be normalized (vanishing x^2 slope)");
        pl.exp_step(-q3 / (QSurd(2) * eps), 2);
    }
    QSurd q2 = pl.q_inf(-2);
    if (!q2.is_zero()) {
        QSurd eps = pl.p_inf(-2);
        if (eps.is_zero())
            fail(ErrorCode::NotStandardizable,
                 "rank-3 tail cannot be normalized (vanishing x^2 slope)");
        pl.exp_step(-q2 / eps, 1);
    }
}

} // namespace

std::pair<ODE2, TransformRecord> standardize(const ODE2& ode, EquationType type,
                                             bool flip_reference_exponent) {
    Signature sig = signature_of(ode);
    if (type_of(sig) != type)
        fail(ErrorCode::NotStandardizable,
             std::string("equation signature does not match ") +
             equation_type_name(type));
    Pipeline pl(ode);
    switch (type) {
    case EquationType::Hypergeometric:
        standardize_fuchsian(pl, sig, false, flip_reference_exponent);
        break;
    case EquationType::HeunGeneral:
        standardize_fuchsian(pl, sig, true, flip_reference_exponent);
        break;
    case EquationType::ConfluentHypergeometric:
        standardize_chg(pl, sig, flip_reference_exponent);
        break;
    case EquationType::HeunConfluent:
        standardize_heunc(pl, sig, flip_reference_exponent);
        break;
    case EquationType::HeunDoubleConfluent:
        standardize_heund(pl, sig);
        break;
    case EquationType::HeunBiconfluent:
        standardize_heunb(pl, sig, flip_reference_exponent);
        break;
    case EquationType::HeunTriconfluent:
        standardize_heunt(pl, sig);
        break;
    case EquationType::Unrecognized:
        fail(ErrorCode::Unrecognized, "signature matches none of the seven families");
    }
    return {pl.ode, pl.rec};
}

namespace {

QSurd residue_at(const RatFun& f, long at) {
    return local_expansion(f, Location::finite(QSurd(at)), 3).at(-1);
}

} // namespace

ODE2 standard_equation(EquationType type, const ParameterMap& p) {
    const Poly X = Poly::x();
    const Poly one = Poly::one();
    switch (type) {
    case EquationType::Hypergeometric: {
        const QSurd &a = p.at("a"), &b = p.at("b"), &c = p.at("c");
        return ODE2(X - X * X,
                    Poly({c, -(a + b + QSurd(1))}),
                    Poly(-(a * b)));
    }
    case EquationType::ConfluentHypergeometric: {
        const QSurd &a = p.at("a"), &b = p.at("b");
        return ODE2(X, Poly({b, QSurd(-1)}), Poly(-a));
    }
    case EquationType::HeunGeneral: {
        const QSurd &av = p.at("a"), &q = p.at("q");
        const QSurd &al = p.at("alpha"), &be = p.at("beta");
        const QSurd &ga = p.at("gamma"), &de = p.at("delta");
        QSurd ep = al + be + QSurd(1) - ga - de;
        Poly x0 = X, x1 = X - one, xa = X - Poly(av);
        return ODE2(x0 * x1 * xa,
                    x1 * xa * ga + x0 * xa * de + x0 * x1 * ep,
                    Poly({-q, al * be}));
    }
    case EquationType::HeunConfluent: {
        const QSurd &al = p.at("alpha"), &be = p.at("beta"), &ga = p.at("gamma");
        QSurd mu, nu;
        if (p.has("mu") && p.has("nu")) {
            mu = p.at("mu");
            nu = p.at("nu");
        } else {
            const QSurd &de = p.at("delta"), &eta = p.at("eta");
            mu = ((al - ga) * (be + QSurd(1)) - be) / QSurd(2) - eta;
            nu = de - mu + al * (be + ga + QSurd(2)) / QSurd(2);
        }
        Poly x1 = X - one;
        return ODE2(X * x1,
                    x1 * (be + QSurd(1)) + X * (ga + QSurd(1)) + X * x1 * al,
                    x1 * mu + X * nu);
    }
    case EquationType::HeunDoubleConfluent: {
        const QSurd &q = p.at("q"), &al = p.at("alpha");
        return ODE2(X * X,
                    Poly({p.at("gamma"), p.at("delta"), p.at("epsilon")}),
                    Poly({-q, al}));
    }
    case EquationType::HeunBiconfluent: {
        const QSurd &q = p.at("q"), &al = p.at("alpha");
        return ODE2(X,
                    Poly({p.at("gamma"), p.at("delta"), p.at("epsilon")}),
                    Poly({-q, al}));
    }
    case EquationType::HeunTriconfluent: {
        const QSurd &q = p.at("q"), &al = p.at("alpha");
        return ODE2(one,
                    Poly({p.at("gamma"), p.at("delta"), p.at("epsilon")}),
                    Poly({-q, al}));
    }
    case EquationType::Unrecognized:
        break;
    }
    fail(ErrorCode::Internal, "no standard equation for this type");
}

ParameterMap extract_params(const ODE2& std_ode, EquationType type) {
    ParameterMap pm;
    pm.type = type;
    RatFun p = std_ode.p(), q = std_ode.q();
    auto p_inf = local_expansion(p, Location::infinity(), 8);
    auto q_inf = local_expansion(q, Location::infinity(), 8);

    switch (type) {
    case EquationType::Hypergeometric: {
        auto ab = indices(std_ode, Location::infinity());
        pm.values["a"] = ab.first;
        pm.values["b"] = ab.second;
        pm.values["c"] = residue_at(p, 0);
        // consistency: the nonzero exponent at 1 re-derives c - a - b
        auto e1 = indices(std_ode, Location::finite(QSurd(1)));
        QSurd cab = pm.values["c"] - ab.first - ab.second;
        bool ok = (e1.first.is_zero() && e1.second == cab) ||
                  (e1.second.is_zero() && e1.first == cab);
        if (!ok)
            fail(ErrorCode::InconsistentExponents,
                 "exponents at 1 disagree with c - a - b");
        break;
    }
    case EquationType::ConfluentHypergeometric: {
        pm.values["b"] = residue_at(p, 0);
        pm.values["a"] = -local_expansion(q, Location::finite(QSurd(0)), 2).at(-1);
        break;
    }
    case EquationType::HeunGeneral: {
        Location fourth;
        bool found = false;
        for (auto& sp : find_singular_points(std_ode)) {
            if (!sp.is_singular() || sp.location.is_infinity()) continue;
            if (location_is(sp.location, 0) || location_is(sp.location, 1)) continue;
            fourth = sp.location;
            found = true;
        }
        if (!found)
            fail(ErrorCode::InconsistentExponents, "missing fourth Heun point");
        QSurd a = *fourth.exact;
        auto ab = indices(std_ode, Location::infinity());
        pm.values["a"] = a;
        pm.values["alpha"] = ab.first;
        pm.values["beta"] = ab.second;
        pm.values["gamma"] = residue_at(p, 0);
        pm.values["delta"] = residue_at(p, 1);
        QSurd eps = local_expansion(p, fourth, 2).at(-1);
        pm.values["epsilon"] = eps;
        if (!(pm.at("gamma") + pm.at("delta") + eps ==
              ab.first + ab.second + QSurd(1)))
            fail(ErrorCode::InconsistentExponents,
                 "gamma + delta + epsilon != alpha + beta + 1");
        // q from the numerator of the y-coefficient over x(x-1)(x-a)
        Poly den = Poly::x() * (Poly::x() - Poly::one()) * (Poly::x() - Poly(a));
        RatFun N = q * RatFun(den);
        if (!N.is_polynomial() || N.num().degree() > 1)
            fail(ErrorCode::InconsistentExponents, "accessory numerator is not linear");
        pm.values["q"] = -N.num()[0];
        if (!(N.num()[1] == ab.first * ab.second))
            fail(ErrorCode::InconsistentExponents,
                 "linear accessory coefficient disagrees with alpha*beta");
        break;
    }
    case EquationType::HeunConfluent: {
        QSurd beta = residue_at(p, 0) - QSurd(1);
        QSurd gamma = residue_at(p, 1) - QSurd(1);
        QSurd alpha = p_inf.at(0);
        QSurd mu = local_expansion(q, Location::finite(QSurd(0)), 2).at(-1);
        QSurd nu = local_expansion(q, Location::finite(QSurd(1)), 2).at(-1);
        pm.values["alpha"] = alpha;
        pm.values["beta"] = beta;
        pm.values["gamma"] = gamma;
        pm.values["mu"] = mu;
        pm.values["nu"] = nu;
        pm.values["delta"] = mu + nu - alpha * (beta + gamma + QSurd(2)) / QSurd(2);
        pm.values["eta"] =
            ((alpha - gamma) * (beta + QSurd(1)) - beta) / QSurd(2) - mu;
        break;
    }
    case EquationType::HeunDoubleConfluent: {
        auto p0 = local_expansion(p, Location::finite(QSurd(0)), 4);
        auto q0 = local_expansion(q, Location::finite(QSurd(0)), 4);
        pm.values["gamma"] = p0.at(-2);
        pm.values["delta"] = p0.at(-1);
        pm.values["epsilon"] = p_inf.at(0);
        pm.values["alpha"] = q0.at(-1);
        pm.values["q"] = -q0.at(-2);
        break;
    }
    case EquationType::HeunBiconfluent: {
        pm.values["gamma"] = residue_at(p, 0);
        pm.values["delta"] = p_inf.at(0);
        pm.values["epsilon"] = p_inf.at(-1);
        pm.values["alpha"] = q_inf.at(0);
        pm.values["q"] = -local_expansion(q, Location::finite(QSurd(0)), 2).at(-1);
        break;
    }
    case EquationType::HeunTriconfluent: {
        pm.values["gamma"] = p_inf.at(0);
        pm.values["delta"] = p_inf.at(-1);
        pm.values["epsilon"] = p_inf.at(-2);
        pm.values["alpha"] = q_inf.at(-1);
        pm.values["q"] = -q_inf.at(0);
        break;
    }
    case EquationType::Unrecognized:
        fail(ErrorCode::Unrecognized, "cannot extract parameters");
    }

    // substituting the parameters back must reproduce the equation exactly
    if (!standard_equation(type, pm).projectively_equal(std_ode))
        fail(ErrorCode::NotStandardizable,
             std::string("standardized equation is not of the exact ") +
             equation_type_name(type) + " shape");
    return pm;
}

namespace {

const char* function_name(EquationType t) {
    switch (t) {
    case EquationType::Hypergeometric: return "Gauss2F1";
    case EquationType::ConfluentHypergeometric: return "KummerM";
    case EquationType::HeunGeneral: return "HeunG";
    case EquationType::HeunConfluent: return "HeunC";
    case EquationType::HeunDoubleConfluent: return "HeunD";
    case EquationType::HeunBiconfluent: return "HeunB";
    case EquationType::HeunTriconfluent: return "HeunT";
    case EquationType::Unrecognized: return "?";
    }
    return "?";
}

bool has_reference_point(EquationType t) {
    switch (t) {
    case EquationType::Hypergeometric:
    case EquationType::ConfluentHypergeometric:
    case EquationType::HeunGeneral:
    case EquationType::HeunConfluent:
    case EquationType::HeunBiconfluent:
        return true;
    default:
        return false;
    }
}

SolutionDescriptor make_descriptor(EquationType type, const ODE2& std_ode,
                                   TransformRecord rec) {
    SolutionDescriptor d;
    d.type = type;
    d.function = function_name(type);
    d.params = extract_params(std_ode, type);
    d.transform = std::move(rec);
    d.argument = d.transform.argument_map();
    for (auto& step : d.transform.steps) {
        if (step.kind != TransformStep::Kind::PowerPrefactor) continue;
        for (auto& [pt, rho] : step.shifts)
            if (pt.is_zero()) d.exponent = rho;
    }
    if (has_reference_point(type) && !d.exponent) d.exponent = QSurd(0);
    return d;
}

} // namespace

SolveResult solve(const ODE2& ode) {
    SolveResult res;
    res.signature = signature_of(ode);
    res.type = type_of(res.signature);
    if (res.type == EquationType::Unrecognized) {
        Error e(ErrorCode::Unrecognized,
                "singularity structure matches none of the seven families");
        throw e;
    }
    auto [std1, rec1] = standardize(ode, res.type);
    res.solutions.push_back(make_descriptor(res.type, std1, rec1));

    if (has_reference_point(res.type)) {
        // the local pair at the original point that the argument map sends to 0
        Mobius arg = res.solutions[0].argument;
        const SingularPoint* ref = nullptr;
        for (auto& sp : res.signature.points) {
            Location img = arg.apply(sp.location);
            if (!img.is_infinity() && img.exact && img.exact->is_zero()) {
                ref = &sp;
                break;
            }
        }
        if (ref && ref->exponents) {
            QSurd diff = ref->exponents->second - ref->exponents->first;
            if (diff.is_integer()) {
                res.resonant = true;
            } else {
                auto [std2, rec2] = standardize(ode, res.type, true);
                res.solutions.push_back(make_descriptor(res.type, std2, rec2));
            }
        }
    }
    return res;
}

std::string SolutionDescriptor::str() const {
    std::ostringstream os;
    os << "y(x) = ";
    for (auto& step : transform.steps) {
        if (step.kind == TransformStep::Kind::PowerPrefactor) {
            for (auto& [pt, rho] : step.shifts) {
                if (rho.is_zero()) continue;
                if (pt.is_zero()) os << "t^(" << rho.str() << ") * ";
                else os << "(t - (" << pt.str() << "))^(" << rho.str() << ") * ";
            }
        } else if (step.kind == TransformStep::Kind::ExpPrefactor) {
            if (!step.lambda.is_zero()) {
                os << "exp((" << step.lambda.str() << ")*t";
                if (step.exp_m != 1) os << "^" << step.exp_m;
                os << ") * ";
            }
        }
    }
    os << function << "(";
    bool first = true;
    for (auto& [k, v] : params.values) {
        if (k == "mu" || k == "nu") continue;
        if (!first) os << ", ";
        os << k << "=" << v.str();
        first = false;
    }
    os << "; t),  t = " << argument.str();
    return os.str();
}

BigFloat verify_descriptor(const ODE2& original, const SolutionDescriptor& desc,
                           int npoints, int order) {
    ODE2 std_eq = standard_equation(desc.type, desc.params);

    // a series solution of the standard equation: Frobenius at 0 for the
    // families with a regular point there, Taylor branch at an ordinary
    // anchor otherwise
    SeriesSolution sol = [&]() {
        if (has_reference_point(desc.type)) {
            Location zero = Location::finite(QSurd(0));
            try {
                return frobenius_series(std_eq, zero, order, QSurd(0));
            } catch (const Error&) {
                return frobenius_series(std_eq, zero, order, ExponentChoice::Larger);
            }
        }
        QSurd anchor = (desc.type == EquationType::HeunDoubleConfluent) ? QSurd(1)
                                                                        : QSurd(0);
        ThetaForm tf = theta_form(std_eq, Location::finite(anchor));
        SeriesSolution s = series_coeffs(recurrence_from(tf, QSurd(1)), order);
        s.center = Location::finite(anchor);
        BigFloat best = std::numeric_limits<BigFloat>::infinity();
        for (auto& sp : find_singular_points(std_eq)) {
            if (!sp.is_singular() || sp.location.is_infinity()) continue;
            best = (std::min)(best, abs(sp.location.approx - anchor.approx()));
        }
        s.radius = best;
        return s;
    }();

    BigFloat R = sol.radius;
    if (!(R < BigFloat(2))) R = BigFloat(2);
    Complex anchor_c = sol.center.exact->approx();
    Mobius inv = desc.argument.inverse();

    // L = h'/h in the standard variable, from the prefactor steps
    auto L_and_h = [&](const Complex& t, Complex& L, Complex& Lp, Complex& h) {
        L = Complex();
        Lp = Complex();
        h = Complex(BigFloat(1));
        for (auto& step : desc.transform.steps) {
            if (step.kind == TransformStep::Kind::PowerPrefactor) {
                for (auto& [pt, rho] : step.shifts) {
                    if (rho.is_zero()) continue;
                    Complex dz = t - pt.approx();
                    Complex r = rho.approx();
                    L += r / dz;
                    Lp -= r / (dz * dz);
                    if (rho.is_integer())
                        h *= pow(dz, rho.a().get_num().get_si());
                    else
                        h *= pow(dz, r);
                }
            } else if (step.kind == TransformStep::Kind::ExpPrefactor) {
                if (step.lambda.is_zero()) continue;
                Complex lam = step.lambda.approx();
                long m = step.exp_m;
                L += lam * Complex(BigFloat(m)) * pow(t, m - 1);
                if (m > 1)
                    Lp += lam * Complex(BigFloat(m * (m - 1))) * pow(t, m - 2);
                h *= exp(lam * pow(t, m));
            }
        }
    };

    BigFloat worst(0);
    int used = 0;
    for (int k = 1; used < npoints && k <= 4 * npoints; ++k) {
        BigFloat frac = BigFloat("0.05") + BigFloat("0.6") * k / (4 * npoints);
        Complex t = anchor_c + Complex(frac * R * BigFloat("0.9"));
        // x = inv(t); skip points that map to infinity
        Complex denom = inv.c.approx() * t + inv.d.approx();
        if (abs(denom) < BigFloat("1e-10")) continue;
        Complex x = (inv.a.approx() * t + inv.b.approx()) / denom;

        Complex w, dw, ddw;
        series_derivatives(sol, t - anchor_c, w, dw, ddw);
        Complex L, Lp, h;
        L_and_h(t, L, Lp, h);

        // y(x) = h(t) w(t), t = tau(x)
        const Mobius& tau = desc.argument;
        Complex cx = tau.c.approx() * x + tau.d.approx();
        Complex det = tau.det().approx();
        Complex tp = det / (cx * cx);
        Complex tpp = Complex(BigFloat(-2)) * tau.c.approx() * det / (cx * cx * cx);

        Complex y = h * w;
        Complex Y1 = h * (L * w + dw);
        Complex Y2 = h * ((L * L + Lp) * w + Complex(BigFloat(2)) * L * dw + ddw);
        Complex yp = Y1 * tp;
        Complex ypp = Y2 * tp * tp + Y1 * tpp;

        Complex r = original.f1().eval(x) * ypp + original.f2().eval(x) * yp +
                    original.f3().eval(x) * y;
        worst = (std::max)(worst, abs(r));
        ++used;
    }
    if (used == 0)
        fail(ErrorCode::Internal, "no usable sample points for verification");
    return worst;
}

} // namespace ode2
