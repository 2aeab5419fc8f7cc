#ifndef ODE2_SINGULAR_HPP
#define ODE2_SINGULAR_HPP

#include <optional>
#include <vector>

#include "ode2/ode.hpp"

namespace ode2 {

enum class PointKind { Ordinary, Regular, Irregular };

const char* point_kind_name(PointKind k);

struct SingularPoint {
    Location location;
    PointKind kind = PointKind::Ordinary;
    int rank = 0;  // k - 1; 0 for regular singular points
    // present iff regular and computable in Q(sqrt d)
    std::optional<std::pair<QSurd, QSurd>> exponents;
    // numeric exponents, filled for every regular point
    std::optional<std::pair<Complex, Complex>> exponents_approx;

    bool is_singular() const { return kind != PointKind::Ordinary; }
};

// All finite singular points plus an entry for infinity (infinity is always
// reported, ordinary or not).  Exponents are attached to regular points.
std::vector<SingularPoint> find_singular_points(const ODE2& ode);

// k - 1 for the least k with (x-x0)^k p and (x-x0)^(2k) q analytic;
// throws NotSingular at ordinary points.
int rank_at(const ODE2& ode, const Location& at);

// Characteristic exponents at a regular singular point, ordered by
// (real, imaginary); ordinary points give {0, 1}.  Throws IrregularPoint.
std::pair<QSurd, QSurd> indices(const ODE2& ode, const Location& at);

struct PSymbolColumn {
    Location location;
    std::pair<QSurd, QSurd> exponents;
};

struct PSymbol {
    std::vector<PSymbolColumn> columns;
    QSurd exponent_sum;  // must equal n - 2 for n columns
    bool fuchs_ok = false;
    std::string str() const;
};

// Riemann scheme of a Fuchsian equation; throws NotFuchsian with the
// offending point and rank otherwise.
PSymbol psymbol(const ODE2& ode);

} // namespace ode2

#endif
