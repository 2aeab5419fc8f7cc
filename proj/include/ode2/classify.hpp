#ifndef ODE2_CLASSIFY_HPP
#define ODE2_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ode2/series.hpp"
#include "ode2/transform.hpp"

namespace ode2 {

enum class EquationType {
    Hypergeometric,
    ConfluentHypergeometric,
    HeunGeneral,
    HeunConfluent,
    HeunDoubleConfluent,
    HeunBiconfluent,
    HeunTriconfluent,
    Unrecognized,
};

const char* equation_type_name(EquationType t);

// multiset of (kind, rank) with locations attached
struct Signature {
    std::vector<SingularPoint> points;  // singular points only, sorted
    std::vector<const SingularPoint*> regular() const;
    std::vector<const SingularPoint*> irregular() const;
};

Signature signature_of(const ODE2& ode);      // throws ApproximateLocations
EquationType type_of(const Signature& sig);
EquationType classify(const ODE2& ode);

struct ParameterMap {
    EquationType type = EquationType::Unrecognized;
    // family parameters by name: a,b,c | a,b | a,q,alpha..epsilon |
    // alpha,beta,gamma,delta,eta (+ mu,nu) | q,alpha,gamma,delta,epsilon
    std::map<std::string, QSurd> values;

    const QSurd& at(const std::string& name) const;
    bool has(const std::string& name) const { return values.count(name) > 0; }
};

struct SolutionDescriptor {
    std::string function;  // Gauss2F1, KummerM, HeunG, HeunC, HeunD, HeunB, HeunT
    EquationType type = EquationType::Unrecognized;
    ParameterMap params;
    TransformRecord transform;           // input -> standard form, in order
    Mobius argument;                     // composed argument map t(x)
    std::optional<QSurd> exponent;       // local exponent at the reference point
    std::string str() const;             // y(x) = prefactor * F(params; t(x))
};

struct SolveResult {
    EquationType type = EquationType::Unrecognized;
    Signature signature;
    std::vector<SolutionDescriptor> solutions;  // one or two local solutions
    bool resonant = false;  // exponent difference at the reference point is an integer
};

// Canonical placement (Mobius), exponent-zeroing power prefactors at the
// canonical finite regular points, exponential prefactors removing the
// obstructing tail coefficients at infinity, and (confluent hypergeometric
// only) the affine scaling fixing the slope of p to -1.
std::pair<ODE2, TransformRecord> standardize(const ODE2& ode, EquationType type,
                                             bool flip_reference_exponent = false);

ParameterMap extract_params(const ODE2& std_ode, EquationType type);

// Standard equation of a family from its parameters (cleared denominators).
ODE2 standard_equation(EquationType type, const ParameterMap& params);

SolveResult solve(const ODE2& ode);

// Max |f1 y'' + f2 y' + f3 y| over sample points for the pulled-back
// series solution of the descriptor's standard equation.
BigFloat verify_descriptor(const ODE2& original, const SolutionDescriptor& desc,
                           int npoints = 5, int order = 60);

} // namespace ode2

#endif
