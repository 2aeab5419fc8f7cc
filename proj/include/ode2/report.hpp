#ifndef ODE2_REPORT_HPP
#define ODE2_REPORT_HPP

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "ode2/classify.hpp"
#include "ode2/errors.hpp"

namespace ode2 {

using Json = nlohmann::ordered_json;

extern const char* const k_schema_version;

// Document fragments (all exact numbers serialized as canonical strings).
Json json_singular_points(const std::vector<SingularPoint>& pts);
Json json_psymbol(const PSymbol& ps);
Json json_signature(const Signature& sig);
Json json_parameters(const ParameterMap& pm);
Json json_descriptor(const SolutionDescriptor& d);
Json json_error(const Error& e);

Json document_skeleton(const std::string& command, const std::string& input,
                       const ODE2& ode);

// Human-readable renderings (honors NO_COLOR when colors are enabled).
std::string render_analysis(const ODE2& ode, const std::vector<SingularPoint>& pts,
                            bool color);
std::string render_solve(const SolveResult& res, bool color);

struct SeriesSample {
    BigFloat x;
    Complex y;
    int order = 0;
    bool guarded = true;
};

// columns: x, re_y, im_y, truncation_order, guarded
void write_series_csv(std::ostream& os, const std::vector<SeriesSample>& rows);
Json json_series_samples(const std::vector<SeriesSample>& rows);

// Fixed 800x600 single-curve plot; dashed lines mark the guard band.
void write_series_svg(std::ostream& os, const std::vector<SeriesSample>& rows,
                      const std::string& title, double guard_lo, double guard_hi);

// Command dispatch used by the binary and by the tests.
// Exit codes: 0 success, 1 domain error, 2 usage or syntax error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace ode2

#endif
