#include "ode2/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace ode2 {

const char* const k_schema_version = "1";

namespace {

std::string exponent_str(const SingularPoint& sp, int which) {
    if (sp.exponents)
        return which == 0 ? sp.exponents->first.str() : sp.exponents->second.str();
    if (sp.exponents_approx)
        return to_string(which == 0 ? sp.exponents_approx->first
                                    : sp.exponents_approx->second, 20);
    return "";
}

} // namespace

Json json_singular_points(const std::vector<SingularPoint>& pts) {
    Json arr = Json::array();
    for (auto& sp : pts) {
        Json j;
        j["location"] = sp.location.str();
        j["kind"] = point_kind_name(sp.kind);
        j["rank"] = sp.rank;
        j["exact"] = sp.location.is_exact();
        if (sp.kind == PointKind::Regular && sp.exponents_approx) {
            if (sp.exponents) {
                j["exponents"] = {sp.exponents->first.str(), sp.exponents->second.str()};
            } else {
                j["exponents"] = {exponent_str(sp, 0), exponent_str(sp, 1)};
                j["exponents_exact"] = false;
            }
        }
        arr.push_back(j);
    }
    return arr;
}

Json json_psymbol(const PSymbol& ps) {
    Json j;
    Json cols = Json::array();
    for (auto& c : ps.columns) {
        cols.push_back({{"location", c.location.str()},
                        {"exponents", {c.exponents.first.str(), c.exponents.second.str()}}});
    }
    j["columns"] = cols;
    j["exponent_sum"] = ps.exponent_sum.str();
    j["fuchs_ok"] = ps.fuchs_ok;
    return j;
}

Json json_signature(const Signature& sig) {
    Json arr = Json::array();
    for (auto& sp : sig.points)
        arr.push_back({{"location", sp.location.str()},
                       {"kind", point_kind_name(sp.kind)},
                       {"rank", sp.rank}});
    return arr;
}

Json json_parameters(const ParameterMap& pm) {
    Json j = Json::object();
    for (auto& [k, v] : pm.values) j[k] = v.str();
    return j;
}

Json json_descriptor(const SolutionDescriptor& d) {
    Json j;
    j["function"] = d.function;
    j["parameters"] = json_parameters(d.params);
    j["argument"] = d.argument.str();
    Json pf = Json::array();
    for (auto& step : d.transform.steps) {
        if (step.kind == TransformStep::Kind::PowerPrefactor) {
            for (auto& [pt, rho] : step.shifts) {
                if (rho.is_zero()) continue;
                pf.push_back({{"kind", "power"}, {"point", pt.str()},
                              {"exponent", rho.str()}});
            }
        } else if (step.kind == TransformStep::Kind::ExpPrefactor) {
            if (step.lambda.is_zero()) continue;
            pf.push_back({{"kind", "exp"}, {"lambda", step.lambda.str()},
                          {"power", step.exp_m}});
        }
    }
    j["prefactor"] = pf;
    if (d.exponent) j["exponent"] = d.exponent->str();
    j["text"] = d.str();
    return j;
}

Json json_error(const Error& e) {
    Json j;
    j["schema_version"] = k_schema_version;
    Json err;
    err["code"] = error_code_name(e.code());
    err["message"] = e.what();
    if (!e.detail.empty()) err["detail"] = e.detail;
    if (e.index >= 0) err["index"] = e.index;
    j["error"] = err;
    return j;
}

Json document_skeleton(const std::string& command, const std::string& input,
                       const ODE2& ode) {
    Json j;
    j["schema_version"] = k_schema_version;
    j["command"] = command;
    j["input"] = input;
    j["normalized"] = ode.str();
    return j;
}

namespace {

const char* kind_color(PointKind k) {
    switch (k) {
    case PointKind::Ordinary: return "\033[2m";
    case PointKind::Regular: return "\033[32m";
    case PointKind::Irregular: return "\033[33m";
    }
    return "";
}

} // namespace

std::string render_analysis(const ODE2& ode, const std::vector<SingularPoint>& pts,
                            bool color) {
    std::ostringstream os;
    os << "equation: " << ode.str() << "\n";
    os << "singular points:\n";
    for (auto& sp : pts) {
        os << "  " << std::setw(14) << sp.location.str() << "  ";
        if (color) os << kind_color(sp.kind);
        os << point_kind_name(sp.kind);
        if (color) os << "\033[0m";
        if (sp.kind == PointKind::Irregular) os << " (rank " << sp.rank << ")";
        if (sp.kind == PointKind::Regular && sp.exponents_approx) {
            os << "  exponents {" << exponent_str(sp, 0) << ", "
               << exponent_str(sp, 1) << "}";
            if (!sp.exponents) os << " (approximate)";
        }
        os << "\n";
    }
    bool fuchsian = true;
    int nsing = 0;
    for (auto& sp : pts) {
        if (!sp.is_singular()) continue;
        ++nsing;
        if (sp.kind == PointKind::Irregular) fuchsian = false;
    }
    if (fuchsian && nsing > 0) {
        os << "Fuchsian equation (" << nsing << " regular singular point"
           << (nsing > 1 ? "s" : "") << ")\n";
        try {
            PSymbol ps = psymbol(ode);
            os << ps.str();
            os << "exponent sum = " << ps.exponent_sum.str() << " (n - 2 = "
               << (long)ps.columns.size() - 2 << "): "
               << (ps.fuchs_ok ? "ok" : "VIOLATED") << "\n";
        } catch (const Error&) {
            // approximate exponents; P-symbol omitted
        }
    } else if (nsing > 0) {
        os << "not Fuchsian\n";
    } else {
        os << "no singular points\n";
    }
    return os.str();
}

std::string render_solve(const SolveResult& res, bool color) {
    std::ostringstream os;
    if (color) os << "\033[1m";
    os << "type: " << equation_type_name(res.type);
    if (color) os << "\033[0m";
    os << "\n";
    int i = 1;
    for (auto& d : res.solutions) {
        os << "solution " << i++ << ": " << d.str() << "\n";
    }
    if (res.resonant)
        os << "note: exponent difference at the reference point is an integer; "
              "the companion solution may be logarithmic and is not produced\n";
    return os.str();
}

void write_series_csv(std::ostream& os, const std::vector<SeriesSample>& rows) {
    os << "x,re_y,im_y,truncation_order,guarded\n";
    for (auto& r : rows) {
        os << r.x.str(24) << "," << r.y.re.str(24) << "," << r.y.im.str(24) << ","
           << r.order << "," << (r.guarded ? "true" : "false") << "\n";
    }
}

Json json_series_samples(const std::vector<SeriesSample>& rows) {
    Json arr = Json::array();
    for (auto& r : rows) {
        arr.push_back({{"x", r.x.str(24)},
                       {"re_y", r.y.re.str(24)},
                       {"im_y", r.y.im.str(24)},
                       {"truncation_order", r.order},
                       {"guarded", r.guarded}});
    }
    return arr;
}

void write_series_svg(std::ostream& os, const std::vector<SeriesSample>& rows,
                      const std::string& title, double guard_lo, double guard_hi) {
    const int W = 800, H = 600, M = 60;
    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
    bool first = true;
    for (auto& r : rows) {
        double x = r.x.convert_to<double>();
        double y = r.y.re.convert_to<double>();
        if (!std::isfinite(y)) continue;
        if (first) { xlo = xhi = x; ylo = yhi = y; first = false; }
        xlo = std::min(xlo, x); xhi = std::max(xhi, x);
        ylo = std::min(ylo, y); yhi = std::max(yhi, y);
    }
    if (xhi <= xlo) xhi = xlo + 1;
    if (yhi <= ylo) yhi = ylo + 1;
    double ypad = 0.05 * (yhi - ylo);
    ylo -= ypad; yhi += ypad;
    auto px = [&](double x) { return M + (x - xlo) / (xhi - xlo) * (W - 2 * M); };
    auto py = [&](double y) { return H - M - (y - ylo) / (yhi - ylo) * (H - 2 * M); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
       << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" "
          "font-family=\"monospace\" font-size=\"14\">" << title << "</text>\n";
    // axes
    os << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M
       << "\" y2=\"" << H - M << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << M << "\" y1=\"" << M << "\" x2=\"" << M << "\" y2=\""
       << H - M << "\" stroke=\"black\"/>\n";
    os << std::setprecision(6);
    os << "<text x=\"" << M << "\" y=\"" << H - M + 20
       << "\" font-family=\"monospace\" font-size=\"12\">" << xlo << "</text>\n";
    os << "<text x=\"" << W - M << "\" y=\"" << H - M + 20
       << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"12\">"
       << xhi << "</text>\n";
    os << "<text x=\"" << M - 5 << "\" y=\"" << py(ylo) << "\" text-anchor=\"end\" "
          "font-family=\"monospace\" font-size=\"12\">" << ylo << "</text>\n";
    os << "<text x=\"" << M - 5 << "\" y=\"" << py(yhi) << "\" text-anchor=\"end\" "
          "font-family=\"monospace\" font-size=\"12\">" << yhi << "</text>\n";
    // guard band boundaries
    for (double g : {guard_lo, guard_hi}) {
        if (g > xlo && g < xhi) {
            os << "<line x1=\"" << px(g) << "\" y1=\"" << M << "\" x2=\"" << px(g)
               << "\" y2=\"" << H - M
               << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
        }
    }
    os << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
    for (auto& r : rows) {
        double x = r.x.convert_to<double>();
        double y = r.y.re.convert_to<double>();
        if (!std::isfinite(y)) continue;
        os << px(x) << "," << py(y) << " ";
    }
    os << "\"/>\n</svg>\n";
}

} // namespace ode2
