#include "ode2/report.hpp"
#include "ode2/parse.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace ode2 {

namespace {

bool use_color() {
    return std::getenv("NO_COLOR") == nullptr;
}

bool is_usage_error(ErrorCode c) {
    switch (c) {
    case ErrorCode::SyntaxError:
    case ErrorCode::NonPolynomialCoefficient:
    case ErrorCode::FreeParameter:
    case ErrorCode::UsageError:
        return true;
    default:
        return false;
    }
}

struct SeriesOptions {
    std::string at = "0";
    int order = 40;
    std::string exponent = "larger";
    std::string eval_list;
    std::string range;       // lo:hi:n
    std::string csv_path;
    std::string svg_path;
    bool unguarded = false;
};

std::vector<BigFloat> sample_grid(const SeriesOptions& opt, const SeriesSolution& sol) {
    std::vector<BigFloat> xs;
    if (!opt.eval_list.empty()) {
        std::stringstream ss(opt.eval_list);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) xs.push_back(bigfloat_from_string(item));
        return xs;
    }
    BigFloat lo, hi;
    long n = 200;
    if (!opt.range.empty()) {
        auto p1 = opt.range.find(':');
        auto p2 = opt.range.find(':', p1 == std::string::npos ? 0 : p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos)
            fail(ErrorCode::UsageError, "--range expects lo:hi:n");
        lo = bigfloat_from_string(opt.range.substr(0, p1));
        hi = bigfloat_from_string(opt.range.substr(p1 + 1, p2 - p1 - 1));
        n = std::stol(opt.range.substr(p2 + 1));
        if (n < 2) fail(ErrorCode::UsageError, "--range needs n >= 2");
    } else {
        // default: the real guarded window around the center
        if (sol.center.is_infinity() || !sol.center.exact ||
            !sol.center.exact->is_real())
            fail(ErrorCode::UsageError,
                 "give --range or --eval for this expansion point");
        BigFloat c = sol.center.exact->approx().re;
        BigFloat r = sol.radius * BigFloat("0.85");
        if (!(r < BigFloat("1e6"))) r = BigFloat(4);
        lo = c - r;
        hi = c + r;
    }
    for (long i = 0; i < n; ++i)
        xs.push_back(lo + (hi - lo) * i / (n - 1));
    return xs;
}

std::vector<SeriesSample> evaluate_series(const SeriesSolution& sol,
                                          const std::vector<BigFloat>& xs,
                                          bool unguarded) {
    std::vector<SeriesSample> rows;
    BigFloat guard = BigFloat("0.9") * sol.radius;
    for (auto& x : xs) {
        SeriesSample s;
        s.x = x;
        s.order = (int)sol.coeffs.size() - 1;
        Complex xc{x};
        BigFloat dist;
        if (sol.at_infinity) {
            if (x == 0) continue;
            dist = abs(Complex(BigFloat(1)) / xc);
        } else {
            dist = abs(xc - sol.center.exact->approx());
        }
        s.guarded = dist < guard;
        if (!s.guarded && !unguarded)
            fail(ErrorCode::OutsideDisk,
                 "x = " + x.str(8) + " lies outside the guarded convergence disk; "
                 "pass --unguarded to evaluate anyway");
        s.y = series_eval(sol, xc, true);
        rows.push_back(s);
    }
    return rows;
}

struct CommandContext {
    bool json = false;
    std::string equation_text;
    std::string file;
    std::string batch;

    std::string text() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) fail(ErrorCode::UsageError, "cannot open " + file);
            std::string s, line;
            while (std::getline(in, line)) s += line + " ";
            return s;
        }
        if (equation_text.empty())
            fail(ErrorCode::UsageError, "no equation given");
        return equation_text;
    }
};

Json analyze_document(const std::string& text) {
    ODE2 ode = parse_equation(text);
    auto pts = find_singular_points(ode);
    Json doc = document_skeleton("analyze", text, ode);
    doc["singular_points"] = json_singular_points(pts);
    bool fuchsian = true;
    bool any = false;
    for (auto& sp : pts) {
        if (!sp.is_singular()) continue;
        any = true;
        if (sp.kind == PointKind::Irregular) fuchsian = false;
    }
    doc["fuchsian"] = fuchsian && any;
    if (fuchsian && any) {
        try {
            doc["psymbol"] = json_psymbol(psymbol(ode));
        } catch (const Error& e) {
            doc["warnings"].push_back(std::string(e.what()));
        }
    }
    if (!doc.contains("warnings")) doc["warnings"] = Json::array();
    return doc;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact singularity analysis and special-function solutions "
                 "for second-order ODEs with polynomial coefficients"};
    app.require_subcommand(1);
    bool json = false;
    unsigned precision = 128;
    app.add_flag("--json", json, "emit a JSON analysis document");
    app.add_option("--precision", precision, "working precision in bits")
        ->default_val(128);

    CommandContext ctx;
    auto add_equation = [&ctx](CLI::App* cmd) {
        cmd->add_option("equation", ctx.equation_text, "the ODE, e.g. \"x*(1-x)*y'' + (5/4 - (11/6)*x)*y' - (1/6)*y = 0\"");
        cmd->add_option("--file", ctx.file, "read the equation from a file");
    };

    auto* analyze = app.add_subcommand("analyze",
        "singular points, exponents, P-symbol and Fuchs check");
    add_equation(analyze);
    analyze->add_option("--batch", ctx.batch, "file with one equation per line");

    auto* indicial_cmd = app.add_subcommand("indicial",
        "indicial polynomial and exponents at a point");
    std::string at = "0";
    indicial_cmd->add_option("--at", at, "expansion point (rational, surd or inf)");
    add_equation(indicial_cmd);

    auto* recurrence_cmd = app.add_subcommand("recurrence",
        "theta-form recurrence polynomials at a point");
    recurrence_cmd->add_option("--at", at, "expansion point");
    add_equation(recurrence_cmd);

    auto* normalform_cmd = app.add_subcommand("normalform",
        "normal form w'' + q'(x) w = 0");
    add_equation(normalform_cmd);

    auto* transform_cmd = app.add_subcommand("transform", "change of variables");
    std::string mobius_arg, power_arg, exp_arg;
    std::vector<std::string> prefactor_args;
    transform_cmd->add_option("--mobius", mobius_arg, "a,b,c,d for t = (a*x+b)/(c*x+d)");
    transform_cmd->add_option("--power", power_arg, "k for t = x^k (integer k >= 2)");
    transform_cmd->add_option("--prefactor", prefactor_args,
                              "point:exponent power prefactor (repeatable)");
    transform_cmd->add_option("--exp", exp_arg, "lambda,m for y = exp(lambda*x^m)*u");
    add_equation(transform_cmd);

    auto* classify_cmd = app.add_subcommand("classify",
        "equation family from the singularity signature");
    add_equation(classify_cmd);

    auto* solve_cmd = app.add_subcommand("solve",
        "named special-function solutions with exact parameters");
    add_equation(solve_cmd);

    SeriesOptions sopt;
    auto* series_cmd = app.add_subcommand("series",
        "Frobenius series coefficients and evaluation");
    series_cmd->add_option("--at", sopt.at, "expansion point");
    series_cmd->add_option("--order", sopt.order, "truncation order N");
    series_cmd->add_option("--exponent", sopt.exponent, "larger|smaller root");
    series_cmd->add_option("--eval", sopt.eval_list, "comma list of x values");
    series_cmd->add_option("--range", sopt.range, "lo:hi:n grid");
    series_cmd->add_option("--csv", sopt.csv_path, "write samples to a CSV file");
    series_cmd->add_flag("--unguarded", sopt.unguarded,
                         "evaluate outside the guarded disk");
    add_equation(series_cmd);

    auto* plot_cmd = app.add_subcommand("plot", "SVG plot of a series solution");
    plot_cmd->add_option("--at", sopt.at, "expansion point");
    plot_cmd->add_option("--order", sopt.order, "truncation order N");
    plot_cmd->add_option("--range", sopt.range, "lo:hi:n grid");
    plot_cmd->add_option("--svg", sopt.svg_path, "output SVG path")->required();
    add_equation(plot_cmd);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    set_precision_bits(precision);
    bool color = use_color();

    try {
        if (analyze->parsed()) {
            if (!ctx.batch.empty()) {
                std::ifstream in(ctx.batch);
                if (!in) fail(ErrorCode::UsageError, "cannot open " + ctx.batch);
                Json all = Json::array();
                std::string line;
                while (std::getline(in, line)) {
                    if (line.find_first_not_of(" \t") == std::string::npos) continue;
                    if (json) {
                        all.push_back(analyze_document(line));
                    } else {
                        ODE2 ode = parse_equation(line);
                        out << render_analysis(ode, find_singular_points(ode), color)
                            << "\n";
                    }
                }
                if (json) out << all.dump(2) << "\n";
                return 0;
            }
            std::string text = ctx.text();
            if (json) {
                out << analyze_document(text).dump(2) << "\n";
            } else {
                ODE2 ode = parse_equation(text);
                out << render_analysis(ode, find_singular_points(ode), color);
            }
            return 0;
        }

        if (indicial_cmd->parsed()) {
            ODE2 ode = parse_equation(ctx.text());
            Location loc = parse_point(at);
            ThetaForm tf = theta_form(ode, loc);
            auto [A0, roots] = indicial(tf);
            if (json) {
                Json doc = document_skeleton("indicial", ctx.text(), ode);
                doc["point"] = loc.str();
                doc["indicial_polynomial"] = A0.str("r");
                doc["exponents"] = {roots.first.str(), roots.second.str()};
                out << doc.dump(2) << "\n";
            } else {
                out << "indicial polynomial at " << loc.str() << ": "
                    << A0.str("r") << " = 0\n";
                out << "exponents: {" << roots.first.str() << ", "
                    << roots.second.str() << "}\n";
            }
            return 0;
        }

        if (recurrence_cmd->parsed()) {
            ODE2 ode = parse_equation(ctx.text());
            Location loc = parse_point(at);
            ThetaForm tf = theta_form(ode, loc);
            if (json) {
                Json doc = document_skeleton("recurrence", ctx.text(), ode);
                doc["point"] = loc.str();
                doc["sigma"] = tf.sigma;
                doc["depth"] = tf.depth();
                Json arr = Json::array();
                for (auto& a : tf.A) arr.push_back(a.str("theta"));
                doc["A"] = arr;
                try {
                    auto [A0, roots] = indicial(tf);
                    (void)A0;
                    doc["exponents"] = {roots.first.str(), roots.second.str()};
                } catch (const Error&) {}
                out << doc.dump(2) << "\n";
            } else {
                out << "theta form at " << loc.str() << " (sigma = " << tf.sigma
                    << ", depth m = " << tf.depth() << "):\n";
                for (size_t k = 0; k < tf.A.size(); ++k)
                    out << "  A_" << k << "(theta) = " << tf.A[k].str("theta") << "\n";
                out << "recurrence: sum_j C_(n-j) A_j(n+r-j) = 0, j = 0.."
                    << tf.depth() << "\n";
            }
            return 0;
        }

        if (normalform_cmd->parsed()) {
            ODE2 ode = parse_equation(ctx.text());
            NormalForm nf = normal_form(ode);
            if (json) {
                Json doc = document_skeleton("normalform", ctx.text(), ode);
                doc["qprime"] = nf.qprime.str();
                doc["prefactor_log_derivative"] = nf.prefactor_log_derivative.str();
                out << doc.dump(2) << "\n";
            } else {
                out << "w'' + q'(x) w = 0 with\n  q' = " << nf.qprime.str() << "\n";
                out << "  y = g(x) w,  g'/g = " << nf.prefactor_log_derivative.str()
                    << "\n";
            }
            return 0;
        }

        if (transform_cmd->parsed()) {
            ODE2 ode = parse_equation(ctx.text());
            TransformRecord rec;
            ODE2 result = ode;
            if (!mobius_arg.empty()) {
                std::vector<QSurd> entries;
                std::stringstream ss(mobius_arg);
                std::string item;
                while (std::getline(ss, item, ',')) entries.push_back(parse_qsurd(item));
                if (entries.size() != 4)
                    fail(ErrorCode::UsageError, "--mobius expects a,b,c,d");
                result = change_independent(result,
                    Mobius(entries[0], entries[1], entries[2], entries[3]), rec);
            }
            if (!power_arg.empty())
                result = change_independent(result, std::stol(power_arg), rec);
            if (!prefactor_args.empty()) {
                std::vector<std::pair<QSurd, QSurd>> shifts;
                for (auto& a : prefactor_args) {
                    auto pos = a.find(':');
                    if (pos == std::string::npos)
                        fail(ErrorCode::UsageError, "--prefactor expects point:exponent");
                    shifts.push_back({parse_qsurd(a.substr(0, pos)),
                                      parse_qsurd(a.substr(pos + 1))});
                }
                result = prefactor_power(result, shifts, rec);
            }
            if (!exp_arg.empty()) {
                auto pos = exp_arg.find(',');
                QSurd lam = parse_qsurd(pos == std::string::npos ? exp_arg
                                                                 : exp_arg.substr(0, pos));
                long m = pos == std::string::npos ? 1 : std::stol(exp_arg.substr(pos + 1));
                result = prefactor_exp(result, lam, m, rec);
            }
            if (json) {
                Json doc = document_skeleton("transform", ctx.text(), ode);
                doc["result"] = result.str();
                doc["record"] = rec.str();
                out << doc.dump(2) << "\n";
            } else {
                out << result.str() << "\n";
                if (!rec.steps.empty()) out << "applied: " << rec.str() << "\n";
            }
            return 0;
        }

        if (classify_cmd->parsed()) {
            ODE2 ode = parse_equation(ctx.text());
            Signature sig = signature_of(ode);
            EquationType type = type_of(sig);
            if (json) {
                Json doc = document_skeleton("classify", ctx.text(), ode);
                doc["signature"] = json_signature(sig);
                doc["equation_type"] = equation_type_name(type);
                out << doc.dump(2) << "\n";
            } else {
                out << "signature:\n";
                for (auto& sp : sig.points)
                    out << "  " << sp.location.str() << ": "
                        << point_kind_name(sp.kind)
                        << (sp.kind == PointKind::Irregular
                                ? " rank " + std::to_string(sp.rank) : "")
                        << "\n";
                out << "type: " << equation_type_name(type) << "\n";
            }
            return 0;
        }

        if (solve_cmd->parsed()) {
            ODE2 ode = parse_equation(ctx.text());
            SolveResult res = solve(ode);
            if (json) {
                Json doc = document_skeleton("solve", ctx.text(), ode);
                doc["signature"] = json_signature(res.signature);
                doc["equation_type"] = equation_type_name(res.type);
                doc["parameters"] = json_parameters(res.solutions[0].params);
                Json sols = Json::array();
                for (auto& d : res.solutions) sols.push_back(json_descriptor(d));
                doc["solutions"] = sols;
                doc["resonant"] = res.resonant;
                out << doc.dump(2) << "\n";
            } else {
                out << render_solve(res, color);
            }
            return 0;
        }

        if (series_cmd->parsed() || plot_cmd->parsed()) {
            ODE2 ode = parse_equation(ctx.text());
            Location loc = parse_point(sopt.at);
            if (sopt.order < 1 || sopt.order > 100000)
                fail(ErrorCode::UsageError, "order out of range");
            ExponentChoice choice = ExponentChoice::Larger;
            if (sopt.exponent == "smaller") choice = ExponentChoice::Smaller;
            else if (sopt.exponent != "larger")
                fail(ErrorCode::UsageError, "--exponent expects larger or smaller");
            SeriesSolution sol = frobenius_series(ode, loc, sopt.order, choice);
            auto xs = sample_grid(sopt, sol);
            bool relaxed = sopt.unguarded || plot_cmd->parsed();
            auto rows = evaluate_series(sol, xs, relaxed);
            if (plot_cmd->parsed()) {
                std::ofstream svg(sopt.svg_path);
                if (!svg) fail(ErrorCode::UsageError, "cannot write " + sopt.svg_path);
                double c = sol.center.is_infinity()
                               ? 0.0
                               : sol.center.exact->approx().re.convert_to<double>();
                double g = (BigFloat("0.9") * sol.radius).convert_to<double>();
                write_series_svg(svg, rows, "series solution at " + loc.str(),
                                 c - g, c + g);
                if (!json) out << "wrote " << sopt.svg_path << "\n";
            }
            if (!sopt.csv_path.empty()) {
                std::ofstream csv(sopt.csv_path);
                if (!csv) fail(ErrorCode::UsageError, "cannot write " + sopt.csv_path);
                write_series_csv(csv, rows);
            }
            if (json) {
                Json doc = document_skeleton(plot_cmd->parsed() ? "plot" : "series",
                                             ctx.text(), ode);
                doc["point"] = loc.str();
                doc["exponent"] = sol.exponent.str();
                doc["order"] = (int)sol.coeffs.size() - 1;
                doc["radius"] = sol.radius.str(16);
                Json cs = Json::array();
                for (size_t i = 0; i < sol.coeffs.size() && i < 12; ++i)
                    cs.push_back(sol.coeffs[i].str());
                doc["leading_coefficients"] = cs;
                doc["values"] = json_series_samples(rows);
                out << doc.dump(2) << "\n";
            } else if (series_cmd->parsed()) {
                out << "series at " << loc.str() << ", exponent r = "
                    << sol.exponent.str() << ", order " << sopt.order
                    << ", radius " << sol.radius.str(6) << "\n";
                if (sopt.eval_list.empty() && sopt.range.empty() &&
                    sopt.csv_path.empty()) {
                    for (size_t i = 0; i < sol.coeffs.size() && i < 12; ++i)
                        out << "  C_" << i << " = " << sol.coeffs[i].str() << "\n";
                } else if (!sopt.csv_path.empty()) {
                    out << "wrote " << sopt.csv_path << "\n";
                } else {
                    for (auto& r : rows)
                        out << "  y(" << r.x.str(10) << ") = " << to_string(r.y, 20)
                            << (r.guarded ? "" : "  [unguarded]") << "\n";
                }
            }
            return 0;
        }
    } catch (const Error& e) {
        if (json) {
            out << json_error(e).dump(2) << "\n";
        } else {
            err << "error [" << error_code_name(e.code()) << "]: " << e.what()
                << "\n";
        }
        return is_usage_error(e.code()) ? 2 : 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace ode2
