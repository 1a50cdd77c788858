#include "transroots/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "transroots/lambert.hpp"
#include "transroots/physics.hpp"
#include "transroots/trig_roots.hpp"

namespace transroots {

namespace {

// Semantic misuse of flags that CLI11 cannot catch (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_fixed(double v, int dp) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", dp, v);
    return buf;
}

std::string fmt_sci(double v, int dp) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", dp, v);
    return buf;
}

std::vector<double> linspace(double from, double to, int points) {
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(points));
    if (points == 1) {
        xs.push_back(from);
        return xs;
    }
    for (int i = 0; i < points; ++i) {
        xs.push_back(i == points - 1 ? to : from + (to - from) * i / (points - 1));
    }
    return xs;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("failed writing output file '" + path + "'");
    }
}

TrigKind parse_kind(const std::string& s) {
    return s == "tan" ? TrigKind::tan_eq : TrigKind::cot_eq;
}

std::string render_table_csv(const std::vector<ErrorTableRow>& rows, TrigKind kind) {
    // Error columns are printed in the published units so the output can be
    // diffed against the golden tables: x1e3 for tan, x1e2 for cot.
    const bool tan = kind == TrigKind::tan_eq;
    const double scale = tan ? 1e3 : 1e2;
    const std::string unit = tan ? "(1e-3)" : "(1e-2)";
    const bool with_frankel = !rows.empty() && rows.front().err_frankel.has_value();
    std::string text = "n,exact,ratio,err_pade" + unit;
    if (with_frankel) {
        text += ",err_frankel" + unit;
    }
    text += ",err_taylor" + unit + "\n";
    for (const ErrorTableRow& r : rows) {
        text += std::to_string(r.n) + "," + fmt_fixed(r.exact, 8) + "," + fmt_fixed(r.ratio, 8) +
                "," + fmt_fixed(r.err_pade * scale, 8);
        if (with_frankel) {
            text += "," + fmt_fixed(*r.err_frankel * scale, 8);
        }
        text += "," + fmt_fixed(r.err_taylor * scale, 8) + "\n";
    }
    return text;
}

std::string render_table_markdown(const std::vector<ErrorTableRow>& rows, TrigKind kind) {
    const bool tan = kind == TrigKind::tan_eq;
    const double scale = tan ? 1e3 : 1e2;
    const std::string unit = tan ? "(1e-3)" : "(1e-2)";
    const bool with_frankel = !rows.empty() && rows.front().err_frankel.has_value();
    std::string text = "| n | exact | ratio | err_pade" + unit;
    if (with_frankel) {
        text += " | err_frankel" + unit;
    }
    text += " | err_taylor" + unit + " |\n";
    int cols = with_frankel ? 6 : 5;
    text += "|";
    for (int i = 0; i < cols; ++i) {
        text += "---:|";
    }
    text += "\n";
    for (const ErrorTableRow& r : rows) {
        text += "| " + std::to_string(r.n) + " | " + fmt_fixed(r.exact, 8) + " | " +
                fmt_fixed(r.ratio, 8) + " | " + fmt_fixed(r.err_pade * scale, 8);
        if (with_frankel) {
            text += " | " + fmt_fixed(*r.err_frankel * scale, 8);
        }
        text += " | " + fmt_fixed(r.err_taylor * scale, 8) + " |\n";
    }
    return text;
}

std::string render_table_json(const std::vector<ErrorTableRow>& rows, const TrigEquation& eq,
                              int n_rows) {
    nlohmann::json j;
    j["inputs"] = {{"kind", eq.kind == TrigKind::tan_eq ? "tan" : "cot"},
                   {"kappa", eq.kappa},
                   {"rows", n_rows}};
    j["method"] = "error_table";
    double worst = 0.0;
    nlohmann::json value = nlohmann::json::array();
    for (const ErrorTableRow& r : rows) {
        double res = std::abs(equation_residual(eq, r.exact));
        worst = std::max(worst, res);
        nlohmann::json row = {{"n", r.n},          {"exact", r.exact},
                              {"ratio", r.ratio},  {"err_pade", r.err_pade},
                              {"err_taylor", r.err_taylor}, {"residual", res}};
        if (r.err_frankel) {
            row["err_frankel"] = *r.err_frankel;
        } else {
            row["err_frankel"] = nullptr;
        }
        value.push_back(row);
    }
    j["value"] = value;
    j["residual"] = worst;
    return j.dump(2) + "\n";
}

const char* status_name(ErrorCurvePoint::Status s) {
    switch (s) {
        case ErrorCurvePoint::Status::ok:
            return "ok";
        case ErrorCurvePoint::Status::skipped_domain:
            return "skipped_domain";
        case ErrorCurvePoint::Status::skipped_zero:
            return "skipped_zero";
    }
    return "ok";
}

WVariant parse_variant_or_usage(const std::string& s) {
    try {
        return WVariant::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed forms, Pade approximants, and reference solvers for tan x = kx, "
                 "cot x = kx, and the Lambert W equation, with physics applications"};
    app.name("transroots");
    app.require_subcommand(1);

    std::string kind_str;
    double kappa = 1.0;
    int branch_n = 0;
    std::string method_str;
    CLI::App* roots = app.add_subcommand("roots", "One branch root by the chosen method");
    roots->add_option("--kind", kind_str, "Equation: tan or cot")
        ->required()
        ->check(CLI::IsMember({"tan", "cot"}));
    roots->add_option("--kappa", kappa, "Slope coefficient of the linear side")->required();
    roots->add_option("--n", branch_n, "Branch index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    roots->add_option("--method", method_str, "pade, frankel, taylor, or oracle")
        ->required()
        ->check(CLI::IsMember({"pade", "frankel", "taylor", "oracle"}));

    std::string t_kind_str;
    double t_kappa = 1.0;
    int t_rows = 10;
    std::string t_format = "csv";
    std::string t_out;
    CLI::App* table = app.add_subcommand("table", "Error table of all methods vs the oracle");
    table->add_option("--kind", t_kind_str, "Equation: tan or cot")
        ->required()
        ->check(CLI::IsMember({"tan", "cot"}));
    table->add_option("--kappa", t_kappa, "Slope coefficient of the linear side")->required();
    table->add_option("--rows", t_rows, "Number of branches, starting at n = 1")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("--format", t_format, "csv, markdown, or json")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));
    table->add_option("--out", t_out, "Write to this file instead of stdout");

    double l_x = 0.0;
    std::string l_variant;
    int l_branch = 0;
    CLI::App* lambert = app.add_subcommand("lambert", "Evaluate the Lambert W function");
    lambert->add_option("--x", l_x, "Argument")->required();
    lambert
        ->add_option("--variant", l_variant,
                     "taylor:N, pade-i, pade-i-rounded, pade-ii, pade-ii-rounded, or oracle")
        ->required();
    lambert->add_option("--branch", l_branch, "Real branch: 0 or -1")
        ->check(CLI::IsMember({0, -1}));

    double ec_from = 0.0;
    double ec_to = 0.0;
    int ec_points = 0;
    std::string ec_variant;
    std::string ec_out;
    CLI::App* error_curve_cmd =
        app.add_subcommand("error-curve", "log10 relative error of a W variant vs the reference");
    error_curve_cmd->add_option("--from", ec_from, "Grid start")->required();
    error_curve_cmd->add_option("--to", ec_to, "Grid end")->required();
    error_curve_cmd->add_option("--points", ec_points, "Grid size")
        ->required()
        ->check(CLI::PositiveNumber);
    error_curve_cmd->add_option("--variant", ec_variant, "W variant to measure")->required();
    error_curve_cmd->add_option("--out", ec_out, "Write to this file instead of stdout");

    double s_ratio = 0.0;
    double s_m = 0.0;
    double s_m0 = 0.0;
    double s_k = 0.0;
    CLI::App* spring =
        app.add_subcommand("spring", "Effective-mass fraction or oscillation frequency");
    CLI::Option* s_ratio_opt = spring->add_option("--ratio", s_ratio, "Mass ratio m/m0");
    CLI::Option* s_m_opt = spring->add_option("--m", s_m, "Hung mass");
    CLI::Option* s_m0_opt = spring->add_option("--m0", s_m0, "Spring mass");
    CLI::Option* s_k_opt = spring->add_option("--k", s_k, "Stiffness");

    CLI::App* diffraction = app.add_subcommand("diffraction", "Single-slit pattern data");
    diffraction->require_subcommand(1);
    int d_n = 1;
    CLI::App* d_maxima =
        diffraction->add_subcommand("maxima", "Position and strength of a secondary maximum");
    d_maxima->add_option("--n", d_n, "Maximum index (0 = primary)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    double d_from = 0.0;
    double d_to = 0.0;
    int d_points = 0;
    CLI::App* d_profile = diffraction->add_subcommand("profile", "Intensity profile sin^2(u)/u^2");
    d_profile->add_option("--from", d_from, "Grid start")->required();
    d_profile->add_option("--to", d_to, "Grid end")->required();
    d_profile->add_option("--points", d_points, "Grid size")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* delta = app.add_subcommand("delta", "Bound states of delta potentials");
    delta->require_subcommand(1);
    int ds_n = 1;
    bool ds_oracle = false;
    CLI::App* d_single =
        delta->add_subcommand("single", "Even level in a box with a central spike");
    d_single->add_option("--n", ds_n, "Odd level index")->required()->check(CLI::PositiveNumber);
    d_single->add_flag("--oracle", ds_oracle, "Solve the quantization condition by bisection");
    double dd_ratio = 0.0;
    CLI::App* d_double = delta->add_subcommand("double", "Twin attractive wells");
    d_double->add_option("--ratio", dd_ratio, "Separation over strength length, s = a/b")
        ->required();

    std::string w_method = "lambert";
    int w_nodes = 64;
    bool w_constant = false;
    CLI::App* wien = app.add_subcommand("wien", "Blackbody peak abscissa x0");
    wien->add_option("--method", w_method, "lambert, pade-ii, pade-ii-rounded, or contour")
        ->check(CLI::IsMember({"lambert", "pade-ii", "pade-ii-rounded", "contour"}));
    wien->add_option("--nodes", w_nodes, "Trapezoid nodes for the contour method");
    wien->add_flag("--constant", w_constant, "Print the displacement constant h*c/(k_B*x0)");

    double p_temp = 0.0;
    double p_from = 0.0;
    double p_to = 0.0;
    int p_points = 0;
    std::string p_out;
    CLI::App* planck = app.add_subcommand("planck", "Planck spectral energy density profile");
    planck->add_option("--temperature", p_temp, "Temperature in K")->required();
    planck->add_option("--from", p_from, "Shortest wavelength in m")->required();
    planck->add_option("--to", p_to, "Longest wavelength in m")->required();
    planck->add_option("--points", p_points, "Grid size")
        ->required()
        ->check(CLI::PositiveNumber);
    planck->add_option("--out", p_out, "Write to this file instead of stdout");

    std::vector<std::string> argv_full;
    argv_full.reserve(args.size() + 1);
    argv_full.push_back("transroots");
    argv_full.insert(argv_full.end(), args.begin(), args.end());
    std::vector<const char*> argv_ptrs;
    argv_ptrs.reserve(argv_full.size());
    for (const std::string& s : argv_full) {
        argv_ptrs.push_back(s.c_str());
    }

    try {
        app.parse(static_cast<int>(argv_ptrs.size()), argv_ptrs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*roots) {
            TrigEquation eq{parse_kind(kind_str), kappa};
            RootEstimate est;
            if (method_str == "pade") {
                est = eq.kind == TrigKind::cot_eq && branch_n == 0
                          ? first_root_cot_closed(kappa)
                          : root_closed_form(eq, branch_n);
            } else if (method_str == "frankel") {
                est = root_frankel(eq, branch_n);
            } else if (method_str == "taylor") {
                est = root_taylor(eq, branch_n);
            } else {
                est = root_oracle(eq, branch_n);
            }
            out << fmt_fixed(est.value, 8) << "\n";
        } else if (*table) {
            TrigEquation eq{parse_kind(t_kind_str), t_kappa};
            std::vector<ErrorTableRow> rows = error_table(eq, t_rows);
            std::string text;
            if (t_format == "csv") {
                text = render_table_csv(rows, eq.kind);
            } else if (t_format == "markdown") {
                text = render_table_markdown(rows, eq.kind);
            } else {
                text = render_table_json(rows, eq, t_rows);
            }
            write_output(text, t_out, out);
        } else if (*lambert) {
            WVariant variant = parse_variant_or_usage(l_variant);
            WBranch branch = l_branch == 0 ? WBranch::principal : WBranch::minus_one;
            if (variant.kind != WVariant::Kind::oracle &&
                (l_x < -std::exp(-1.0) || l_x > 1.0)) {
                err << "note: x = " << l_x
                    << " is outside (-1/e, 1]; the approximant value is an extrapolation\n";
            }
            out << fmt_fixed(w_eval(l_x, variant, branch), 12) << "\n";
        } else if (*error_curve_cmd) {
            WVariant variant = parse_variant_or_usage(ec_variant);
            std::vector<ErrorCurvePoint> pts =
                error_curve(linspace(ec_from, ec_to, ec_points), variant);
            std::string text = "x,log10_rel_err,status\n";
            for (const ErrorCurvePoint& pt : pts) {
                text += fmt_sci(pt.x, 8) + ",";
                if (pt.status == ErrorCurvePoint::Status::ok) {
                    text += fmt_fixed(pt.delta, 6);
                }
                text += std::string(",") + status_name(pt.status) + "\n";
            }
            write_output(text, ec_out, out);
        } else if (*spring) {
            bool have_ratio = s_ratio_opt->count() > 0;
            bool have_dim = s_m_opt->count() > 0 || s_m0_opt->count() > 0 || s_k_opt->count() > 0;
            bool have_all_dim =
                s_m_opt->count() > 0 && s_m0_opt->count() > 0 && s_k_opt->count() > 0;
            if (have_ratio == have_dim || (have_dim && !have_all_dim)) {
                throw UsageError("spring needs either --ratio or all of --m, --m0, --k");
            }
            if (have_ratio) {
                out << fmt_fixed(spring_xi(s_ratio), 8) << "\n";
            } else {
                out << fmt_fixed(spring_frequency(SpringSystem::from_dimensional(s_m, s_m0, s_k)),
                                 8)
                    << "\n";
            }
        } else if (*diffraction) {
            if (*d_maxima) {
                auto [u, ratio] = diffraction_maxima(d_n);
                out << "n,u_n,relative_intensity\n"
                    << d_n << "," << fmt_fixed(u, 8) << "," << fmt_fixed(ratio, 8) << "\n";
            } else {
                auto profile = diffraction_profile(linspace(d_from, d_to, d_points));
                out << "u,relative_intensity\n";
                for (const auto& [u, intensity] : profile) {
                    out << fmt_fixed(u, 8) << "," << fmt_sci(intensity, 8) << "\n";
                }
            }
        } else if (*delta) {
            if (*d_single) {
                double energy = single_delta_even_energy(ds_n, !ds_oracle);
                out << "n,energy\n" << ds_n << "," << fmt_fixed(energy, 8) << "\n";
            } else {
                auto [e_even, e_odd] = double_delta_energies(dd_ratio);
                out << "s,E_even,E_odd\n" << fmt_fixed(dd_ratio, 8) << ","
                    << fmt_fixed(e_even, 8) << ",";
                if (e_odd) {
                    out << fmt_fixed(*e_odd, 8);
                }
                out << "\n";
            }
        } else if (*wien) {
            WienMethod method = WienMethod::lambert_oracle;
            if (w_method == "pade-ii") {
                method = WienMethod::pade_ii;
            } else if (w_method == "pade-ii-rounded") {
                method = WienMethod::pade_ii_rounded;
            } else if (w_method == "contour") {
                method = WienMethod::contour;
            }
            double x0 = wien_x0(method, w_nodes);
            if (w_constant) {
                const PhysicalConstants& pc = codata2018;
                out << fmt_sci(pc.h * pc.c / (pc.k_B * x0), 12) << "\n";
            } else {
                out << fmt_fixed(x0, 12) << "\n";
            }
        } else if (*planck) {
            auto profile = planck_profile(linspace(p_from, p_to, p_points), p_temp);
            std::string text = "lambda_m,energy_density\n";
            for (const auto& [lambda, density] : profile) {
                text += fmt_sci(lambda, 8) + "," + fmt_sci(density, 8) + "\n";
            }
            write_output(text, p_out, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return cli_run(args, out, err);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        if (!line.empty() && line.back() == ',') {
            fields.emplace_back();
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace transroots
