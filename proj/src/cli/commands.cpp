#include <cdunkl/cli/commands.hpp>

#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <cdunkl/dunkl.hpp>
#include <cdunkl/errors.hpp>
#include <cdunkl/special_functions.hpp>

namespace cdunkl::cli
{

namespace
{

using nlohmann::ordered_json;

struct ErrorInfo {
    std::string kind;
    std::string message;
    std::optional<int> index;
    int exit_code = exit_failure;
};

ErrorInfo classify(const std::exception_ptr &ptr)
{
    try {
        std::rethrow_exception(ptr);
    } catch (const SingularRecursionError &e) {
        return {"singular-recursion", e.what(), e.index(), exit_usage};
    } catch (const GammaPoleError &e) {
        return {"gamma-pole", e.what(), std::nullopt, exit_usage};
    } catch (const DomainError &e) {
        return {"domain", e.what(), std::nullopt, exit_usage};
    } catch (const ParameterError &e) {
        return {"parameter", e.what(), std::nullopt, exit_usage};
    } catch (const ConvergenceError &e) {
        return {"convergence", e.what(), std::nullopt, exit_failure};
    } catch (const ConsistencyError &e) {
        return {"consistency", e.what(), std::nullopt, exit_failure};
    } catch (const std::exception &e) {
        return {"internal", e.what(), std::nullopt, exit_failure};
    }
}

ordered_json error_json(const ErrorInfo &info, const std::string &context)
{
    ordered_json j;
    j["error"] = info.kind;
    j["context"] = context;
    j["message"] = info.message;
    if (info.index) {
        j["index"] = *info.index;
    }
    return j;
}

int report_error(const std::exception_ptr &ptr, const std::string &context, std::ostream &out, std::ostream &err)
{
    const auto info = classify(ptr);
    out << error_json(info, context).dump() << '\n';
    err << "cyclic-dunkl " << context << ": " << info.message << '\n';
    return info.exit_code;
}

ordered_json complex_json(complex z)
{
    return ordered_json::array({z.real(), z.imag()});
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

struct EvalRow {
    complex x;
    std::optional<EvalResult> value;
    std::optional<complex> closed;
    double difference = 0;
    std::string status;
};

EvalRow eval_point(const RunConfig &cfg, const std::string &function, complex x)
{
    EvalRow row{x, std::nullopt, std::nullopt, 0, "ok"};
    try {
        const auto lx = cfg.lambda * x;
        if (function == "cosm") {
            row.value = cos_m_eval(cfg.m, lx);
        } else if (function == "sinml") {
            row.value = sin_ml_eval(cfg.m, cfg.l, lx);
        } else if (function == "hyperbessel") {
            row.value = hyper_bessel_eval(MultiIndex(cfg.m, cfg.nu), lx);
        } else {
            const OperatorContext ctx(cfg.m, cfg.nu);
            const auto k = dunkl_kernel_eval(ctx, effective_lambda(cfg), x, cfg.tolerance.value_or(1e-12));
            row.value = k.oracle;
            row.closed = k.closed_form;
            row.difference = k.discrepancy;
            if (k.formula_mismatch) {
                row.status = "mismatch";
            }
        }
        if (!row.value->converged) {
            row.status = "not-converged";
        }
    } catch (const std::exception &e) {
        row.value.reset();
        row.closed.reset();
        row.status = std::string("error: ") + e.what();
    }
    return row;
}

} // namespace

int cmd_verify(const RunConfig &cfg, Suite suite, std::ostream &out, std::ostream &err)
{
    std::vector<Suite> suites;
    if (suite == Suite::all) {
        suites = concrete_suites();
    } else {
        suites.push_back(suite);
    }
    int code = exit_pass;
    for (auto s : suites) {
        try {
            for (const auto &r : run_suite(cfg, s)) {
                out << to_json(r).dump() << '\n';
                if (!r.pass) {
                    err << "FAILED " << r.identity << ": residual " << fmt(r.max_residual) << " > tolerance "
                        << fmt(r.tolerance) << '\n';
                    if (code == exit_pass) {
                        code = exit_failure;
                    }
                }
            }
        } catch (...) {
            const auto c = report_error(std::current_exception(), std::string("verify/") + suite_name(s), out, err);
            code = std::max(code, c);
        }
    }
    return code;
}

int cmd_eval(const RunConfig &cfg, const std::string &function, const std::vector<complex> &grid, std::ostream &out,
             std::ostream &err)
{
    try {
        if (function != "cosm" && function != "sinml" && function != "hyperbessel" && function != "kernel") {
            throw ParameterError("unknown function '" + function + "' (expected cosm, sinml, hyperbessel, kernel)");
        }
        validate(cfg, function == "hyperbessel" || function == "kernel");
        if (function == "sinml" && (cfg.l < 1 || cfg.l >= cfg.m)) {
            throw ParameterError("--l must satisfy 1 <= l <= m-1");
        }
    } catch (...) {
        return report_error(std::current_exception(), "eval", out, err);
    }
    const bool kernel = function == "kernel";
    std::vector<EvalRow> rows;
    rows.reserve(grid.size());
    int code = exit_pass;
    for (const auto x : grid) {
        rows.push_back(eval_point(cfg, function, x));
        if (rows.back().status.rfind("error", 0) == 0) {
            err << "eval at x = " << fmt(x.real()) << (x.imag() < 0 ? "" : "+") << fmt(x.imag())
                << "i: " << rows.back().status << '\n';
            code = exit_failure;
        }
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (cfg.output == OutputFormat::csv) {
        out << "x_re,x_im,value_re,value_im,error_estimate,terms_used";
        if (kernel) {
            out << ",closed_re,closed_im,difference";
        }
        out << ",status\n";
        for (const auto &r : rows) {
            const auto v = r.value ? r.value->value : complex(nan, nan);
            out << fmt(r.x.real()) << ',' << fmt(r.x.imag()) << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << ','
                << fmt(r.value ? r.value->error_estimate : nan) << ',' << (r.value ? r.value->terms_used : 0);
            if (kernel) {
                const auto c = r.closed.value_or(complex(nan, nan));
                out << ',' << fmt(c.real()) << ',' << fmt(c.imag()) << ',' << fmt(r.value ? r.difference : nan);
            }
            out << ',' << csv_escape(r.status) << '\n';
        }
        return code;
    }
    ordered_json doc;
    doc["function"] = function;
    doc["m"] = cfg.m;
    doc["nu"] = cfg.nu;
    doc["lambda"] = complex_json(cfg.lambda);
    auto &table = doc["rows"] = ordered_json::array();
    for (const auto &r : rows) {
        ordered_json row;
        row["x"] = complex_json(r.x);
        row["value"] = r.value ? complex_json(r.value->value) : ordered_json(nullptr);
        row["error_estimate"] = r.value ? ordered_json(r.value->error_estimate) : ordered_json(nullptr);
        row["terms_used"] = r.value ? r.value->terms_used : 0;
        if (kernel) {
            row["closed_form"] = r.closed ? complex_json(*r.closed) : ordered_json(nullptr);
            row["difference"] = r.value ? ordered_json(r.difference) : ordered_json(nullptr);
        }
        row["status"] = r.status;
        table.push_back(std::move(row));
    }
    out << doc.dump() << '\n';
    return code;
}

int cmd_series(const RunConfig &cfg, const std::string &object, std::ostream &out, std::ostream &err)
{
    try {
        validate(cfg, true);
        const OperatorContext ctx(cfg.m, cfg.nu);
        const int n = cfg.truncation;
        const auto mu = effective_mu(cfg);
        TruncatedSeries s = TruncatedSeries::zero(n);
        if (object == "eigen") {
            s = eigen_series(ctx, mu, n);
        } else if (object == "intertwined-exp") {
            s = intertwiner_apply(TruncatedSeries::exponential(n, mu), ctx);
        } else if (object == "hyperbessel") {
            s = hyper_bessel_series(ctx.nu(), effective_lambda(cfg), n);
        } else {
            throw ParameterError("unknown object '" + object + "' (expected eigen, intertwined-exp, hyperbessel)");
        }
        if (cfg.output == OutputFormat::csv) {
            out << "n,re,im\n";
            for (int i = 0; i <= s.order(); ++i) {
                out << i << ',' << fmt(s[i].real()) << ',' << fmt(s[i].imag()) << '\n';
            }
            return exit_pass;
        }
        ordered_json doc;
        doc["object"] = object;
        doc["m"] = cfg.m;
        doc["nu"] = cfg.nu;
        doc["mu"] = complex_json(mu);
        const auto js = to_json(s);
        doc["truncation"] = js["truncation"];
        doc["coefficients"] = js["coefficients"];
        out << doc.dump() << '\n';
        return exit_pass;
    } catch (...) {
        return report_error(std::current_exception(), "series/" + object, out, err);
    }
}

int cmd_crosscheck(const RunConfig &cfg, const QuadratureConfig &q, double x, int max_n, std::ostream &out,
                   std::ostream &err)
{
    try {
        validate(cfg, true);
        q.validate();
        if (!(x > 0) || !std::isfinite(x)) {
            throw ParameterError("--x must be positive and finite");
        }
        if (max_n < 0) {
            throw ParameterError("--max-n must be >= 0");
        }
        const OperatorContext ctx(cfg.m, cfg.nu);
        double worst = 0;
        for (int n = 0; n <= max_n; ++n) {
            const int e = cfg.m * n;
            const auto quad = rl_transform_numeric(ctx, [e](double t) { return complex(std::pow(t, e)); }, x, q);
            const double diag = rl_eigenvalue(ctx, n) * std::pow(x, e);
            const double rel = std::abs(quad - diag) / std::abs(diag);
            worst = std::max(worst, rel);
            ordered_json row;
            row["n"] = n;
            row["exponent"] = e;
            row["x"] = x;
            row["quadrature"] = complex_json(quad);
            row["diagonal"] = diag;
            row["relative_error"] = rel;
            out << row.dump() << '\n';
        }
        const auto r = make_report("rl-diagonal-vs-quadrature", cfg.m, cfg.nu, max_n * cfg.m, worst,
                                   cfg.tolerance.value_or(1e-8),
                                   q.scheme == QuadratureScheme::adaptive ? "adaptive" : "gauss-jacobi");
        out << to_json(r).dump() << '\n';
        const double unit = rl_normalization_constant(ctx);
        const double literal = rl_literal_constant(ctx);
        ordered_json norm;
        norm["unit"] = unit;
        norm["literal"] = literal;
        norm["ratio"] = literal / unit;
        out << ordered_json{{"normalization", norm}}.dump() << '\n';
        if (!r.pass) {
            err << "FAILED rl-diagonal-vs-quadrature: residual " << fmt(worst) << '\n';
            return exit_failure;
        }
        return exit_pass;
    } catch (...) {
        return report_error(std::current_exception(), "crosscheck", out, err);
    }
}

int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Cyclic Dunkl operator toolkit: identity verification, special-function tables, series dumps",
                 "cyclic-dunkl"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string nu_text;
    std::string lambda_text = "1";
    std::optional<double> tolerance;
    std::string output_text = "json";
    app.add_option("--m", cfg.m, "group order m >= 2")->capture_default_str();
    app.add_option("--nu", nu_text, "comma-separated nu_1,...,nu_{m-1}");
    app.add_option("--lambda", lambda_text, "spectral parameter (re+imi accepted)")->capture_default_str();
    app.add_flag("--mu-direct", cfg.mu_direct, "treat --lambda as the eigenvalue mu instead of forming kappa*lambda");
    app.add_option("--truncation", cfg.truncation, "series truncation order N")->capture_default_str();
    app.add_option("--tolerance", tolerance, "override every identity tolerance");
    app.add_option("--seed", cfg.seed, "seed for random draws")->capture_default_str();
    app.add_option("--output", output_text, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    auto *verify = app.add_subcommand("verify", "run verification suites");
    std::string suite_text = "all";
    verify->add_option("--suite", suite_text,
                       "projections, intertwining, eigen, recurrences, rl-crosscheck, kernel, all")
        ->capture_default_str();
    verify->fallthrough();

    auto *eval = app.add_subcommand("eval", "tabulate a function on a grid");
    std::string function;
    std::string grid_text = "0:1:0.1";
    eval->add_option("function", function, "cosm, sinml, hyperbessel, kernel")->required();
    eval->add_option("--grid", grid_text, "start:stop:step")->capture_default_str();
    eval->add_option("--l", cfg.l, "index l of sin_{m,l}")->capture_default_str();
    eval->fallthrough();

    auto *series = app.add_subcommand("series", "dump truncated series coefficients");
    std::string object;
    series->add_option("object", object, "eigen, intertwined-exp, hyperbessel")->required();
    series->fallthrough();

    auto *cross = app.add_subcommand("crosscheck", "quadrature of R on x^{mn} against its diagonal");
    QuadratureConfig quad;
    std::string scheme_text = "gauss-jacobi";
    double x = 1.0;
    int max_n = 8;
    cross->add_option("--nodes", quad.node_count, "Gauss-Jacobi nodes per integral")->capture_default_str();
    cross->add_option("--scheme", scheme_text, "gauss-jacobi or adaptive")
        ->check(CLI::IsMember({"gauss-jacobi", "adaptive"}))
        ->capture_default_str();
    cross->add_option("--quad-tolerance", quad.tolerance, "adaptive scheme tolerance")->capture_default_str();
    cross->add_option("--x", x, "evaluation point")->capture_default_str();
    cross->add_option("--max-n", max_n, "largest n in x^{mn}")->capture_default_str();
    cross->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        cfg.nu = parse_real_list(nu_text);
        cfg.lambda = parse_complex(lambda_text);
        cfg.tolerance = tolerance;
        cfg.output = output_text == "csv" ? OutputFormat::csv : OutputFormat::json;
        quad.scheme = scheme_text == "adaptive" ? QuadratureScheme::adaptive : QuadratureScheme::gauss_jacobi;
        if (*verify) {
            const auto suite = parse_suite(suite_text);
            if (!suite) {
                throw ParameterError("unknown suite '" + suite_text + "'");
            }
            validate(cfg, true);
            return cmd_verify(cfg, *suite, out, err);
        }
        if (*eval) {
            return cmd_eval(cfg, function, parse_grid(grid_text), out, err);
        }
        if (*series) {
            return cmd_series(cfg, object, out, err);
        }
        return cmd_crosscheck(cfg, quad, x, max_n, out, err);
    } catch (...) {
        return report_error(std::current_exception(), app.get_subcommands().front()->get_name(), out, err);
    }
}

} // namespace cdunkl::cli
