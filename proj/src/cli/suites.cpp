#include <cdunkl/cli/suites.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include <cdunkl/dunkl.hpp>
#include <cdunkl/errors.hpp>
#include <cdunkl/quadrature.hpp>
#include <cdunkl/special_functions.hpp>

namespace cdunkl::cli
{

namespace
{

double tol(const RunConfig &cfg, double fallback)
{
    return cfg.tolerance.value_or(fallback);
}

VerificationReport report(const RunConfig &cfg, std::string id, int truncation, double residual, double tolerance,
                          std::string detail = {})
{
    return make_report(std::move(id), cfg.m, cfg.nu, truncation, residual, tolerance, std::move(detail));
}

VerificationReport skipped(const RunConfig &cfg, std::string id, std::string detail)
{
    auto r = report(cfg, std::move(id), cfg.truncation, 0.0, 0.0, std::move(detail));
    r.status = ReportStatus::skipped;
    r.pass = true;
    return r;
}

double worse(double current, double candidate)
{
    return candidate <= current ? current : candidate;
}

// Sample points in the complex disc of radius `radius`.
std::vector<complex> disc_points(double radius, int count, std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<complex> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(std::polar(radius * std::sqrt(u(rng)), 2.0 * 3.141592653589793 * u(rng)));
    }
    return out;
}

OperatorContext context_of(const RunConfig &cfg)
{
    return OperatorContext(cfg.m, cfg.nu);
}

std::vector<VerificationReport> run_projections(const RunConfig &cfg)
{
    std::mt19937_64 rng(cfg.seed);
    const auto ctx = context_of(cfg);
    const auto &g = ctx.group();
    const int m = cfg.m;
    const int n = cfg.truncation;
    const auto f = random_series(n, n, rng);
    std::vector<VerificationReport> out;

    {
        double res = 0;
        for (int i = 1; i <= m; ++i) {
            const auto pi = project(f, i, g);
            for (int j = 1; j <= m; ++j) {
                const auto lhs = project(pi, j, g);
                const auto rhs = i == j ? pi : TruncatedSeries::zero(n);
                res = worse(res, max_relative_residual(lhs, rhs));
            }
        }
        out.push_back(report(cfg, "projection-idempotence-orthogonality", n, res, tol(cfg, 1e-14)));
    }
    {
        auto sum = TruncatedSeries::zero(n);
        for (int j = 1; j <= m; ++j) {
            sum = sum + project(f, j, g);
        }
        out.push_back(report(cfg, "projection-resolution-of-identity", n, max_relative_residual(sum, f), tol(cfg, 1e-14)));
    }
    {
        double res = 0;
        for (int j = 1; j <= m; ++j) {
            const auto lhs = project(derivative(f), j, g);
            const auto rhs = derivative(project(f, j % m + 1, g));
            res = worse(res, max_relative_residual(lhs, rhs));
        }
        out.push_back(report(cfg, "projection-shift-relation", n, res, tol(cfg, 1e-14),
                             "p_j(f') = (p_{j+1} f)', index cyclic"));
    }
    {
        const int order = std::min(n, 40);
        const auto h = f.truncated(order);
        const auto sample = [&h](complex x) { return evaluate(h, x); };
        double res = 0;
        for (const auto x : disc_points(1.0, 16, rng)) {
            for (int j = 1; j <= m; ++j) {
                const auto a = evaluate(project(h, j, g), x);
                const auto b = project_pointwise(sample, j, g, x);
                res = worse(res, std::abs(a - b) / std::max(1.0, std::abs(a)));
            }
        }
        out.push_back(report(cfg, "projection-definition-equivalence", order, res, tol(cfg, 1e-12)));
    }
    {
        std::uniform_real_distribution<double> radius(0.3, 1.2);
        double weight_sum = 0;
        for (auto k : ctx.weights().weights()) {
            weight_sum += std::abs(k);
        }
        double res = 0;
        for (int p = 0; p <= n; ++p) {
            const auto mono = TruncatedSeries::monomial(p, n);
            const auto series_side = dunkl_apply(mono, ctx);
            for (int r = 0; r < m; ++r) {
                const auto x = g.root(r) * radius(rng);
                const auto sample = [p](complex z) { return ipow(z, p); };
                const auto pointwise = dunkl_pointwise(sample, static_cast<double>(p) * ipow(x, p - 1), ctx, x);
                const auto a = evaluate(series_side, x);
                const auto scale = (p + weight_sum + 1.0) * std::abs(ipow(x, p - 1));
                res = worse(res, std::abs(a - pointwise) / scale);
            }
        }
        out.push_back(report(cfg, "dunkl-monomial-rule-consistency", n, res, tol(cfg, 1e-12)));
    }
    {
        double res = 0;
        for (int j = 1; j <= m; ++j) {
            const auto image = dunkl_apply(project(f, j, g), ctx);
            const int target = g.residue_class(j - 1);
            double peak = 0;
            for (auto c : image.coefficients()) {
                peak = std::max(peak, std::abs(c));
            }
            if (peak > 0) {
                res = worse(res, mass_outside_class(image, target, g) / peak);
            }
        }
        out.push_back(report(cfg, "dunkl-type-shift", n, res, tol(cfg, 1e-14), "T(k) maps class j to class j-1"));
    }
    {
        const auto kappa = g.kappa();
        const auto exp_kappa = [kappa](complex z) { return std::exp(kappa * z); };
        double res = 0;
        for (const auto x : disc_points(2.0, 16, rng)) {
            const auto cos_val = cos_m_eval(m, x).value;
            const auto scale = std::max(1.0, std::abs(exp_kappa(x)));
            res = worse(res, std::abs(cos_val - project_pointwise(exp_kappa, m, g, x)) / scale);
            complex recomposed = cos_val;
            for (int l = 1; l < m; ++l) {
                recomposed += g.kappa_power(l) * sin_ml_eval(m, l, x).value;
            }
            res = worse(res, std::abs(recomposed - exp_kappa(x)) / scale);
        }
        out.push_back(report(cfg, "cosm-exp-decomposition", n, res, tol(cfg, 1e-13)));
    }
    if (m == 2) {
        const double nu = cfg.nu[0];
        const int order = std::min(n, 30);
        const auto h = f.truncated(order);
        const auto th = dunkl_apply(h, ctx);
        const auto dh = derivative(h);
        std::uniform_real_distribution<double> pick(-1.0, 1.0);
        double res = 0;
        for (int i = 0; i < 16; ++i) {
            double x = pick(rng);
            if (std::abs(x) < 0.05) {
                x = 0.5;
            }
            const auto reflection = evaluate(dh, x) + (nu + 0.5) / x * (evaluate(h, x) - evaluate(h, -x));
            const auto a = evaluate(th, x);
            res = worse(res, std::abs(a - reflection) / std::max(1.0, std::abs(reflection)));
        }
        out.push_back(report(cfg, "dunkl-classical-reflection-m2", order, res, tol(cfg, 1e-12)));
    } else {
        out.push_back(skipped(cfg, "dunkl-classical-reflection-m2", "only defined for m = 2"));
    }
    return out;
}

std::vector<VerificationReport> run_intertwining(const RunConfig &cfg)
{
    std::mt19937_64 rng(cfg.seed);
    const auto ctx = context_of(cfg);
    const auto &g = ctx.group();
    const int m = cfg.m;
    const int n = cfg.truncation;
    std::vector<VerificationReport> out;

    {
        const auto f = random_series(n, n / 3, rng);
        auto r = check_intertwining(ctx, f, tol(cfg, 1e-10));
        r.identity = "intertwining-theorem";
        r.detail = "random polynomial of degree " + std::to_string(n / 3);
        out.push_back(std::move(r));
    }
    {
        auto r = check_intertwining(ctx, TruncatedSeries::exponential(n), tol(cfg, 1e-10));
        r.identity = "intertwining-theorem-exp";
        out.push_back(std::move(r));
    }
    {
        double res = 0;
        for (int p = 0; p <= n; ++p) {
            const auto image = intertwiner_apply(TruncatedSeries::monomial(p, n), ctx);
            const auto diag = image[p];
            double off = 0;
            for (int q = 0; q <= n; ++q) {
                if (q != p) {
                    off = std::max(off, std::abs(image[q]));
                }
            }
            res = worse(res, diag == complex(0) ? std::numeric_limits<double>::infinity() : off / std::abs(diag));
        }
        const auto one = intertwiner_apply(TruncatedSeries::monomial(0, n), ctx);
        res = worse(res, std::abs(one[0] - 1.0));
        out.push_back(report(cfg, "intertwiner-diagonal", n, res, tol(cfg, 1e-14), "V_m(x^n) = c_n x^n and V_m(1) = 1"));
    }
    {
        std::vector<double> boundary;
        for (int k = 1; k < m; ++k) {
            boundary.push_back(-1.0 + static_cast<double>(k) / m);
        }
        const OperatorContext flat(m, boundary);
        const auto f = random_series(n, n, rng);
        auto d = f;
        for (int i = 0; i < m; ++i) {
            d = derivative(d);
        }
        out.push_back(report(cfg, "hyper-bessel-factorization", n,
                             max_relative_residual(hyper_bessel_op_apply(f, flat), d), tol(cfg, 1e-14),
                             "all k_j = 0: B_m = d^m/dx^m"));
    }
    {
        const auto f = project(random_series(n, n, rng), m, g);
        const auto r = rl_diagonal(ctx, n);
        auto d = f;
        for (int i = 0; i < m; ++i) {
            d = derivative(d);
        }
        out.push_back(report(cfg, "rl-intertwines-hyper-bessel", n,
                             max_relative_residual(hyper_bessel_op_apply(r.apply(f), ctx), r.apply(d)), tol(cfg, 1e-12),
                             "B_m R = R d^m on class-m series"));
        const auto round_trip = rl_diagonal_inverse(ctx, n).apply(r.apply(f));
        out.push_back(report(cfg, "rl-inverse", n, max_relative_residual(round_trip, f), tol(cfg, 1e-14)));
    }
    return out;
}

void require_kernel_preconditions(const RunConfig &cfg, const OperatorContext &ctx)
{
    if (const auto n = first_singular_exponent(ctx, cfg.truncation); n != 0) {
        const int cls = n % cfg.m;
        throw SingularRecursionError("eigen recursion denominator n + k_{n mod m} vanishes at n = " + std::to_string(n)
                                         + " (k_" + std::to_string(cls) + " = " + std::to_string(ctx.weights()(n)) + ")",
                                     n);
    }
    std::string why;
    for (int j = 1; j < cfg.m; ++j) {
        if (ctx.weights()(j) < 0) {
            why += "k_" + std::to_string(j) + " = " + std::to_string(ctx.weights()(j)) + " < 0; ";
        }
    }
    for (auto k : ctx.nu().violations()) {
        why += "nu_" + std::to_string(k) + " = " + std::to_string(ctx.nu()(k)) + " below -1 + " + std::to_string(k)
               + "/m; ";
    }
    if (!why.empty()) {
        // Report the smallest denominator of the eigen recursion so the failure names it.
        int at = 1;
        double smallest = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= cfg.truncation; ++n) {
            const double d = n + ctx.weights()(n);
            if (std::abs(d) < std::abs(smallest)) {
                smallest = d;
                at = n;
            }
        }
        why += "smallest recursion denominator n + k_{n mod m} = " + std::to_string(smallest) + " at n = "
               + std::to_string(at);
        throw ParameterError("kernel existence condition k_j = m nu_j + m - j >= 0 violated: " + why);
    }
}

std::vector<VerificationReport> run_eigen(const RunConfig &cfg)
{
    const auto ctx = context_of(cfg);
    require_kernel_preconditions(cfg, ctx);
    const int n = cfg.truncation;
    const auto mu = effective_mu(cfg);
    const auto e = eigen_series(ctx, mu, n);
    std::vector<VerificationReport> out;
    out.push_back(report(cfg, "eigen-residual", n, max_relative_residual(dunkl_apply(e, ctx), mu * e), tol(cfg, 1e-14),
                         "T(k) f = mu f"));
    out.push_back(report(cfg, "eigen-normalization", n, std::abs(e[0] - 1.0), 0.0, "f(0) = 1 exactly"));
    out.push_back(report(cfg, "kernel-from-intertwiner", n,
                         max_relative_residual(intertwiner_apply(TruncatedSeries::exponential(n, mu), ctx), e),
                         tol(cfg, 1e-12), "V_m(exp(mu x)) = eigen series"));
    return out;
}

std::vector<VerificationReport> run_recurrences(const RunConfig &cfg)
{
    std::mt19937_64 rng(cfg.seed);
    const auto ctx = context_of(cfg);
    const auto &nu = ctx.nu();
    const int m = cfg.m;
    const int n = cfg.truncation;
    std::vector<VerificationReport> out;
    {
        const auto lambda = effective_lambda(cfg);
        const auto j = hyper_bessel_series(nu, lambda, n);
        const auto lhs = hyper_bessel_op_apply(j, ctx);
        const auto rhs = -ipow(lambda, m) * j;
        out.push_back(report(cfg, "hyper-bessel-ode", n, max_relative_residual(lhs, rhs), tol(cfg, 1e-12),
                             "B_m J(lambda x) = -lambda^m J(lambda x)"));
    }
    for (auto r : recurrence_check(nu, n, tol(cfg, 1e-13))) {
        r.nu = cfg.nu;
        out.push_back(std::move(r));
    }
    if (m == 2 && cfg.nu[0] >= 0) {
        const double v = cfg.nu[0];
        double res = 0;
        for (int i = 1; i <= 50; ++i) {
            const double x = 10.0 * i / 50.0;
            const double ref = std::pow(2.0, v) * boost::math::tgamma(v + 1.0) * std::pow(x, -v) * std::cyl_bessel_j(v, x);
            const auto val = hyper_bessel_eval(nu, x).value;
            res = worse(res, std::abs(val - ref) / std::max(1.0, std::abs(ref)));
        }
        out.push_back(report(cfg, "hyper-bessel-classical-m2", n, res, tol(cfg, 1e-10)));
    } else {
        out.push_back(skipped(cfg, "hyper-bessel-classical-m2", "needs m = 2 and nu >= 0"));
    }
    {
        // The estimate bounds truncation only; summation rounding is allowed on top of it,
        // scaled by Σ|t_n|, which both series attain at κ|x| where every term is positive.
        const auto kappa = ctx.group().kappa();
        double res = 0;
        auto check = [&](const std::function<EvalResult(complex, const SeriesOptions &)> &eval, complex x) {
            const auto base = eval(x, {});
            SeriesOptions twice;
            twice.fixed_terms = 2 * base.terms_used;
            const auto more = eval(x, twice);
            const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(eval(kappa * std::abs(x), {}).value);
            const auto diff = std::abs(more.value - base.value);
            res = worse(res, diff / (base.error_estimate + rounding));
        };
        for (const auto x : disc_points(4.0, 12, rng)) {
            check([&](complex z, const SeriesOptions &o) { return cos_m_eval(m, z, o); }, x);
            check([&](complex z, const SeriesOptions &o) { return hyper_bessel_eval(nu, z, o); }, x);
        }
        out.push_back(report(cfg, "series-error-estimate-soundness", n, res, 1.0,
                             "max |S(2n) - S(n)| / (error_estimate + 8 eps sum|t_n|)"));
    }
    return out;
}

std::vector<VerificationReport> run_rl_crosscheck(const RunConfig &cfg)
{
    const auto ctx = context_of(cfg);
    if (!ctx.nu().strictly_valid()) {
        throw ParameterError("rl-crosscheck needs nu_k > -1 + k/m for every k");
    }
    const int m = cfg.m;
    const QuadratureConfig q;
    std::vector<VerificationReport> out;
    {
        double res = 0;
        for (double alpha : {0.1, 0.5, 1.0, 1.7, 3.0}) {
            for (double beta : {-0.9, -0.5, 0.0, 1.3, 3.0}) {
                for (double gamma : {1.0, 2.0, 3.0, 5.0}) {
                    for (int s = 0; s <= 12; ++s) {
                        const double x = 0.9;
                        const auto val = ek_integral(alpha, beta, gamma, [s](double t) { return complex(std::pow(t, s)); },
                                                     x, q);
                        const double ref = std::pow(x, s)
                                           * std::exp(boost::math::lgamma(beta + 1.0 + s / gamma)
                                                      - boost::math::lgamma(alpha + beta + 1.0 + s / gamma));
                        res = worse(res, std::abs(val - ref) / std::abs(ref));
                    }
                }
            }
        }
        out.push_back(report(cfg, "ek-monomial-identity", cfg.truncation, res, tol(cfg, 1e-10),
                             "x^s -> x^s Gamma(beta+1+s/gamma)/Gamma(alpha+beta+1+s/gamma)"));
    }
    {
        const auto one = rl_transform_numeric(ctx, [](double) { return complex(1.0); }, 0.7, q);
        out.push_back(report(cfg, "rl-normalization", cfg.truncation, std::abs(one - 1.0), tol(cfg, 1e-12), "R(1) = 1"));
    }
    {
        double res = 0;
        for (int p = 0; p <= 8; ++p) {
            const int e = m * p;
            for (double x : {0.6, 1.0}) {
                const auto val = rl_transform_numeric(ctx, [e](double t) { return complex(std::pow(t, e)); }, x, q);
                const auto ref = rl_eigenvalue(ctx, p) * std::pow(x, e);
                res = worse(res, std::abs(val - ref) / std::abs(ref));
            }
        }
        out.push_back(report(cfg, "rl-diagonal-vs-quadrature", cfg.truncation, res, tol(cfg, 1e-8),
                             "x^{mn}, n <= 8"));
    }
    {
        const auto lambda = effective_lambda(cfg);
        double res = 0;
        for (double x : {0.5, 1.0, 2.0}) {
            const auto val = rl_transform_numeric(
                ctx, [&](double t) { return cos_m_eval(m, lambda * t).value; }, x, q);
            const auto ref = hyper_bessel_eval(ctx.nu(), lambda * x).value;
            res = worse(res, std::abs(val - ref) / std::max(1.0, std::abs(ref)));
        }
        out.push_back(report(cfg, "rl-maps-cosm-to-hyper-bessel", cfg.truncation, res, tol(cfg, 1e-8),
                             "R(cos_m(lambda .))(x) = J(lambda x)"));
    }
    if (m == 2) {
        const auto f = [](double t) { return std::exp(complex(0.3, 1.0) * t) + complex(t * t * t, -t); };
        double res = 0;
        for (double x : {0.5, 1.0, 2.0}) {
            const auto a = rl_transform_numeric(ctx, f, x, q);
            const auto b = riemann_liouville_direct(cfg.nu[0], f, x);
            res = worse(res, std::abs(a - b) / std::max(1.0, std::abs(b)));
        }
        out.push_back(report(cfg, "rl-classical-m2", cfg.truncation, res, tol(cfg, 1e-9)));
    } else {
        out.push_back(skipped(cfg, "rl-classical-m2", "only defined for m = 2"));
    }
    return out;
}

std::vector<VerificationReport> run_kernel(const RunConfig &cfg)
{
    std::mt19937_64 rng(cfg.seed);
    const auto ctx = context_of(cfg);
    if (const auto n = first_singular_exponent(ctx, cfg.truncation); n != 0) {
        throw SingularRecursionError("eigen recursion denominator vanishes at n = " + std::to_string(n), n);
    }
    const int m = cfg.m;
    const int n = cfg.truncation;
    const auto lambda = effective_lambda(cfg);
    const auto mu = ctx.group().kappa() * lambda;
    const auto e = eigen_series(ctx, mu, n);
    const std::string condition = ctx.weights().nonnegative() ? "" : " (existence condition k_j >= 0 violated)";
    std::vector<VerificationReport> out;

    out.push_back(report(cfg, "kernel-closed-form", n,
                         max_relative_residual(e, kernel_closed_form_series(ctx, lambda, n)), tol(cfg, 1e-12),
                         "corrected reading" + condition));
    {
        const double t = tol(cfg, 1e-12);
        auto r = report(cfg, "kernel-literal-reading", n,
                        max_relative_residual(e, kernel_closed_form_series(ctx, lambda, n, KernelReading::literal)), t);
        if (!r.pass) {
            r.status = ReportStatus::discrepancy;
            r.pass = true;
            r.detail = "literal prefactor (kappa lambda)^j/(m^j prod_{i<=m-j}(nu_i+1)) without x^j disagrees with the "
                       "eigen recursion; documented, not a failure";
        } else {
            r.detail = "literal reading agrees for these parameters";
        }
        out.push_back(std::move(r));
    }
    {
        double res = 0;
        for (int j = 0; j < m; ++j) {
            const auto part = project(e, ctx.group().residue_class(j), ctx.group());
            res = worse(res, max_relative_residual(part, kernel_term_series(ctx, lambda, j, n)));
        }
        out.push_back(report(cfg, "kernel-decomposition", n, res, tol(cfg, 1e-12)));
    }
    {
        const auto at_zero = dunkl_kernel_eval(ctx, lambda, 0.0);
        out.push_back(report(cfg, "kernel-origin", n, std::abs(at_zero.oracle.value - 1.0), 0.0, "D(lambda, 0) = 1"));
    }
    const auto points = disc_points(1.5, 12, rng);
    {
        double res = 0;
        for (const auto x : points) {
            res = worse(res, dunkl_kernel_eval(ctx, lambda, x).discrepancy);
        }
        out.push_back(report(cfg, "kernel-pointwise-closed-form", n, res, tol(cfg, 1e-12)));
    }
    {
        const auto d = [&](complex z) { return dunkl_kernel_eval(ctx, lambda, z).oracle.value; };
        const double h = 1e-3;
        double res = 0;
        for (const auto x : points) {
            if (std::abs(x) < 0.1) {
                continue;
            }
            const auto dx = (-d(x + 2.0 * h) + 8.0 * d(x + h) - 8.0 * d(x - h) + d(x - 2.0 * h)) / (12.0 * h);
            const auto t = dunkl_pointwise(d, dx, ctx, x);
            const auto target = mu * d(x);
            res = worse(res, std::abs(t - target) / std::max(1.0, std::abs(target)));
        }
        out.push_back(report(cfg, "kernel-eigen-pointwise", n, res, tol(cfg, 1e-8),
                             "finite-difference T(k)D vs kappa lambda D"));
    }
    return out;
}

} // namespace

std::optional<Suite> parse_suite(std::string_view name)
{
    for (auto s : {Suite::projections, Suite::intertwining, Suite::eigen, Suite::recurrences, Suite::rl_crosscheck,
                   Suite::kernel, Suite::all}) {
        if (name == suite_name(s)) {
            return s;
        }
    }
    return std::nullopt;
}

const char *suite_name(Suite s) noexcept
{
    switch (s) {
        case Suite::projections:
            return "projections";
        case Suite::intertwining:
            return "intertwining";
        case Suite::eigen:
            return "eigen";
        case Suite::recurrences:
            return "recurrences";
        case Suite::rl_crosscheck:
            return "rl-crosscheck";
        case Suite::kernel:
            return "kernel";
        case Suite::all:
            return "all";
    }
    return "all";
}

const std::vector<Suite> &concrete_suites()
{
    static const std::vector<Suite> suites{Suite::projections, Suite::intertwining, Suite::eigen,
                                           Suite::recurrences, Suite::rl_crosscheck, Suite::kernel};
    return suites;
}

std::vector<VerificationReport> run_suite(const RunConfig &cfg, Suite suite)
{
    validate(cfg, true);
    switch (suite) {
        case Suite::projections:
            return run_projections(cfg);
        case Suite::intertwining:
            return run_intertwining(cfg);
        case Suite::eigen:
            return run_eigen(cfg);
        case Suite::recurrences:
            return run_recurrences(cfg);
        case Suite::rl_crosscheck:
            return run_rl_crosscheck(cfg);
        case Suite::kernel:
            return run_kernel(cfg);
        case Suite::all:
            break;
    }
    throw ParameterError("run_suite expects a concrete suite");
}

std::vector<std::string> suite_identities(Suite suite, int m)
{
    switch (suite) {
        case Suite::projections:
            return {"projection-idempotence-orthogonality", "projection-resolution-of-identity",
                    "projection-shift-relation", "projection-definition-equivalence",
                    "dunkl-monomial-rule-consistency", "dunkl-type-shift", "cosm-exp-decomposition",
                    "dunkl-classical-reflection-m2"};
        case Suite::intertwining:
            return {"intertwining-theorem", "intertwining-theorem-exp", "intertwiner-diagonal",
                    "hyper-bessel-factorization", "rl-intertwines-hyper-bessel", "rl-inverse"};
        case Suite::eigen:
            return {"eigen-residual", "eigen-normalization", "kernel-from-intertwiner"};
        case Suite::recurrences: {
            std::vector<std::string> ids{"hyper-bessel-ode", "recurrence-derivative"};
            for (int k = 1; k < m; ++k) {
                ids.push_back("recurrence-index-lowering/k=" + std::to_string(k));
            }
            ids.push_back("hyper-bessel-classical-m2");
            ids.push_back("series-error-estimate-soundness");
            return ids;
        }
        case Suite::rl_crosscheck:
            return {"ek-monomial-identity", "rl-normalization", "rl-diagonal-vs-quadrature",
                    "rl-maps-cosm-to-hyper-bessel", "rl-classical-m2"};
        case Suite::kernel:
            return {"kernel-closed-form", "kernel-literal-reading", "kernel-decomposition", "kernel-origin",
                    "kernel-pointwise-closed-form", "kernel-eigen-pointwise"};
        case Suite::all: {
            std::vector<std::string> ids;
            for (auto s : concrete_suites()) {
                auto part = suite_identities(s, m);
                ids.insert(ids.end(), part.begin(), part.end());
            }
            return ids;
        }
    }
    return {};
}

TruncatedSeries random_series(int order, int degree, std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<complex> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= std::min(order, degree); ++n) {
        const double re = u(rng);
        const double im = u(rng);
        c[n] = {re, im};
    }
    return TruncatedSeries(std::move(c));
}

} // namespace cdunkl::cli
