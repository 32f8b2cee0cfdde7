#include <cdunkl/quadrature.hpp>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <string>

#include <cdunkl/errors.hpp>

namespace cdunkl
{

namespace
{

struct JacobiValue {
    double p;     // P_n(z)
    double p_prev; // P_{n-1}(z)
};

JacobiValue jacobi_eval(int n, double a, double b, double z)
{
    double p0 = 1.0;
    double p1 = (a + 1.0) + (a + b + 2.0) * (z - 1.0) / 2.0;
    if (n == 1) {
        return {p1, p0};
    }
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * z + a * a - b * b);
        const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        const double p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

// (1 - z^2) P_n'(z)
double jacobi_derivative_scaled(int n, double a, double b, double z, const JacobiValue &v)
{
    const double s = 2.0 * n + a + b;
    return (n * ((a - b) - s * z) * v.p + 2.0 * (n + a) * (n + b) * v.p_prev) / s;
}

double gamma_fn(double x)
{
    return boost::math::tgamma(x);
}

std::string fmt_sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

boost::math::quadrature::tanh_sinh<double> &tanh_sinh_integrator()
{
    thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator;
}

// Integrates a complex integrand on [0, 1] by splitting into real and
// imaginary passes; the second pass reuses the first pass's evaluations.
template <typename F>
complex integrate_unit_interval(F f, double tolerance, const char *what)
{
    std::map<std::pair<double, double>, complex> memo;
    auto eval = [&](double t, double tc) {
        const auto key = std::make_pair(t, tc);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        const auto v = f(t, tc);
        memo.emplace(key, v);
        return v;
    };
    auto &integrator = tanh_sinh_integrator();
    double err_re = 0, err_im = 0, l1_re = 0, l1_im = 0;
    const double re = integrator.integrate([&](double t, double tc) { return eval(t, tc).real(); }, 0.0, 1.0,
                                           tolerance, &err_re, &l1_re);
    const double im = integrator.integrate([&](double t, double tc) { return eval(t, tc).imag(); }, 0.0, 1.0,
                                           tolerance, &err_im, &l1_im);
    const double l1 = std::hypot(l1_re, l1_im);
    const double err = std::hypot(err_re, err_im);
    if (!std::isfinite(re) || !std::isfinite(im) || err > tolerance * std::max(l1, 1e-300)) {
        throw ConvergenceError(std::string(what) + ": adaptive quadrature did not reach tolerance "
                               + fmt_sci(tolerance) + " (error estimate " + fmt_sci(err) + ", L1 " + fmt_sci(l1) + ")");
    }
    return {re, im};
}

void check_ek_parameters(double alpha, double beta, double gamma, double x)
{
    if (!(alpha > 0) || !(beta > -1) || !(gamma > 0) || !(x >= 0)) {
        throw ParameterError("Erdélyi–Kober integral needs alpha > 0, beta > -1, gamma > 0, x >= 0 (got alpha = "
                             + std::to_string(alpha) + ", beta = " + std::to_string(beta) + ", gamma = "
                             + std::to_string(gamma) + ", x = " + std::to_string(x) + ")");
    }
}

// Nodes u_i and weights w_i with I^{α,β}_γ g(y) ≈ Σ w_i g(y u_i).
struct EkRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

EkRule ek_rule(double alpha, double beta, double gamma, int n)
{
    // t = u^γ turns the integrand into
    //   γ (1-u)^{α-1} u^{γ(β+1)-1} h(u)^{α-1} f(xu),  h(u) = (1 - u^γ)/(1 - u).
    const auto rule = gauss_jacobi_rule(n, alpha - 1.0, gamma * (beta + 1.0) - 1.0);
    EkRule out;
    out.nodes = rule.nodes;
    out.weights.resize(rule.weights.size());
    const double scale = gamma / gamma_fn(alpha);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double c = rule.complements[i];
        const double h = -std::expm1(gamma * std::log1p(-c)) / c;
        out.weights[i] = scale * rule.weights[i] * std::pow(h, alpha - 1.0);
    }
    return out;
}

std::vector<double> ek_alphas(const OperatorContext &ctx)
{
    const int m = ctx.order();
    std::vector<double> out;
    for (int k = 1; k < m; ++k) {
        out.push_back(ctx.nu()(k) + 1.0 - static_cast<double>(k) / m);
    }
    return out;
}

} // namespace

void QuadratureConfig::validate() const
{
    if (node_count < 2) {
        throw ParameterError("quadrature node_count must be >= 2");
    }
    if (!(tolerance > 0)) {
        throw ParameterError("quadrature tolerance must be > 0");
    }
}

JacobiRule gauss_jacobi_rule(int n, double a, double b)
{
    if (n < 1) {
        throw ParameterError("Gauss–Jacobi rule needs at least one node");
    }
    if (!(a > -1) || !(b > -1)) {
        throw ParameterError("Gauss–Jacobi exponents must exceed -1");
    }

    // Golub–Welsch on [-1, 1]; nodes are then polished by Newton on P_n.
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            diag(i) = (b - a) / (a + b + 2.0);
        } else {
            const double s = 2.0 * i + a + b;
            diag(i) = (b * b - a * a) / (s * (s + 2.0));
        }
    }
    for (int i = 1; i < n; ++i) {
        double beta;
        if (i == 1) {
            beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
        } else {
            const double s = 2.0 * i + a + b;
            beta = 4.0 * i * (i + a) * (i + b) * (i + a + b) / (s * s * (s + 1.0) * (s - 1.0));
        }
        sub(i - 1) = std::sqrt(beta);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    const Eigen::VectorXd guess = solver.eigenvalues();
    // Total mass of (1-u)^a u^b on [0, 1].
    const double mass = std::exp(boost::math::lgamma(a + 1.0) + boost::math::lgamma(b + 1.0)
                                 - boost::math::lgamma(a + b + 2.0));

    JacobiRule rule;
    rule.nodes.resize(n);
    rule.complements.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double z = guess(i);
        for (int it = 0; it < 3; ++it) {
            const auto v = jacobi_eval(n, a, b, z);
            const double dp = jacobi_derivative_scaled(n, a, b, z, v) / ((1.0 - z) * (1.0 + z));
            const double step = v.p / dp;
            z -= step;
            if (std::abs(step) <= 1e-17) {
                break;
            }
        }
        rule.nodes[i] = (1.0 + z) / 2.0;
        rule.complements[i] = (1.0 - z) / 2.0;
        // The closed-form weight through P_n' loses digits when a or b is close to -1;
        // the first eigenvector components stay accurate there.
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = mass * v0 * v0;
    }
    return rule;
}

complex ek_integral(double alpha, double beta, double gamma, const RealFunction &f, double x, const QuadratureConfig &q)
{
    check_ek_parameters(alpha, beta, gamma, x);
    q.validate();
    if (q.scheme == QuadratureScheme::gauss_jacobi) {
        const auto rule = ek_rule(alpha, beta, gamma, q.node_count);
        complex acc = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            acc += rule.weights[i] * f(x * rule.nodes[i]);
        }
        return acc;
    }
    const double inv_gamma_alpha = 1.0 / gamma_fn(alpha);
    return integrate_unit_interval(
        [&](double t, double tc) {
            // tc is -t near 0 and 1 - t near 1.
            const double s = tc < 0 ? -tc : t;
            const double one_minus_s = tc > 0 ? tc : 1.0 - t;
            const double w = std::pow(one_minus_s, alpha - 1.0) * std::pow(s, beta) * inv_gamma_alpha;
            return w * f(x * std::pow(s, 1.0 / gamma));
        },
        q.tolerance, "Erdélyi–Kober integral");
}

double rl_normalization_constant(const OperatorContext &ctx)
{
    const int m = ctx.order();
    double log_c = 0;
    for (int k = 1; k < m; ++k) {
        log_c += boost::math::lgamma(ctx.nu()(k) + 1.0) - boost::math::lgamma(static_cast<double>(k) / m);
    }
    return std::exp(log_c);
}

double rl_literal_constant(const OperatorContext &ctx)
{
    const int m = ctx.order();
    double c = std::pow(static_cast<double>(m), 1.5) / std::pow(2.0 * std::numbers::pi, (m - 1) / 2.0);
    for (int k = 1; k < m; ++k) {
        c *= gamma_fn(ctx.nu()(k) + 1.0);
    }
    return c;
}

complex rl_transform_numeric(const OperatorContext &ctx, const RealFunction &f, double x, const QuadratureConfig &q)
{
    q.validate();
    if (!ctx.nu().strictly_valid()) {
        throw ParameterError("fractional-integral form of R needs nu_k > -1 + k/m for every k");
    }
    if (!(x >= 0)) {
        throw ParameterError("rl_transform_numeric needs x >= 0");
    }
    const int m = ctx.order();
    const auto alphas = ek_alphas(ctx);
    const double gamma = m;
    auto beta = [m](int level) { return static_cast<double>(level + 1) / m - 1.0; };
    const double c = rl_normalization_constant(ctx);

    if (q.scheme == QuadratureScheme::gauss_jacobi) {
        std::vector<EkRule> rules;
        for (int level = 0; level < m - 1; ++level) {
            rules.push_back(ek_rule(alphas[level], beta(level), gamma, q.node_count));
        }
        std::function<complex(int, double)> eval = [&](int level, double y) -> complex {
            if (level == m - 1) {
                return f(y);
            }
            const auto &r = rules[level];
            complex acc = 0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i) {
                acc += r.weights[i] * eval(level + 1, y * r.nodes[i]);
            }
            return acc;
        };
        return c * eval(0, x);
    }

    auto level_q = q;
    level_q.tolerance = q.tolerance / (m - 1);
    std::function<complex(int, double)> eval = [&](int level, double y) -> complex {
        if (level == m - 1) {
            return f(y);
        }
        return ek_integral(alphas[level], beta(level), gamma, [&](double s) { return eval(level + 1, s); }, y, level_q);
    };
    return c * eval(0, x);
}

complex riemann_liouville_direct(double nu, const RealFunction &f, double x, double tolerance)
{
    if (!(nu > -0.5)) {
        throw ParameterError("classical Riemann–Liouville transform needs nu > -1/2");
    }
    // v = (1-t)^{ν+1/2} absorbs the endpoint factor at t = 1; the remaining t^{-1/2}
    // singularity sits at v = 1 and is mild enough for tanh-sinh.
    const double p = nu + 0.5;
    const double c = gamma_fn(nu + 1.0) / (std::sqrt(std::numbers::pi) * gamma_fn(nu + 0.5) * p);
    return c
           * integrate_unit_interval(
               [&](double v, double vc) {
                   const double log_v = vc > 0 ? std::log1p(-vc) : std::log(v);
                   const double t = -std::expm1(log_v / p);
                   if (!(t > 0)) {
                       return complex(0.0);
                   }
                   return f(x * std::sqrt(t)) / std::sqrt(t);
               },
               tolerance, "Riemann–Liouville transform");
}

} // namespace cdunkl
