#include <cdunkl/dunkl.hpp>

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <string>

#include <cdunkl/errors.hpp>

namespace cdunkl
{

namespace
{

// x^n -> (n + w(n)) x^{n-1}.
template <typename Weight>
TruncatedSeries monomial_rule(const TruncatedSeries &f, Weight w)
{
    const auto c0 = w(0);
    if (c0 != 0.0 && f[0] != complex(0)) {
        throw ConsistencyError("first-order factor (d/dx + c/x) with c = " + std::to_string(c0)
                               + " hit a nonzero constant term; result would contain x^-1");
    }
    if (f.order() == 0) {
        return TruncatedSeries::zero(0);
    }
    std::vector<complex> out(static_cast<std::size_t>(f.order()));
    for (int n = 1; n <= f.order(); ++n) {
        out[static_cast<std::size_t>(n) - 1] = (static_cast<double>(n) + w(n)) * f[n];
    }
    return TruncatedSeries(std::move(out));
}

bool is_nonpositive_integer(double v)
{
    return v <= 0 && v == std::floor(v);
}

void check_gamma_poles(const MultiIndex &nu)
{
    for (int k = 1; k <= static_cast<int>(nu.size()); ++k) {
        if (is_nonpositive_integer(nu(k) + 1.0)) {
            throw GammaPoleError("Γ(ν_" + std::to_string(k) + " + n + 1) has a pole: ν_" + std::to_string(k) + " = "
                                 + std::to_string(nu(k)));
        }
    }
}

double log_abs_gamma(double x, int &sign)
{
    return boost::math::lgamma(x, &sign);
}

} // namespace

OperatorContext::OperatorContext(MultiIndex nu) : m_group(nu.group_order()), m_nu(std::move(nu)), m_weights(m_nu) {}

OperatorContext::OperatorContext(int m, std::vector<double> nu) : OperatorContext(MultiIndex(m, std::move(nu))) {}

OperatorContext OperatorContext::from_weights(int m, std::vector<double> weights)
{
    return OperatorContext(WeightVector::from_weights(m, std::move(weights)).to_multi_index());
}

DiagonalOperator::DiagonalOperator(std::vector<complex> eigenvalues, std::vector<bool> defined)
    : m_eigenvalues(std::move(eigenvalues)), m_defined(std::move(defined))
{
    if (m_eigenvalues.empty() || m_eigenvalues.size() != m_defined.size()) {
        throw ParameterError("diagonal operator: eigenvalue and domain tables must be nonempty and of equal size");
    }
}

bool DiagonalOperator::defined(int n) const noexcept
{
    return n >= 0 && n <= max_exponent() && m_defined[static_cast<std::size_t>(n)];
}

complex DiagonalOperator::eigenvalue(int n) const
{
    if (!defined(n)) {
        throw DomainError("diagonal operator undefined on x^" + std::to_string(n));
    }
    return m_eigenvalues[static_cast<std::size_t>(n)];
}

TruncatedSeries DiagonalOperator::apply(const TruncatedSeries &f) const
{
    const auto n_max = std::min(f.order(), max_exponent());
    auto out = std::vector<complex>(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const auto a = f[n];
        if (!m_defined[static_cast<std::size_t>(n)]) {
            if (a != complex(0)) {
                throw DomainError("series has mass on x^" + std::to_string(n)
                                  + ", outside the domain of the diagonal operator");
            }
            continue;
        }
        out[static_cast<std::size_t>(n)] = m_eigenvalues[static_cast<std::size_t>(n)] * a;
    }
    return TruncatedSeries(std::move(out));
}

DiagonalOperator DiagonalOperator::compose(const DiagonalOperator &other) const
{
    const auto n = std::min(max_exponent(), other.max_exponent());
    std::vector<complex> ev(static_cast<std::size_t>(n) + 1);
    std::vector<bool> def(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        def[i] = defined(i) && other.defined(i);
        if (def[i]) {
            ev[i] = m_eigenvalues[i] * other.m_eigenvalues[i];
        }
    }
    return DiagonalOperator(std::move(ev), std::move(def));
}

DiagonalOperator DiagonalOperator::inverse() const
{
    auto ev = m_eigenvalues;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        if (!m_defined[i]) {
            continue;
        }
        if (ev[i] == complex(0)) {
            throw DomainError("diagonal operator has a zero eigenvalue on x^" + std::to_string(i));
        }
        ev[i] = 1.0 / ev[i];
    }
    return DiagonalOperator(std::move(ev), m_defined);
}

TruncatedSeries first_order_apply(const TruncatedSeries &f, double c)
{
    return monomial_rule(f, [c](int) { return c; });
}

TruncatedSeries dunkl_apply(const TruncatedSeries &f, const OperatorContext &ctx)
{
    const auto &k = ctx.weights();
    return monomial_rule(f, [&k](int n) { return k(n); });
}

complex omega_apply(const std::function<complex(complex)> &f, const OperatorContext &ctx, complex x)
{
    const auto &g = ctx.group();
    const int m = g.order();
    std::vector<complex> samples(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        samples[r] = f(g.root(r) * x);
        if (!std::isfinite(samples[r].real()) || !std::isfinite(samples[r].imag())) {
            throw DomainError("non-finite sample f(ε^" + std::to_string(r) + " x)");
        }
    }
    // Row i of ΩΛf is m·p_i(f)(x), row 0 being class m (weight 0).
    complex acc = 0;
    for (int i = 1; i < m; ++i) {
        complex row = 0;
        for (int r = 0; r < m; ++r) {
            row += g.fourier(i, r) * samples[r];
        }
        acc += ctx.weights()(i) * row;
    }
    return acc / static_cast<double>(m);
}

complex dunkl_pointwise(const std::function<complex(complex)> &f, complex derivative_at_x, const OperatorContext &ctx,
                        complex x)
{
    if (x == complex(0)) {
        throw DomainError("pointwise Dunkl operator needs x != 0");
    }
    return derivative_at_x + omega_apply(f, ctx, x) / x;
}

TruncatedSeries ladder_apply(const TruncatedSeries &f, const OperatorContext &ctx, int j)
{
    const int m = ctx.order();
    if (j < 1 || j > m) {
        throw ParameterError("ladder index " + std::to_string(j) + " outside 1.." + std::to_string(m));
    }
    if (j == m) {
        return f;
    }
    auto g = derivative(f);
    for (int l = m - 1; l > j; --l) {
        g = first_order_apply(g, ctx.weights()(l));
    }
    return g;
}

TruncatedSeries hyper_bessel_op_apply(const TruncatedSeries &f, const OperatorContext &ctx)
{
    if (f.order() < ctx.order()) {
        throw ParameterError("hyper-Bessel operator needs truncation order >= m");
    }
    auto g = ladder_apply(f, ctx, 1);
    return first_order_apply(g, ctx.weights()(1));
}

double rl_eigenvalue(const OperatorContext &ctx, int q)
{
    if (q < 0) {
        throw ParameterError("negative exponent index");
    }
    const auto &nu = ctx.nu();
    check_gamma_poles(nu);
    if (q == 0) {
        return 1.0;
    }
    const int m = ctx.order();
    const double mq = static_cast<double>(m) * q;
    int sign = 1;
    int s = 0;
    double log_value = log_abs_gamma(mq + 1.0, s) - log_abs_gamma(q + 1.0, s) - mq * std::log(static_cast<double>(m));
    for (int k = 1; k < m; ++k) {
        log_value += log_abs_gamma(nu(k) + 1.0, s);
        sign *= s;
        log_value -= log_abs_gamma(nu(k) + q + 1.0, s);
        sign *= s;
    }
    return sign * std::exp(log_value);
}

DiagonalOperator rl_diagonal(const OperatorContext &ctx, int max_exponent)
{
    if (max_exponent < 0) {
        throw ParameterError("max exponent must be >= 0");
    }
    const int m = ctx.order();
    std::vector<complex> ev(static_cast<std::size_t>(max_exponent) + 1);
    std::vector<bool> def(static_cast<std::size_t>(max_exponent) + 1);
    for (int n = 0; n <= max_exponent; n += m) {
        ev[n] = rl_eigenvalue(ctx, n / m);
        def[n] = true;
    }
    return DiagonalOperator(std::move(ev), std::move(def));
}

DiagonalOperator rl_diagonal_inverse(const OperatorContext &ctx, int max_exponent)
{
    return rl_diagonal(ctx, max_exponent).inverse();
}

TruncatedSeries intertwiner_apply(const TruncatedSeries &f, const OperatorContext &ctx)
{
    const int m = ctx.order();
    const int n = f.order();
    if (n < m) {
        throw ParameterError("intertwiner needs truncation order >= m");
    }
    const auto r = rl_diagonal(ctx, n + m - 1);
    auto out = TruncatedSeries::zero(n);
    for (int j = 1; j <= m; ++j) {
        auto g = project(f, j, ctx.group());
        for (int i = 0; i < m - j; ++i) {
            g = antiderivative(g);
        }
        out = out + ladder_apply(r.apply(g), ctx, j);
    }
    return out;
}

int first_singular_exponent(const OperatorContext &ctx, int order)
{
    for (int n = 1; n <= order; ++n) {
        const double d = n + ctx.weights()(n);
        if (std::abs(d) <= 1e-12 * n) {
            return n;
        }
    }
    return 0;
}

TruncatedSeries eigen_series(const OperatorContext &ctx, complex mu, int order)
{
    if (order < 0) {
        throw ParameterError("truncation order must be >= 0");
    }
    if (const auto n = first_singular_exponent(ctx, order); n != 0) {
        throw SingularRecursionError("eigen recursion denominator n + k_{n mod m} vanishes at n = " + std::to_string(n)
                                         + " (k_" + std::to_string(ctx.group().residue_class(n) % ctx.order())
                                         + " = " + std::to_string(ctx.weights()(n)) + ")",
                                     n);
    }
    std::vector<complex> a(static_cast<std::size_t>(order) + 1);
    a[0] = 1.0;
    for (int n = 0; n < order; ++n) {
        a[n + 1] = mu * a[n] / (n + 1.0 + ctx.weights()(n + 1));
    }
    return TruncatedSeries(std::move(a));
}

VerificationReport check_intertwining(const OperatorContext &ctx, const TruncatedSeries &f, double tolerance)
{
    if (f.order() < 2 * ctx.order()) {
        throw ParameterError("intertwining check needs truncation order >= 2m");
    }
    const auto lhs = dunkl_apply(intertwiner_apply(f, ctx), ctx);
    const auto rhs = intertwiner_apply(derivative(f), ctx);
    const auto nu = ctx.nu().components();
    return make_report("intertwining", ctx.order(), {nu.begin(), nu.end()}, f.order(),
                       max_relative_residual(lhs, rhs), tolerance);
}

} // namespace cdunkl
