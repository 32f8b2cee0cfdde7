#include <cdunkl/special_functions.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <cdunkl/errors.hpp>

namespace cdunkl
{

namespace
{

// Sums t_0 + t_1 + ... with t_{n+1} = ratio(n)·t_n. `period` is the number
// of upcoming ratios inspected for the tail bound |t_next| / (1 - r); after
// that many steps the ratio magnitudes are assumed non-increasing.
template <typename Ratio>
EvalResult sum_by_ratio(complex first, Ratio ratio, const SeriesOptions &opt, int period = 1)
{
    auto tail_bound = [&](complex next, int n_next) {
        double r = 0;
        for (int i = 0; i < period; ++i) {
            r = std::max(r, std::abs(ratio(n_next + i)));
        }
        const auto a = std::abs(next);
        return r < 1 ? a / (1 - r) : a;
    };

    EvalResult res;
    complex sum = 0;
    complex t = first;
    if (opt.fixed_terms > 0) {
        for (int n = 0; n < opt.fixed_terms; ++n) {
            sum += t;
            t *= ratio(n);
        }
        res.value = sum;
        res.terms_used = opt.fixed_terms;
        res.error_estimate = tail_bound(t, opt.fixed_terms);
        return res;
    }

    int decreasing = 0;
    for (int n = 0;; ++n) {
        sum += t;
        const complex next = t * ratio(n);
        decreasing = std::abs(next) < std::abs(t) ? decreasing + 1 : 0;
        if (next == complex(0) || (decreasing >= 3 && std::abs(next) <= opt.rel_tolerance * std::abs(sum))) {
            res.value = sum;
            res.terms_used = n + 1;
            res.error_estimate = next == complex(0) ? 0.0 : tail_bound(next, n + 1);
            return res;
        }
        if (n + 1 >= opt.max_terms) {
            res.value = sum;
            res.terms_used = n + 1;
            res.error_estimate = std::abs(next);
            res.converged = false;
            return res;
        }
        t = next;
    }
}

void require_order(int m)
{
    if (m < 2) {
        throw ParameterError("group order m must be >= 2, got " + std::to_string(m));
    }
}

void check_poles(const MultiIndex &nu)
{
    for (int k = 1; k <= static_cast<int>(nu.size()); ++k) {
        const auto v = nu(k) + 1.0;
        if (v <= 0 && v == std::floor(v)) {
            throw GammaPoleError("hyper-Bessel index ν_" + std::to_string(k) + " = " + std::to_string(nu(k))
                                 + " puts Γ(ν_k + n + 1) on a pole");
        }
    }
}

// (x/m)^m / ((n+1) Π_k (ν_k + n + 1)), the magnitude step of the J series.
complex bessel_step(const MultiIndex &nu, complex x_over_m_pow, int n)
{
    double denom = n + 1.0;
    for (auto v : nu.components()) {
        denom *= v + n + 1.0;
    }
    return -x_over_m_pow / denom;
}

std::vector<double> as_vector(std::span<const double> s)
{
    return {s.begin(), s.end()};
}

} // namespace

EvalResult cos_m_eval(int m, complex x, const SeriesOptions &opt)
{
    require_order(m);
    const auto xm = ipow(x, m);
    return sum_by_ratio(
        complex(1.0),
        [&](int n) {
            double denom = 1;
            for (int i = 1; i <= m; ++i) {
                denom *= static_cast<double>(m) * n + i;
            }
            return -xm / denom;
        },
        opt);
}

EvalResult sin_ml_eval(int m, int l, complex x, const SeriesOptions &opt)
{
    require_order(m);
    if (l < 1 || l >= m) {
        throw ParameterError("sin_{m,l} needs 1 <= l <= m-1, got l = " + std::to_string(l));
    }
    complex first = 1;
    for (int i = 1; i <= l; ++i) {
        first *= x / static_cast<double>(i);
    }
    const auto xm = ipow(x, m);
    return sum_by_ratio(
        first,
        [&](int n) {
            double denom = 1;
            for (int i = 1; i <= m; ++i) {
                denom *= static_cast<double>(m) * n + l + i;
            }
            return -xm / denom;
        },
        opt);
}

EvalResult hyper_bessel_eval(const MultiIndex &nu, complex x, const SeriesOptions &opt)
{
    check_poles(nu);
    const int m = nu.group_order();
    const auto step = ipow(x / static_cast<double>(m), m);
    return sum_by_ratio(complex(1.0), [&](int n) { return bessel_step(nu, step, n); }, opt);
}

TruncatedSeries hyper_bessel_series(const MultiIndex &nu, complex lambda, int order)
{
    check_poles(nu);
    const int m = nu.group_order();
    const auto step = ipow(lambda / static_cast<double>(m), m);
    auto coeffs = std::vector<complex>(static_cast<std::size_t>(order) + 1);
    complex t = 1;
    for (int q = 0; m * q <= order; ++q) {
        coeffs[static_cast<std::size_t>(m) * q] = t;
        t *= bessel_step(nu, step, q);
    }
    return TruncatedSeries(std::move(coeffs));
}

std::vector<VerificationReport> recurrence_check(const MultiIndex &nu, int order, double tolerance)
{
    const int m = nu.group_order();
    if (order < m) {
        throw ParameterError("recurrence check needs truncation order >= m");
    }
    std::vector<VerificationReport> out;
    const auto j = hyper_bessel_series(nu, 1.0, order);

    {
        const auto lhs = derivative(j);
        const auto shifted = hyper_bessel_series(nu.shifted_all(1.0), 1.0, order);
        double scale = std::pow(static_cast<double>(m), m - 1);
        for (int k = 1; k < m; ++k) {
            scale *= nu(k) + 1.0;
        }
        std::vector<complex> rhs(static_cast<std::size_t>(order));
        for (int n = m - 1; n < order; ++n) {
            rhs[n] = -shifted[n - (m - 1)] / scale;
        }
        out.push_back(make_report("recurrence-derivative", m, as_vector(nu.components()), order,
                                  max_relative_residual(lhs, TruncatedSeries(std::move(rhs))), tolerance));
    }

    for (int k = 1; k < m; ++k) {
        const auto id = "recurrence-index-lowering/k=" + std::to_string(k);
        if (nu(k) == 0.0) {
            auto r = make_report(id, m, as_vector(nu.components()), order, 0.0, tolerance,
                                 "nu_k = 0: both sides carry the factor m*nu_k; identity degenerates");
            r.status = ReportStatus::degenerate;
            r.pass = true;
            out.push_back(std::move(r));
            continue;
        }
        const double c = m * nu(k);
        const auto lowered = hyper_bessel_series(nu.shifted(k, -1.0), 1.0, order);
        std::vector<complex> lhs(static_cast<std::size_t>(order) + 1);
        std::vector<complex> rhs(static_cast<std::size_t>(order) + 1);
        for (int n = 0; n <= order; ++n) {
            lhs[n] = (static_cast<double>(n) + c) * j[n];
            rhs[n] = c * lowered[n];
        }
        out.push_back(make_report(id, m, as_vector(nu.components()), order,
                                  max_relative_residual(TruncatedSeries(std::move(lhs)), TruncatedSeries(std::move(rhs))),
                                  tolerance));
    }
    return out;
}

namespace
{

struct KernelTerm {
    complex prefactor;
    MultiIndex index;
};

KernelTerm kernel_term(const OperatorContext &ctx, complex lambda, int j, KernelReading reading)
{
    const int m = ctx.order();
    if (j < 0 || j >= m) {
        throw ParameterError("kernel term index " + std::to_string(j) + " outside 0.." + std::to_string(m - 1));
    }
    const auto mu = ctx.group().kappa() * lambda;
    const int product_end = reading == KernelReading::corrected ? j : (j == 0 ? 0 : m - j);
    complex pref = 1;
    for (int i = 1; i <= j; ++i) {
        pref *= mu / static_cast<double>(m);
    }
    for (int i = 1; i <= product_end; ++i) {
        pref /= ctx.nu()(i) + 1.0;
    }
    auto index = ctx.nu();
    for (int i = 1; i <= j; ++i) {
        index = index.shifted(i, 1.0);
    }
    return {pref, std::move(index)};
}

} // namespace

TruncatedSeries kernel_term_series(const OperatorContext &ctx, complex lambda, int j, int order, KernelReading reading)
{
    const auto term = kernel_term(ctx, lambda, j, reading);
    const auto bessel = hyper_bessel_series(term.index, lambda, order);
    std::vector<complex> out(static_cast<std::size_t>(order) + 1);
    const int shift = reading == KernelReading::corrected ? j : 0;
    for (int n = shift; n <= order; ++n) {
        out[n] = term.prefactor * bessel[n - shift];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries kernel_closed_form_series(const OperatorContext &ctx, complex lambda, int order, KernelReading reading)
{
    auto out = TruncatedSeries::zero(order);
    for (int j = 0; j < ctx.order(); ++j) {
        out = out + kernel_term_series(ctx, lambda, j, order, reading);
    }
    return out;
}

KernelEval dunkl_kernel_eval(const OperatorContext &ctx, complex lambda, complex x, double tolerance,
                             const SeriesOptions &opt)
{
    const int m = ctx.order();
    const auto mu = ctx.group().kappa() * lambda;
    const auto &k = ctx.weights();

    KernelEval out;
    out.existence_condition = k.nonnegative();
    out.oracle = sum_by_ratio(
        complex(1.0),
        [&](int n) {
            const double denom = n + 1.0 + k(n + 1);
            if (std::abs(denom) <= 1e-12 * (n + 1.0)) {
                throw SingularRecursionError("eigen recursion denominator vanishes at n = " + std::to_string(n + 1),
                                             n + 1);
            }
            return mu * x / denom;
        },
        opt, m);

    complex corrected = 0;
    complex literal = 0;
    for (int j = 0; j < m; ++j) {
        const auto c = kernel_term(ctx, lambda, j, KernelReading::corrected);
        const auto bessel = hyper_bessel_eval(c.index, lambda * x, opt).value;
        corrected += c.prefactor * ipow(x, j) * bessel;
        const auto l = kernel_term(ctx, lambda, j, KernelReading::literal);
        literal += l.prefactor * bessel;
    }
    out.closed_form = corrected;
    out.literal = literal;
    const auto scale = std::max(1.0, std::abs(out.oracle.value));
    out.discrepancy = std::abs(out.oracle.value - corrected) / scale;
    out.literal_discrepancy = std::abs(out.oracle.value - literal) / scale;
    out.formula_mismatch = !(out.discrepancy <= tolerance);
    out.literal_mismatch = !(out.literal_discrepancy <= tolerance);
    return out;
}

} // namespace cdunkl
