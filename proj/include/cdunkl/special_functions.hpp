#ifndef CDUNKL_SPECIAL_FUNCTIONS_HPP
#define CDUNKL_SPECIAL_FUNCTIONS_HPP

#include <vector>

#include <cdunkl/dunkl.hpp>
#include <cdunkl/group.hpp>
#include <cdunkl/report.hpp>
#include <cdunkl/series.hpp>

namespace cdunkl
{

struct EvalResult {
    complex value;
    int terms_used = 0;
    // Bound on the neglected tail, valid once the term ratios have started to decay.
    double error_estimate = 0;
    // False when the iteration cap was reached first.
    bool converged = true;
};

struct SeriesOptions {
    // Stop once |next term| <= rel_tolerance·|partial sum| after 3 consecutive decreasing terms.
    double rel_tolerance = 0x1p-56;
    int max_terms = 10000;
    // When positive, sum exactly this many terms and ignore the stopping rule.
    int fixed_terms = 0;
};

// cos_m(x) = Σ (-1)^n x^{mn} / (mn)!
EvalResult cos_m_eval(int m, complex x, const SeriesOptions &opt = {});

// sin_{m,l}(x) = Σ (-1)^n x^{mn+l} / (mn+l)!, 1 <= l <= m-1.
EvalResult sin_ml_eval(int m, int l, complex x, const SeriesOptions &opt = {});

// Normalized hyper-Bessel function
//   J_{ν,m}(x) = Σ (-1)^n Γ(ν+1) / (n! Γ(ν+n+1)) (x/m)^{nm},
// with m = nu.group_order(). Throws GammaPoleError if some ν_k is an integer <= -1.
EvalResult hyper_bessel_eval(const MultiIndex &nu, complex x, const SeriesOptions &opt = {});

// Coefficients of x -> J_{ν,m}(λx) up to x^order.
TruncatedSeries hyper_bessel_series(const MultiIndex &nu, complex lambda, int order);

// Differential recurrences on truncated series of order N (λ = 1):
//   "recurrence-derivative":        J' = -(x/m)^{m-1} / Π(ν_k+1) · J_{ν+1}
//   "recurrence-index-lowering/k=K": x J' + mν_K J = mν_K J_{ν-e_K}
// The second is reported as degenerate when ν_K = 0.
std::vector<VerificationReport> recurrence_check(const MultiIndex &nu, int order, double tolerance = 1e-13);

enum class KernelReading {
    // (κλx)^j / (m^j Π_{i<=j}(ν_i+1)) · J_{ν+e_1+...+e_j}(λx); agrees with the eigen recursion.
    corrected,
    // (κλ)^j / (m^j Π_{i<=m-j}(ν_i+1)) · J_{ν+e_1+...+e_j}(λx): no x^j factor, product up to m-j.
    literal,
};

// The j-th term (0 <= j <= m-1) of the closed-form kernel as a series in x.
TruncatedSeries kernel_term_series(const OperatorContext &ctx, complex lambda, int j, int order,
                                   KernelReading reading = KernelReading::corrected);

TruncatedSeries kernel_closed_form_series(const OperatorContext &ctx, complex lambda, int order,
                                          KernelReading reading = KernelReading::corrected);

struct KernelEval {
    // Σ a_n x^n from the eigen recursion with μ = κλ.
    EvalResult oracle;
    complex closed_form;
    complex literal;
    // |oracle - closed_form| / max(1, |oracle|), and the same for the literal reading.
    double discrepancy = 0;
    double literal_discrepancy = 0;
    // Diagnostics raised when a discrepancy exceeds the tolerance.
    bool formula_mismatch = false;
    bool literal_mismatch = false;
    // k_j >= 0 for all j.
    bool existence_condition = false;
};

// D_ν(λ, x), the solution of T(k) f = κλ f, f(0) = 1.
KernelEval dunkl_kernel_eval(const OperatorContext &ctx, complex lambda, complex x, double tolerance = 1e-12,
                             const SeriesOptions &opt = {});

} // namespace cdunkl

#endif
