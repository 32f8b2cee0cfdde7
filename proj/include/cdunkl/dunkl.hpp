#ifndef CDUNKL_DUNKL_HPP
#define CDUNKL_DUNKL_HPP

#include <functional>
#include <vector>

#include <cdunkl/group.hpp>
#include <cdunkl/report.hpp>
#include <cdunkl/series.hpp>

namespace cdunkl
{

// The group, the hyper-Bessel index ν and the Dunkl weights derived from it.
class OperatorContext
{
public:
    explicit OperatorContext(MultiIndex nu);
    OperatorContext(int m, std::vector<double> nu);

    static OperatorContext from_weights(int m, std::vector<double> weights);

    const GroupConfig &group() const noexcept
    {
        return m_group;
    }

    const MultiIndex &nu() const noexcept
    {
        return m_nu;
    }

    const WeightVector &weights() const noexcept
    {
        return m_weights;
    }

    int order() const noexcept
    {
        return m_group.order();
    }

private:
    GroupConfig m_group;
    MultiIndex m_nu;
    WeightVector m_weights;
};

// An operator acting on monomials by x^n -> λ_n x^n. Exponents without a
// multiplier are outside the domain; a series with mass there is rejected.
class DiagonalOperator
{
public:
    DiagonalOperator(std::vector<complex> eigenvalues, std::vector<bool> defined);

    // Largest exponent with a table entry.
    int max_exponent() const noexcept
    {
        return static_cast<int>(m_eigenvalues.size()) - 1;
    }

    bool defined(int n) const noexcept;
    complex eigenvalue(int n) const;

    // Output order is min(f.order(), max_exponent()). Throws DomainError when f
    // has a nonzero coefficient at an undefined exponent.
    TruncatedSeries apply(const TruncatedSeries &f) const;

    // (this ∘ other): pointwise product of eigenvalues on the common support.
    DiagonalOperator compose(const DiagonalOperator &other) const;

    // Reciprocal eigenvalues; throws DomainError on a zero eigenvalue.
    DiagonalOperator inverse() const;

private:
    std::vector<complex> m_eigenvalues;
    std::vector<bool> m_defined;
};

// (d/dx + c/x) by the monomial rule x^n -> (n + c) x^{n-1}. A nonzero
// constant term with c != 0 would leave x^{-1}; that throws ConsistencyError.
TruncatedSeries first_order_apply(const TruncatedSeries &f, double c);

// T(k) by the monomial rule x^n -> (n + k_{n mod m}) x^{n-1}.
TruncatedSeries dunkl_apply(const TruncatedSeries &f, const OperatorContext &ctx);

// ω_k(f)(x) = Σ_{i=1}^{m-1} k_i p_i(f)(x) from the samples f(ε^r x) and the
// Fourier matrix. Throws DomainError on a non-finite sample.
complex omega_apply(const std::function<complex(complex)> &f, const OperatorContext &ctx, complex x);

// T(k)f(x) = f'(x) + ω_k(f)(x)/x, given the value of f'(x). Requires x != 0.
complex dunkl_pointwise(const std::function<complex(complex)> &f, complex derivative_at_x, const OperatorContext &ctx,
                        complex x);

// B_m = Π_{j=1}^{m-1} (d/dx + k_j/x) ∘ d/dx; output order N - m. Needs N >= m.
TruncatedSeries hyper_bessel_op_apply(const TruncatedSeries &f, const OperatorContext &ctx);

// Ladder A_j: A_m = id, A_{m-1} = d/dx, A_j = Π_{l=j+1}^{m-1} (d/dx + k_l/x) ∘ d/dx.
TruncatedSeries ladder_apply(const TruncatedSeries &f, const OperatorContext &ctx, int j);

// Multiplier of the Riemann–Liouville-type transform on x^{mq}:
//   Γ(mq+1) Γ(ν+1) / (Γ(q+1) Γ(ν+q+1) m^{mq}),
// from log-gamma differences with sign tracking. Throws GammaPoleError if
// some ν_k + n + 1 (n <= q) is a nonpositive integer.
double rl_eigenvalue(const OperatorContext &ctx, int q);

// R_{ν,m} on exponents 0..N; defined on multiples of m only.
DiagonalOperator rl_diagonal(const OperatorContext &ctx, int max_exponent);
DiagonalOperator rl_diagonal_inverse(const OperatorContext &ctx, int max_exponent);

// V_m(f) = Σ_{j=1}^m A_j ∘ R_{ν,m} ∘ I^{m-j} ∘ p_j(f). Output has the order of f.
TruncatedSeries intertwiner_apply(const TruncatedSeries &f, const OperatorContext &ctx);

// a_0 = 1, a_{n+1} = μ a_n / (n + 1 + k_{(n+1) mod m}). Throws
// SingularRecursionError naming the first exponent whose denominator vanishes.
TruncatedSeries eigen_series(const OperatorContext &ctx, complex mu, int order);

// Index of the first n in 1..order with n + k_{n mod m} == 0, or 0 if none.
int first_singular_exponent(const OperatorContext &ctx, int order);

// Max relative coefficient residual of T(k)(V_m f) - V_m(f'). Needs order >= 2m.
VerificationReport check_intertwining(const OperatorContext &ctx, const TruncatedSeries &f, double tolerance = 1e-10);

} // namespace cdunkl

#endif
