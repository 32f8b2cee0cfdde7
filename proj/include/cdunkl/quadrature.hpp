#ifndef CDUNKL_QUADRATURE_HPP
#define CDUNKL_QUADRATURE_HPP

#include <functional>
#include <vector>

#include <cdunkl/dunkl.hpp>
#include <cdunkl/group.hpp>

namespace cdunkl
{

enum class QuadratureScheme {
    // Fixed Gauss–Jacobi rule after t = u^γ; endpoint weights are exact.
    gauss_jacobi,
    // Double-exponential (tanh-sinh) refinement until the tolerance is met.
    adaptive,
};

struct QuadratureConfig {
    int node_count = 40;
    QuadratureScheme scheme = QuadratureScheme::gauss_jacobi;
    // Relative error goal; used by the adaptive scheme only.
    double tolerance = 1e-12;

    void validate() const;
};

// Gauss–Jacobi rule on [0, 1] for the weight (1-u)^a u^b, a, b > -1.
struct JacobiRule {
    std::vector<double> nodes;
    // 1 - u_i, kept separately to avoid cancellation near u = 1.
    std::vector<double> complements;
    std::vector<double> weights;
};

JacobiRule gauss_jacobi_rule(int n, double a, double b);

using RealFunction = std::function<complex(double)>;

// Erdélyi–Kober integral
//   I^{α,β}_γ f(x) = ∫_0^1 (1-t)^{α-1} t^β f(x t^{1/γ}) dt / Γ(α),
// α > 0, β > -1, γ > 0, x >= 0.
complex ek_integral(double alpha, double beta, double gamma, const RealFunction &f, double x,
                    const QuadratureConfig &q = {});

// R_{ν,m} f(x) as the composition of the m-1 Erdélyi–Kober integrals with
// γ = m, α_k = ν_k + 1 - k/m, β_k = k/m - 1, scaled so that R(1) = 1.
// Needs ν_k > -1 + k/m for every k.
complex rl_transform_numeric(const OperatorContext &ctx, const RealFunction &f, double x,
                             const QuadratureConfig &q = {});

// Π_k Γ(ν_k+1)/Γ(k/m), the constant that makes R(1) = 1.
double rl_normalization_constant(const OperatorContext &ctx);

// m^{3/2} Γ(ν+1) / (2π)^{(m-1)/2}, the closed-form constant often quoted with the product form.
// It comes out m times rl_normalization_constant.
double rl_literal_constant(const OperatorContext &ctx);

// Classical Riemann–Liouville transform (m = 2) by direct quadrature:
//   Γ(ν+1)/(Γ(1/2)Γ(ν+1/2)) ∫_0^1 (1-t)^{ν-1/2} t^{-1/2} f(x√t) dt, ν > -1/2.
complex riemann_liouville_direct(double nu, const RealFunction &f, double x, double tolerance = 1e-12);

} // namespace cdunkl

#endif
