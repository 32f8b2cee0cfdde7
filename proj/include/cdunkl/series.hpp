#ifndef CDUNKL_SERIES_HPP
#define CDUNKL_SERIES_HPP

#include <functional>
#include <span>
#include <vector>

#include <json.hpp>

#include <cdunkl/group.hpp>

namespace cdunkl
{

// A power series a_0 + a_1 x + ... + a_N x^N known modulo x^{N+1}.
//
// Binary arithmetic truncates to the shorter operand; nothing is ever
// padded past an operand's order.
class TruncatedSeries
{
public:
    // Throws ParameterError on an empty coefficient vector.
    explicit TruncatedSeries(std::vector<complex> coefficients);

    static TruncatedSeries zero(int order);
    static TruncatedSeries monomial(int exponent, int order, complex coefficient = 1.0);
    // e^{rate·x}, a_n = rate^n / n!
    static TruncatedSeries exponential(int order, complex rate = 1.0);

    int order() const noexcept
    {
        return static_cast<int>(m_coefficients.size()) - 1;
    }

    // Coefficients past the order read as an error, not as zero.
    complex operator[](int n) const;

    std::span<const complex> coefficients() const noexcept
    {
        return m_coefficients;
    }

    TruncatedSeries truncated(int order) const;

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(complex s, const TruncatedSeries &a);
    // Cauchy product.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);

private:
    std::vector<complex> m_coefficients;
};

// Default comparison: 1e-12 relative with a 1e-300 absolute floor.
struct Tolerance {
    double relative = 1e-12;
    double absolute_floor = 1e-300;
};

// max_n |a_n - b_n| / max(|a_n|, |b_n|, floor) over the common order range.
double max_relative_residual(const TruncatedSeries &a, const TruncatedSeries &b, double absolute_floor = 1e-300);

bool approx_equal(const TruncatedSeries &a, const TruncatedSeries &b, Tolerance tol = {});

// Keeps the coefficients with n ≡ j (mod m); j = m keeps n ≡ 0.
TruncatedSeries project(const TruncatedSeries &f, int j, const GroupConfig &cfg);

// (1/m) Σ_r ε^{-jr} f(ε^r x) for an arbitrary callable.
complex project_pointwise(const std::function<complex(complex)> &f, int j, const GroupConfig &cfg, complex x);

// b_n = (n+1) a_{n+1}; order drops by one (an order-0 series maps to the zero series of order 0).
TruncatedSeries derivative(const TruncatedSeries &f);

// I(f)(x) = ∫_0^x f. Exact on the known coefficients, so the order grows by one.
TruncatedSeries antiderivative(const TruncatedSeries &f);

// Horner.
complex evaluate(const TruncatedSeries &f, complex x) noexcept;

// Max |a_n| over exponents outside residue class j.
double mass_outside_class(const TruncatedSeries &f, int j, const GroupConfig &cfg);

// {"truncation": N, "coefficients": [[re, im], ...]}
nlohmann::json to_json(const TruncatedSeries &f);
TruncatedSeries series_from_json(const nlohmann::json &j);

} // namespace cdunkl

#endif
