#include <cdunkl/series.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <cdunkl/errors.hpp>

namespace cdunkl
{

TruncatedSeries::TruncatedSeries(std::vector<complex> coefficients) : m_coefficients(std::move(coefficients))
{
    if (m_coefficients.empty()) {
        throw ParameterError("a truncated series needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::zero(int order)
{
    if (order < 0) {
        throw ParameterError("truncation order must be >= 0");
    }
    return TruncatedSeries(std::vector<complex>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::monomial(int exponent, int order, complex coefficient)
{
    auto out = zero(order);
    if (exponent < 0 || exponent > order) {
        throw ParameterError("monomial exponent " + std::to_string(exponent) + " outside 0.." + std::to_string(order));
    }
    out.m_coefficients[static_cast<std::size_t>(exponent)] = coefficient;
    return out;
}

TruncatedSeries TruncatedSeries::exponential(int order, complex rate)
{
    auto out = zero(order);
    complex term = 1.0;
    for (int n = 0; n <= order; ++n) {
        out.m_coefficients[static_cast<std::size_t>(n)] = term;
        term *= rate / static_cast<double>(n + 1);
    }
    return out;
}

complex TruncatedSeries::operator[](int n) const
{
    if (n < 0 || n > order()) {
        throw ParameterError("coefficient index " + std::to_string(n) + " outside 0.." + std::to_string(order()));
    }
    return m_coefficients[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const
{
    if (new_order < 0 || new_order > order()) {
        throw ParameterError("cannot truncate a series of order " + std::to_string(order()) + " to order "
                             + std::to_string(new_order));
    }
    return TruncatedSeries({m_coefficients.begin(), m_coefficients.begin() + new_order + 1});
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const auto n = std::min(a.order(), b.order());
    auto out = TruncatedSeries::zero(n);
    for (int i = 0; i <= n; ++i) {
        out.m_coefficients[i] = a.m_coefficients[i] + b.m_coefficients[i];
    }
    return out;
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return a + complex(-1.0) * b;
}

TruncatedSeries operator*(complex s, const TruncatedSeries &a)
{
    auto out = a;
    for (auto &c : out.m_coefficients) {
        c *= s;
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const auto n = std::min(a.order(), b.order());
    auto out = TruncatedSeries::zero(n);
    for (int i = 0; i <= n; ++i) {
        complex acc = 0;
        for (int j = 0; j <= i; ++j) {
            acc += a.m_coefficients[j] * b.m_coefficients[i - j];
        }
        out.m_coefficients[i] = acc;
    }
    return out;
}

double max_relative_residual(const TruncatedSeries &a, const TruncatedSeries &b, double absolute_floor)
{
    const auto n = std::min(a.order(), b.order());
    double worst = 0;
    for (int i = 0; i <= n; ++i) {
        const auto x = a[i];
        const auto y = b[i];
        const auto scale = std::max({std::abs(x), std::abs(y), absolute_floor});
        const auto r = std::abs(x - y) / scale;
        if (!(r <= worst)) {
            worst = r;
        }
    }
    return worst;
}

bool approx_equal(const TruncatedSeries &a, const TruncatedSeries &b, Tolerance tol)
{
    return max_relative_residual(a, b, tol.absolute_floor) <= tol.relative;
}

TruncatedSeries project(const TruncatedSeries &f, int j, const GroupConfig &cfg)
{
    if (j < 1 || j > cfg.order()) {
        throw ParameterError("projection index " + std::to_string(j) + " outside 1.." + std::to_string(cfg.order()));
    }
    auto coeffs = std::vector<complex>(f.coefficients().begin(), f.coefficients().end());
    for (int n = 0; n <= f.order(); ++n) {
        if (cfg.residue_class(n) != j) {
            coeffs[static_cast<std::size_t>(n)] = 0;
        }
    }
    return TruncatedSeries(std::move(coeffs));
}

complex project_pointwise(const std::function<complex(complex)> &f, int j, const GroupConfig &cfg, complex x)
{
    if (j < 1 || j > cfg.order()) {
        throw ParameterError("projection index " + std::to_string(j) + " outside 1.." + std::to_string(cfg.order()));
    }
    complex acc = 0;
    for (int r = 0; r < cfg.order(); ++r) {
        acc += cfg.root(-static_cast<long>(j) * r) * f(cfg.root(r) * x);
    }
    return acc / static_cast<double>(cfg.order());
}

TruncatedSeries derivative(const TruncatedSeries &f)
{
    if (f.order() == 0) {
        return TruncatedSeries::zero(0);
    }
    std::vector<complex> out(static_cast<std::size_t>(f.order()));
    for (int n = 0; n < f.order(); ++n) {
        out[static_cast<std::size_t>(n)] = static_cast<double>(n + 1) * f[n + 1];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries antiderivative(const TruncatedSeries &f)
{
    std::vector<complex> out(static_cast<std::size_t>(f.order()) + 2);
    for (int n = 0; n <= f.order(); ++n) {
        out[static_cast<std::size_t>(n) + 1] = f[n] / static_cast<double>(n + 1);
    }
    return TruncatedSeries(std::move(out));
}

complex evaluate(const TruncatedSeries &f, complex x) noexcept
{
    const auto c = f.coefficients();
    complex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double mass_outside_class(const TruncatedSeries &f, int j, const GroupConfig &cfg)
{
    double worst = 0;
    for (int n = 0; n <= f.order(); ++n) {
        if (cfg.residue_class(n) != j) {
            worst = std::max(worst, std::abs(f[n]));
        }
    }
    return worst;
}

nlohmann::json to_json(const TruncatedSeries &f)
{
    auto coeffs = nlohmann::json::array();
    for (const auto &c : f.coefficients()) {
        coeffs.push_back({c.real(), c.imag()});
    }
    nlohmann::json out;
    out["truncation"] = f.order();
    out["coefficients"] = std::move(coeffs);
    return out;
}

TruncatedSeries series_from_json(const nlohmann::json &j)
{
    if (!j.is_object() || !j.contains("truncation") || !j.contains("coefficients")) {
        throw ParameterError("series JSON needs 'truncation' and 'coefficients'");
    }
    const auto order = j.at("truncation").get<int>();
    const auto &arr = j.at("coefficients");
    if (!arr.is_array() || order < 0 || arr.size() != static_cast<std::size_t>(order) + 1) {
        throw ParameterError("series JSON: coefficient count must equal truncation + 1");
    }
    std::vector<complex> coeffs;
    coeffs.reserve(arr.size());
    for (const auto &pair : arr) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ParameterError("series JSON: each coefficient must be a [re, im] pair");
        }
        coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return TruncatedSeries(std::move(coeffs));
}

} // namespace cdunkl
