#include <cdunkl/group.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include <cdunkl/errors.hpp>

namespace cdunkl
{

namespace
{

long positive_mod(long n, long m)
{
    const auto r = n % m;
    return r < 0 ? r + m : r;
}

// e^{2πi num/den} for 0 <= num < den, exact on the axes.
complex unit_root(long num, long den)
{
    if ((4 * num) % den == 0) {
        static const complex axes[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        return axes[4 * num / den];
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den));
}

// ν_k >= -1 + k/m up to rounding in the user's decimal input.
constexpr double validity_slack = 1e-12;

} // namespace

complex ipow(complex x, int n) noexcept
{
    if (n < 0) {
        return 1.0 / ipow(x, -n);
    }
    complex result = 1.0;
    while (n > 0) {
        if (n & 1) {
            result *= x;
        }
        x *= x;
        n >>= 1;
    }
    return result;
}

GroupConfig::GroupConfig(int m) : m_order(m)
{
    if (m < 2) {
        throw ParameterError("group order m must be >= 2, got " + std::to_string(m));
    }
    m_fourier.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            m_fourier[static_cast<std::size_t>(i) * m + j] = root(-static_cast<long>(i) * j);
        }
    }
}

complex GroupConfig::root(long r) const noexcept
{
    return unit_root(positive_mod(r, m_order), m_order);
}

complex GroupConfig::kappa_power(long r) const noexcept
{
    return unit_root(positive_mod(r, 2L * m_order), 2L * m_order);
}

complex GroupConfig::fourier(int row, int col) const
{
    if (row < 0 || row >= m_order || col < 0 || col >= m_order) {
        throw ParameterError("Fourier matrix index out of range");
    }
    return m_fourier[static_cast<std::size_t>(row) * m_order + col];
}

int GroupConfig::residue_class(long n) const noexcept
{
    const auto r = positive_mod(n, m_order);
    return r == 0 ? m_order : static_cast<int>(r);
}

MultiIndex::MultiIndex(int m, std::vector<double> components) : m_order(m), m_components(std::move(components))
{
    if (m < 2) {
        throw ParameterError("group order m must be >= 2, got " + std::to_string(m));
    }
    if (m_components.size() != static_cast<std::size_t>(m - 1)) {
        throw ParameterError("multi-index must have m-1 = " + std::to_string(m - 1) + " components, got "
                             + std::to_string(m_components.size()));
    }
    for (auto v : m_components) {
        if (!std::isfinite(v)) {
            throw ParameterError("multi-index components must be finite");
        }
    }
}

double MultiIndex::operator()(int k) const
{
    if (k < 1 || k >= m_order) {
        throw ParameterError("multi-index component " + std::to_string(k) + " out of range 1.."
                             + std::to_string(m_order - 1));
    }
    return m_components[static_cast<std::size_t>(k - 1)];
}

bool MultiIndex::valid() const noexcept
{
    return violations().empty();
}

bool MultiIndex::strictly_valid() const noexcept
{
    for (int k = 1; k < m_order; ++k) {
        if (!(m_components[k - 1] > -1.0 + static_cast<double>(k) / m_order)) {
            return false;
        }
    }
    return true;
}

std::vector<int> MultiIndex::violations() const
{
    std::vector<int> out;
    for (int k = 1; k < m_order; ++k) {
        if (m_components[k - 1] < -1.0 + static_cast<double>(k) / m_order - validity_slack) {
            out.push_back(k);
        }
    }
    return out;
}

MultiIndex MultiIndex::shifted(int k, double delta) const
{
    auto c = m_components;
    c.at(static_cast<std::size_t>(k - 1)) += delta;
    return MultiIndex(m_order, std::move(c));
}

MultiIndex MultiIndex::shifted_all(double delta) const
{
    auto c = m_components;
    for (auto &v : c) {
        v += delta;
    }
    return MultiIndex(m_order, std::move(c));
}

double MultiIndex::sum() const noexcept
{
    double s = 0;
    for (auto v : m_components) {
        s += v;
    }
    return s;
}

WeightVector::WeightVector(const MultiIndex &nu) : m_order(nu.group_order())
{
    m_weights.reserve(nu.size());
    for (int j = 1; j < m_order; ++j) {
        m_weights.push_back(m_order * nu(j) + m_order - j);
    }
}

WeightVector::WeightVector(int m, std::vector<double> weights) : m_order(m), m_weights(std::move(weights)) {}

WeightVector WeightVector::from_weights(int m, std::vector<double> weights)
{
    if (m < 2 || weights.size() != static_cast<std::size_t>(m - 1)) {
        throw ParameterError("weight vector must have m-1 entries");
    }
    return WeightVector(m, std::move(weights));
}

double WeightVector::operator()(long j) const noexcept
{
    const auto r = positive_mod(j, m_order);
    return r == 0 ? 0.0 : m_weights[static_cast<std::size_t>(r - 1)];
}

MultiIndex WeightVector::to_multi_index() const
{
    std::vector<double> nu;
    nu.reserve(m_weights.size());
    for (int j = 1; j < m_order; ++j) {
        nu.push_back((m_weights[j - 1] - m_order + j) / m_order);
    }
    return MultiIndex(m_order, std::move(nu));
}

bool WeightVector::nonnegative() const noexcept
{
    for (auto k : m_weights) {
        if (k < 0) {
            return false;
        }
    }
    return true;
}

} // namespace cdunkl
