#ifndef CDUNKL_GROUP_HPP
#define CDUNKL_GROUP_HPP

#include <complex>
#include <span>
#include <vector>

namespace cdunkl
{

using complex = std::complex<double>;

// x^n by repeated squaring; ipow(0, 0) == 1.
complex ipow(complex x, int n) noexcept;

// The cyclic group of order m acting on the radial rays, together with the
// roots of unity used throughout: ε = e^{2πi/m}, κ = e^{iπ/m} and the
// Fourier matrix Ω_{ij} = ε^{-ij} (zero-based indices).
class GroupConfig
{
public:
    explicit GroupConfig(int m);

    int order() const noexcept
    {
        return m_order;
    }

    complex epsilon() const noexcept
    {
        return root(1);
    }

    complex kappa() const noexcept
    {
        return kappa_power(1);
    }

    // ε^r for any integer r, evaluated from the reduced angle.
    complex root(long r) const noexcept;

    // κ^r for any integer r; κ^m = -1.
    complex kappa_power(long r) const noexcept;

    complex fourier(int row, int col) const;

    // Row-major m×m.
    std::span<const complex> fourier_matrix() const noexcept
    {
        return m_fourier;
    }

    // Canonical residue class of exponent n in 1..m. Class m collects the
    // exponents divisible by m ("type 0" and "type m" are the same class).
    int residue_class(long n) const noexcept;

private:
    int m_order;
    std::vector<complex> m_fourier;
};

// ν = (ν_1, ..., ν_{m-1}). Components are addressed 1-based to match the
// weight convention k_j = mν_j + m - j.
class MultiIndex
{
public:
    MultiIndex(int m, std::vector<double> components);

    int group_order() const noexcept
    {
        return m_order;
    }

    std::size_t size() const noexcept
    {
        return m_components.size();
    }

    double operator()(int k) const;

    std::span<const double> components() const noexcept
    {
        return m_components;
    }

    // ν_k >= -1 + k/m for all k.
    bool valid() const noexcept;
    // ν_k > -1 + k/m for all k; needed by the fractional-integral form.
    bool strictly_valid() const noexcept;
    // The 1-based indices k violating ν_k >= -1 + k/m.
    std::vector<int> violations() const;

    MultiIndex shifted(int k, double delta) const;
    // ν + n·(1, ..., 1)
    MultiIndex shifted_all(double delta) const;

    double sum() const noexcept;

private:
    int m_order;
    std::vector<double> m_components;
};

// Dunkl weights k_j = mν_j + m - j for j = 1..m-1, with k_0 = k_m = 0.
class WeightVector
{
public:
    explicit WeightVector(const MultiIndex &nu);

    static WeightVector from_weights(int m, std::vector<double> weights);

    int group_order() const noexcept
    {
        return m_order;
    }

    // k_j with j taken modulo m.
    double operator()(long j) const noexcept;

    std::span<const double> weights() const noexcept
    {
        return m_weights;
    }

    MultiIndex to_multi_index() const;

    // k_j >= 0 for all j, the existence condition for the Dunkl kernel.
    bool nonnegative() const noexcept;

private:
    WeightVector(int m, std::vector<double> weights);

    int m_order;
    std::vector<double> m_weights;
};

} // namespace cdunkl

#endif
