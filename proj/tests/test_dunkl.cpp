#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <cdunkl/cli/suites.hpp>
#include <cdunkl/dunkl.hpp>
#include <cdunkl/errors.hpp>

using namespace cdunkl;

namespace
{

// T(k)f(x) = f'(x) + (1/x) Σ_{i=1}^{m-1} k_i p_i f(x), with p_i taken from the m
// rotated samples directly; shares nothing with the library's monomial rule.
complex brute_force_dunkl(const TruncatedSeries &f, const std::vector<double> &k, int m, complex x)
{
    const double pi = 3.14159265358979323846;
    complex d = 0;
    for (int n = f.order(); n >= 1; --n) {
        d = d * x + static_cast<double>(n) * f[n];
    }
    complex omega = 0;
    for (int i = 1; i < m; ++i) {
        complex p = 0;
        for (int r = 0; r < m; ++r) {
            const complex rot = std::polar(1.0, 2.0 * pi * r / m);
            complex v = 0;
            for (int n = f.order(); n >= 0; --n) {
                v = v * (rot * x) + f[n];
            }
            p += std::polar(1.0, -2.0 * pi * i * r / m) * v;
        }
        omega += k[i - 1] * p / static_cast<double>(m);
    }
    return d + omega / x;
}

std::vector<double> random_valid_nu(int m, std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> u(0.01, 2.0);
    std::vector<double> nu;
    for (int k = 1; k < m; ++k) {
        nu.push_back(-1.0 + static_cast<double>(k) / m + u(rng));
    }
    return nu;
}

TruncatedSeries random_poly(int order, int degree, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return cli::random_series(order, degree, rng);
}

} // namespace

TEST(Dunkl, MonomialExamples)
{
    const OperatorContext half(2, {0.5});
    const auto tx = dunkl_apply(TruncatedSeries::monomial(1, 4), half);
    EXPECT_NEAR(std::abs(tx[0] - 3.0), 0.0, 1e-15);
    const OperatorContext third(3, {1.0 / 3, 2.0 / 3});
    const auto tx2 = dunkl_apply(TruncatedSeries::monomial(2, 6), third);
    EXPECT_NEAR(std::abs(tx2[1] - 5.0), 0.0, 1e-14);
    for (int m = 2; m <= 5; ++m) {
        std::vector<double> nu(m - 1, 0.3);
        const auto one = dunkl_apply(TruncatedSeries::monomial(0, 5), OperatorContext(m, nu));
        EXPECT_EQ(max_relative_residual(one, TruncatedSeries::zero(4)), 0.0);
    }
}

TEST(Dunkl, AgreesWithBruteForceDefinition)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (int m = 2; m <= 5; ++m) {
        const auto nu = random_valid_nu(m, rng);
        const OperatorContext ctx(m, nu);
        const auto k = std::vector<double>(ctx.weights().weights().begin(), ctx.weights().weights().end());
        const auto f = random_poly(30, 30, 40 + m);
        const auto tf = dunkl_apply(f, ctx);
        for (int trial = 0; trial < 8; ++trial) {
            const complex x(u(rng), u(rng));
            if (std::abs(x) < 0.1) {
                continue;
            }
            const auto ref = brute_force_dunkl(f, k, m, x);
            EXPECT_NEAR(std::abs(evaluate(tf, x) - ref) / std::max(1.0, std::abs(ref)), 0.0, 1e-12) << "m=" << m;
        }
    }
}

TEST(Dunkl, PointwiseFormAndOmega)
{
    const OperatorContext ctx(2, {0.5});
    const auto id = [](complex z) { return z; };
    EXPECT_NEAR(std::abs(omega_apply(id, ctx, 1.0) - 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(omega_apply([](complex) { return complex(1.0); }, ctx, 0.7)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(dunkl_pointwise(id, 1.0, ctx, 0.5) - 3.0), 0.0, 1e-15);
    EXPECT_THROW(dunkl_pointwise(id, 1.0, ctx, 0.0), DomainError);
    EXPECT_THROW(omega_apply([](complex) { return complex(NAN); }, ctx, 1.0), DomainError);
}

TEST(Dunkl, ClassicalReflectionFormAtMTwo)
{
    for (double nu : {-0.3, 0.0, 0.5, 2.0}) {
        const OperatorContext ctx(2, {nu});
        const auto f = random_poly(25, 25, 3);
        const auto tf = dunkl_apply(f, ctx);
        for (double x : {-0.8, -0.25, 0.3, 0.9}) {
            const auto ref = evaluate(derivative(f), x) + (nu + 0.5) / x * (evaluate(f, x) - evaluate(f, -x));
            EXPECT_NEAR(std::abs(evaluate(tf, x) - ref), 0.0, 1e-12 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST(Dunkl, ShiftsResidueClassDownByOne)
{
    for (int m = 2; m <= 5; ++m) {
        const OperatorContext ctx(m, std::vector<double>(m - 1, 0.25));
        const auto f = random_poly(30, 30, m);
        for (int j = 1; j <= m; ++j) {
            const auto image = dunkl_apply(project(f, j, ctx.group()), ctx);
            EXPECT_EQ(mass_outside_class(image, ctx.group().residue_class(j - 1), ctx.group()), 0.0);
        }
    }
}

TEST(FirstOrder, ConstantTermNeedsZeroWeight)
{
    EXPECT_THROW(first_order_apply(TruncatedSeries::monomial(0, 3), 2.0), ConsistencyError);
    EXPECT_NO_THROW(first_order_apply(TruncatedSeries::monomial(0, 3), 0.0));
    const auto r = first_order_apply(TruncatedSeries::monomial(2, 3), 1.5);
    EXPECT_NEAR(std::abs(r[1] - 3.5), 0.0, 1e-15);
}

TEST(HyperBesselOperator, Examples)
{
    const OperatorContext ctx(2, {0.5});
    const auto b = hyper_bessel_op_apply(TruncatedSeries::monomial(2, 4), ctx);
    EXPECT_NEAR(std::abs(b[0] - 6.0), 0.0, 1e-14);
    EXPECT_EQ(max_relative_residual(hyper_bessel_op_apply(TruncatedSeries::monomial(0, 4), ctx),
                                    TruncatedSeries::zero(2)),
              0.0);
    EXPECT_THROW(hyper_bessel_op_apply(TruncatedSeries::monomial(0, 1), ctx), ParameterError);
}

TEST(HyperBesselOperator, BoundaryWeightsGiveMthDerivative)
{
    for (int m = 2; m <= 6; ++m) {
        std::vector<double> nu;
        for (int k = 1; k < m; ++k) {
            nu.push_back(-1.0 + static_cast<double>(k) / m);
        }
        const OperatorContext ctx(m, nu);
        const auto f = random_poly(40, 40, 70 + m);
        auto d = f;
        for (int i = 0; i < m; ++i) {
            d = derivative(d);
        }
        EXPECT_LE(max_relative_residual(hyper_bessel_op_apply(f, ctx), d), 1e-14) << m;
    }
}

TEST(Ladder, EndsOfTheLadder)
{
    const OperatorContext ctx(3, {0.2, 0.4});
    const auto f = random_poly(12, 12, 5);
    EXPECT_EQ(max_relative_residual(ladder_apply(f, ctx, 3), f), 0.0);
    EXPECT_EQ(max_relative_residual(ladder_apply(f, ctx, 2), derivative(f)), 0.0);
    const auto g = project(f, 3, ctx.group());
    EXPECT_LE(max_relative_residual(first_order_apply(ladder_apply(g, ctx, 1), ctx.weights()(1)),
                                    hyper_bessel_op_apply(g, ctx)),
              1e-15);
    EXPECT_THROW(ladder_apply(f, ctx, 0), ParameterError);
    EXPECT_THROW(ladder_apply(f, ctx, 4), ParameterError);
    // x leaves a constant after d/dx, which F_2 would send to k_2/x.
    EXPECT_THROW(ladder_apply(TruncatedSeries::monomial(1, 5), ctx, 1), ConsistencyError);
}

TEST(RiemannLiouvilleDiagonal, EigenvaluesAgainstGaussMultiplicationForm)
{
    // r_q = Π_k Γ(k/m + q) Γ(ν_k + 1) / (Γ(k/m) Γ(ν_k + 1 + q)), with std::tgamma.
    std::mt19937_64 rng(23);
    for (int m = 2; m <= 5; ++m) {
        const auto nu = random_valid_nu(m, rng);
        const OperatorContext ctx(m, nu);
        for (int q = 0; q <= 12; ++q) {
            double ref = 1;
            for (int k = 1; k < m; ++k) {
                const double a = static_cast<double>(k) / m;
                ref *= std::tgamma(a + q) * std::tgamma(nu[k - 1] + 1) / (std::tgamma(a) * std::tgamma(nu[k - 1] + 1 + q));
            }
            EXPECT_NEAR(rl_eigenvalue(ctx, q) / ref, 1.0, 1e-12) << "m=" << m << " q=" << q;
        }
    }
    EXPECT_NEAR(rl_eigenvalue(OperatorContext(2, {0.5}), 1), 1.0 / 3, 1e-15);
    EXPECT_EQ(rl_eigenvalue(OperatorContext(3, {0.2, 0.4}), 0), 1.0);
}

TEST(RiemannLiouvilleDiagonal, SignTrackingAndPoles)
{
    // ν = -1.5 gives Γ(ν+1) < 0 and Γ(ν+2) < 0 but a positive ratio at q = 1.
    const OperatorContext ctx(2, {-1.5});
    EXPECT_NEAR(rl_eigenvalue(ctx, 1), 2.0 * std::tgamma(-0.5) / (std::tgamma(0.5) * 4.0), 1e-14);
    EXPECT_THROW(rl_eigenvalue(OperatorContext(2, {-1.0}), 1), GammaPoleError);
}

TEST(RiemannLiouvilleDiagonal, DomainAndInverse)
{
    const OperatorContext ctx(3, {0.2, 0.4});
    const auto r = rl_diagonal(ctx, 12);
    EXPECT_TRUE(r.defined(6));
    EXPECT_FALSE(r.defined(4));
    EXPECT_THROW(r.apply(TruncatedSeries::monomial(4, 12)), DomainError);
    const auto id = r.compose(rl_diagonal_inverse(ctx, 12));
    for (int n = 0; n <= 12; n += 3) {
        EXPECT_NEAR(std::abs(id.eigenvalue(n) - 1.0), 0.0, 1e-15);
    }
}

TEST(Intertwiner, Examples)
{
    const OperatorContext ctx(2, {0.5});
    const auto one = intertwiner_apply(TruncatedSeries::monomial(0, 6), ctx);
    EXPECT_NEAR(std::abs(one[0] - 1.0), 0.0, 1e-15);
    const auto vx = intertwiner_apply(TruncatedSeries::monomial(1, 6), ctx);
    // c_1 = 1/(2ν + 2) = 1/3.
    EXPECT_NEAR(std::abs(vx[1] - 1.0 / 3), 0.0, 1e-15);
    EXPECT_EQ(vx.order(), 6);
    EXPECT_THROW(intertwiner_apply(TruncatedSeries::monomial(0, 1), ctx), ParameterError);
}

TEST(Intertwiner, DiagonalMatchesEigenRecursion)
{
    // c_n = n! a_n(μ = 1)
    std::mt19937_64 rng(31);
    for (int m = 2; m <= 5; ++m) {
        const OperatorContext ctx(m, random_valid_nu(m, rng));
        const auto a = eigen_series(ctx, 1.0, 30);
        double fact = 1;
        for (int n = 0; n <= 30; ++n) {
            fact *= n > 0 ? n : 1;
            const auto c = intertwiner_apply(TruncatedSeries::monomial(n, 30), ctx)[n];
            EXPECT_NEAR(std::abs(c - fact * a[n]) / std::abs(c), 0.0, 1e-13) << "m=" << m << " n=" << n;
        }
    }
}

TEST(Intertwiner, IntertwiningOnRandomPolynomials)
{
    std::mt19937_64 rng(2);
    for (int m = 2; m <= 5; ++m) {
        for (int trial = 0; trial < 4; ++trial) {
            const OperatorContext ctx(m, random_valid_nu(m, rng));
            const auto r = check_intertwining(ctx, random_poly(60, 20, trial + 10 * m));
            EXPECT_TRUE(r.pass) << r.max_residual;
            EXPECT_EQ(r.identity, "intertwining");
        }
    }
    const OperatorContext ctx(2, {0.5});
    EXPECT_EQ(check_intertwining(ctx, TruncatedSeries::monomial(0, 8)).max_residual, 0.0);
}

TEST(EigenSeries, Examples)
{
    const complex mu(0.7, -0.2);
    const auto e2 = eigen_series(OperatorContext(2, {0.5}), mu, 5);
    EXPECT_NEAR(std::abs(e2[1] - mu / 3.0), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(e2[2] - mu * mu / 6.0), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(e2[3] - mu * mu * mu / 30.0), 0.0, 1e-16);
    const auto e3 = eigen_series(OperatorContext(3, {1.0 / 3, 2.0 / 3}), mu, 5);
    EXPECT_NEAR(std::abs(e3[1] - mu / 4.0), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(e3[2] - mu * mu / 20.0), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(e3[3] - mu * mu * mu / 60.0), 0.0, 1e-16);
    const auto flat = eigen_series(OperatorContext(3, {0.2, 0.4}), 0.0, 8);
    EXPECT_EQ(max_relative_residual(flat, TruncatedSeries::monomial(0, 8)), 0.0);
}

TEST(EigenSeries, ResidualAndNormalization)
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + trial % 4;
        const OperatorContext ctx(m, random_valid_nu(m, rng));
        const complex mu(u(rng), u(rng));
        const auto e = eigen_series(ctx, mu, 60);
        EXPECT_EQ(e[0], complex(1.0));
        EXPECT_LE(max_relative_residual(dunkl_apply(e, ctx), mu * e), 1e-14);
    }
}

TEST(EigenSeries, SingularDenominatorIsNamed)
{
    // m = 2, ν = -1: k_1 = -1, so 1 + k_1 = 0.
    const OperatorContext ctx(2, {-1.0});
    EXPECT_EQ(first_singular_exponent(ctx, 10), 1);
    try {
        eigen_series(ctx, 1.0, 10);
        FAIL() << "expected SingularRecursionError";
    } catch (const SingularRecursionError &e) {
        EXPECT_EQ(e.index(), 1);
    }
    EXPECT_EQ(first_singular_exponent(OperatorContext(2, {-0.75}), 60), 0);
}
