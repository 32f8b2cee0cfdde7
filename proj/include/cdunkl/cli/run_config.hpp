#ifndef CDUNKL_CLI_RUN_CONFIG_HPP
#define CDUNKL_CLI_RUN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <cdunkl/group.hpp>

namespace cdunkl::cli
{

enum class OutputFormat { json, csv };

struct RunConfig {
    int m = 2;
    std::vector<double> nu;
    complex lambda = 1.0;
    // Use --lambda as μ directly instead of forming μ = κλ.
    bool mu_direct = false;
    int truncation = 60;
    // Overrides every identity's own tolerance when set.
    std::optional<double> tolerance;
    std::uint64_t seed = 20240607;
    OutputFormat output = OutputFormat::json;
    // sin_{m,l} index for `eval sinml`.
    int l = 1;
};

// Checks m >= 2, truncation >= 2m, tolerance > 0 and, when `needs_nu`, that ν has m-1 entries.
// Throws ParameterError.
void validate(const RunConfig &cfg, bool needs_nu);

// "1.5", "-2i", "0.5+2i", "1e-3-4.5i", "i"
complex parse_complex(std::string_view text);

// Comma-separated reals.
std::vector<double> parse_real_list(std::string_view text);

// start:stop:step over real or complex endpoints; start == stop gives one point.
std::vector<complex> parse_grid(std::string_view text);

// μ as the eigenvalue of T(k): κλ unless mu_direct.
complex effective_mu(const RunConfig &cfg);

// λ with κλ = μ, so closed forms stay consistent under --mu-direct.
complex effective_lambda(const RunConfig &cfg);

} // namespace cdunkl::cli

#endif
