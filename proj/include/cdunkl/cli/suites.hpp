#ifndef CDUNKL_CLI_SUITES_HPP
#define CDUNKL_CLI_SUITES_HPP

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <cdunkl/cli/run_config.hpp>
#include <cdunkl/report.hpp>
#include <cdunkl/series.hpp>

namespace cdunkl::cli
{

enum class Suite { projections, intertwining, eigen, recurrences, rl_crosscheck, kernel, all };

std::optional<Suite> parse_suite(std::string_view name);
const char *suite_name(Suite s) noexcept;

// The concrete suites in the order `all` runs them.
const std::vector<Suite> &concrete_suites();

// Runs one concrete suite. Precondition violations throw ParameterError or
// DomainError (the CLI maps both to exit code 2).
std::vector<VerificationReport> run_suite(const RunConfig &cfg, Suite suite);

// Identity names a suite emits for group order m.
std::vector<std::string> suite_identities(Suite suite, int m);

// Coefficients uniform in [0,1)^2 up to `degree`, zero above; order `order`.
TruncatedSeries random_series(int order, int degree, std::mt19937_64 &rng);

} // namespace cdunkl::cli

#endif
