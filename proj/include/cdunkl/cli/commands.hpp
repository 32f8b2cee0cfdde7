#ifndef CDUNKL_CLI_COMMANDS_HPP
#define CDUNKL_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <cdunkl/cli/run_config.hpp>
#include <cdunkl/cli/suites.hpp>
#include <cdunkl/quadrature.hpp>

namespace cdunkl::cli
{

// Exit codes shared by every subcommand.
inline constexpr int exit_pass = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

// One JSON report per line on `out`. Precondition errors are emitted as
// {"error": kind, "message": ...} lines and also described on `err`.
int cmd_verify(const RunConfig &cfg, Suite suite, std::ostream &out, std::ostream &err);

// function: cosm, sinml, hyperbessel, kernel. Values are taken at λx.
int cmd_eval(const RunConfig &cfg, const std::string &function, const std::vector<complex> &grid, std::ostream &out,
             std::ostream &err);

// object: eigen, intertwined-exp, hyperbessel.
int cmd_series(const RunConfig &cfg, const std::string &object, std::ostream &out, std::ostream &err);

// Erdélyi–Kober quadrature of x^{mn} against the diagonal of R, n = 0..max_n.
int cmd_crosscheck(const RunConfig &cfg, const QuadratureConfig &q, double x, int max_n, std::ostream &out,
                   std::ostream &err);

int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace cdunkl::cli

#endif
