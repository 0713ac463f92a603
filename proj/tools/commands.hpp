#ifndef QPP_TOOLS_COMMANDS_HPP_
#define QPP_TOOLS_COMMANDS_HPP_

#include <exception>
#include <iosfwd>
#include <optional>
#include <string>

#include "qpp/io.hpp"

namespace qpp::cli {

enum class Format { Json, Csv };

struct GridOverride {
  std::optional<double> from;
  std::optional<double> to;
  std::optional<unsigned> points;
};

/// Each command reads its payload from a JSON config and returns the full
/// report text in the requested format.
std::string cmd_pp(const Json& cfg, Format f);
std::string cmd_limit(const Json& cfg, Format f);
std::string cmd_transfer(const Json& cfg, Format f);
std::string cmd_density(const Json& cfg, Format f, const GridOverride& grid = {});
std::string cmd_converge(const Json& cfg, Format f);

/// 0 success, 2 input error, 3 order or size limit, 4 quadrature failure,
/// 1 anything else.
int exit_code_for(const std::exception& e);

/// Whole command line: parses argv, runs the subcommand, writes the report
/// to out (or to --out) and diagnostics to err. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qpp::cli

#endif  // QPP_TOOLS_COMMANDS_HPP_
