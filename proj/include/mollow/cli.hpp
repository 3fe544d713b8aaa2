#ifndef MOLLOW_CLI_HPP
#define MOLLOW_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mollow/contour.hpp"
#include "mollow/types.hpp"

namespace mollow::cli {

/// Exit codes: 0 success, 1 check/evaluation failure, 2 usage error.
enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

enum class OutputFormat { Csv, Json };

/// Fully resolved sweep configuration. Exactly one of rabi/saturation is
/// given on input; the other is derived.
struct RunConfig {
  Component component = Component::KerrZ;
  double gamma = 1.0;
  double delta = 0.0;
  double rabi = 0.0;        // resolved
  double saturation = 0.0;  // resolved
  double omega_min = 0.0;
  double omega_max = 0.0;
  int points = 0;
  Method method = Method::Residue;
  double scale = 1.0;
  std::optional<double> epsilon;
  double tolerance = 1e-8;
  OutputFormat format = OutputFormat::Csv;
  std::string output = "-";

  /// Decay rate after the optional dense-medium renormalization.
  double gamma_effective() const;
};

/// Raised when --help is requested; carries the text to print.
struct HelpRequested {
  std::string text;
};

/// Parse `sweep` arguments (without the subcommand name), merging an optional
/// JSON config file; explicit flags override file values. Throws UsageError.
RunConfig parse_config(const std::vector<std::string>& args);

/// Shortest-round-trip decimal rendering used by every emitter.
std::string format_double(double v);

void write_csv(std::ostream& os, const SweepResult& result);
void write_json(std::ostream& os, const SweepResult& result, const RunConfig& cfg);

/// Full command-line entry point (subcommands sweep, figure, roots, check).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace mollow::cli

#endif
