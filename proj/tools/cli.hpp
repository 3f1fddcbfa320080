#ifndef LBSHOCK_TOOLS_CLI_HPP_
#define LBSHOCK_TOOLS_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbshock/riemann.hpp"

namespace lbshock::cli {

enum class ExitCode : int { kSuccess = 0, kConfigError = 1, kNumericalFailure = 2 };

enum class Command { kRun, kBench, kOracle };
enum class Case { kSod1d, kSod2d, kPeriodicTest };

struct RunConfig {
  Command command = Command::kRun;
  Case run_case = Case::kSod1d;
  int nx = 400;
  int ny = 1;
  std::size_t steps = 75;
  double gamma = 1.4;
  double sigma = 0.5;
  bool allow_sigma_override = false;
  bool deterministic = true;
  int threads = 1;
  std::optional<std::filesystem::path> out_path;
  bool compare_exact = false;
  std::uint64_t seed = 1;
  int repetitions = 5;
  riemann::PrimitiveState left = riemann::kSodLeft;
  riemann::PrimitiveState right = riemann::kSodRight;

  int dim() const noexcept;
  double x0() const noexcept { return 0.5 * nx; }
};

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Thrown for --help; what() carries the help text.
class HelpRequested : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// args excludes the program name. Throws ConfigError on unknown, invalid or
// contradictory flags.
RunConfig parse_config(const std::vector<std::string>& args);

std::string case_name(Case c);

// Each writes its report to out and returns the process exit status.
ExitCode run_case(const RunConfig& cfg, std::ostream& out);
ExitCode run_bench(const RunConfig& cfg, std::ostream& out);
ExitCode run_oracle(const RunConfig& cfg, std::ostream& out);

// parse + dispatch with errors mapped to exit codes and messages on err.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lbshock::cli

#endif  // LBSHOCK_TOOLS_CLI_HPP_
