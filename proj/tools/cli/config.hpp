#ifndef NOMACR_CLI_CONFIG_HPP
#define NOMACR_CLI_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nomacr/maxmin.hpp"
#include "nomacr/montecarlo.hpp"

namespace nomacr::cli {

enum class Command { admit, maxmin, verify, simulate };
enum class SolverChoice { bisection, waterfill, both };
enum class OutputFormat { csv, table };
enum class Experiment { fig2, fig3, fig4 };

/// Environment variable that supplies --seed when the flag is absent.
inline constexpr const char* kSeedEnvVar = "NOMACR_SEED";

struct RunConfig {
  Command command = Command::admit;
  std::string scenario_path;
  SolverChoice solver = SolverChoice::both;
  double epsilon = kDefaultEpsilon;
  std::uint64_t master_seed = 1;
  std::size_t runs = 10000;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::table;
  unsigned threads = 0;

  // simulate
  Experiment experiment = Experiment::fig2;
  ChannelModel model;
  std::vector<double> targets_db{5.0, 10.0, 15.0, 20.0, 25.0};
  std::vector<std::size_t> n_values{5, 10, 15};
  std::size_t snapshot_users = 15;
  double snapshot_low_db = 5.0;
  double snapshot_high_db = 25.0;

  // verify
  std::size_t grid_points = 2001;

  /// Set instead of a runnable command when --help was requested.
  std::string help_text;
};

/// Parses arguments (without the program name). Flags override values from
/// `--config <file>` (INI/TOML, unknown keys rejected). Physical quantities
/// are given in dB/dBm. Throws UsageError or ParseError; messages name the
/// offending flag or key.
RunConfig parse_config(const std::vector<std::string>& args);

}  // namespace nomacr::cli

#endif  // NOMACR_CLI_CONFIG_HPP
