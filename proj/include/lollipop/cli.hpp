// Experiment runner behind the lollipop_walk command-line tool.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lollipop/observables.hpp"
#include "lollipop/topology.hpp"

namespace lollipop::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 1,
  kIoError = 2,
  kToleranceFailure = 3,
};

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Model { quantum, classical };
enum class Format { csv, json, svg };

// Launch site as written on the command line. The coin is absent for classical runs.
struct StartSpec {
  SiteId site;
  std::optional<Coin> coin;
};

/// Parses `cycle:<k>[:<L|R|D>]` or `half:<x>[:<U|D>]`. `D` on the cycle is
/// only valid at the junction cycle:0.
StartSpec parse_start(std::string_view text, const LollipopTopology& topology);

Model parse_model(std::string_view text);
Format parse_format(std::string_view text);

struct RunConfig {
  Model model = Model::quantum;
  std::int64_t cycle_size = 25;
  StartSpec start;
  std::int64_t total_steps = 0;
  std::vector<std::int64_t> snapshot_times;
  std::filesystem::path output_directory = "out";
  std::set<Format> formats = {Format::csv};
};

/// Throws ValidationError describing the first violated constraint.
void validate(const RunConfig& config);

/// Evolves the configured walk and returns one summary per snapshot.
std::vector<SummaryRecord> simulate(const RunConfig& config,
                                    std::vector<PositionDistribution>* snapshots = nullptr);

/// Runs the experiment and writes distribution/summary/plot files. Returns an
/// ExitCode; diagnostics go to `err`, a short summary to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct TablesOptions {
  // Replaces every numeric tolerance when set.
  std::optional<double> tolerance;
};

/// Reproduces the two reference tables (quantum from |[12]R>, classical from
/// [12], n = 25) and prints computed vs reference values.
int tables(const TablesOptions& options, std::ostream& out, std::ostream& err);

/// Dense-operator cross-check for a small instance.
int oracle_check(std::int64_t cycle_size, std::int64_t x_max, std::int64_t steps, std::ostream& out,
                 std::ostream& err);

}  // namespace lollipop::cli
