// lollipop_walk: quantum and classical walks on a cycle with an attached half-line.
//
//   lollipop_walk run --model quantum --start cycle:12:R --steps 100000 \
//       --snapshots 20000,50000,100000 --out results --format csv,json,svg
//   lollipop_walk tables
//   lollipop_walk oracle-check --cycle-size 5 --x-max 10 --steps 8

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lollipop/cli.hpp"

namespace cli = lollipop::cli;

int main(int argc, char** argv) {
  CLI::App app{"Quantum and classical walks on a cycle coupled with a half-line"};
  app.require_subcommand(1);

  std::string model = "quantum";
  std::int64_t cycle_size = 25;
  std::string start;
  std::int64_t steps = 0;
  std::vector<std::int64_t> snapshots;
  std::string out_dir = "out";
  std::vector<std::string> formats = {"csv"};

  auto* run = app.add_subcommand("run", "Evolve one walk and write snapshot files");
  run->add_option("--model", model, "quantum or classical")->capture_default_str();
  run->add_option("--cycle-size", cycle_size, "Number of cycle nodes n (>= 3)")->capture_default_str();
  run->add_option("--start", start, "cycle:<k>[:L|R|D] or half:<x>[:U|D]")->required();
  run->add_option("--steps", steps, "Total number of steps")->required();
  run->add_option("--snapshots", snapshots, "Comma-separated snapshot times (default: --steps)")
      ->delimiter(',');
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run->add_option("--format", formats, "Comma-separated subset of csv,json,svg")->delimiter(',');

  std::optional<double> tolerance;
  auto* tables = app.add_subcommand("tables", "Reproduce the reference tables for n = 25");
  tables->add_option("--tolerance", tolerance, "Override every tolerance with this absolute value");

  std::int64_t oracle_cycle = 5;
  std::int64_t x_max = 10;
  std::int64_t oracle_steps = 8;
  auto* oracle = app.add_subcommand("oracle-check", "Cross-check the step kernels against dense operators");
  oracle->add_option("--cycle-size", oracle_cycle, "Number of cycle nodes n (>= 3)")->capture_default_str();
  oracle->add_option("--x-max", x_max, "Half-line truncation site")->capture_default_str();
  oracle->add_option("--steps", oracle_steps, "Steps to compare (< x_max - 1)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kValidationError;
  }

  if (*run) {
    cli::RunConfig config;
    try {
      config.model = cli::parse_model(model);
      config.cycle_size = cycle_size;
      config.start = cli::parse_start(start, lollipop::LollipopTopology(cycle_size));
      config.total_steps = steps;
      config.snapshot_times = snapshots.empty() ? std::vector<std::int64_t>{steps} : snapshots;
      config.output_directory = out_dir;
      config.formats.clear();
      for (const auto& f : formats) config.formats.insert(cli::parse_format(f));
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return cli::kValidationError;
    }
    return cli::run(config, std::cout, std::cerr);
  }
  if (*tables) return cli::tables({tolerance}, std::cout, std::cerr);
  return cli::oracle_check(oracle_cycle, x_max, oracle_steps, std::cout, std::cerr);
}
