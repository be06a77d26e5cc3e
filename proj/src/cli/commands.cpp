#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <ostream>
#include <string>
#include <system_error>

#include "lollipop/classical_walk.hpp"
#include "lollipop/cli.hpp"
#include "lollipop/oracle.hpp"
#include "lollipop/quantum_walk.hpp"
#include "lollipop/writers.hpp"

namespace lollipop::cli {
namespace {

namespace fs = std::filesystem;

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  writer(os);
  os.flush();
  if (!os) throw IoError("failed writing " + path.string());
}

std::string snapshot_stem(const char* prefix, std::int64_t time) {
  return std::string(prefix) + "_t" + std::to_string(time);
}

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

constexpr std::int64_t kTableCycle = 25;
constexpr std::int64_t kTableSteps = 100000;

struct TableRow {
  std::string quantity;
  std::int64_t time;
  double computed;
  double reference;
  double tolerance;
};

// Appends a padded row and returns whether it is within tolerance.
bool report_row(std::ostream& out, const TableRow& row) {
  const double dev = std::abs(row.computed - row.reference);
  const bool ok = dev <= row.tolerance;
  char line[160];
  std::snprintf(line, sizeof line, "  %-22s %7lld %10.5f %10.5f %10.2e %9s  %s\n", row.quantity.c_str(),
                static_cast<long long>(row.time), row.computed, row.reference, dev,
                scientific(row.tolerance).c_str(), ok ? "ok" : "FAIL");
  out << line;
  return ok;
}

void table_header(std::ostream& out, const std::string& title) {
  out << title << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "  %-22s %7s %10s %10s %10s %9s  %s\n", "quantity", "t", "computed",
                "reference", "|dev|", "tol", "");
  out << line;
}

}  // namespace

std::vector<SummaryRecord> simulate(const RunConfig& config,
                                    std::vector<PositionDistribution>* snapshots) {
  validate(config);
  const LollipopTopology topology(config.cycle_size);
  std::vector<PositionDistribution> dists;
  if (config.model == Model::quantum) {
    WalkerState state = make_basis_state(topology, config.start.site, *config.start.coin);
    dists = evolve_quantum(state, config.total_steps, config.snapshot_times);
  } else {
    ClassicalDistribution dist = make_point_distribution(topology, config.start.site);
    dists = evolve_classical(dist, config.total_steps, config.snapshot_times);
  }
  std::vector<SummaryRecord> records;
  records.reserve(dists.size());
  for (const auto& d : dists) records.push_back(summarize(d));
  if (snapshots) *snapshots = std::move(dists);
  return records;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    std::error_code ec;
    fs::create_directories(config.output_directory, ec);
    if (ec || !fs::is_directory(config.output_directory)) {
      throw IoError("cannot create output directory " + config.output_directory.string());
    }

    std::vector<PositionDistribution> dists;
    const std::vector<SummaryRecord> records = simulate(config, &dists);
    const auto& dir = config.output_directory;
    const bool csv = config.formats.count(Format::csv) > 0;
    const bool json = config.formats.count(Format::json) > 0;
    const bool svg = config.formats.count(Format::svg) > 0;

    for (const auto& d : dists) {
      const std::string stem = snapshot_stem("distribution", d.time);
      if (csv) write_file(dir / (stem + ".csv"), [&](std::ostream& os) { io::write_distribution_csv(os, d); });
      if (json) write_file(dir / (stem + ".json"), [&](std::ostream& os) { io::write_distribution_json(os, d); });
      if (svg) {
        write_file(dir / (snapshot_stem("cycle", d.time) + ".svg"),
                   [&](std::ostream& os) { io::write_cycle_svg(os, d); });
        write_file(dir / (snapshot_stem("halfline", d.time) + ".svg"),
                   [&](std::ostream& os) { io::write_halfline_svg(os, d); });
      }
    }
    if (csv) write_file(dir / "summary.csv", [&](std::ostream& os) { io::write_summary_csv(os, records); });
    if (json) write_file(dir / "summary.json", [&](std::ostream& os) { io::write_summary_json(os, records); });

    io::write_summary_csv(out, records);
    return kSuccess;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
}

int tables(const TablesOptions& options, std::ostream& out, std::ostream& err) {
  if (options.tolerance && !(*options.tolerance >= 0.0)) {
    err << "error: tolerance must be >= 0\n";
    return kValidationError;
  }
  const LollipopTopology topology(kTableCycle);
  const std::vector<std::int64_t> times = {20000, 50000, 100000};

  RunConfig quantum;
  quantum.model = Model::quantum;
  quantum.cycle_size = kTableCycle;
  quantum.start = {topology.cycle_node(12), Coin::R};
  quantum.total_steps = kTableSteps;
  quantum.snapshot_times = times;

  RunConfig classical = quantum;
  classical.model = Model::classical;
  classical.start = {topology.cycle_node(12), std::nullopt};

  std::vector<PositionDistribution> classical_dists;
  auto quantum_future = std::async(std::launch::async, [&] { return simulate(quantum); });
  const std::vector<SummaryRecord> c = simulate(classical, &classical_dists);
  const std::vector<SummaryRecord> q = quantum_future.get();

  const auto tol = [&](double stated) { return options.tolerance.value_or(stated); };
  const double q_total[] = {0.50587, 0.50012, 0.50000};
  const std::int64_t q_spike_site[] = {0, 24, 14};
  const double q_spike[] = {0.09573, 0.05955, 0.06355};
  const double c_spike[] = {0.00825, 0.00530, 0.00376};
  const double c_total[] = {0.14055, 0.09011, 0.06403};

  bool ok = true;
  table_header(out, "Quantum walk from |[12]R>, n = 25");
  for (std::size_t i = 0; i < times.size(); ++i) {
    const bool site_ok = q[i].spike_site == q_spike_site[i];
    char line[160];
    const std::string got = "[" + std::to_string(q[i].spike_site) + "]";
    const std::string want = "[" + std::to_string(q_spike_site[i]) + "]";
    std::snprintf(line, sizeof line, "  %-22s %7lld %10s %10s %10s %9s  %s\n", "spike position",
                  static_cast<long long>(times[i]), got.c_str(), want.c_str(), "", "exact", site_ok ? "ok" : "FAIL");
    out << line;
    ok &= site_ok;
    ok &= report_row(out, {"spike height", times[i], q[i].spike_height, q_spike[i], tol(2e-3)});
    ok &= report_row(out, {"P_total (cycle)", times[i], q[i].cycle_total, q_total[i], tol(5e-3)});
  }
  out << '\n';
  table_header(out, "Classical walk from [12], n = 25");
  for (std::size_t i = 0; i < times.size(); ++i) {
    ok &= report_row(out, {"spike height at [0]", times[i], classical_dists[i].cycle_probs[0], c_spike[i], tol(1e-4)});
    ok &= report_row(out, {"P_total (cycle)", times[i], c[i].cycle_total, c_total[i], tol(5e-4)});
  }
  out << (ok ? "all values within tolerance\n" : "some values outside tolerance\n");
  return ok ? kSuccess : kToleranceFailure;
}

int oracle_check(std::int64_t cycle_size, std::int64_t x_max, std::int64_t steps, std::ostream& out,
                 std::ostream& err) {
  constexpr double kMaxDefect = 1e-10;
  constexpr double kMaxMismatch = 1e-12;
  try {
    if (cycle_size < 3) throw ValidationError("cycle size must be at least 3");
    if (x_max < 2) throw ValidationError("x_max must be at least 2");
    if (steps < 0 || steps >= x_max - 1) {
      throw ValidationError("steps must satisfy 0 <= steps < x_max - 1 (got steps = " +
                            std::to_string(steps) + ", x_max = " + std::to_string(x_max) + ")");
    }
    const LollipopTopology topology(cycle_size);
    const double defect = oracle::unitarity_defect(oracle::build_dense_unitary(topology, x_max));
    const double stochastic = oracle::stochasticity_defect(oracle::build_dense_stochastic(topology, x_max));

    // Every launch state on the cycle, junction included.
    double quantum_mismatch = 0.0;
    double classical_mismatch = 0.0;
    for (std::int64_t i = 0; i < 2 * cycle_size + 1; ++i) {
      const BasisState b = topology.inverse_index(x_max, i);
      quantum_mismatch = std::max(quantum_mismatch, oracle::compare_step(topology, x_max, steps, b));
    }
    for (std::int64_t k = 0; k < cycle_size; ++k) {
      classical_mismatch = std::max(
          classical_mismatch, oracle::compare_classical_step(topology, x_max, steps, topology.cycle_node(k)));
    }

    const bool ok = defect <= kMaxDefect && stochastic <= kMaxDefect && quantum_mismatch <= kMaxMismatch &&
                    classical_mismatch <= kMaxMismatch;
    out << "n = " << cycle_size << ", x_max = " << x_max << ", steps = " << steps << '\n';
    out << "  unitarity defect       " << scientific(defect) << (defect <= kMaxDefect ? "  ok" : "  FAIL") << '\n';
    out << "  stochasticity defect   " << scientific(stochastic) << (stochastic <= kMaxDefect ? "  ok" : "  FAIL")
        << '\n';
    out << "  quantum step mismatch  " << scientific(quantum_mismatch)
        << (quantum_mismatch <= kMaxMismatch ? "  ok" : "  FAIL") << '\n';
    out << "  classical mismatch     " << scientific(classical_mismatch)
        << (classical_mismatch <= kMaxMismatch ? "  ok" : "  FAIL") << '\n';
    return ok ? kSuccess : kToleranceFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
}

}  // namespace lollipop::cli
