#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lollipop/cli.hpp"
#include "lollipop/writers.hpp"

using namespace lollipop;
using namespace lollipop::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("lollipop_test_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

RunConfig quantum_config(const fs::path& out) {
  const LollipopTopology topo(25);
  RunConfig c;
  c.model = Model::quantum;
  c.cycle_size = 25;
  c.start = {topo.cycle_node(12), Coin::R};
  c.total_steps = 2;
  c.snapshot_times = {0, 2};
  c.output_directory = out;
  c.formats = {Format::csv, Format::json, Format::svg};
  return c;
}

int shell(const std::string& args) {
  const std::string cmd = std::string(LOLLIPOP_WALK_EXE) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("start grammar") {
  const LollipopTopology topo(25);
  auto s = parse_start("cycle:12:R", topo);
  CHECK(s.site == topo.cycle_node(12));
  CHECK(s.coin == Coin::R);

  s = parse_start("cycle:0:D", topo);
  CHECK(s.site.is_junction());
  CHECK(s.coin == Coin::Down);

  s = parse_start("half:4:U", topo);
  CHECK(s.site == LollipopTopology::half_line_node(4));
  CHECK(s.coin == Coin::Up);

  s = parse_start("cycle:12", topo);
  CHECK_FALSE(s.coin.has_value());

  CHECK_THROWS_AS(parse_start("cycle:3:D", topo), ValidationError);
  CHECK_THROWS_AS(parse_start("cycle:3:U", topo), ValidationError);
  CHECK_THROWS_AS(parse_start("half:0", topo), ValidationError);
  CHECK_THROWS_AS(parse_start("half:2:L", topo), ValidationError);
  CHECK_THROWS_AS(parse_start("ring:2", topo), ValidationError);
  CHECK_THROWS_AS(parse_start("cycle:x:R", topo), ValidationError);
  CHECK_THROWS_AS(parse_start("cycle:2:", topo), ValidationError);
  CHECK_THROWS_AS(parse_start("12", topo), ValidationError);
}

TEST_CASE("config validation") {
  const fs::path out = scratch_dir("validate");
  RunConfig c = quantum_config(out);
  CHECK_NOTHROW(validate(c));

  RunConfig bad = c;
  bad.snapshot_times = {2, 0};
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad.snapshot_times = {0, 0};
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad.snapshot_times = {3};
  CHECK_THROWS_AS(validate(bad), ValidationError);

  bad = c;
  bad.cycle_size = 2;
  CHECK_THROWS_AS(validate(bad), ValidationError);

  bad = c;
  bad.start.coin.reset();
  CHECK_THROWS_AS(validate(bad), ValidationError);

  bad = c;
  bad.model = Model::classical;
  CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("run writes the expected files and schemas") {
  const fs::path out = scratch_dir("files");
  std::ostringstream so, se;
  REQUIRE(run(quantum_config(out), so, se) == kSuccess);
  CHECK(se.str().empty());
  for (const char* name : {"distribution_t0.csv", "distribution_t2.csv", "distribution_t0.json",
                           "distribution_t2.json", "summary.csv", "summary.json", "cycle_t0.svg",
                           "cycle_t2.svg", "halfline_t0.svg", "halfline_t2.svg"}) {
    CHECK_MESSAGE(fs::exists(out / name), name);
  }

  const std::string dist = slurp(out / "distribution_t2.csv");
  std::string expected = "region,site,probability\n";
  for (int k = 0; k < 25; ++k) {
    const char* p = k == 10 || k == 14 ? "0.25" : k == 12 ? "0.5" : "0";
    expected += "cycle," + std::to_string(k) + "," + p + "\n";
  }
  CHECK(dist == expected);

  const std::string summary = slurp(out / "summary.csv");
  CHECK(summary ==
        "time,cycle_total,halfline_total,spike_site,spike_height,halfline_mean,halfline_std\n"
        "0,1,0,12,1,nan,nan\n"
        "2,1,0,12,0.5,nan,nan\n");

  const auto j = nlohmann::json::parse(slurp(out / "summary.json"));
  REQUIRE(j.size() == 2);
  CHECK(j[1]["spike_site"] == 12);
  CHECK(j[1]["halfline_mean"].is_null());

  const std::string svg = slurp(out / "cycle_t2.svg");
  CHECK(svg.find("viewBox=\"0 0 800 500\"") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}

TEST_CASE("half-line rows stop at the last site above the cutoff") {
  PositionDistribution d;
  d.cycle_probs = {0.5, 0.0, 0.0};
  d.halfline_probs = {0.25, 0.25 - 1e-16, 1e-16, 0.0};
  CHECK(io::halfline_extent(d) == 2);
  std::ostringstream os;
  io::write_distribution_csv(os, d);
  CHECK(os.str() ==
        "region,site,probability\ncycle,0,0.5\ncycle,1,0\ncycle,2,0\nhalfline,1,0.25\nhalfline,2,0.25\n");
  CHECK(io::format_number(0.1234567890123) == "0.123456789");
}

TEST_CASE("repeated runs are byte-identical") {
  const LollipopTopology topo(25);
  RunConfig c;
  c.model = Model::quantum;
  c.start = {topo.cycle_node(0), Coin::R};
  c.total_steps = 500;
  c.snapshot_times = {100, 500};
  c.formats = {Format::csv, Format::json};
  c.output_directory = scratch_dir("det_a");
  std::ostringstream so, se;
  REQUIRE(run(c, so, se) == kSuccess);
  const fs::path a = c.output_directory;
  c.output_directory = scratch_dir("det_b");
  REQUIRE(run(c, so, se) == kSuccess);
  for (const char* name : {"distribution_t100.csv", "distribution_t500.csv", "distribution_t500.json",
                           "summary.csv", "summary.json"}) {
    CHECK_MESSAGE(slurp(a / name) == slurp(c.output_directory / name), name);
  }
}

TEST_CASE("run reports validation and I/O failures with distinct exit codes") {
  std::ostringstream so, se;
  RunConfig c = quantum_config(scratch_dir("codes"));
  c.snapshot_times = {5};
  CHECK(run(c, so, se) == kValidationError);
  const std::string diag = se.str();
  CHECK(diag.find("error:") == 0);
  CHECK(std::count(diag.begin(), diag.end(), '\n') == 1);

  // A regular file where the output directory should go.
  const fs::path blocker = scratch_dir("blocker");
  std::ofstream(blocker) << "x";
  c = quantum_config(blocker / "sub");
  se.str("");
  CHECK(run(c, so, se) == kIoError);
  fs::remove(blocker);
}

TEST_CASE("oracle_check") {
  std::ostringstream so, se;
  CHECK(oracle_check(5, 10, 8, so, se) == kSuccess);
  CHECK(oracle_check(25, 12, 10, so, se) == kSuccess);
  CHECK(oracle_check(5, 10, 20, so, se) == kValidationError);
  CHECK(oracle_check(2, 10, 2, so, se) == kValidationError);
}

TEST_CASE("tables fails when every tolerance is forced to zero") {
  std::ostringstream so, se;
  CHECK(tables({0.0}, so, se) == kToleranceFailure);
  CHECK(so.str().find("FAIL") != std::string::npos);
  CHECK(tables({-1.0}, so, se) == kValidationError);
}

TEST_CASE("command-line exit codes") {
  const fs::path out = scratch_dir("exe");
  CHECK(shell("run --model classical --start cycle:0 --steps 10 --snapshots 0,10 --out " + out.string()) == 0);
  CHECK(fs::exists(out / "summary.csv"));
  CHECK(shell("run --model classical --start cycle:0:L --steps 10 --out " + out.string()) == 1);
  CHECK(shell("run --model sideways --start cycle:0 --steps 10 --out " + out.string()) == 1);
  CHECK(shell("run --start cycle:1:R --steps 10 --snapshots 4,2 --out " + out.string()) == 1);
  CHECK(shell("run --start cycle:1:R --steps 10 --format pdf --out " + out.string()) == 1);
  CHECK(shell("run --start cycle:1:R --steps 10 --out /proc/no_such_dir/x") == 2);
  CHECK(shell("oracle-check --cycle-size 5 --x-max 10 --steps 8") == 0);
  CHECK(shell("oracle-check --cycle-size 5 --x-max 10 --steps 20") == 1);
  CHECK(shell("frobnicate") == 1);
}
