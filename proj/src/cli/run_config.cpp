#include <charconv>
#include <string>

#include "lollipop/cli.hpp"

namespace lollipop::cli {
namespace {

std::int64_t parse_integer(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ValidationError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

StartSpec parse_start(std::string_view text, const LollipopTopology& topology) {
  const auto bad = [&](const std::string& why) {
    return ValidationError("invalid start '" + std::string(text) + "': " + why);
  };
  const auto first = text.find(':');
  if (first == std::string_view::npos) throw bad("expected cycle:<k>[:coin] or half:<x>[:coin]");
  const std::string_view region = text.substr(0, first);
  std::string_view rest = text.substr(first + 1);
  std::string_view coin_text;
  if (const auto second = rest.find(':'); second != std::string_view::npos) {
    coin_text = rest.substr(second + 1);
    rest = rest.substr(0, second);
    if (coin_text.empty()) throw bad("empty coin");
  }
  const std::int64_t index = parse_integer(rest, "site index");

  StartSpec spec;
  if (region == "cycle") {
    spec.site = topology.cycle_node(index);
    if (!coin_text.empty()) {
      if (coin_text == "L") spec.coin = Coin::L;
      else if (coin_text == "R") spec.coin = Coin::R;
      else if (coin_text == "D") spec.coin = Coin::Down;
      else throw bad("cycle coin must be L, R or D");
    }
  } else if (region == "half") {
    if (index < 1) throw bad("half-line sites start at 1; use cycle:0 for the junction");
    spec.site = LollipopTopology::half_line_node(index);
    if (!coin_text.empty()) {
      if (coin_text == "U") spec.coin = Coin::Up;
      else if (coin_text == "D") spec.coin = Coin::Down;
      else throw bad("half-line coin must be U or D");
    }
  } else {
    throw bad("region must be 'cycle' or 'half'");
  }
  if (spec.coin && !topology.admits(spec.site, *spec.coin)) {
    throw bad("coin " + to_string(*spec.coin) + " is not available at " + to_string(spec.site));
  }
  return spec;
}

Model parse_model(std::string_view text) {
  if (text == "quantum") return Model::quantum;
  if (text == "classical") return Model::classical;
  throw ValidationError("model must be 'quantum' or 'classical', got '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  if (text == "svg") return Format::svg;
  throw ValidationError("format must be csv, json or svg, got '" + std::string(text) + "'");
}

void validate(const RunConfig& config) {
  if (config.cycle_size < 3) {
    throw ValidationError("cycle size must be at least 3, got " + std::to_string(config.cycle_size));
  }
  const LollipopTopology topology(config.cycle_size);
  if (!topology.is_valid(config.start.site)) {
    throw ValidationError("start site " + to_string(config.start.site) + " is not on the graph");
  }
  if (config.model == Model::quantum) {
    if (!config.start.coin) throw ValidationError("quantum runs need a start coin, e.g. cycle:12:R");
    if (!topology.admits(config.start.site, *config.start.coin)) {
      throw ValidationError("coin " + to_string(*config.start.coin) + " is not available at " +
                            to_string(config.start.site));
    }
  } else if (config.start.coin) {
    throw ValidationError("classical runs take no coin in --start");
  }
  if (config.total_steps < 0) throw ValidationError("steps must be >= 0");
  if (config.snapshot_times.empty()) throw ValidationError("at least one snapshot time is required");
  for (std::size_t i = 0; i < config.snapshot_times.size(); ++i) {
    const std::int64_t t = config.snapshot_times[i];
    if (t < 0 || t > config.total_steps) {
      throw ValidationError("snapshot " + std::to_string(t) + " outside [0, " +
                            std::to_string(config.total_steps) + "]");
    }
    if (i > 0 && t <= config.snapshot_times[i - 1]) {
      throw ValidationError("snapshot times must be sorted and unique");
    }
  }
  if (config.formats.empty()) throw ValidationError("at least one output format is required");
}

}  // namespace lollipop::cli
