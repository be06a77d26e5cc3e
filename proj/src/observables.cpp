#include "lollipop/observables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lollipop/classical_walk.hpp"
#include "lollipop/quantum_walk.hpp"

namespace lollipop {

PositionDistribution position_distribution(const WalkerState& state) {
  const LollipopTopology& topo = state.topology();
  const std::int64_t n = topo.cycle_size();
  const auto amps = state.amplitudes();

  PositionDistribution dist;
  dist.time = state.time();
  dist.source = Source::quantum;
  dist.cycle_probs.resize(static_cast<std::size_t>(n));
  dist.cycle_probs[0] = std::norm(amps[0]) + std::norm(amps[1]) + std::norm(amps[2]);
  for (std::int64_t k = 1; k < n; ++k) {
    const auto i = static_cast<std::size_t>(3 + 2 * (k - 1));
    dist.cycle_probs[static_cast<std::size_t>(k)] = std::norm(amps[i]) + std::norm(amps[i + 1]);
  }
  const std::int64_t reach = state.reach();
  dist.halfline_probs.resize(static_cast<std::size_t>(reach));
  for (std::int64_t x = 1; x <= reach; ++x) {
    const auto i = static_cast<std::size_t>(topo.half_line_offset() + 2 * (x - 1));
    dist.halfline_probs[static_cast<std::size_t>(x - 1)] = std::norm(amps[i]) + std::norm(amps[i + 1]);
  }
  return dist;
}

PositionDistribution position_distribution(const ClassicalDistribution& source) {
  const std::int64_t n = source.topology().cycle_size();
  const auto probs = source.probabilities();

  PositionDistribution dist;
  dist.time = source.time();
  dist.source = Source::classical;
  dist.cycle_probs.assign(probs.begin(), probs.begin() + n);
  dist.halfline_probs.assign(probs.begin() + n, probs.begin() + n + source.reach());
  return dist;
}

double cycle_total(const PositionDistribution& dist) {
  double sum = 0.0;
  for (double p : dist.cycle_probs) sum += p;
  return sum;
}

double halfline_total(const PositionDistribution& dist) {
  double sum = 0.0;
  for (double p : dist.halfline_probs) sum += p;
  return sum;
}

std::pair<std::int64_t, double> cycle_spike(const PositionDistribution& dist) {
  std::int64_t best = 0;
  double height = -1.0;
  for (std::size_t k = 0; k < dist.cycle_probs.size(); ++k) {
    if (dist.cycle_probs[k] > height) {
      height = dist.cycle_probs[k];
      best = static_cast<std::int64_t>(k);
    }
  }
  return {best, height < 0.0 ? 0.0 : height};
}

std::pair<double, double> halfline_moments(const PositionDistribution& dist) {
  double total = 0.0;
  double first = 0.0;
  for (std::size_t i = 0; i < dist.halfline_probs.size(); ++i) {
    const double x = static_cast<double>(i + 1);
    total += dist.halfline_probs[i];
    first += x * dist.halfline_probs[i];
  }
  if (!(total > 0.0)) throw std::domain_error("half-line carries no probability");
  const double mean = first / total;
  // Central second moment avoids the cancellation of E[x^2] - mean^2 at large x.
  double second = 0.0;
  for (std::size_t i = 0; i < dist.halfline_probs.size(); ++i) {
    const double d = static_cast<double>(i + 1) - mean;
    second += d * d * dist.halfline_probs[i];
  }
  return {mean, std::sqrt(second / total)};
}

SummaryRecord summarize(const PositionDistribution& dist) {
  SummaryRecord rec;
  rec.time = dist.time;
  rec.cycle_total = cycle_total(dist);
  rec.halfline_total = halfline_total(dist);
  std::tie(rec.spike_site, rec.spike_height) = cycle_spike(dist);
  if (rec.halfline_total > 0.0) {
    std::tie(rec.halfline_mean, rec.halfline_std) = halfline_moments(dist);
  } else {
    rec.halfline_mean = std::numeric_limits<double>::quiet_NaN();
    rec.halfline_std = std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

}  // namespace lollipop
