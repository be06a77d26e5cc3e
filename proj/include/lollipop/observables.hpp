// Position-space probabilities and the statistics reported per snapshot.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lollipop/topology.hpp"

namespace lollipop {

class WalkerState;
class ClassicalDistribution;

enum class Source { quantum, classical };

struct PositionDistribution {
  std::int64_t time = 0;
  // cycle_probs[k] is the probability at cycle node [k]; index 0 is the junction
  // and includes all three of its quantum coin components.
  std::vector<double> cycle_probs;
  // halfline_probs[x - 1] is the probability at half-line site x.
  std::vector<double> halfline_probs;
  Source source = Source::quantum;
};

struct SummaryRecord {
  std::int64_t time = 0;
  double cycle_total = 0.0;
  double halfline_total = 0.0;
  std::int64_t spike_site = 0;
  double spike_height = 0.0;
  // NaN when the half-line carries no probability.
  double halfline_mean = 0.0;
  double halfline_std = 0.0;
};

PositionDistribution position_distribution(const WalkerState& state);
PositionDistribution position_distribution(const ClassicalDistribution& dist);

double cycle_total(const PositionDistribution& dist);
double halfline_total(const PositionDistribution& dist);

/// Most probable cycle node and its probability. Ties go to the lowest index.
std::pair<std::int64_t, double> cycle_spike(const PositionDistribution& dist);

/// Mean and standard deviation of the half-line position, conditioned on the
/// walker being on the half-line. Throws std::domain_error if the half-line
/// is empty.
std::pair<double, double> halfline_moments(const PositionDistribution& dist);

SummaryRecord summarize(const PositionDistribution& dist);

}  // namespace lollipop
