// Simple random walk on the lollipop graph: every vertex moves to a uniformly
// chosen neighbour, so the junction splits its mass three ways.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lollipop/observables.hpp"
#include "lollipop/quantum_walk.hpp"
#include "lollipop/topology.hpp"

namespace lollipop {

class ClassicalDistribution {
 public:
  // probabilities.size() must equal topology.site_count(extent); entries >= 0.
  ClassicalDistribution(LollipopTopology topology, std::int64_t extent,
                        std::vector<double> probabilities, std::int64_t time = 0);

  const LollipopTopology& topology() const { return topology_; }
  std::int64_t extent() const { return extent_; }
  std::int64_t time() const { return time_; }
  std::int64_t reach() const { return reach_; }

  std::span<const double> probabilities() const { return probabilities_; }
  double probability(const SiteId& site) const;
  double total_mass() const;

 private:
  friend void classical_step(ClassicalDistribution& dist);

  void ensure_frontier();

  LollipopTopology topology_;
  std::int64_t extent_;
  std::int64_t time_;
  std::int64_t reach_ = 0;
  std::vector<double> probabilities_;
  std::vector<double> scratch_;
};

ClassicalDistribution make_point_distribution(const LollipopTopology& topology, const SiteId& site);

void classical_step(ClassicalDistribution& dist);

/// Same snapshot contract as evolve_quantum.
std::vector<PositionDistribution> evolve_classical(ClassicalDistribution& dist,
                                                   std::int64_t total_steps,
                                                   std::span<const std::int64_t> snapshot_times,
                                                   const SnapshotObserver& observer = {});

}  // namespace lollipop
