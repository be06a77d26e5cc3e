// Coined quantum walk on the lollipop graph.
//
// Degree-2 vertices use the Hadamard-type coin; the junction uses the 3x3
// Grover coin in (L, R, Down) order. The half-line buffer grows ahead of the
// walk's light cone, so the infinite half-line is represented exactly.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lollipop/observables.hpp"
#include "lollipop/topology.hpp"

namespace lollipop {

using Amplitude = std::complex<double>;

class WalkerState {
 public:
  // amplitudes.size() must equal topology.state_count(extent).
  WalkerState(LollipopTopology topology, std::int64_t extent, std::vector<Amplitude> amplitudes,
              std::int64_t time = 0);

  const LollipopTopology& topology() const { return topology_; }
  std::int64_t extent() const { return extent_; }
  std::int64_t time() const { return time_; }
  // Largest half-line site that may hold a nonzero amplitude (0 if none).
  std::int64_t reach() const { return reach_; }

  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  // Zero for half-line sites beyond the extent.
  Amplitude amplitude(const SiteId& site, Coin coin) const;

 private:
  friend void quantum_step(WalkerState& state);

  void ensure_frontier();

  LollipopTopology topology_;
  std::int64_t extent_;
  std::int64_t time_;
  std::int64_t reach_ = 0;
  std::vector<Amplitude> amplitudes_;
  std::vector<Amplitude> scratch_;
};

WalkerState make_basis_state(const LollipopTopology& topology, const SiteId& site, Coin coin);

/// Applies U once. Grows the half-line buffer first if needed.
void quantum_step(WalkerState& state);

double norm(const WalkerState& state);

using SnapshotObserver = std::function<void(const PositionDistribution&)>;

/// Advances `state` by total_steps applications of U. A snapshot at time t is
/// taken after t steps (t = 0 is the input state). snapshot_times must be
/// strictly increasing and lie in [0, total_steps].
std::vector<PositionDistribution> evolve_quantum(WalkerState& state, std::int64_t total_steps,
                                                 std::span<const std::int64_t> snapshot_times,
                                                 const SnapshotObserver& observer = {});

void validate_snapshot_times(std::int64_t total_steps, std::span<const std::int64_t> snapshot_times);

}  // namespace lollipop
