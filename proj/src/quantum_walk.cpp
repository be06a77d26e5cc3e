#include "lollipop/quantum_walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "denormals.hpp"

namespace lollipop {
namespace {

constexpr double kHadamard = 0.70710678118654752440;  // sqrt(2)/2
constexpr double kGroverDiag = -1.0 / 3.0;
constexpr double kGroverOff = 2.0 / 3.0;
constexpr std::int64_t kInitialExtent = 2;

std::int64_t scan_reach(const LollipopTopology& topology, std::int64_t extent,
                        std::span<const Amplitude> amps) {
  const std::int64_t base = topology.half_line_offset();
  for (std::int64_t x = extent; x >= 1; --x) {
    const std::int64_t i = base + 2 * (x - 1);
    if (amps[i] != Amplitude{} || amps[i + 1] != Amplitude{}) return x;
  }
  return 0;
}

}  // namespace

WalkerState::WalkerState(LollipopTopology topology, std::int64_t extent,
                         std::vector<Amplitude> amplitudes, std::int64_t time)
    : topology_(topology), extent_(extent), time_(time), amplitudes_(std::move(amplitudes)) {
  if (extent_ < 1) throw std::invalid_argument("extent must be >= 1");
  if (time_ < 0) throw std::invalid_argument("time must be >= 0");
  if (static_cast<std::int64_t>(amplitudes_.size()) != topology_.state_count(extent_)) {
    throw std::invalid_argument("amplitude vector has " + std::to_string(amplitudes_.size()) +
                                " entries, expected " +
                                std::to_string(topology_.state_count(extent_)));
  }
  reach_ = scan_reach(topology_, extent_, amplitudes_);
  scratch_.assign(amplitudes_.size(), Amplitude{});
}

Amplitude WalkerState::amplitude(const SiteId& site, Coin coin) const {
  if (site.region == Region::half_line && site.index > extent_) {
    if (!topology_.admits(site, coin)) {
      throw std::invalid_argument("coin " + to_string(coin) + " is not valid at site " +
                                  to_string(site));
    }
    return {};
  }
  return amplitudes_[topology_.flat_index(extent_, site, coin)];
}

void WalkerState::ensure_frontier() {
  // One step moves amplitude at most one site outward, so everything beyond
  // extent - 1 must be zero before stepping.
  if (reach_ + 2 <= extent_) return;
  const std::int64_t grown = std::max(2 * extent_, reach_ + 2);
  const auto size = static_cast<std::size_t>(topology_.state_count(grown));
  amplitudes_.resize(size, Amplitude{});
  scratch_.resize(size, Amplitude{});
  extent_ = grown;
}

WalkerState make_basis_state(const LollipopTopology& topology, const SiteId& site, Coin coin) {
  if (!topology.admits(site, coin)) {
    throw std::invalid_argument("coin " + to_string(coin) + " is not valid at site " +
                                to_string(site));
  }
  std::int64_t extent = kInitialExtent;
  if (site.region == Region::half_line) extent = std::max(extent, site.index + 2);
  std::vector<Amplitude> amps(static_cast<std::size_t>(topology.state_count(extent)));
  amps[static_cast<std::size_t>(topology.flat_index(extent, site, coin))] = 1.0;
  return WalkerState(topology, extent, std::move(amps));
}

void quantum_step(WalkerState& state) {
  detail::ScopedFlushDenormals flush_denormals;
  state.ensure_frontier();

  const std::int64_t n = state.topology_.cycle_size();
  const Amplitude* in = state.amplitudes_.data();
  Amplitude* out = state.scratch_.data();

  // Index helpers for the flat layout documented in topology.hpp.
  const auto cyc = [](std::int64_t k) { return 3 + 2 * (k - 1); };  // L; R is +1
  const std::int64_t hl = state.topology_.half_line_offset();
  const auto half = [hl](std::int64_t x) { return hl + 2 * (x - 1); };  // Down; Up is +1

  const Amplitude ja = in[0], jb = in[1], jc = in[2];
  const Amplitude junction_to_left = kGroverDiag * ja + kGroverOff * jb + kGroverOff * jc;
  const Amplitude junction_to_right = kGroverOff * ja + kGroverDiag * jb + kGroverOff * jc;
  const Amplitude junction_to_up = kGroverOff * ja + kGroverOff * jb + kGroverDiag * jc;

  // Output that a degree-2 vertex sends backwards (L or Down) and forwards (R or Up).
  const auto back = [in](std::int64_t i) { return kHadamard * (in[i] + in[i + 1]); };
  const auto fwd = [in](std::int64_t i) { return kHadamard * (in[i] - in[i + 1]); };

  // Junction receives from [1] (moving L), [n-1] (moving R) and half-line 1 (moving Down).
  out[0] = back(cyc(1));
  out[1] = fwd(cyc(n - 1));
  out[2] = back(half(1));

  // Cycle node k: L arrives from k+1, R arrives from k-1.
  for (std::int64_t k = 1; k < n; ++k) {
    out[cyc(k)] = (k + 1 == n) ? junction_to_left : back(cyc(k + 1));
    out[cyc(k) + 1] = (k == 1) ? junction_to_right : fwd(cyc(k - 1));
  }

  // Half-line site x: Down arrives from x+1, Up arrives from x-1.
  // ensure_frontier guarantees reach + 1 < extent, so x + 1 is in range.
  const std::int64_t new_reach = state.reach_ + 1;
  out[half(1)] = back(half(2));
  out[half(1) + 1] = junction_to_up;
  for (std::int64_t x = 2; x <= new_reach; ++x) {
    out[half(x)] = back(half(x + 1));
    out[half(x) + 1] = fwd(half(x - 1));
  }
  // Scratch beyond new_reach still holds zeros: its previous contents had
  // support only up to the old reach - 1.

  state.amplitudes_.swap(state.scratch_);
  state.reach_ = new_reach;
  state.time_ += 1;
}

double norm(const WalkerState& state) {
  double sum = 0.0;
  for (const Amplitude& a : state.amplitudes()) sum += std::norm(a);
  return std::sqrt(sum);
}

void validate_snapshot_times(std::int64_t total_steps, std::span<const std::int64_t> snapshot_times) {
  if (total_steps < 0) throw std::invalid_argument("total steps must be >= 0");
  for (std::size_t i = 0; i < snapshot_times.size(); ++i) {
    const std::int64_t t = snapshot_times[i];
    if (t < 0 || t > total_steps) {
      throw std::invalid_argument("snapshot time " + std::to_string(t) + " outside [0, " +
                                  std::to_string(total_steps) + "]");
    }
    if (i > 0 && t <= snapshot_times[i - 1]) {
      throw std::invalid_argument("snapshot times must be strictly increasing");
    }
  }
}

std::vector<PositionDistribution> evolve_quantum(WalkerState& state, std::int64_t total_steps,
                                                 std::span<const std::int64_t> snapshot_times,
                                                 const SnapshotObserver& observer) {
  validate_snapshot_times(total_steps, snapshot_times);
  std::vector<PositionDistribution> snapshots;
  snapshots.reserve(snapshot_times.size());
  std::size_t next = 0;
  for (std::int64_t step = 0;; ++step) {
    if (next < snapshot_times.size() && snapshot_times[next] == step) {
      PositionDistribution dist = position_distribution(state);
      dist.time = step;
      if (observer) observer(dist);
      snapshots.push_back(std::move(dist));
      ++next;
    }
    if (step == total_steps) break;
    quantum_step(state);
  }
  return snapshots;
}

}  // namespace lollipop
