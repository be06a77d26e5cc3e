#include "lollipop/classical_walk.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "denormals.hpp"

namespace lollipop {
namespace {

constexpr std::int64_t kInitialExtent = 2;

}  // namespace

ClassicalDistribution::ClassicalDistribution(LollipopTopology topology, std::int64_t extent,
                                             std::vector<double> probabilities, std::int64_t time)
    : topology_(topology), extent_(extent), time_(time), probabilities_(std::move(probabilities)) {
  if (extent_ < 1) throw std::invalid_argument("extent must be >= 1");
  if (time_ < 0) throw std::invalid_argument("time must be >= 0");
  if (static_cast<std::int64_t>(probabilities_.size()) != topology_.site_count(extent_)) {
    throw std::invalid_argument("probability vector has " + std::to_string(probabilities_.size()) +
                                " entries, expected " +
                                std::to_string(topology_.site_count(extent_)));
  }
  for (double p : probabilities_) {
    if (!(p >= 0.0)) throw std::invalid_argument("probabilities must be non-negative");
  }
  const std::int64_t n = topology_.cycle_size();
  for (std::int64_t x = extent_; x >= 1; --x) {
    if (probabilities_[static_cast<std::size_t>(n + x - 1)] != 0.0) {
      reach_ = x;
      break;
    }
  }
  scratch_.assign(probabilities_.size(), 0.0);
}

double ClassicalDistribution::probability(const SiteId& site) const {
  if (site.region == Region::half_line && site.index > extent_) {
    if (!topology_.is_valid(site)) throw std::invalid_argument("invalid site " + to_string(site));
    return 0.0;
  }
  return probabilities_[static_cast<std::size_t>(topology_.site_index(extent_, site))];
}

double ClassicalDistribution::total_mass() const {
  double sum = 0.0;
  for (double p : probabilities_) sum += p;
  return sum;
}

void ClassicalDistribution::ensure_frontier() {
  if (reach_ + 2 <= extent_) return;
  const std::int64_t grown = std::max(2 * extent_, reach_ + 2);
  const auto size = static_cast<std::size_t>(topology_.site_count(grown));
  probabilities_.resize(size, 0.0);
  scratch_.resize(size, 0.0);
  extent_ = grown;
}

ClassicalDistribution make_point_distribution(const LollipopTopology& topology, const SiteId& site) {
  if (!topology.is_valid(site)) throw std::invalid_argument("invalid site " + to_string(site));
  std::int64_t extent = kInitialExtent;
  if (site.region == Region::half_line) extent = std::max(extent, site.index + 2);
  std::vector<double> probs(static_cast<std::size_t>(topology.site_count(extent)), 0.0);
  probs[static_cast<std::size_t>(topology.site_index(extent, site))] = 1.0;
  return ClassicalDistribution(topology, extent, std::move(probs));
}

void classical_step(ClassicalDistribution& dist) {
  detail::ScopedFlushDenormals flush_denormals;
  dist.ensure_frontier();

  const std::int64_t n = dist.topology_.cycle_size();
  const double* in = dist.probabilities_.data();
  double* out = dist.scratch_.data();
  const double* in_half = in + n - 1;  // in_half[x] is half-line site x
  double* out_half = out + n - 1;

  const double from_junction = in[0] / 3.0;

  out[0] = 0.5 * in[1] + 0.5 * in[n - 1] + 0.5 * in_half[1];
  for (std::int64_t k = 1; k < n; ++k) {
    const double left = (k == 1) ? from_junction : 0.5 * in[k - 1];
    const double right = (k + 1 == n) ? from_junction : 0.5 * in[k + 1];
    out[k] = left + right;
  }

  const std::int64_t new_reach = dist.reach_ + 1;
  out_half[1] = from_junction + 0.5 * in_half[2];
  for (std::int64_t x = 2; x <= new_reach; ++x) {
    out_half[x] = 0.5 * in_half[x - 1] + 0.5 * in_half[x + 1];
  }

  dist.probabilities_.swap(dist.scratch_);
  dist.reach_ = new_reach;
  dist.time_ += 1;
}

std::vector<PositionDistribution> evolve_classical(ClassicalDistribution& dist,
                                                   std::int64_t total_steps,
                                                   std::span<const std::int64_t> snapshot_times,
                                                   const SnapshotObserver& observer) {
  validate_snapshot_times(total_steps, snapshot_times);
  std::vector<PositionDistribution> snapshots;
  snapshots.reserve(snapshot_times.size());
  std::size_t next = 0;
  for (std::int64_t step = 0;; ++step) {
    if (next < snapshot_times.size() && snapshot_times[next] == step) {
      PositionDistribution pd = position_distribution(dist);
      pd.time = step;
      if (observer) observer(pd);
      snapshots.push_back(std::move(pd));
      ++next;
    }
    if (step == total_steps) break;
    classical_step(dist);
  }
  return snapshots;
}

}  // namespace lollipop
