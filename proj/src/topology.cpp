#include "lollipop/topology.hpp"

#include <stdexcept>

namespace lollipop {

std::string to_string(const SiteId& site) {
  if (site.region == Region::cycle) return "[" + std::to_string(site.index) + "]";
  return std::to_string(site.index);
}

std::string to_string(Coin coin) {
  switch (coin) {
    case Coin::L: return "L";
    case Coin::R: return "R";
    case Coin::Down: return "Down";
    case Coin::Up: return "Up";
  }
  return "?";
}

LollipopTopology::LollipopTopology(std::int64_t cycle_size) : cycle_size_(cycle_size) {
  if (cycle_size < 3) {
    throw std::invalid_argument("cycle size must be at least 3, got " + std::to_string(cycle_size));
  }
}

SiteId LollipopTopology::cycle_node(std::int64_t k) const {
  std::int64_t r = k % cycle_size_;
  if (r < 0) r += cycle_size_;
  return {Region::cycle, r};
}

SiteId LollipopTopology::half_line_node(std::int64_t x) {
  if (x < 1) {
    throw std::invalid_argument("half-line site must be >= 1 (node 0 is cycle node [0]), got " +
                                std::to_string(x));
  }
  return {Region::half_line, x};
}

bool LollipopTopology::is_valid(const SiteId& site) const {
  if (site.region == Region::cycle) return site.index >= 0 && site.index < cycle_size_;
  return site.index >= 1;
}

bool LollipopTopology::admits(const SiteId& site, Coin coin) const {
  if (!is_valid(site)) return false;
  if (site.region == Region::half_line) return coin == Coin::Down || coin == Coin::Up;
  if (site.index == 0) return coin != Coin::Up;
  return coin == Coin::L || coin == Coin::R;
}

std::int64_t LollipopTopology::state_count(std::int64_t x_max) const {
  if (x_max < 1) throw std::invalid_argument("x_max must be >= 1, got " + std::to_string(x_max));
  return 2 * (cycle_size_ - 1) + 3 + 2 * x_max;
}

std::int64_t LollipopTopology::flat_index(std::int64_t x_max, const SiteId& site, Coin coin) const {
  if (!admits(site, coin)) {
    throw std::invalid_argument("coin " + to_string(coin) + " is not valid at site " + to_string(site));
  }
  if (site.region == Region::half_line) {
    if (site.index > x_max) {
      throw std::out_of_range("half-line site " + std::to_string(site.index) + " beyond x_max " +
                              std::to_string(x_max));
    }
    return half_line_offset() + 2 * (site.index - 1) + (coin == Coin::Up ? 1 : 0);
  }
  if (site.index == 0) {
    return coin == Coin::L ? 0 : coin == Coin::R ? 1 : 2;
  }
  return 3 + 2 * (site.index - 1) + (coin == Coin::R ? 1 : 0);
}

BasisState LollipopTopology::inverse_index(std::int64_t x_max, std::int64_t i) const {
  if (i < 0 || i >= state_count(x_max)) {
    throw std::out_of_range("basis index " + std::to_string(i) + " out of range");
  }
  if (i < 3) {
    return {cycle_node(0), i == 0 ? Coin::L : i == 1 ? Coin::R : Coin::Down};
  }
  if (i < half_line_offset()) {
    const std::int64_t j = i - 3;
    return {cycle_node(1 + j / 2), j % 2 == 0 ? Coin::L : Coin::R};
  }
  const std::int64_t j = i - half_line_offset();
  return {half_line_node(1 + j / 2), j % 2 == 0 ? Coin::Down : Coin::Up};
}

std::int64_t LollipopTopology::site_count(std::int64_t x_max) const {
  if (x_max < 1) throw std::invalid_argument("x_max must be >= 1, got " + std::to_string(x_max));
  return cycle_size_ + x_max;
}

std::int64_t LollipopTopology::site_index(std::int64_t x_max, const SiteId& site) const {
  if (!is_valid(site)) throw std::invalid_argument("invalid site " + to_string(site));
  if (site.region == Region::cycle) return site.index;
  if (site.index > x_max) {
    throw std::out_of_range("half-line site " + std::to_string(site.index) + " beyond x_max " +
                            std::to_string(x_max));
  }
  return cycle_size_ + site.index - 1;
}

SiteId LollipopTopology::site_at(std::int64_t x_max, std::int64_t i) const {
  if (i < 0 || i >= site_count(x_max)) {
    throw std::out_of_range("site index " + std::to_string(i) + " out of range");
  }
  if (i < cycle_size_) return cycle_node(i);
  return half_line_node(i - cycle_size_ + 1);
}

}  // namespace lollipop
