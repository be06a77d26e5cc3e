// Cycle-plus-half-line ("lollipop") graph and its (site, coin) basis.
//
// Node [0] of the n-cycle is the same vertex as node 0 of the half-line; it
// is always addressed as the cycle node 0 and carries three coin states.

#pragma once

#include <cstdint>
#include <string>

namespace lollipop {

enum class Region { cycle, half_line };

/// A vertex of the graph. Cycle indices are kept reduced modulo n, half-line
/// indices are >= 1. Build through LollipopTopology so the invariants hold.
struct SiteId {
  Region region = Region::cycle;
  std::int64_t index = 0;

  bool is_junction() const { return region == Region::cycle && index == 0; }

  friend bool operator==(const SiteId&, const SiteId&) = default;
};

enum class Coin { L, R, Down, Up };

struct BasisState {
  SiteId site;
  Coin coin = Coin::L;

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

std::string to_string(const SiteId& site);
std::string to_string(Coin coin);

class LollipopTopology {
 public:
  explicit LollipopTopology(std::int64_t cycle_size);

  std::int64_t cycle_size() const { return cycle_size_; }

  SiteId cycle_node(std::int64_t k) const;
  static SiteId half_line_node(std::int64_t x);

  bool is_valid(const SiteId& site) const;
  bool admits(const SiteId& site, Coin coin) const;

  // Quantum basis truncated at half-line site x_max. Layout:
  //   [0, 3)                 junction (L, R, Down)
  //   [3, 3 + 2(n-1))        cycle nodes 1..n-1, (L, R) each
  //   [2n + 1, ...)          half-line sites 1..x_max, (Down, Up) each
  // Growing x_max only appends, so a state vector can be resized in place.
  std::int64_t state_count(std::int64_t x_max) const;
  std::int64_t flat_index(std::int64_t x_max, const SiteId& site, Coin coin) const;
  BasisState inverse_index(std::int64_t x_max, std::int64_t i) const;

  // Classical basis: cycle nodes 0..n-1 followed by half-line sites 1..x_max.
  std::int64_t site_count(std::int64_t x_max) const;
  std::int64_t site_index(std::int64_t x_max, const SiteId& site) const;
  SiteId site_at(std::int64_t x_max, std::int64_t i) const;

  // Offset of half-line site 1 in the quantum layout.
  std::int64_t half_line_offset() const { return 2 * cycle_size_ + 1; }

  friend bool operator==(const LollipopTopology&, const LollipopTopology&) = default;

 private:
  std::int64_t cycle_size_;
};

}  // namespace lollipop
