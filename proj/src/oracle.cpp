#include "lollipop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lollipop/classical_walk.hpp"
#include "lollipop/quantum_walk.hpp"

namespace lollipop::oracle {
namespace {

void require_x_max(std::int64_t x_max) {
  if (x_max < 2) throw std::invalid_argument("oracle needs x_max >= 2, got " + std::to_string(x_max));
}

std::int64_t half_line_position(const SiteId& site) {
  return site.region == Region::half_line ? site.index : 0;
}

bool is_interior(const SiteId& site, std::int64_t x_max) {
  return half_line_position(site) < x_max - 1;
}

void check_clear_of_edge(std::int64_t x_max, std::int64_t steps, const SiteId& start) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (half_line_position(start) + steps >= x_max - 1) {
    throw std::invalid_argument("walk of " + std::to_string(steps) + " steps from " +
                                to_string(start) + " reaches the truncation edge at x_max = " +
                                std::to_string(x_max));
  }
}

}  // namespace

DenseOperator build_dense_unitary(const LollipopTopology& topology, std::int64_t x_max) {
  require_x_max(x_max);
  const std::int64_t dim = topology.state_count(x_max);
  DenseOperator op{topology, x_max, OperatorKind::unitary, Eigen::MatrixXd::Zero(dim, dim)};

  const double h = std::sqrt(2.0) / 2.0;
  const std::int64_t n = topology.cycle_size();

  for (std::int64_t col = 0; col < dim; ++col) {
    const BasisState b = topology.inverse_index(x_max, col);
    const auto add = [&](const SiteId& site, Coin coin, double value) {
      if (site.region == Region::half_line && site.index > x_max) return;
      op.entries(topology.flat_index(x_max, site, coin), col) += value;
    };

    if (b.site.region == Region::half_line) {
      const std::int64_t x = b.site.index;
      const SiteId below = x == 1 ? topology.cycle_node(0) : LollipopTopology::half_line_node(x - 1);
      const SiteId above = LollipopTopology::half_line_node(x + 1);
      const double sign = b.coin == Coin::Down ? 1.0 : -1.0;
      add(below, Coin::Down, h);
      add(above, Coin::Up, sign * h);
    } else if (!b.site.is_junction()) {
      const std::int64_t k = b.site.index;
      const double sign = b.coin == Coin::L ? 1.0 : -1.0;
      add(topology.cycle_node(k - 1), Coin::L, h);
      add(topology.cycle_node(k + 1), Coin::R, sign * h);
    } else {
      const SiteId left = topology.cycle_node(n - 1);
      const SiteId right = topology.cycle_node(1);
      const SiteId up = LollipopTopology::half_line_node(1);
      switch (b.coin) {
        case Coin::L:
          add(left, Coin::L, -1.0 / 3.0);
          add(right, Coin::R, 2.0 / 3.0);
          add(up, Coin::Up, 2.0 / 3.0);
          break;
        case Coin::R:
          add(left, Coin::L, 2.0 / 3.0);
          add(right, Coin::R, -1.0 / 3.0);
          add(up, Coin::Up, 2.0 / 3.0);
          break;
        case Coin::Down:
          add(left, Coin::L, 2.0 / 3.0);
          add(right, Coin::R, 2.0 / 3.0);
          add(up, Coin::Up, -1.0 / 3.0);
          break;
        case Coin::Up:
          throw std::logic_error("junction has no Up coin");
      }
    }
  }
  return op;
}

DenseOperator build_dense_stochastic(const LollipopTopology& topology, std::int64_t x_max) {
  require_x_max(x_max);
  const std::int64_t dim = topology.site_count(x_max);
  DenseOperator op{topology, x_max, OperatorKind::stochastic, Eigen::MatrixXd::Zero(dim, dim)};
  const std::int64_t n = topology.cycle_size();

  for (std::int64_t col = 0; col < dim; ++col) {
    const SiteId site = topology.site_at(x_max, col);
    const auto add = [&](const SiteId& to, double value) {
      if (to.region == Region::half_line && to.index > x_max) return;
      op.entries(topology.site_index(x_max, to), col) += value;
    };
    if (site.is_junction()) {
      add(topology.cycle_node(n - 1), 1.0 / 3.0);
      add(topology.cycle_node(1), 1.0 / 3.0);
      add(LollipopTopology::half_line_node(1), 1.0 / 3.0);
    } else if (site.region == Region::cycle) {
      add(topology.cycle_node(site.index - 1), 0.5);
      add(topology.cycle_node(site.index + 1), 0.5);
    } else {
      const std::int64_t x = site.index;
      add(x == 1 ? topology.cycle_node(0) : LollipopTopology::half_line_node(x - 1), 0.5);
      add(LollipopTopology::half_line_node(x + 1), 0.5);
    }
  }
  return op;
}

double unitarity_defect(const DenseOperator& op) {
  if (op.kind != OperatorKind::unitary) {
    throw std::invalid_argument("unitarity_defect needs a unitary operator");
  }
  std::vector<Eigen::Index> interior;
  for (std::int64_t j = 0; j < op.dimension(); ++j) {
    if (is_interior(op.topology.inverse_index(op.x_max, j).site, op.x_max)) interior.push_back(j);
  }
  const Eigen::MatrixXd sub = op.entries(Eigen::all, interior);
  const Eigen::MatrixXd gram = sub.transpose() * sub;
  const auto m = static_cast<Eigen::Index>(interior.size());
  return (gram - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
}

double stochasticity_defect(const DenseOperator& op) {
  if (op.kind != OperatorKind::stochastic) {
    throw std::invalid_argument("stochasticity_defect needs a stochastic operator");
  }
  if (op.entries.minCoeff() < 0.0) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::int64_t j = 0; j < op.dimension(); ++j) {
    if (!is_interior(op.topology.site_at(op.x_max, j), op.x_max)) continue;
    worst = std::max(worst, std::abs(op.entries.col(j).sum() - 1.0));
  }
  return worst;
}

double compare_step(const LollipopTopology& topology, std::int64_t x_max, std::int64_t steps,
                    const BasisState& start) {
  check_clear_of_edge(x_max, steps, start.site);
  const DenseOperator op = build_dense_unitary(topology, x_max);

  Eigen::VectorXd dense = Eigen::VectorXd::Zero(op.dimension());
  dense(topology.flat_index(x_max, start.site, start.coin)) = 1.0;
  WalkerState state = make_basis_state(topology, start.site, start.coin);
  for (std::int64_t t = 0; t < steps; ++t) {
    dense = op.entries * dense;
    quantum_step(state);
  }

  double worst = 0.0;
  for (std::int64_t j = 0; j < op.dimension(); ++j) {
    const BasisState b = topology.inverse_index(x_max, j);
    worst = std::max(worst, std::abs(state.amplitude(b.site, b.coin) - Amplitude{dense(j)}));
  }
  // Anything the engine holds beyond x_max has no dense counterpart.
  for (std::int64_t x = x_max + 1; x <= state.extent(); ++x) {
    const SiteId site = LollipopTopology::half_line_node(x);
    worst = std::max({worst, std::abs(state.amplitude(site, Coin::Down)),
                      std::abs(state.amplitude(site, Coin::Up))});
  }
  return worst;
}

double compare_classical_step(const LollipopTopology& topology, std::int64_t x_max,
                              std::int64_t steps, const SiteId& start) {
  check_clear_of_edge(x_max, steps, start);
  const DenseOperator op = build_dense_stochastic(topology, x_max);

  Eigen::VectorXd dense = Eigen::VectorXd::Zero(op.dimension());
  dense(topology.site_index(x_max, start)) = 1.0;
  ClassicalDistribution dist = make_point_distribution(topology, start);
  for (std::int64_t t = 0; t < steps; ++t) {
    dense = op.entries * dense;
    classical_step(dist);
  }

  double worst = 0.0;
  for (std::int64_t j = 0; j < op.dimension(); ++j) {
    worst = std::max(worst, std::abs(dist.probability(topology.site_at(x_max, j)) - dense(j)));
  }
  for (std::int64_t x = x_max + 1; x <= dist.extent(); ++x) {
    worst = std::max(worst, dist.probability(LollipopTopology::half_line_node(x)));
  }
  return worst;
}

}  // namespace lollipop::oracle
