// Dense truncated evolution operators, used as ground truth for the
// rule-based step kernels on small instances.
//
// Columns are images of basis states, transcribed rule by rule. Amplitude or
// mass that would leave through half-line site x_max + 1 is dropped, so checks
// must stay clear of the truncation edge.

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "lollipop/topology.hpp"

namespace lollipop::oracle {

enum class OperatorKind { unitary, stochastic };

struct DenseOperator {
  LollipopTopology topology;
  std::int64_t x_max;
  OperatorKind kind;
  Eigen::MatrixXd entries;

  std::int64_t dimension() const { return entries.rows(); }
};

/// Quantum operator over topology.state_count(x_max) basis states. x_max >= 2.
DenseOperator build_dense_unitary(const LollipopTopology& topology, std::int64_t x_max);

/// Classical operator over topology.site_count(x_max) sites. x_max >= 2.
DenseOperator build_dense_stochastic(const LollipopTopology& topology, std::int64_t x_max);

/// max |(U^T U - I)_{jk}| over basis states at sites below x_max - 1.
double unitarity_defect(const DenseOperator& op);

/// Largest deviation of an interior column sum from 1, or +inf if any entry
/// is negative.
double stochasticity_defect(const DenseOperator& op);

/// Evolves `start` for `steps` steps with quantum_step and with repeated dense
/// products; returns the max absolute amplitude difference. The walk must not
/// reach the truncation edge: start site + steps < x_max - 1.
double compare_step(const LollipopTopology& topology, std::int64_t x_max, std::int64_t steps,
                    const BasisState& start);

/// Classical counterpart of compare_step.
double compare_classical_step(const LollipopTopology& topology, std::int64_t x_max,
                              std::int64_t steps, const SiteId& start);

}  // namespace lollipop::oracle
