#pragma once

#include <vector>

#include <Eigen/Core>

#include "wigstat/systems.hpp"

namespace wigstat {

/// Dense one-period propagator, column j = U |j>.
Eigen::MatrixXcd propagator_matrix(const MapConfig& config);

/// Eigenphases in [0, 2 pi) in increasing order with orthonormal eigenvectors
/// as matching columns.
struct EigenSystem {
  std::vector<double> eigenphases;
  Eigen::MatrixXcd vectors;
  double max_residual = 0.0;  // max_k |U psi_k - e^{i omega_k} psi_k|

  int dim() const { return static_cast<int>(eigenphases.size()); }
  QuantumState state(int k) const;
};

inline constexpr double kUnitarityTolerance = 1e-8;
inline constexpr double kClusterTolerance = 1e-8;

/// Full eigendecomposition of a unitary matrix; eigenvectors belonging to
/// eigenphases closer than kClusterTolerance are re-orthonormalized.
EigenSystem unitary_eigensystem(const Eigen::MatrixXcd& U);

/// Excess of each state's Wigner value distribution, plus the sorted values
/// and their empirical cumulative distribution.
struct ExcessDistribution {
  std::vector<double> per_state;  // input order
  std::vector<double> sorted;
  std::vector<double> cdf;        // cdf[i] = (i + 1) / n

  double median_abs() const;
};

ExcessDistribution excess_distribution(std::vector<double> excess);

ExcessDistribution excess_of_eigenstates(const EigenSystem& es, const Geometry& g);

/// Real symmetric Gaussian matrix (A + A^T)/sqrt(2): off-diagonal variance 1,
/// diagonal variance 2.
Eigen::MatrixXd goe_matrix(int dim, RngStream& rng);

/// Excess of every eigenvector of `realizations` GOE matrices, each read as a
/// state in the computational basis of `g`.
ExcessDistribution goe_ensemble_excess(int dim, int realizations, const Geometry& g, RngStream& rng);

}  // namespace wigstat
