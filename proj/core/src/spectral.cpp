#include "wigstat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "wigstat/errors.hpp"

namespace wigstat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Two passes of modified Gram-Schmidt over columns [first, last).
void orthonormalize(Eigen::MatrixXcd& V, int first, int last) {
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = first; j < last; ++j) {
      for (int i = first; i < j; ++i) {
        const Complex overlap = V.col(i).dot(V.col(j));
        V.col(j) -= overlap * V.col(i);
      }
      V.col(j).normalize();
    }
  }
}

}  // namespace

Eigen::MatrixXcd propagator_matrix(const MapConfig& config) {
  const Propagator U(config);
  const int D = U.dim();
  Eigen::MatrixXcd M(D, D);
  for (int j = 0; j < D; ++j) M.col(j) = U.step(QuantumState::basis(D, j)).amplitudes();
  return M;
}

QuantumState EigenSystem::state(int k) const { return QuantumState::normalized(vectors.col(k)); }

EigenSystem unitary_eigensystem(const Eigen::MatrixXcd& U) {
  if (U.rows() != U.cols() || U.rows() < 1) {
    throw Error(ErrorCode::kInvalidOperator, "propagator must be a non-empty square matrix");
  }
  const int D = static_cast<int>(U.rows());
  const Eigen::MatrixXcd defect = U.adjoint() * U - Eigen::MatrixXcd::Identity(D, D);
  const double unitarity = defect.cwiseAbs().maxCoeff();
  if (!(unitarity < kUnitarityTolerance)) {
    throw Error(ErrorCode::kInvalidOperator,
                "matrix is not unitary: max |U^dag U - 1| = " + std::to_string(unitarity));
  }

  // For a normal matrix the Schur vectors are eigenvectors.
  const Eigen::ComplexSchur<Eigen::MatrixXcd> schur(U);
  if (schur.info() != Eigen::Success) throw Error(ErrorCode::kNumerical, "Schur decomposition failed");
  const Eigen::MatrixXcd& T = schur.matrixT();
  const Eigen::MatrixXcd& Q = schur.matrixU();

  std::vector<double> phase(D);
  for (int k = 0; k < D; ++k) {
    double w = std::arg(T(k, k));
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w -= kTwoPi;
    phase[k] = w;
  }
  std::vector<int> order(D);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return phase[a] < phase[b]; });

  EigenSystem es;
  es.eigenphases.resize(D);
  es.vectors.resize(D, D);
  for (int k = 0; k < D; ++k) {
    es.eigenphases[k] = phase[order[k]];
    es.vectors.col(k) = Q.col(order[k]);
  }

  // clusters of nearly equal phases, including the wrap from 2 pi to 0
  int k = 0;
  while (k < D) {
    int end = k + 1;
    while (end < D && es.eigenphases[end] - es.eigenphases[end - 1] < kClusterTolerance) ++end;
    if (end - k > 1) orthonormalize(es.vectors, k, end);
    k = end;
  }
  if (D > 1 && es.eigenphases[0] + kTwoPi - es.eigenphases[D - 1] < kClusterTolerance) {
    // move the top cluster in front so it joins the one at 0
    int start = D - 1;
    while (start > 0 && es.eigenphases[start] - es.eigenphases[start - 1] < kClusterTolerance) --start;
    int stop = 1;
    while (stop < D && es.eigenphases[stop] - es.eigenphases[stop - 1] < kClusterTolerance) ++stop;
    if (start >= stop) {
      Eigen::MatrixXcd joined(D, stop + D - start);
      joined << es.vectors.middleCols(start, D - start), es.vectors.leftCols(stop);
      orthonormalize(joined, 0, static_cast<int>(joined.cols()));
      es.vectors.middleCols(start, D - start) = joined.leftCols(D - start);
      es.vectors.leftCols(stop) = joined.rightCols(stop);
    }
  }

  double worst = 0.0;
  for (int j = 0; j < D; ++j) {
    const Eigen::VectorXcd r = U * es.vectors.col(j) - std::polar(1.0, es.eigenphases[j]) * es.vectors.col(j);
    worst = std::max(worst, r.norm());
  }
  es.max_residual = worst;
  if (!(worst < kUnitarityTolerance)) {
    throw Error(ErrorCode::kNumerical, "eigenvector residual " + std::to_string(worst) + " too large");
  }
  return es;
}

double ExcessDistribution::median_abs() const {
  if (per_state.empty()) throw Error(ErrorCode::kEmptyInput, "no excess values");
  std::vector<double> a(per_state.size());
  std::transform(per_state.begin(), per_state.end(), a.begin(), [](double x) { return std::abs(x); });
  std::sort(a.begin(), a.end());
  const std::size_t n = a.size();
  return n % 2 == 1 ? a[n / 2] : 0.5 * (a[n / 2 - 1] + a[n / 2]);
}

ExcessDistribution excess_distribution(std::vector<double> excess) {
  ExcessDistribution out;
  out.per_state = std::move(excess);
  out.sorted = out.per_state;
  std::sort(out.sorted.begin(), out.sorted.end());
  const double n = static_cast<double>(out.sorted.size());
  out.cdf.resize(out.sorted.size());
  for (std::size_t i = 0; i < out.sorted.size(); ++i) out.cdf[i] = (i + 1) / n;
  return out;
}

ExcessDistribution excess_of_eigenstates(const EigenSystem& es, const Geometry& g) {
  if (es.dim() != hilbert_dim(g)) {
    throw Error(ErrorCode::kInvalidDimension, "eigensystem dimension does not match the geometry");
  }
  const WignerSampler sampler(g);
  std::vector<double> excess(es.dim());
  for (int k = 0; k < es.dim(); ++k) excess[k] = sampler.summarize(es.state(k)).excess;
  return excess_distribution(std::move(excess));
}

Eigen::MatrixXd goe_matrix(int dim, RngStream& rng) {
  if (dim < 1) throw Error(ErrorCode::kInvalidDimension, "GOE dimension must be positive");
  Eigen::MatrixXd A(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) A(i, j) = rng.normal();
  }
  return (A + A.transpose()) / std::numbers::sqrt2;
}

ExcessDistribution goe_ensemble_excess(int dim, int realizations, const Geometry& g, RngStream& rng) {
  if (dim != hilbert_dim(g)) {
    throw Error(ErrorCode::kInvalidDimension, "GOE dimension does not match the geometry");
  }
  if (realizations < 1) throw Error(ErrorCode::kInvalidArgument, "realizations must be >= 1");
  const WignerSampler sampler(g);
  std::vector<double> excess;
  excess.reserve(static_cast<std::size_t>(dim) * realizations);
  for (int r = 0; r < realizations; ++r) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(goe_matrix(dim, rng));
    for (int k = 0; k < dim; ++k) {
      const Eigen::VectorXcd v = solver.eigenvectors().col(k).cast<Complex>();
      excess.push_back(sampler.summarize(QuantumState::normalized(v)).excess);
    }
  }
  return excess_distribution(std::move(excess));
}

}  // namespace wigstat
