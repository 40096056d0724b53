#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "wigstat/state.hpp"

namespace wigstat::torus {

/// Throws invalid-dimension unless N is odd and >= 3.
void require_odd_dimension(int N);

/// Symmetric index in [-(N-1)/2, (N-1)/2] for storage index i in [0, N).
constexpr int symmetric_index(int i, int N) { return i <= (N - 1) / 2 ? i : i - N; }

/// Storage index in [0, N) for any integer n (taken modulo N).
constexpr int storage_index(int n, int N) {
  const int r = n % N;
  return r < 0 ? r + N : r;
}

/// Smeared discrete delta (1/N) sin(pi l/2) / sin(pi l/2N), with the limit
/// value 1 at l = 0 mod 2N.
double fat_delta(long long l, int N);

/// Phase-point operator at (n, k) as a dense matrix.  Intended for tests at
/// small N; cost O(N^2) per matrix.
Eigen::MatrixXcd kernel_matrix(int n, int k, int N);

/// Wigner function on the N x N phase-space mesh x_nk = (2 pi n/N, 2 pi k/N).
///
/// Values are normalized so that the grid variance is 1 and the grid mean is
/// 1/sqrt(N-1) for pure states.  Storage is row-major with row = position n
/// and column = momentum k, both in storage order.
class TorusWigner {
 public:
  TorusWigner(int N, std::vector<double> values);

  int N() const { return N_; }
  std::span<const double> values() const { return values_; }

  /// Symmetric indices, any integers accepted (reduced modulo N).
  double at(int n, int k) const { return values_[index(storage_index(n, N_), storage_index(k, N_))]; }
  /// Storage indices in [0, N).
  double raw(int i, int j) const { return values_[index(i, j)]; }

  /// Values along fixed position n (all k, storage order).
  std::vector<double> position_line(int n) const;
  /// Values along fixed momentum k (all n, storage order).
  std::vector<double> momentum_line(int k) const;

  /// Phase-space mean 1/sqrt(N-1) of every pure-state Wigner function.
  static double mean_value(int N);

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * N_ + j; }

  int N_;
  std::vector<double> values_;
};

/// Fast discrete Wigner transform, O(N^2 log N).
TorusWigner wigner(const QuantumState& psi);

/// Reference evaluation C_t tr{w_nk |psi><psi|} through kernel_matrix; O(N^4).
TorusWigner wigner_brute_force(const QuantumState& psi);

/// One fixed-position line W(n, k) for all k in storage order, O(N^2).
std::vector<double> wigner_position_line(const QuantumState& psi, int n);

/// Periodized Gaussian wave packet centered at (q0, p0) with equal widths in
/// position and momentum grid units.
QuantumState coherent_state(double q0, double p0, int N);

/// Momentum eigenstate <n|m0~> = N^{-1/2} exp(-2 pi i n m0 / N).
QuantumState momentum_state(int m0, int N);

struct TorusMapParams {
  double K0 = 0.5;
  int L = 1;
  int N = 101;

  /// Period of forcing T = 2 pi L / N.
  double period() const;
  void validate() const;
};

/// Quantized sawtooth map U = exp(-i T m^2/2) exp(i K0 T n^2 / 2L^2) with
/// precomputed phase tables and transform plans.  step() is const and may be
/// called from several threads.
class SawtoothMap {
 public:
  explicit SawtoothMap(const TorusMapParams& params);
  ~SawtoothMap();
  SawtoothMap(SawtoothMap&&) noexcept;
  SawtoothMap& operator=(SawtoothMap&&) noexcept;

  const TorusMapParams& params() const { return params_; }
  QuantumState step(const QuantumState& psi) const;

 private:
  struct Plans;
  TorusMapParams params_;
  Eigen::VectorXcd kick_;
  Eigen::VectorXcd free_;
  std::unique_ptr<Plans> plans_;
};

QuantumState sawtooth_step(const QuantumState& psi, const TorusMapParams& params);

}  // namespace wigstat::torus
