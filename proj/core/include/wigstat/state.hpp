#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace wigstat {

using Complex = std::complex<double>;

/// Normalized pure state in a finite Hilbert space of dimension >= 2.
///
/// For torus systems the amplitudes are indexed by position n in FFT order
/// (storage index i <-> n = i for i <= (N-1)/2, n = i - N otherwise).  For
/// spin systems index i holds the |J, m = i - J> component.
class QuantumState {
 public:
  /// Normalizes `amplitudes`; throws on dimension < 2 or a zero vector.
  static QuantumState normalized(Eigen::VectorXcd amplitudes);

  /// Adopts amplitudes that are already normalized (images of unitary maps).
  /// Throws if the norm deviates from 1 by more than 1e-9; never rescales.
  static QuantumState from_unitary_image(Eigen::VectorXcd amplitudes);

  static QuantumState basis(int dim, int index);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](int i) const { return amplitudes_[i]; }
  double norm() const { return amplitudes_.norm(); }

 private:
  explicit QuantumState(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {}

  Eigen::VectorXcd amplitudes_;
};

/// Seeded random stream.  Equal (seed, stream id) pairs yield identical
/// sequences; give every parallel task its own stream id.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Standard normal deviate.
  double normal();
  /// Uniform deviate on [0, 1).
  double uniform();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Random state with i.i.d. complex Gaussian amplitudes, <|c_l|^2> = 1/dim
/// before normalization.
QuantumState random_state(int dim, RngStream& rng);

}  // namespace wigstat
