#include "wigstat/state.hpp"

#include <cmath>
#include <string>

#include "wigstat/errors.hpp"

namespace wigstat {

namespace {

void require_dim(Eigen::Index dim) {
  if (dim < 2) {
    throw Error(ErrorCode::kInvalidDimension,
                "state dimension must be >= 2, got " + std::to_string(dim));
  }
}

}  // namespace

QuantumState QuantumState::normalized(Eigen::VectorXcd amplitudes) {
  require_dim(amplitudes.size());
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return QuantumState(std::move(amplitudes));
}

QuantumState QuantumState::from_unitary_image(Eigen::VectorXcd amplitudes) {
  require_dim(amplitudes.size());
  const double norm = amplitudes.norm();
  if (!(std::abs(norm - 1.0) <= 1e-9)) {
    throw Error(ErrorCode::kNumerical,
                "unitary image lost normalization: |psi| = " + std::to_string(norm));
  }
  return QuantumState(std::move(amplitudes));
}

QuantumState QuantumState::basis(int dim, int index) {
  require_dim(dim);
  if (index < 0 || index >= dim) {
    throw Error(ErrorCode::kOutOfRange, "basis index " + std::to_string(index) +
                                            " outside [0, " + std::to_string(dim) + ")");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v[index] = 1.0;
  return QuantumState(std::move(v));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  engine_.seed(seq);
}

double RngStream::normal() { return normal_(engine_); }

double RngStream::uniform() { return uniform_(engine_); }

QuantumState random_state(int dim, RngStream& rng) {
  require_dim(dim);
  // real and imaginary parts each carry variance 1/(2 dim)
  const double sigma = std::sqrt(0.5 / dim);
  Eigen::VectorXcd c(dim);
  for (int l = 0; l < dim; ++l) {
    const double re = sigma * rng.normal();
    const double im = sigma * rng.normal();
    c[l] = Complex(re, im);
  }
  return QuantumState::normalized(std::move(c));
}

}  // namespace wigstat
