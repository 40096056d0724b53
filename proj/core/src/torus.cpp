#include "wigstat/torus.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "wigstat/errors.hpp"

namespace wigstat::torus {

using detail::FftPlan;
using detail::FftSign;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kImagTolerance = 1e-10;

void require_state_dim(const QuantumState& psi, int N) {
  if (psi.dim() != N) {
    throw Error(ErrorCode::kInvalidDimension, "state dimension " + std::to_string(psi.dim()) +
                                                  " does not match N = " + std::to_string(N));
  }
}

// fat_delta for every residue r = l mod 2N
std::vector<double> fat_delta_table(int N) {
  std::vector<double> table(2 * static_cast<std::size_t>(N));
  for (int r = 0; r < 2 * N; ++r) table[r] = fat_delta(r, N);
  return table;
}

// exp(i pi r / N) for r in [0, 2N)
std::vector<Complex> half_phase_table(int N) {
  std::vector<Complex> table(2 * static_cast<std::size_t>(N));
  for (int r = 0; r < 2 * N; ++r) table[r] = std::polar(1.0, kPi * r / N);
  return table;
}

int mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

void require_odd_dimension(int N) {
  if (N < 3 || N % 2 == 0) {
    throw Error(ErrorCode::kInvalidDimension,
                "torus dimension must be odd and >= 3, got " + std::to_string(N));
  }
}

double fat_delta(long long l, int N) {
  require_odd_dimension(N);
  const int r = mod(l, 2 * N);
  if (r == 0) return 1.0;
  if (r % 2 == 0) return 0.0;
  const double sign = ((r - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  const int folded = std::min(r, 2 * N - r);
  return sign / (N * std::sin(kPi * folded / (2.0 * N)));
}

Eigen::MatrixXcd kernel_matrix(int n, int k, int N) {
  require_odd_dimension(N);
  const int M = (N - 1) / 2;
  Eigen::MatrixXcd omega = Eigen::MatrixXcd::Zero(N, N);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  for (int np = -M; np <= M; ++np) {
    const Complex phase = std::polar(scale, -2.0 * kPi * mod(static_cast<long long>(np) * k, N) / N);
    for (int l = -M; l <= M; ++l) {
      const double d = fat_delta(2LL * l - 2LL * n + np, N);
      if (d == 0.0) continue;
      omega(storage_index(l, N), storage_index(l + np, N)) += phase * d;
    }
  }
  return omega;
}

TorusWigner::TorusWigner(int N, std::vector<double> values) : N_(N), values_(std::move(values)) {
  require_odd_dimension(N);
  if (values_.size() != static_cast<std::size_t>(N) * N) {
    throw Error(ErrorCode::kInvalidDimension, "Wigner grid must hold N*N values");
  }
}

std::vector<double> TorusWigner::position_line(int n) const {
  const int i = storage_index(n, N_);
  return {values_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
          values_.begin() + static_cast<std::ptrdiff_t>(index(i, 0) + N_)};
}

std::vector<double> TorusWigner::momentum_line(int k) const {
  const int j = storage_index(k, N_);
  std::vector<double> line(N_);
  for (int i = 0; i < N_; ++i) line[i] = values_[index(i, j)];
  return line;
}

double TorusWigner::mean_value(int N) { return 1.0 / std::sqrt(static_cast<double>(N - 1)); }

TorusWigner wigner(const QuantumState& psi) {
  const int N = psi.dim();
  require_odd_dimension(N);
  const auto& c = psi.amplitudes();
  const std::size_t NN = static_cast<std::size_t>(N) * N;

  // buf[j][l] = c_{l + n'} c_l^*, row j holds displacement n' = symmetric_index(j)
  std::vector<Complex> buf(NN);
  for (int j = 0; j < N; ++j) {
    Complex* row = buf.data() + static_cast<std::size_t>(j) * N;
    for (int l = 0; l < N; ++l) {
      const int lj = l + j < N ? l + j : l + j - N;
      row[l] = c[lj] * std::conj(c[l]);
    }
  }

  const FftPlan rows_backward(N, N, 1, N, FftSign::kBackward);
  const FftPlan rows_forward(N, N, 1, N, FftSign::kForward);
  const FftPlan cols_forward(N, N, N, 1, FftSign::kForward);

  // The l-sum against the fat delta is a circular convolution: go to the
  // conjugate index m, multiply by exp(i pi m n'/N), and come back.
  rows_backward.execute(buf);
  const auto half = half_phase_table(N);
  for (int j = 0; j < N; ++j) {
    const int np = symmetric_index(j, N);
    Complex* row = buf.data() + static_cast<std::size_t>(j) * N;
    for (int m = 0; m < N; ++m) {
      row[m] *= half[mod(static_cast<long long>(symmetric_index(m, N)) * np, 2 * N)];
    }
  }
  rows_forward.execute(buf);
  // buf[j][n] now holds N * sum_l fat_delta(2l - 2n + n') c_{l+n'} c_l^*; transform n' -> k
  cols_forward.execute(buf);

  const double scale = 1.0 / std::sqrt(static_cast<double>(N - 1));
  std::vector<double> values(NN);
  double worst_imag = 0.0;
  for (int k = 0; k < N; ++k) {
    for (int n = 0; n < N; ++n) {
      const Complex v = buf[static_cast<std::size_t>(k) * N + n] * scale;
      values[static_cast<std::size_t>(n) * N + k] = v.real();
      worst_imag = std::max(worst_imag, std::abs(v.imag()));
    }
  }
  if (!(worst_imag < kImagTolerance)) {
    throw Error(ErrorCode::kNumerical,
                "Wigner grid imaginary residual " + std::to_string(worst_imag) + " too large");
  }
  return TorusWigner(N, std::move(values));
}

TorusWigner wigner_brute_force(const QuantumState& psi) {
  const int N = psi.dim();
  require_odd_dimension(N);
  const Eigen::MatrixXcd rho = psi.amplitudes() * psi.amplitudes().adjoint();
  const double C = std::sqrt(static_cast<double>(N) * N * N / (N - 1));
  std::vector<double> values(static_cast<std::size_t>(N) * N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const Eigen::MatrixXcd omega = kernel_matrix(symmetric_index(i, N), symmetric_index(j, N), N);
      values[static_cast<std::size_t>(i) * N + j] = C * (omega * rho).trace().real();
    }
  }
  return TorusWigner(N, std::move(values));
}

std::vector<double> wigner_position_line(const QuantumState& psi, int n) {
  const int N = psi.dim();
  require_odd_dimension(N);
  const int M = (N - 1) / 2;
  if (n < -M || n > M) {
    throw Error(ErrorCode::kOutOfRange, "line position " + std::to_string(n) + " outside [-M, M]");
  }
  const auto& c = psi.amplitudes();
  const auto fat = fat_delta_table(N);
  std::vector<Complex> h(N);
  for (int np = -M; np <= M; ++np) {
    Complex acc = 0.0;
    for (int l = -M; l <= M; ++l) {
      const double d = fat[mod(2LL * l - 2LL * n + np, 2 * N)];
      if (d == 0.0) continue;
      acc += d * c[storage_index(l + np, N)] * std::conj(c[storage_index(l, N)]);
    }
    h[storage_index(np, N)] = acc;
  }
  FftPlan(N, FftSign::kForward).execute(h);
  const double scale = N / std::sqrt(static_cast<double>(N - 1));
  std::vector<double> line(N);
  for (int k = 0; k < N; ++k) {
    if (!(std::abs(h[k].imag()) * scale < kImagTolerance)) {
      throw Error(ErrorCode::kNumerical, "Wigner line imaginary residual too large");
    }
    line[k] = scale * h[k].real();
  }
  return line;
}

QuantumState coherent_state(double q0, double p0, int N) {
  require_odd_dimension(N);
  constexpr int kImages = 5;
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(N);
  const double width = N / (4.0 * kPi);
  for (int i = 0; i < N; ++i) {
    const int n = symmetric_index(i, N);
    const double q = 2.0 * kPi * n / N;
    for (int j = -kImages; j <= kImages; ++j) {
      const double dq = q - q0 + 2.0 * kPi * j;
      const double phase = std::fmod(p0 * (n + static_cast<double>(j) * N), 2.0 * kPi);
      c[i] += std::polar(std::exp(-dq * dq * width), phase);
    }
  }
  return QuantumState::normalized(std::move(c));
}

QuantumState momentum_state(int m0, int N) {
  require_odd_dimension(N);
  Eigen::VectorXcd c(N);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  for (int i = 0; i < N; ++i) {
    const int n = symmetric_index(i, N);
    c[i] = std::polar(scale, -2.0 * kPi * mod(static_cast<long long>(n) * m0, N) / N);
  }
  return QuantumState::normalized(std::move(c));
}

double TorusMapParams::period() const { return 2.0 * kPi * L / N; }

void TorusMapParams::validate() const {
  require_odd_dimension(N);
  if (L < 1) throw Error(ErrorCode::kInvalidArgument, "L must be >= 1");
  if (!std::isfinite(K0)) throw Error(ErrorCode::kInvalidArgument, "K0 must be finite");
}

struct SawtoothMap::Plans {
  FftPlan to_momentum;
  FftPlan to_position;
};

SawtoothMap::SawtoothMap(const TorusMapParams& params) : params_(params) {
  params_.validate();
  const int N = params_.N;
  const long long L = params_.L;
  kick_.resize(N);
  free_.resize(N);
  for (int i = 0; i < N; ++i) {
    const long long n = symmetric_index(i, N);
    // K0 T n^2 / 2L^2 = K0 pi n^2 / (N L)
    kick_[i] = std::polar(1.0, params_.K0 * kPi * static_cast<double>(n * n) / (static_cast<double>(N) * L));
    // T m^2 / 2 = pi (L m^2 mod 2N) / N, reduced exactly
    free_[i] = std::polar(1.0, -kPi * mod(L * n * n, 2 * N) / N);
  }
  plans_ = std::make_unique<Plans>(Plans{FftPlan(N, FftSign::kBackward), FftPlan(N, FftSign::kForward)});
}

SawtoothMap::~SawtoothMap() = default;
SawtoothMap::SawtoothMap(SawtoothMap&&) noexcept = default;
SawtoothMap& SawtoothMap::operator=(SawtoothMap&&) noexcept = default;

QuantumState SawtoothMap::step(const QuantumState& psi) const {
  const int N = params_.N;
  require_state_dim(psi, N);
  Eigen::VectorXcd c = psi.amplitudes().cwiseProduct(kick_);
  std::span<Complex> data(c.data(), static_cast<std::size_t>(N));
  plans_->to_momentum.execute(data);  // sqrt(N) <k~|psi>
  c.array() *= free_.array();
  plans_->to_position.execute(data);
  c /= static_cast<double>(N);
  return QuantumState::from_unitary_image(std::move(c));
}

QuantumState sawtooth_step(const QuantumState& psi, const TorusMapParams& params) {
  return SawtoothMap(params).step(psi);
}

}  // namespace wigstat::torus
