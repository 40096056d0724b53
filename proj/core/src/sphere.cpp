#include "wigstat/sphere.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "fft.hpp"
#include "wigstat/angular.hpp"
#include "wigstat/errors.hpp"

namespace wigstat::sphere {

namespace {

constexpr double kImagTolerance = 1e-10;

void require_state_dim(const QuantumState& psi, Spin J) {
  if (psi.dim() != spin_dim(J)) {
    throw Error(ErrorCode::kInvalidDimension, "state dimension " + std::to_string(psi.dim()) +
                                                  " does not match 2J+1 = " +
                                                  std::to_string(spin_dim(J)));
  }
}

struct JxSpectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

std::shared_ptr<const JxSpectrum> jx_spectrum(Spin J) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const JxSpectrum>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[J.twice()];
  if (!slot) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jx_matrix(J));
    slot = std::make_shared<const JxSpectrum>(JxSpectrum{solver.eigenvalues(), solver.eigenvectors()});
  }
  return slot;
}

}  // namespace

void require_spin(Spin J) {
  if (J.twice() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "spin must be >= 1/2");
  }
}

std::shared_ptr<const MultipoleTable> MultipoleTable::get(Spin J) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const MultipoleTable>> cache;
  require_spin(J);
  std::lock_guard lock(mutex);
  auto& slot = cache[J.twice()];
  if (!slot) slot = std::make_shared<const MultipoleTable>(J);
  return slot;
}

MultipoleTable::MultipoleTable(Spin J) : J_(J), dim_(spin_dim(J)) {
  require_spin(J);
  const int D = dim_;
  values_.assign(static_cast<std::size_t>(D) * D * D, 0.0);
  for (int q = -(D - 1); q <= D - 1; ++q) {
    for (int i = 0; i < D; ++i) {
      const int mi = i + q;  // row index of m = m' + q
      if (mi < 0 || mi >= D) continue;
      const HalfInteger mp = HalfInteger::from_twice(2 * i - J.twice());
      const HalfInteger m = HalfInteger::from_twice(2 * mi - J.twice());
      // (J k J; -m q m') = (k J J; q m' -m) by cyclic permutation
      const ThreeJFamily fam = wigner_3j_family(J, J, mp, -m);
      const double phase = ((D - 1 - mi) % 2 == 0) ? 1.0 : -1.0;  // (-1)^(J-m)
      for (std::size_t t = 0; t < fam.values.size(); ++t) {
        const int k = fam.l1_min.twice() / 2 + static_cast<int>(t);
        values_[slot(k, q) * D + i] = phase * std::sqrt(2.0 * k + 1.0) * fam.values[t];
      }
    }
  }
}

Eigen::MatrixXd multipole_matrix(int k, int q, Spin J) {
  require_spin(J);
  const int D = spin_dim(J);
  if (k < 0 || k > D - 1 || std::abs(q) > k) {
    throw Error(ErrorCode::kInvalidArgument, "multipole index out of range: k=" + std::to_string(k) +
                                                 " q=" + std::to_string(q));
  }
  const auto table = MultipoleTable::get(J);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(D, D);
  for (int i = 0; i < D; ++i) {
    if (i + q >= 0 && i + q < D) T(i + q, i) = table->element(k, q, i);
  }
  return T;
}

SphereWigner::SphereWigner(Spin J, std::vector<Complex> g) : J_(J), g_(std::move(g)) {
  require_spin(J);
  const std::size_t K = static_cast<std::size_t>(J.twice()) + 1;
  if (g_.size() != K * K) {
    throw Error(ErrorCode::kInvalidDimension, "coefficient table must hold (2J+1)^2 entries");
  }
}

double SphereWigner::scale() const {
  return std::sqrt(4.0 * std::numbers::pi * (J_.twice() + 1.0) / J_.twice());
}

double SphereWigner::mean_value(Spin J) { return 1.0 / std::sqrt(static_cast<double>(J.twice())); }

SphereWigner gkq_coefficients(const QuantumState& psi, Spin J) {
  require_spin(J);
  require_state_dim(psi, J);
  const auto table = MultipoleTable::get(J);
  const auto& c = psi.amplitudes();
  const int D = spin_dim(J);
  std::vector<Complex> g(static_cast<std::size_t>(D) * D);
  for (int k = 0; k < D; ++k) {
    for (int q = -k; q <= k; ++q) {
      Complex acc = 0.0;
      const int lo = std::max(0, -q);
      const int hi = std::min(D, D - q);
      for (int i = lo; i < hi; ++i) {
        acc += c[i + q] * std::conj(c[i]) * table->element(k, q, i);
      }
      g[static_cast<std::size_t>(k) * k + k + q] = acc;
    }
  }
  return SphereWigner(J, std::move(g));
}

double wigner_sphere_eval(const SphereWigner& w, double theta, double phi) {
  const int K = w.k_max();
  const LegendreTable P(K, theta);
  Complex acc = 0.0;
  for (int k = 0; k <= K; ++k) {
    acc += w.g(k, 0) * P.value(k, 0);
    for (int q = 1; q <= k; ++q) {
      const double sign = q % 2 == 0 ? 1.0 : -1.0;
      const Complex e = std::polar(P.value(k, q), q * phi);
      acc += w.g(k, q) * e + w.g(k, -q) * sign * std::conj(e);
    }
  }
  acc *= w.scale();
  if (!(std::abs(acc.imag()) < kImagTolerance)) {
    throw Error(ErrorCode::kNumerical, "sphere Wigner value has imaginary residual " +
                                           std::to_string(acc.imag()));
  }
  return acc.real();
}

std::vector<Complex> equator_coefficients(const SphereWigner& w) {
  const int K = w.k_max();
  const LegendreTable P(K, std::numbers::pi / 2);
  std::vector<Complex> z(K + 1);
  for (int q = 0; q <= K; ++q) {
    Complex acc = 0.0;
    for (int k = q; k <= K; ++k) acc += w.g(k, q) * P.value(k, q);
    z[q] = w.scale() * acc;
  }
  return z;
}

struct SphereQuadrature::Plan {
  detail::FftPlan fft;
};

SphereQuadrature::SphereQuadrature(Spin J) : J_(J) {
  require_spin(J);
  const int K = J.twice();
  const int n_theta = 2 * K + 1;  // 4J + 1
  n_phi_ = 4 * K + 2;             // 8J + 2
  const GaussLegendre gl = gauss_legendre(n_theta);
  theta_.resize(n_theta);
  weights_.resize(static_cast<std::size_t>(n_theta) * n_phi_);
  const std::size_t tsize = LegendreTable::size(K);
  legendre_.resize(tsize * n_theta);
  for (int t = 0; t < n_theta; ++t) {
    theta_[t] = std::acos(gl.nodes[t]);
    const double w = gl.weights[t] / (2.0 * n_phi_);
    for (int p = 0; p < n_phi_; ++p) weights_[static_cast<std::size_t>(t) * n_phi_ + p] = w;
    const LegendreTable P(K, theta_[t]);
    for (int k = 0; k <= K; ++k) {
      for (int q = 0; q <= k; ++q) legendre_[t * tsize + LegendreTable::offset(k) + q] = P.value(k, q);
    }
  }
  plan_ = std::make_unique<Plan>(
      Plan{detail::FftPlan(n_phi_, n_theta, 1, n_phi_, detail::FftSign::kBackward)});
}

SphereQuadrature::~SphereQuadrature() = default;
SphereQuadrature::SphereQuadrature(SphereQuadrature&&) noexcept = default;
SphereQuadrature& SphereQuadrature::operator=(SphereQuadrature&&) noexcept = default;

std::vector<double> SphereQuadrature::sample(const SphereWigner& w) const {
  if (w.J() != J_) throw Error(ErrorCode::kInvalidDimension, "spin mismatch between grid and state");
  const int K = J_.twice();
  const int n_theta = theta_count();
  const std::size_t tsize = LegendreTable::size(K);
  std::vector<Complex> buf(size(), 0.0);
  for (int t = 0; t < n_theta; ++t) {
    const double* P = legendre_.data() + t * tsize;
    Complex* row = buf.data() + static_cast<std::size_t>(t) * n_phi_;
    for (int q = -K; q <= K; ++q) {
      const int aq = std::abs(q);
      Complex acc = 0.0;
      for (int k = aq; k <= K; ++k) acc += w.g(k, q) * P[LegendreTable::offset(k) + aq];
      if (q < 0 && aq % 2 == 1) acc = -acc;
      row[q >= 0 ? q : q + n_phi_] = acc;
    }
  }
  plan_->fft.execute(buf);
  const double scale = w.scale();
  std::vector<double> values(size());
  double worst = 0.0;
  for (std::size_t i = 0; i < buf.size(); ++i) {
    values[i] = scale * buf[i].real();
    worst = std::max(worst, std::abs(scale * buf[i].imag()));
  }
  if (!(worst < kImagTolerance)) {
    throw Error(ErrorCode::kNumerical, "sphere Wigner grid imaginary residual " + std::to_string(worst));
  }
  return values;
}

QuantumState coherent_state(double theta0, double phi0, Spin J) {
  require_spin(J);
  const int D = spin_dim(J);
  const double c = std::cos(theta0 / 2);
  const double s = std::sin(theta0 / 2);
  const double twoJ = J.twice();
  Eigen::VectorXcd amps(D);
  for (int i = 0; i < D; ++i) {
    // m = i - J, so J + m = i and J - m = 2J - i
    const double log_binom = std::lgamma(twoJ + 1) - std::lgamma(i + 1.0) - std::lgamma(twoJ - i + 1);
    const double mag = std::exp(0.5 * log_binom) * std::pow(c, i) * std::pow(s, twoJ - i);
    const double m = i - 0.5 * twoJ;
    amps[i] = std::polar(mag, -m * phi0);
  }
  return QuantumState::normalized(std::move(amps));
}

void TopParams::validate() const {
  require_spin(J);
  if (!std::isfinite(alpha) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kInvalidArgument, "kicked-top parameters must be finite");
  }
}

Eigen::MatrixXd jx_matrix(Spin J) {
  require_spin(J);
  const int D = spin_dim(J);
  const double j = J.value();
  Eigen::MatrixXd Jx = Eigen::MatrixXd::Zero(D, D);
  for (int i = 0; i + 1 < D; ++i) {
    const double m = i - j;
    const double v = 0.5 * std::sqrt(j * (j + 1) - m * (m + 1));
    Jx(i + 1, i) = v;
    Jx(i, i + 1) = v;
  }
  return Jx;
}

KickedTop::KickedTop(const TopParams& params) : params_(params) {
  params_.validate();
  const int D = spin_dim(params_.J);
  const double j = params_.J.value();
  twist_.resize(D);
  for (int i = 0; i < D; ++i) {
    const double m = i - j;
    twist_[i] = std::polar(1.0, params_.alpha * m * m / (2.0 * j));
  }
  const auto spec = jx_spectrum(params_.J);
  Eigen::VectorXcd phases(D);
  for (int i = 0; i < D; ++i) phases[i] = std::polar(1.0, -params_.gamma * spec->eigenvalues[i]);
  const Eigen::MatrixXcd V = spec->eigenvectors.cast<Complex>();
  rotation_ = V * phases.asDiagonal() * V.transpose();
}

QuantumState KickedTop::step(const QuantumState& psi) const {
  require_state_dim(psi, params_.J);
  Eigen::VectorXcd c = rotation_ * psi.amplitudes().cwiseProduct(twist_);
  return QuantumState::from_unitary_image(std::move(c));
}

QuantumState kicked_top_step(const QuantumState& psi, const TopParams& params) {
  return KickedTop(params).step(psi);
}

}  // namespace wigstat::sphere
