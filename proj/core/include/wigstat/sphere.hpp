#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "wigstat/half_integer.hpp"
#include "wigstat/state.hpp"

namespace wigstat::sphere {

/// Throws invalid-argument unless J >= 1/2.
void require_spin(Spin J);

/// Matrix elements of all multipole operators T_kq for one spin J.
///
/// T_kq is nonzero only on the band m = m' + q; element(k, q, i) is the entry
/// at column m' = i - J.  Tables are built once per J and shared.
class MultipoleTable {
 public:
  static std::shared_ptr<const MultipoleTable> get(Spin J);

  explicit MultipoleTable(Spin J);

  Spin J() const { return J_; }
  int dim() const { return dim_; }
  int k_max() const { return dim_ - 1; }
  /// Entry <J, m'+q | T_kq | J, m'> with m' = i - J; zero outside the band.
  double element(int k, int q, int i) const { return values_[slot(k, q) * dim_ + i]; }

 private:
  std::size_t slot(int k, int q) const { return static_cast<std::size_t>(k) * k + k + q; }

  Spin J_;
  int dim_;
  std::vector<double> values_;
};

/// Dense T_kq with rows/columns indexed by m + J.
Eigen::MatrixXd multipole_matrix(int k, int q, Spin J);

/// Multipole expansion coefficients G_kq of a spin state, k = 0 ... 2J.
class SphereWigner {
 public:
  SphereWigner(Spin J, std::vector<Complex> g);

  Spin J() const { return J_; }
  int k_max() const { return J_.twice(); }
  Complex g(int k, int q) const { return g_[static_cast<std::size_t>(k) * k + k + q]; }
  std::span<const Complex> coefficients() const { return g_; }

  /// Normalization C_s = sqrt(4 pi (2J+1) / 2J).
  double scale() const;
  /// Phase-space mean 1/sqrt(2J).
  static double mean_value(Spin J);

 private:
  Spin J_;
  std::vector<Complex> g_;
};

SphereWigner gkq_coefficients(const QuantumState& psi, Spin J);

/// W(theta, phi) = C_s sum G_kq Y_kq(theta, phi).
double wigner_sphere_eval(const SphereWigner& w, double theta, double phi);

/// Fourier coefficients Z_q, q = 0 ... 2J, of W restricted to the equator:
/// W(pi/2, phi) = Z_0 + sum_{q>0} (Z_q e^{iq phi} + c.c.).
std::vector<Complex> equator_coefficients(const SphereWigner& w);

/// Product quadrature with 4J+1 Gauss-Legendre nodes in cos(theta) and 8J+2
/// uniform nodes in phi; exact for polynomials of degree <= 8J on the sphere.
class SphereQuadrature {
 public:
  explicit SphereQuadrature(Spin J);
  ~SphereQuadrature();
  SphereQuadrature(SphereQuadrature&&) noexcept;
  SphereQuadrature& operator=(SphereQuadrature&&) noexcept;

  Spin J() const { return J_; }
  int theta_count() const { return static_cast<int>(theta_.size()); }
  int phi_count() const { return n_phi_; }
  std::size_t size() const { return theta_.size() * static_cast<std::size_t>(n_phi_); }

  std::span<const double> thetas() const { return theta_; }
  /// Weights of all grid points (theta-major), normalized to sum 1.
  std::span<const double> weights() const { return weights_; }

  /// W on all grid points, theta-major; cost O(J^3) + FFTs.
  std::vector<double> sample(const SphereWigner& w) const;

 private:
  struct Plan;
  Spin J_;
  int n_phi_;
  std::vector<double> theta_;
  std::vector<double> weights_;
  std::vector<double> legendre_;  // per theta node, LegendreTable layout
  std::unique_ptr<Plan> plan_;
};

/// Spin coherent state pointing along (theta0, phi0).
QuantumState coherent_state(double theta0, double phi0, Spin J);

struct TopParams {
  double alpha = 10.0;
  double gamma = 1.5707963267948966;
  Spin J = 50;

  void validate() const;
};

/// Kicked top U = exp(-i gamma Jx) exp(i alpha Jz^2 / 2J).  The Jx rotation
/// comes from a cached eigendecomposition; a step costs O(J^2).
class KickedTop {
 public:
  explicit KickedTop(const TopParams& params);

  const TopParams& params() const { return params_; }
  QuantumState step(const QuantumState& psi) const;

 private:
  TopParams params_;
  Eigen::VectorXcd twist_;
  Eigen::MatrixXcd rotation_;
};

QuantumState kicked_top_step(const QuantumState& psi, const TopParams& params);

/// Matrix of Jx in the |J, m> basis (index m + J).
Eigen::MatrixXd jx_matrix(Spin J);

}  // namespace wigstat::sphere
