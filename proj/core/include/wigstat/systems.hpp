#pragma once

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "wigstat/sphere.hpp"
#include "wigstat/statistics.hpp"
#include "wigstat/torus.hpp"

namespace wigstat {

struct TorusGeometry {
  int N = 101;
};

struct SphereGeometry {
  Spin J = 50;
};

using Geometry = std::variant<TorusGeometry, SphereGeometry>;

/// Hilbert-space dimension of a geometry (N or 2J+1).
int hilbert_dim(const Geometry& g);

/// Phase-space mean of every pure-state Wigner function in the geometry.
double wigner_mean(const Geometry& g);

/// Wigner values of states on a fixed phase-space sample: the full N x N mesh
/// on the torus, the quadrature grid on the sphere.
class WignerSampler {
 public:
  explicit WignerSampler(const Geometry& g);

  const Geometry& geometry() const { return geometry_; }
  std::vector<double> sample(const QuantumState& psi) const;
  /// Empty for the torus (uniform weights).
  std::span<const double> weights() const;
  StatsSummary summarize(const QuantumState& psi) const;

 private:
  Geometry geometry_;
  std::shared_ptr<const sphere::SphereQuadrature> quadrature_;
};

using MapConfig = std::variant<torus::TorusMapParams, sphere::TopParams>;

Geometry geometry_of(const MapConfig& config);

/// One period of either map.
class Propagator {
 public:
  explicit Propagator(const MapConfig& config);

  const MapConfig& config() const { return config_; }
  int dim() const;
  QuantumState step(const QuantumState& psi) const;

 private:
  MapConfig config_;
  std::variant<std::shared_ptr<const torus::SawtoothMap>, std::shared_ptr<const sphere::KickedTop>> map_;
};

}  // namespace wigstat
