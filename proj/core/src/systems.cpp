#include "wigstat/systems.hpp"

#include <cmath>

#include "wigstat/errors.hpp"

namespace wigstat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

int hilbert_dim(const Geometry& g) {
  return std::visit(overloaded{[](const TorusGeometry& t) { return t.N; },
                               [](const SphereGeometry& s) { return spin_dim(s.J); }},
                    g);
}

double wigner_mean(const Geometry& g) {
  return std::visit(
      overloaded{[](const TorusGeometry& t) { return torus::TorusWigner::mean_value(t.N); },
                 [](const SphereGeometry& s) { return sphere::SphereWigner::mean_value(s.J); }},
      g);
}

WignerSampler::WignerSampler(const Geometry& g) : geometry_(g) {
  if (const auto* s = std::get_if<SphereGeometry>(&g)) {
    quadrature_ = std::make_shared<const sphere::SphereQuadrature>(s->J);
  } else {
    torus::require_odd_dimension(std::get<TorusGeometry>(g).N);
  }
}

std::vector<double> WignerSampler::sample(const QuantumState& psi) const {
  if (quadrature_) {
    return quadrature_->sample(sphere::gkq_coefficients(psi, quadrature_->J()));
  }
  const int N = std::get<TorusGeometry>(geometry_).N;
  if (psi.dim() != N) {
    throw Error(ErrorCode::kInvalidDimension, "state dimension does not match the torus");
  }
  const auto w = torus::wigner(psi);
  return {w.values().begin(), w.values().end()};
}

std::span<const double> WignerSampler::weights() const {
  if (quadrature_) return quadrature_->weights();
  return {};
}

StatsSummary WignerSampler::summarize(const QuantumState& psi) const {
  const auto values = sample(psi);
  return moments_and_excess({values, weights()});
}

Geometry geometry_of(const MapConfig& config) {
  return std::visit(overloaded{[](const torus::TorusMapParams& p) -> Geometry { return TorusGeometry{p.N}; },
                               [](const sphere::TopParams& p) -> Geometry { return SphereGeometry{p.J}; }},
                    config);
}

Propagator::Propagator(const MapConfig& config) : config_(config) {
  std::visit(overloaded{[this](const torus::TorusMapParams& p) {
                          map_ = std::make_shared<const torus::SawtoothMap>(p);
                        },
                        [this](const sphere::TopParams& p) {
                          map_ = std::make_shared<const sphere::KickedTop>(p);
                        }},
             config_);
}

int Propagator::dim() const { return hilbert_dim(geometry_of(config_)); }

QuantumState Propagator::step(const QuantumState& psi) const {
  return std::visit([&](const auto& m) { return m->step(psi); }, map_);
}

}  // namespace wigstat
