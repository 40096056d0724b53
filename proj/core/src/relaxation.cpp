#include "wigstat/relaxation.hpp"

#include <algorithm>
#include <cmath>

#include "wigstat/errors.hpp"

namespace wigstat {

QuantumState coherent_initial_state(const MapConfig& config, CoherentSpec spec) {
  if (const auto* p = std::get_if<torus::TorusMapParams>(&config)) {
    return torus::coherent_state(spec.a, spec.b, p->N);
  }
  return sphere::coherent_state(spec.a, spec.b, std::get<sphere::TopParams>(config).J);
}

double relaxation_threshold(std::size_t sample_count) {
  return std::max(0.05, 3.0 * std::sqrt(24.0 / static_cast<double>(sample_count)));
}

RelaxationResult relaxation_scan(const MapConfig& config, const QuantumState& initial, int t_max) {
  if (t_max < 1) throw Error(ErrorCode::kInvalidArgument, "t_max must be >= 1");
  const Propagator U(config);
  const WignerSampler sampler(geometry_of(config));
  RelaxationResult out;
  out.series.reserve(static_cast<std::size_t>(t_max) + 1);
  QuantumState psi = initial;
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) psi = U.step(psi);
    const StatsSummary s = sampler.summarize(psi);
    if (t == 0) out.excess_threshold = relaxation_threshold(s.sample_count);
    if (!out.t_r && std::abs(s.excess) < out.excess_threshold) out.t_r = t;
    if (!out.t_c && s.negative_fraction > kNegativeFractionThreshold) out.t_c = t;
    out.series.push_back({t, s});
  }
  return out;
}

RelaxationResult relaxation_scan(const MapConfig& config, CoherentSpec initial, int t_max) {
  return relaxation_scan(config, coherent_initial_state(config, initial), t_max);
}

std::optional<double> plateau_excess(const RelaxationResult& r) {
  if (!r.t_r) return std::nullopt;
  const int lo = 2, hi = *r.t_r - 2;
  if (hi < lo) return std::nullopt;
  double sum = 0.0;
  for (int t = lo; t <= hi; ++t) sum += r.series[t].stats.excess;
  return sum / (hi - lo + 1);
}

}  // namespace wigstat
