#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wigstat/statistics.hpp"
#include "wigstat/systems.hpp"

namespace wigstat {

/// Center of a coherent initial state: (q, p) on the torus, (theta, phi) on
/// the sphere.
struct CoherentSpec {
  double a = 0.0;
  double b = 0.0;
};

QuantumState coherent_initial_state(const MapConfig& config, CoherentSpec spec);

struct RelaxationPoint {
  int t = 0;
  StatsSummary stats;
};

struct RelaxationResult {
  std::vector<RelaxationPoint> series;  // t = 0 ... t_max
  double excess_threshold = 0.0;
  /// First t with |excess| below the threshold.
  std::optional<int> t_r;
  /// First t with negative fraction above kNegativeFractionThreshold.
  std::optional<int> t_c;
};

inline constexpr double kNegativeFractionThreshold = 0.45;

/// Relaxation threshold max(0.05, 3 sqrt(24 / n)) for n phase-space samples.
double relaxation_threshold(std::size_t sample_count);

/// Evolves `initial` for t_max periods, summarizing the Wigner value
/// distribution after every step (t = 0 is the initial state).
RelaxationResult relaxation_scan(const MapConfig& config, const QuantumState& initial, int t_max);
RelaxationResult relaxation_scan(const MapConfig& config, CoherentSpec initial, int t_max);

/// Mean excess over kicks 2 ... t_r - 2, the window in which the pre-relaxation
/// plateau is read off; empty when the window is empty or t_r is unknown.
std::optional<double> plateau_excess(const RelaxationResult& r);

}  // namespace wigstat
