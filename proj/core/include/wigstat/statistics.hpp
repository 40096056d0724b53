#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wigstat/torus.hpp"

namespace wigstat {

/// Non-owning view of Wigner values with their phase-space weights.
/// An empty weight span means uniform weights.
struct WeightedSamples {
  std::span<const double> values;
  std::span<const double> weights = {};

  std::size_t size() const { return values.size(); }
  bool uniform() const { return weights.empty(); }
};

/// Values below -kSignTolerance count as negative; roundoff-level values of
/// either sign count as non-negative.
inline constexpr double kSignTolerance = 1e-10;

struct StatsSummary {
  double mean = 0.0;
  double variance = 0.0;
  double excess = 0.0;
  double negative_fraction = 0.0;
  std::size_t sample_count = 0;
};

/// Weighted mean, variance, excess kurtosis and negative fraction.
StatsSummary moments_and_excess(WeightedSamples s);

struct Histogram {
  std::vector<double> edges;      // bins + 1 entries
  std::vector<double> densities;  // sum(density * width) = 1 over in-range weight
  double outside_weight = 0.0;    // weight fraction that fell outside the range

  std::size_t bins() const { return densities.size(); }
  double center(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
  double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
};

/// Density histogram; default range is [mean - 6, mean + 6].
Histogram value_histogram(WeightedSamples s, int bins,
                          std::optional<std::pair<double, double>> range = std::nullopt);

/// Unit-variance normal density centered at `mean`.
struct GaussianDensity {
  double mean = 0.0;
  double operator()(double w) const;
};

GaussianDensity gaussian_reference(double mean);

/// Weight of negative values of a unit-variance Gaussian with the given mean.
double gaussian_negative_fraction(double mean);

struct RadialPoint {
  double r = 0.0;
  double value = 0.0;
  std::size_t count = 0;
};

struct Autocorrelation {
  int N = 0;
  std::vector<double> grid;  // C(dn, dm) row-major in storage order
  std::vector<RadialPoint> radial;

  double at(int dn, int dm) const {
    return grid[static_cast<std::size_t>(torus::storage_index(dn, N)) * N + torus::storage_index(dm, N)];
  }
};

/// Circular autocorrelation C(dn, dm) = N^-2 sum W(n, m) W(n + dn, m + dm)
/// and its average over shells of equal rounded radius.
Autocorrelation autocorrelation_torus(const torus::TorusWigner& w);

/// Lyapunov exponent of the classical sawtooth map; K0 >= 0.
double lyapunov_sawtooth(double K0);

/// Two-sample Kolmogorov-Smirnov distance.
double ks_distance(std::span<const double> a, std::span<const double> b);

}  // namespace wigstat
