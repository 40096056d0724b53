#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wigstat/statistics.hpp"
#include "wigstat/systems.hpp"

namespace wigstat {

/// Offset-subtracted Wigner function along a closed line, as a real
/// trigonometric polynomial u0 + sum_q u_q cos(qt) + v_q sin(qt), q = 1 ... M.
struct WFLine {
  int M = 0;
  double u0 = 0.0;
  std::vector<double> u;  // u[q - 1]
  std::vector<double> v;  // v[q - 1]

  double eval(double t) const;
  double second_derivative(double t) const;
  /// max over t of |second derivative|, from a dense scan plus local refinement.
  double max_abs_second_derivative() const;
  bool identically_zero() const;
};

/// Line through an odd number of equidistant samples at t_k = 2 pi k / n,
/// minus `offset`; M = (n - 1) / 2.  The result interpolates the samples.
WFLine line_from_samples(std::span<const double> samples, double offset);

/// Line at fixed position n (symmetric index), momentum as parameter.
WFLine wfl_torus(const QuantumState& psi, int n_fixed);

enum class TorusAxis { kFixedPosition, kFixedMomentum };

/// All N lines of one family, read off an existing grid.
std::vector<WFLine> torus_lines(const torus::TorusWigner& w, TorusAxis axis);

/// Line along the equator, phi as parameter, M = 2J.
WFLine wfl_sphere(const QuantumState& psi, Spin J);

/// Variance of u_q and v_q in the sphere random model, q >= 1.
double semicircle_variance(int q, Spin J);

/// Random-model line with independent Gaussian coefficients: on the torus
/// var(u0) = 1/(N-1) and var(u_q) = var(v_q) = 2/(N-1); on the sphere the
/// semicircle profile with var(u0) = var(u_1)/2.
WFLine random_wfl(const Geometry& g, RngStream& rng);

inline constexpr int kDefaultOversample = 16;

/// Sorted zeros in [0, 2 pi), bracketed on a grid of oversample * M points and
/// refined by bisection.
std::vector<double> find_zeros(const WFLine& line, int oversample = kDefaultOversample);

struct JointHistogram {
  std::vector<double> s_edges;
  std::vector<double> a_edges;
  std::vector<double> densities;  // row-major, s-major
  std::size_t s_bins() const { return s_edges.size() - 1; }
  std::size_t a_bins() const { return a_edges.size() - 1; }
  double density(std::size_t i, std::size_t j) const { return densities[i * a_bins() + j]; }
};

struct StructureStats {
  std::vector<double> spacings;
  std::vector<double> amplitudes;     // signed extremum on each arc
  std::vector<std::size_t> line_of;   // source line index of each arc
  std::vector<int> zero_counts;       // per line
  std::vector<double> curvature;      // per line, max |second derivative|
  Histogram spacing_histogram;
  Histogram amplitude_histogram;
  JointHistogram joint;
};

inline constexpr int kJointBins = 60;

/// Spacings between adjacent zeros and the extremal value on each arc,
/// aggregated over all lines, with 1-d and joint histograms.
StructureStats structure_statistics(std::span<const WFLine> lines, int oversample = kDefaultOversample,
                                    int bins = kJointBins);

struct ClusterDistribution {
  std::vector<std::size_t> counts;  // counts[s - 1] clusters of length s
  std::size_t total = 0;
  double probability(int s) const {
    return s >= 1 && s <= static_cast<int>(counts.size()) && total > 0
               ? static_cast<double>(counts[s - 1]) / static_cast<double>(total)
               : 0.0;
  }
};

/// Lengths of cyclic runs of constant sign of W - offset along every
/// fixed-position line; values equal to the offset count as positive.
ClusterDistribution discrete_cluster_distribution(const torus::TorusWigner& w, double offset);

}  // namespace wigstat
