#pragma once

#include <complex>
#include <vector>

#include "wigstat/half_integer.hpp"

namespace wigstat {

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3).  Returns 0 when a selection rule
/// fails.  Evaluated by the three-term recursion in j1 (stable for large j).
double wigner_3j(HalfInteger j1, HalfInteger j2, HalfInteger j3,
                 HalfInteger m1, HalfInteger m2, HalfInteger m3);

/// All symbols (l1 l2 l3; -m2-m3 m2 m3) for l1 = l1_min ... l2 + l3.
struct ThreeJFamily {
  HalfInteger l1_min;
  std::vector<double> values;

  HalfInteger l1_max() const {
    return l1_min + HalfInteger::from_twice(2 * (static_cast<int>(values.size()) - 1));
  }
};

ThreeJFamily wigner_3j_family(HalfInteger l2, HalfInteger l3, HalfInteger m2, HalfInteger m3);

/// Orthonormal associated Legendre functions including the Condon-Shortley
/// phase: value(k, q) = Y_kq(theta, 0) for 0 <= q <= k <= k_max.
class LegendreTable {
 public:
  LegendreTable(int k_max, double theta);

  int k_max() const { return k_max_; }
  double value(int k, int q) const { return values_[offset(k) + q]; }

  static std::size_t offset(int k) { return static_cast<std::size_t>(k) * (k + 1) / 2; }
  static std::size_t size(int k_max) { return offset(k_max + 1); }

 private:
  int k_max_;
  std::vector<double> values_;
};

/// Orthonormal spherical harmonic with Condon-Shortley phase.
std::complex<double> spherical_harmonic(int k, int q, double theta, double phi);

/// Gauss-Legendre nodes on [-1, 1] in increasing order, weights summing to 2.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

}  // namespace wigstat
