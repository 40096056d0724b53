#include "wigstat/angular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wigstat/errors.hpp"

namespace wigstat {

namespace {

constexpr double kHuge = 1e200;
constexpr double kTiny = 1e-200;

bool parity_ok(HalfInteger j, HalfInteger m) {
  return (j.twice() - m.twice()) % 2 == 0 && std::abs(m.twice()) <= j.twice();
}

// Recursion in l1 after Schulten and Gordon: forward from l1_min while the
// solution grows, backward from l1_max for the rest, matched on three points.
std::vector<double> family_values(double l2, double l3, double m2, double m3, double l1min, int n) {
  const double m1 = -m2 - m3;
  const double d2 = (l2 - l3) * (l2 - l3);
  const double p1 = (l2 + l3 + 1) * (l2 + l3 + 1);
  const double p2 = m1 * (l2 * (l2 + 1) - l3 * (l3 + 1));
  const double dm = m3 - m2;
  auto A = [&](double l1) {
    const double sq = l1 * l1;
    return std::sqrt(std::max(0.0, (sq - d2) * (p1 - sq) * (sq - m1 * m1)));
  };

  std::vector<double> f(n, 0.0);
  f[0] = 1.0;
  int i = 0;
  if (n > 1) {
    double l1 = l1min + 1;
    double a = A(l1);
    double c1 = l1 > 1.000001 ? (2 * l1 - 1) * (p2 - (l1 * l1 - l1) * dm) / ((l1 - 1) * a)
                              : -(2 * l1 - 1) * l1 * dm / a;
    f[1] = c1;
    i = 1;
    double olda = a;
    while (i + 1 < n) {
      l1 = l1min + i + 1;
      a = A(l1);
      const double c1old = std::abs(c1);
      c1 = (2 * l1 - 1) * (p2 - (l1 * l1 - l1) * dm) / ((l1 - 1) * a);
      const double c2 = l1 / ((l1 - 1) * a);
      f[i + 1] = f[i] * c1 - f[i - 1] * c2 * olda;
      olda = a;
      ++i;
      if (std::abs(f[i]) > kHuge) {
        for (int t = 0; t <= i; ++t) f[t] *= kTiny;
      }
      if (c1old <= std::abs(c1)) break;
    }
  }

  if (i + 1 < n) {
    const int split = i - 2;
    const double x0 = f[split], x1 = f[split + 1], x2 = f[split + 2];
    std::vector<double> g(n, 0.0);
    g[n - 1] = 1.0;
    int j = n - 1;
    double l1 = l1min + j - 1;
    double olda = A(l1 + 1);
    g[j - 1] = (2 * l1 + 3) * (p2 - ((l1 + 1) * (l1 + 1) + l1 + 1) * dm) / ((l1 + 2) * olda);
    --j;
    while (j > split) {
      l1 = l1min + j - 1;
      const double a = A(l1 + 1);
      const double c1 = (2 * l1 + 3) * (p2 - ((l1 + 1) * (l1 + 1) + l1 + 1) * dm) / ((l1 + 2) * a);
      const double c2 = (l1 + 1) / ((l1 + 2) * a);
      g[j - 1] = g[j] * c1 - g[j + 1] * c2 * olda;
      olda = a;
      --j;
      if (std::abs(g[j]) > kHuge) {
        for (int t = j; t < n; ++t) g[t] *= kTiny;
      }
    }
    const double r = (x0 * g[split] + x1 * g[split + 1] + x2 * g[split + 2]) /
                     (x0 * x0 + x1 * x1 + x2 * x2);
    for (int t = 0; t < split; ++t) f[t] *= r;
    for (int t = split; t < n; ++t) f[t] = g[t];
  }

  // normalize; rescale first so the squares cannot overflow
  double peak = 0.0;
  for (double v : f) peak = std::max(peak, std::abs(v));
  double sum = 0.0;
  for (int t = 0; t < n; ++t) {
    f[t] /= peak;
    sum += (2 * (l1min + t) + 1) * f[t] * f[t];
  }
  const double norm = 1.0 / std::sqrt(sum);
  for (double& v : f) v *= norm;
  return f;
}

}  // namespace

ThreeJFamily wigner_3j_family(HalfInteger l2, HalfInteger l3, HalfInteger m2, HalfInteger m3) {
  const HalfInteger m1 = -m2 - m3;
  const HalfInteger l1min = std::max(abs(l2 - l3), abs(m1));
  const HalfInteger l1max = l2 + l3;
  ThreeJFamily out{l1min, {}};
  if (!parity_ok(l2, m2) || !parity_ok(l3, m3) || l1min > l1max) return out;
  const int n = (l1max.twice() - l1min.twice()) / 2 + 1;
  out.values = family_values(l2.value(), l3.value(), m2.value(), m3.value(), l1min.value(), n);
  // phase convention: (l2+l3 l2 l3; m1 m2 m3) has sign (-1)^(l2-l3-m1)
  const int phase = std::abs((l2 - l3 - m1).twice() / 2);
  const double want = phase % 2 == 0 ? 1.0 : -1.0;
  if (out.values.back() * want < 0.0) {
    for (double& v : out.values) v = -v;
  }
  return out;
}

double wigner_3j(HalfInteger j1, HalfInteger j2, HalfInteger j3,
                 HalfInteger m1, HalfInteger m2, HalfInteger m3) {
  if ((m1 + m2 + m3).twice() != 0) return 0.0;
  if (!parity_ok(j1, m1) || !parity_ok(j2, m2) || !parity_ok(j3, m3)) return 0.0;
  if ((j1 + j2 + j3).twice() % 2 != 0) return 0.0;
  if (j1 < abs(j2 - j3) || j1 > j2 + j3) return 0.0;
  const ThreeJFamily fam = wigner_3j_family(j2, j3, m2, m3);
  if (fam.values.empty() || j1 < fam.l1_min) return 0.0;
  const int idx = (j1 - fam.l1_min).twice() / 2;
  return fam.values[idx];
}

LegendreTable::LegendreTable(int k_max, double theta) : k_max_(k_max), values_(size(k_max), 0.0) {
  if (k_max < 0) throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 0");
  const double x = std::cos(theta);
  const double s = std::sin(theta);
  double diag = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  for (int q = 0; q <= k_max; ++q) {
    if (q > 0) diag *= -std::sqrt((2.0 * q + 1.0) / (2.0 * q)) * s;
    values_[offset(q) + q] = diag;
    if (q + 1 > k_max) break;
    double prev2 = diag;
    double prev1 = std::sqrt(2.0 * q + 3.0) * x * diag;
    values_[offset(q + 1) + q] = prev1;
    for (int k = q + 2; k <= k_max; ++k) {
      const double kk = static_cast<double>(k) * k;
      const double a = std::sqrt((4.0 * kk - 1.0) / (kk - static_cast<double>(q) * q));
      const double km1 = k - 1.0;
      const double b = std::sqrt((km1 * km1 - static_cast<double>(q) * q) / (4.0 * km1 * km1 - 1.0));
      const double cur = a * (x * prev1 - b * prev2);
      values_[offset(k) + q] = cur;
      prev2 = prev1;
      prev1 = cur;
    }
  }
}

std::complex<double> spherical_harmonic(int k, int q, double theta, double phi) {
  if (k < 0 || std::abs(q) > k) {
    throw Error(ErrorCode::kInvalidArgument,
                "spherical harmonic needs |q| <= k, got k=" + std::to_string(k) + " q=" + std::to_string(q));
  }
  const LegendreTable table(k, theta);
  const int aq = std::abs(q);
  const std::complex<double> y = std::polar(table.value(k, aq), aq * phi);
  if (q >= 0) return y;
  return (aq % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "Gauss-Legendre order must be >= 1");
  GaussLegendre gl{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double pn = n == 1 ? x : p1;
      double pnm1 = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pnm1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

}  // namespace wigstat
