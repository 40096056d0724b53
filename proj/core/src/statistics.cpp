#include "wigstat/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "wigstat/errors.hpp"

namespace wigstat {

namespace {

void validate(WeightedSamples s) {
  if (!s.uniform() && s.weights.size() != s.values.size()) {
    throw Error(ErrorCode::kInvalidArgument, "values and weights differ in length");
  }
}

}  // namespace

StatsSummary moments_and_excess(WeightedSamples s) {
  validate(s);
  const std::size_t n = s.size();
  if (n < 2) throw Error(ErrorCode::kEmptyInput, "at least two samples are required");

  auto weight = [&](std::size_t i) -> long double { return s.uniform() ? 1.0L : s.weights[i]; };

  long double wsum = 0, m1 = 0, neg = 0;
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double w = weight(i);
    if (w < 0) throw Error(ErrorCode::kInvalidArgument, "negative weight");
    wsum += w;
    m1 += w * s.values[i];
    if (s.values[i] < -kSignTolerance) neg += w;
    peak = std::max(peak, std::abs(s.values[i]));
  }
  if (!(wsum > 0)) throw Error(ErrorCode::kInvalidArgument, "weights sum to zero");
  const long double mean = m1 / wsum;

  long double m2 = 0, m4 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double d = s.values[i] - mean;
    const long double d2 = d * d;
    m2 += weight(i) * d2;
    m4 += weight(i) * d2 * d2;
  }
  m2 /= wsum;
  m4 /= wsum;
  const double floor = 1e-14 * peak;
  if (!(m2 > floor * floor)) {
    throw Error(ErrorCode::kDegenerateDistribution, "zero variance, excess undefined");
  }

  StatsSummary out;
  out.mean = static_cast<double>(mean);
  out.variance = static_cast<double>(m2);
  out.excess = static_cast<double>(m4 / (m2 * m2) - 3.0L);
  out.negative_fraction = static_cast<double>(neg / wsum);
  out.sample_count = n;
  return out;
}

Histogram value_histogram(WeightedSamples s, int bins, std::optional<std::pair<double, double>> range) {
  validate(s);
  if (s.size() == 0) throw Error(ErrorCode::kEmptyInput, "cannot histogram an empty sample");
  if (bins < 2) throw Error(ErrorCode::kInvalidArgument, "at least two bins are required");

  auto weight = [&](std::size_t i) { return s.uniform() ? 1.0 : s.weights[i]; };
  double lo, hi;
  if (range) {
    std::tie(lo, hi) = *range;
  } else {
    long double wsum = 0, m1 = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      wsum += weight(i);
      m1 += weight(i) * s.values[i];
    }
    const double mean = static_cast<double>(m1 / wsum);
    lo = mean - 6.0;
    hi = mean + 6.0;
  }
  if (!(hi > lo)) throw Error(ErrorCode::kInvalidArgument, "histogram range is empty");

  Histogram h;
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / bins;
  for (int i = 0; i <= bins; ++i) h.edges[i] = lo + i * width;
  h.edges[bins] = hi;
  std::vector<long double> mass(bins, 0.0L);
  long double inside = 0, total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double v = s.values[i];
    total += weight(i);
    if (v < lo || v > hi) continue;
    const int b = std::min(bins - 1, static_cast<int>((v - lo) / width));
    mass[b] += weight(i);
    inside += weight(i);
  }
  h.densities.assign(bins, 0.0);
  if (inside > 0) {
    for (int b = 0; b < bins; ++b) h.densities[b] = static_cast<double>(mass[b] / inside) / h.width(b);
  }
  h.outside_weight = total > 0 ? static_cast<double>(1.0L - inside / total) : 0.0;
  return h;
}

double GaussianDensity::operator()(double w) const {
  const double d = w - mean;
  return std::exp(-0.5 * d * d) / std::sqrt(2.0 * std::numbers::pi);
}

GaussianDensity gaussian_reference(double mean) { return GaussianDensity{mean}; }

double gaussian_negative_fraction(double mean) { return 0.5 * std::erfc(mean / std::numbers::sqrt2); }

Autocorrelation autocorrelation_torus(const torus::TorusWigner& w) {
  const int N = w.N();
  const std::size_t NN = static_cast<std::size_t>(N) * N;
  std::vector<Complex> buf(w.values().begin(), w.values().end());
  const detail::FftPlan rows_fwd(N, N, 1, N, detail::FftSign::kForward);
  const detail::FftPlan cols_fwd(N, N, N, 1, detail::FftSign::kForward);
  const detail::FftPlan rows_bwd(N, N, 1, N, detail::FftSign::kBackward);
  const detail::FftPlan cols_bwd(N, N, N, 1, detail::FftSign::kBackward);
  rows_fwd.execute(buf);
  cols_fwd.execute(buf);
  for (auto& z : buf) z = std::norm(z);
  rows_bwd.execute(buf);
  cols_bwd.execute(buf);

  Autocorrelation out;
  out.N = N;
  out.grid.resize(NN);
  const double scale = 1.0 / (static_cast<double>(NN) * static_cast<double>(NN));
  for (std::size_t i = 0; i < NN; ++i) out.grid[i] = buf[i].real() * scale;

  std::map<long, std::pair<long double, std::size_t>> shells;
  for (int i = 0; i < N; ++i) {
    const double dn = torus::symmetric_index(i, N);
    for (int j = 0; j < N; ++j) {
      const double dm = torus::symmetric_index(j, N);
      const long r = std::lround(std::sqrt(dn * dn + dm * dm));
      auto& [sum, count] = shells[r];
      sum += out.grid[static_cast<std::size_t>(i) * N + j];
      ++count;
    }
  }
  for (const auto& [r, acc] : shells) {
    out.radial.push_back({static_cast<double>(r), static_cast<double>(acc.first / acc.second), acc.second});
  }
  return out;
}

double lyapunov_sawtooth(double K0) {
  if (!(K0 >= 0.0)) {
    throw Error(ErrorCode::kOutOfDomain, "sawtooth Lyapunov exponent needs K0 >= 0");
  }
  const double a = 2.0 + K0;
  return std::log((a + std::sqrt(a * a - 4.0)) / 2.0);
}

double ks_distance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::kEmptyInput, "KS distance needs two non-empty samples");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    d = std::max(d, std::abs(i / nx - j / ny));
  }
  return d;
}

}  // namespace wigstat
