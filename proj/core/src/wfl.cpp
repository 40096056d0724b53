#include "wigstat/wfl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "wigstat/errors.hpp"

namespace wigstat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Values of sum_q (a_q cos qt + b_q sin qt) + a0 at t_j = 2 pi j / P.
std::vector<double> sample_series(double a0, std::span<const double> a, std::span<const double> b, int P) {
  const int M = static_cast<int>(a.size());
  if (P <= 2 * M) throw Error(ErrorCode::kInvalidArgument, "sampling grid too coarse for the line");
  std::vector<Complex> buf(P, 0.0);
  buf[0] = a0;
  for (int q = 1; q <= M; ++q) {
    const Complex z(0.5 * a[q - 1], -0.5 * b[q - 1]);
    buf[q] += z;
    buf[P - q] += std::conj(z);
  }
  detail::FftPlan(P, detail::FftSign::kBackward).execute(buf);
  std::vector<double> out(P);
  for (int j = 0; j < P; ++j) out[j] = buf[j].real();
  return out;
}

std::vector<double> sample_line(const WFLine& line, int P) { return sample_series(line.u0, line.u, line.v, P); }

// Maximizes f on [a, b] assuming a single interior maximum.
template <class F>
double golden_max(F f, double a, double b, double tol) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

void require_oversample(int oversample) {
  if (oversample < 8) throw Error(ErrorCode::kInvalidArgument, "oversample must be >= 8");
}

}  // namespace

double WFLine::eval(double t) const {
  double acc = u0;
  const Complex step = std::polar(1.0, t);
  Complex e = step;
  for (int q = 1; q <= M; ++q) {
    acc += u[q - 1] * e.real() + v[q - 1] * e.imag();
    e *= step;
  }
  return acc;
}

double WFLine::second_derivative(double t) const {
  double acc = 0.0;
  const Complex step = std::polar(1.0, t);
  Complex e = step;
  for (int q = 1; q <= M; ++q) {
    acc -= static_cast<double>(q) * q * (u[q - 1] * e.real() + v[q - 1] * e.imag());
    e *= step;
  }
  return acc;
}

double WFLine::max_abs_second_derivative() const {
  if (M == 0) return 0.0;
  std::vector<double> a(M), b(M);
  for (int q = 1; q <= M; ++q) {
    a[q - 1] = -static_cast<double>(q) * q * u[q - 1];
    b[q - 1] = -static_cast<double>(q) * q * v[q - 1];
  }
  const int P = 64 * M;
  const auto d2 = sample_series(0.0, a, b, P);
  std::size_t best = 0;
  for (std::size_t j = 1; j < d2.size(); ++j) {
    if (std::abs(d2[j]) > std::abs(d2[best])) best = j;
  }
  const double h = kTwoPi / P;
  const double t0 = best * h;
  const double t = golden_max([this](double x) { return std::abs(second_derivative(x)); }, t0 - h, t0 + h, 1e-12);
  return std::max(std::abs(d2[best]), std::abs(second_derivative(t)));
}

bool WFLine::identically_zero() const {
  if (u0 != 0.0) return false;
  for (int q = 0; q < M; ++q) {
    if (u[q] != 0.0 || v[q] != 0.0) return false;
  }
  return true;
}

WFLine line_from_samples(std::span<const double> samples, double offset) {
  const int n = static_cast<int>(samples.size());
  if (n < 3 || n % 2 == 0) {
    throw Error(ErrorCode::kInvalidDimension, "line needs an odd number >= 3 of samples");
  }
  std::vector<Complex> z(samples.begin(), samples.end());
  detail::FftPlan(n, detail::FftSign::kForward).execute(z);
  WFLine line;
  line.M = (n - 1) / 2;
  line.u0 = z[0].real() / n - offset;
  line.u.resize(line.M);
  line.v.resize(line.M);
  for (int q = 1; q <= line.M; ++q) {
    line.u[q - 1] = 2.0 * z[q].real() / n;
    line.v[q - 1] = -2.0 * z[q].imag() / n;
  }
  return line;
}

WFLine wfl_torus(const QuantumState& psi, int n_fixed) {
  const auto samples = torus::wigner_position_line(psi, n_fixed);
  return line_from_samples(samples, torus::TorusWigner::mean_value(psi.dim()));
}

std::vector<WFLine> torus_lines(const torus::TorusWigner& w, TorusAxis axis) {
  const int N = w.N();
  const double offset = torus::TorusWigner::mean_value(N);
  std::vector<WFLine> lines;
  lines.reserve(N);
  for (int i = 0; i < N; ++i) {
    const auto samples = axis == TorusAxis::kFixedPosition ? w.position_line(i) : w.momentum_line(i);
    lines.push_back(line_from_samples(samples, offset));
  }
  return lines;
}

WFLine wfl_sphere(const QuantumState& psi, Spin J) {
  const auto z = sphere::equator_coefficients(sphere::gkq_coefficients(psi, J));
  WFLine line;
  line.M = J.twice();
  line.u0 = z[0].real() - sphere::SphereWigner::mean_value(J);
  line.u.resize(line.M);
  line.v.resize(line.M);
  for (int q = 1; q <= line.M; ++q) {
    line.u[q - 1] = 2.0 * z[q].real();
    line.v[q - 1] = -2.0 * z[q].imag();
  }
  return line;
}

double semicircle_variance(int q, Spin J) {
  const double j = J.value();
  const double x = (q - 1) / (2.0 * j);
  return 2.0 / (j * std::numbers::pi) * std::sqrt(std::max(0.0, 1.0 - x * x));
}

WFLine random_wfl(const Geometry& g, RngStream& rng) {
  WFLine line;
  if (const auto* t = std::get_if<TorusGeometry>(&g)) {
    torus::require_odd_dimension(t->N);
    line.M = (t->N - 1) / 2;
    const double var = 2.0 / (t->N - 1);
    line.u0 = std::sqrt(0.5 * var) * rng.normal();
    for (int q = 1; q <= line.M; ++q) {
      line.u.push_back(std::sqrt(var) * rng.normal());
      line.v.push_back(std::sqrt(var) * rng.normal());
    }
    return line;
  }
  const Spin J = std::get<SphereGeometry>(g).J;
  sphere::require_spin(J);
  line.M = J.twice();
  line.u0 = std::sqrt(0.5 * semicircle_variance(1, J)) * rng.normal();
  for (int q = 1; q <= line.M; ++q) {
    const double sd = std::sqrt(semicircle_variance(q, J));
    line.u.push_back(sd * rng.normal());
    line.v.push_back(sd * rng.normal());
  }
  return line;
}

std::vector<double> find_zeros(const WFLine& line, int oversample) {
  require_oversample(oversample);
  if (line.identically_zero()) throw Error(ErrorCode::kDegenerateLine, "line is identically zero");
  std::vector<double> zeros;
  if (line.M == 0) return zeros;
  const int P = oversample * line.M;
  const auto w = sample_line(line, P);
  double scale = 0.0;
  for (double x : w) scale = std::max(scale, std::abs(x));
  const double ftol = 1e-12 * scale;
  // |W''| <= sum q^2 |c_q| bounds the deviation from the chord inside a cell
  double curvature = 0.0;
  for (int q = 1; q <= line.M; ++q) curvature += static_cast<double>(q) * q * std::hypot(line.u[q - 1], line.v[q - 1]);

  auto bisect = [&](double a, double b, bool sa) {
    double mid = 0.5 * (a + b);
    while (b - a > 1e-12) {
      mid = 0.5 * (a + b);
      const double fm = line.eval(mid);
      if (std::abs(fm) <= ftol) break;
      if ((fm >= 0.0) == sa) {
        a = mid;
      } else {
        b = mid;
      }
      mid = 0.5 * (a + b);
    }
    zeros.push_back(std::fmod(mid, kTwoPi));
  };

  // a cell without a sign change may still hide a close pair of zeros;
  // split it until the curvature bound rules that out
  auto scan = [&](auto&& self, double a, double fa, double b, double fb) -> void {
    const bool sa = fa >= 0.0, sb = fb >= 0.0;
    if (sa != sb) {
      bisect(a, b, sa);
      return;
    }
    const double h = b - a;
    if (std::min(std::abs(fa), std::abs(fb)) > curvature * h * h / 8 || h < 1e-10) return;
    const double m = 0.5 * (a + b), fm = line.eval(m);
    self(self, a, fa, m, fm);
    self(self, m, fm, b, fb);
  };

  const double h = kTwoPi / P;
  for (int i = 0; i < P; ++i) scan(scan, i * h, w[i], (i + 1) * h, w[(i + 1) % P]);
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

StructureStats structure_statistics(std::span<const WFLine> lines, int oversample, int bins) {
  require_oversample(oversample);
  StructureStats out;
  int M = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const WFLine& line = lines[li];
    M = std::max(M, line.M);
    const auto zeros = find_zeros(line, oversample);
    out.zero_counts.push_back(static_cast<int>(zeros.size()));
    out.curvature.push_back(zeros.size() >= 2 ? line.max_abs_second_derivative() : 0.0);
    if (zeros.size() < 2) continue;
    const double h = kTwoPi / (oversample * line.M);
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      const double a = zeros[k];
      double b = k + 1 < zeros.size() ? zeros[k + 1] : zeros[0] + kTwoPi;
      const double s = b - a;
      const double sign = line.eval(a + 0.5 * s) >= 0.0 ? 1.0 : -1.0;
      // scan the arc, then refine around the best scan point
      const int steps = std::max(2, static_cast<int>(std::ceil(s / h)));
      const double dt = s / steps;
      int best = 1;
      double best_val = -1.0;
      for (int i = 1; i < steps; ++i) {
        const double val = sign * line.eval(a + i * dt);
        if (val > best_val) {
          best_val = val;
          best = i;
        }
      }
      const double lo = a + (best - 1) * dt, hi = a + (best + 1) * dt;
      const double t = golden_max([&](double x) { return sign * line.eval(x); }, lo, hi, 1e-10);
      const double A = sign * std::max(best_val, sign * line.eval(t));
      out.spacings.push_back(s);
      out.amplitudes.push_back(A);
      out.line_of.push_back(li);
    }
  }
  if (out.spacings.empty()) throw Error(ErrorCode::kEmptyStatistics, "no line has two or more zeros");

  double a_max = 0.0, s_max = 0.0;
  for (double A : out.amplitudes) a_max = std::max(a_max, std::abs(A));
  for (double s : out.spacings) s_max = std::max(s_max, s);
  out.spacing_histogram = value_histogram({out.spacings}, bins, std::pair{0.0, s_max});
  out.amplitude_histogram = value_histogram({out.amplitudes}, bins, std::pair{-a_max, a_max});

  JointHistogram& j = out.joint;
  const double s_hi = 4.0 * std::numbers::pi / M;
  j.s_edges.resize(kJointBins + 1);
  j.a_edges.resize(kJointBins + 1);
  for (int i = 0; i <= kJointBins; ++i) {
    j.s_edges[i] = s_hi * i / kJointBins;
    j.a_edges[i] = -a_max + 2.0 * a_max * i / kJointBins;
  }
  j.densities.assign(static_cast<std::size_t>(kJointBins) * kJointBins, 0.0);
  std::size_t inside = 0;
  const double ds = s_hi / kJointBins, da = 2.0 * a_max / kJointBins;
  for (std::size_t i = 0; i < out.spacings.size(); ++i) {
    const double s = out.spacings[i], A = out.amplitudes[i];
    if (s > s_hi || da <= 0.0) continue;
    const int bs = std::min(kJointBins - 1, static_cast<int>(s / ds));
    const int ba = std::min(kJointBins - 1, static_cast<int>((A + a_max) / da));
    j.densities[static_cast<std::size_t>(bs) * kJointBins + ba] += 1.0;
    ++inside;
  }
  if (inside > 0) {
    for (double& d : j.densities) d /= inside * ds * da;
  }
  return out;
}

ClusterDistribution discrete_cluster_distribution(const torus::TorusWigner& w, double offset) {
  const int N = w.N();
  ClusterDistribution out;
  out.counts.assign(N, 0);
  std::vector<bool> sign(N);
  for (int n = 0; n < N; ++n) {
    for (int k = 0; k < N; ++k) sign[k] = w.raw(n, k) - offset >= 0.0;
    int start = -1;
    for (int k = 0; k < N; ++k) {
      if (sign[k] != sign[(k + N - 1) % N]) {
        start = k;
        break;
      }
    }
    if (start < 0) {
      ++out.counts[N - 1];
      ++out.total;
      continue;
    }
    int run = 1;
    for (int i = 1; i <= N; ++i) {
      const int k = (start + i) % N;
      if (i < N && sign[k] == sign[(k + N - 1) % N]) {
        ++run;
      } else {
        ++out.counts[run - 1];
        ++out.total;
        run = 1;
      }
    }
  }
  return out;
}

}  // namespace wigstat
