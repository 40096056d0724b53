// Acceptance suite: one PASS/FAIL line per criterion.
//   wigstat_acceptance               run all criteria
//   wigstat_acceptance --criterion 4 run one

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "wigstat/wigstat.hpp"

using namespace wigstat;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Verdict()> check;
};

std::string fmt(double x, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

// ---------------------------------------------------------------------------

Verdict exact_moments() {
  RngStream rng(101, 0);
  double torus_dev = 0, sphere_dev = 0;
  const int N = 101;
  const Spin J = 50;
  const WignerSampler torus_sampler(TorusGeometry{N}), sphere_sampler(SphereGeometry{J});
  auto track = [](double& worst, const StatsSummary& s) {
    worst = std::max({worst, std::abs(s.mean - 0.1), std::abs(s.variance - 1.0)});
  };
  for (int i = 0; i < 20; ++i) {
    track(torus_dev, torus_sampler.summarize(random_state(N, rng)));
    track(sphere_dev, sphere_sampler.summarize(random_state(spin_dim(J), rng)));
  }
  for (int i = 0; i < 5; ++i) {
    track(torus_dev, torus_sampler.summarize(torus::coherent_state(2 * kPi * rng.uniform(), 2 * kPi * rng.uniform(), N)));
    track(sphere_dev, sphere_sampler.summarize(sphere::coherent_state(kPi * rng.uniform(), 2 * kPi * rng.uniform(), J)));
  }
  return {torus_dev < 1e-10 && sphere_dev < 1e-8,
          "max |mean-0.1|,|var-1|: torus " + fmt(torus_dev) + " (< 1e-10), sphere " + fmt(sphere_dev) + " (< 1e-8)"};
}

Verdict kernel_correctness() {
  double ortho = 0, round_trip = 0;
  RngStream rng(102, 0);
  for (int N : {3, 5, 7}) {
    const int M = (N - 1) / 2;
    std::vector<Eigen::MatrixXcd> ks;
    for (int n = -M; n <= M; ++n)
      for (int k = -M; k <= M; ++k) ks.push_back(torus::kernel_matrix(n, k, N));
    for (std::size_t a = 0; a < ks.size(); ++a)
      for (std::size_t b = 0; b < ks.size(); ++b) {
        ortho = std::max(ortho, std::abs((ks[a] * ks[b]).trace() - (a == b ? 1.0 : 0.0)));
      }
    Eigen::MatrixXcd A(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) A(i, j) = Complex(rng.normal(), rng.normal());
    A = (A + A.adjoint()).eval();
    Eigen::MatrixXcd back = Eigen::MatrixXcd::Zero(N, N);
    for (const auto& w : ks) back += (w * A).trace() * w;
    round_trip = std::max(round_trip, (back - A).cwiseAbs().maxCoeff());
  }
  return {ortho < 1e-10 && round_trip < 1e-10,
          "orthonormality defect " + fmt(ortho) + ", round-trip error " + fmt(round_trip) + " (< 1e-10)"};
}

Verdict random_gaussianity() {
  const int N = 2187;
  RngStream rng(103, 0);
  const auto w = torus::wigner(random_state(N, rng));
  const WeightedSamples s{w.values()};
  const auto sum = moments_and_excess(s);
  const double mean = torus::TorusWigner::mean_value(N);
  const auto h = value_histogram(s, 80, std::pair{mean - 4.0, mean + 4.0});
  const auto gauss = gaussian_reference(mean);
  double dev = 0;
  for (std::size_t i = 0; i < h.bins(); ++i) dev = std::max(dev, std::abs(h.densities[i] - gauss(h.center(i))));
  const bool ok = std::abs(sum.excess) < 0.01 && std::abs(sum.negative_fraction - 0.5) < 0.005 && dev < 0.02;
  return {ok, "excess " + fmt(sum.excess) + " (|.| < 0.01), P- " + fmt(sum.negative_fraction, 5) +
                  " (|P- - 0.5| < 0.005), histogram deviation " + fmt(dev) + " (< 0.02)"};
}

const std::map<int, RelaxationResult>& scaling_runs() {
  static const std::map<int, RelaxationResult> runs = [] {
    std::map<int, RelaxationResult> out;
    for (int N : {243, 729, 2187}) {
      out[N] = relaxation_scan(torus::TorusMapParams{0.5, 1, N}, CoherentSpec{2 * kPi / 3, kPi / 3}, 30);
    }
    return out;
  }();
  return runs;
}

std::string opt(std::optional<int> t) { return t ? std::to_string(*t) : "none"; }

Verdict relaxation_scaling() {
  const auto& runs = scaling_runs();
  std::vector<int> tr;
  for (const auto& [N, r] : runs) {
    if (!r.t_r) return {false, "no relaxation within 30 kicks at N=" + std::to_string(N)};
    tr.push_back(*r.t_r);
  }
  const double expected = std::log(3.0) / std::log(2.0);
  bool ok = true;
  std::string detail = "t_r = " + std::to_string(tr[0]) + ", " + std::to_string(tr[1]) + ", " + std::to_string(tr[2]) +
                       "; increments";
  for (int i = 1; i < 3; ++i) {
    const int inc = tr[i] - tr[i - 1];
    ok = ok && std::abs(inc - expected) <= 1.5;
    detail += " " + std::to_string(inc);
  }
  detail += " (want 1.585 +/- 1.5)";
  const auto plateau = plateau_excess(runs.at(2187));
  if (plateau) {
    ok = ok && std::abs(*plateau - 0.65) <= 0.2;
    detail += "; plateau excess at N=2187 " + fmt(*plateau) + " (want 0.65 +/- 0.2)";
  } else {
    ok = false;
    detail += "; plateau window empty";
  }
  return {ok, detail};
}

Verdict k0_dependence() {
  const int N = 2187;
  const auto slow = relaxation_scan(torus::TorusMapParams{0.5, 1, N}, CoherentSpec{2 * kPi / 3, kPi / 3}, 30);
  const auto fast = relaxation_scan(torus::TorusMapParams{2.0, 1, N}, CoherentSpec{2 * kPi / 3, kPi / 3}, 30);
  if (!slow.t_r || !fast.t_r) return {false, "no relaxation within 30 kicks"};
  const double ratio = static_cast<double>(*slow.t_r) / *fast.t_r;
  const double target = lyapunov_sawtooth(2.0) / lyapunov_sawtooth(0.5);
  return {std::abs(ratio / target - 1.0) <= 0.35, "t_r(0.5) = " + std::to_string(*slow.t_r) + ", t_r(2) = " +
                                                       std::to_string(*fast.t_r) + ", ratio " + fmt(ratio) +
                                                       " (want " + fmt(target) + " +/- 35%)"};
}

Verdict negative_fraction_time() {
  bool ok = true;
  std::string detail;
  for (const auto& [N, r] : scaling_runs()) {
    if (!r.t_r || !r.t_c) {
      ok = false;
      detail += "N=" + std::to_string(N) + ": t_r " + opt(r.t_r) + " t_c " + opt(r.t_c) + "; ";
      continue;
    }
    const double ratio = static_cast<double>(*r.t_c) / *r.t_r;
    ok = ok && ratio >= 0.3 && ratio <= 0.8;
    detail += "N=" + std::to_string(N) + ": t_c/t_r = " + std::to_string(*r.t_c) + "/" + std::to_string(*r.t_r) + " = " +
              fmt(ratio, 3) + "; ";
  }
  return {ok, detail + "want [0.3, 0.8]"};
}

Verdict autocorrelation() {
  const int N = 101, states = 100;
  RngStream rng(107, 0);
  std::vector<double> mean_grid(static_cast<std::size_t>(N) * N, 0.0);
  for (int s = 0; s < states; ++s) {
    const auto c = autocorrelation_torus(torus::wigner(random_state(N, rng)));
    for (std::size_t i = 0; i < mean_grid.size(); ++i) mean_grid[i] += c.grid[i] / states;
  }
  const double origin = mean_grid[0];
  double off = 0;
  for (std::size_t i = 1; i < mean_grid.size(); ++i) off += mean_grid[i];
  off /= static_cast<double>(mean_grid.size() - 1);
  const bool ok = std::abs(off / 0.01 - 1.0) <= 0.1 && std::abs(origin - 1.01) < 1e-6;
  return {ok, "mean C(dx != 0) " + fmt(off, 6) + " (0.01 +/- 10%), C(0,0) " + fmt(origin, 10) + " (1.01 +/- 1e-6)"};
}

double sample_variance(const std::vector<double>& x) {
  double m = 0;
  for (double v : x) m += v;
  m /= static_cast<double>(x.size());
  double s = 0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

Verdict fourier_variances() {
  const int N = 101, M = 50, states = 10000;
  RngStream rng(108, 0);
  // every fixed-position line of every state; the ensemble is translation invariant
  std::vector<double> su(M, 0.0), suu(M, 0.0), sv(M, 0.0), svv(M, 0.0);
  double count = 0;
  for (int s = 0; s < states; ++s) {
    for (const auto& line : torus_lines(torus::wigner(random_state(N, rng)), TorusAxis::kFixedPosition)) {
      for (int q = 0; q < M; ++q) {
        su[q] += line.u[q];
        suu[q] += line.u[q] * line.u[q];
        sv[q] += line.v[q];
        svv[q] += line.v[q] * line.v[q];
      }
      count += 1;
    }
  }
  double torus_dev = 0;
  for (int q = 0; q < M; ++q) {
    const double vu = (suu[q] - su[q] * su[q] / count) / (count - 1);
    const double vv = (svv[q] - sv[q] * sv[q] / count) / (count - 1);
    torus_dev = std::max({torus_dev, std::abs(vu / 0.02 - 1), std::abs(vv / 0.02 - 1)});
  }

  const Spin J = 25;
  const int K = 2 * 25;
  RngStream rng_s(108, 1);
  std::vector<std::vector<double>> c(K);
  for (int s = 0; s < states; ++s) {
    const auto line = wfl_sphere(random_state(spin_dim(J), rng_s), J);
    for (int q = 0; q < K; ++q) {
      c[q].push_back(line.u[q]);
      c[q].push_back(line.v[q]);
    }
  }
  // least-squares scale of the semicircle profile, then rms residual
  double num = 0, den = 0;
  std::vector<double> var(K), shape(K);
  for (int q = 0; q < K; ++q) {
    var[q] = sample_variance(c[q]);
    shape[q] = semicircle_variance(q + 1, J);
    num += var[q] * shape[q];
    den += shape[q] * shape[q];
  }
  const double scale = num / den;
  double rss = 0, peak = 0;
  for (int q = 0; q < K; ++q) {
    rss += (var[q] - scale * shape[q]) * (var[q] - scale * shape[q]);
    peak = std::max(peak, scale * shape[q]);
  }
  const double rms = std::sqrt(rss / K) / peak;
  return {torus_dev < 0.05 && rms < 0.1, "torus max |var/0.02 - 1| " + fmt(torus_dev) + " (< 5%), sphere rms residual " +
                                             fmt(rms) + " of peak (< 10%), fitted scale " + fmt(scale)};
}

Verdict cluster_law() {
  const int N = 101;
  RngStream rng(109, 0);
  std::vector<std::size_t> counts(N, 0);
  std::size_t total = 0;
  for (int s = 0; s < 100; ++s) {
    const auto d = discrete_cluster_distribution(torus::wigner(random_state(N, rng)), torus::TorusWigner::mean_value(N));
    for (std::size_t i = 0; i < d.counts.size() && i < counts.size(); ++i) counts[i] += d.counts[i];
    total += d.total;
  }
  bool ok = true;
  std::string detail = "z-scores s=1..8:";
  for (int s = 1; s <= 8; ++s) {
    const double p = std::ldexp(1.0, -s);
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(total));
    const double z = (static_cast<double>(counts[s - 1]) / static_cast<double>(total) - p) / se;
    ok = ok && std::abs(z) < 3;
    detail += " " + fmt(z, 3);
  }
  return {ok, detail + " (|z| < 3, " + std::to_string(total) + " clusters)"};
}

Verdict eigenstate_statistics() {
  const Spin J = 50;
  auto top = [&](double alpha) {
    return excess_of_eigenstates(unitary_eigensystem(propagator_matrix(sphere::TopParams{alpha, kPi / 2, J})),
                                 SphereGeometry{J});
  };
  const auto chaotic = top(10.0), regular = top(0.1);
  RngStream rng(110, 0);
  const auto goe = goe_ensemble_excess(spin_dim(J), 10, SphereGeometry{J}, rng);
  const double ks = ks_distance(chaotic.sorted, goe.sorted);
  const double ratio = regular.median_abs() / chaotic.median_abs();
  return {ks < 0.2 && ratio >= 2, "KS(alpha=10, GOE) " + fmt(ks) + " (< 0.2); median |excess| alpha=10 " +
                                      fmt(chaotic.median_abs()) + ", GOE " + fmt(goe.median_abs()) + ", alpha=0.1 " +
                                      fmt(regular.median_abs()) + ", ratio " + fmt(ratio) + " (>= 2)"};
}

Verdict structure_agreement() {
  const int N = 101;
  RngStream rng(111, 0);
  std::vector<WFLine> model;
  for (int i = 0; i < 10000; ++i) model.push_back(random_wfl(TorusGeometry{N}, rng));

  // post-relaxation sawtooth states, strongly chaotic map
  const torus::TorusMapParams map{10.0, 1, N};
  const Propagator U(map);
  QuantumState psi = torus::coherent_state(2.1, 1.2, N);
  for (int t = 0; t < 20; ++t) psi = U.step(psi);
  std::vector<WFLine> dynamic;
  for (int t = 0; t < 40; ++t) {
    auto lines = torus_lines(torus::wigner(psi), TorusAxis::kFixedPosition);
    dynamic.insert(dynamic.end(), lines.begin(), lines.end());
    psi = U.step(psi);
  }
  const auto sm = structure_statistics(model), sd = structure_statistics(dynamic);
  const double ks_s = ks_distance(sm.spacings, sd.spacings);
  const double ks_a = ks_distance(sm.amplitudes, sd.amplitudes);
  std::vector<double> hills, valleys;
  for (double a : sm.amplitudes) (a > 0 ? hills : valleys).push_back(std::abs(a));
  const double ks_hv = ks_distance(hills, valleys);
  std::size_t violations = 0, small = 0;
  for (const auto* s : {&sm, &sd}) {
    for (std::size_t i = 0; i < s->spacings.size(); ++i) {
      if (s->spacings[i] >= 0.5 / 50) continue;
      ++small;
      const double bound = s->spacings[i] * s->spacings[i] / 8 * s->curvature[s->line_of[i]] + 1e-9;
      if (std::abs(s->amplitudes[i]) > bound) ++violations;
    }
  }
  const bool ok = ks_s < 0.05 && ks_a < 0.05 && ks_hv < 0.05 && violations == 0;
  return {ok, "KS spacing " + fmt(ks_s) + ", amplitude " + fmt(ks_a) + ", hills/valleys " + fmt(ks_hv) +
                  " (< 0.05); shell violations " + std::to_string(violations) + " of " + std::to_string(small)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wigstat acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-11)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "exact moment identities", 10, exact_moments},
      {2, "kernel correctness", 5, kernel_correctness},
      {3, "random-state Gaussianity", 60, random_gaussianity},
      {4, "relaxation scaling", 600, relaxation_scaling},
      {5, "K0 dependence", 600, k0_dependence},
      {6, "negative-fraction time", 600, negative_fraction_time},
      {7, "autocorrelation", 60, autocorrelation},
      {8, "Fourier-mode variances", 300, fourier_variances},
      {9, "cluster law", 60, cluster_law},
      {10, "eigenstate statistics", 300, eigenstate_statistics},
      {11, "structure-statistics agreement", 300, structure_agreement},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = v.pass && in_time;
    failed += !pass;
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " " << c.name << ": " << v.detail << " ["
              << fmt(secs, 3) << " s of " << c.budget_s << " s" << (in_time ? "" : ", over budget") << "]"
              << std::endl;
  }
  return failed ? 1 : 0;
}
