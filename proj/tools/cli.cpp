#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "wigstat/wigstat.hpp"

namespace wigstat::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string system = "sawtooth";
  std::string geometry = "torus";
  int N = 101;
  double K0 = 0.5;
  int L = 1;
  double J = 50;
  double alpha = 10.0;
  double gamma = std::numbers::pi / 2;
  std::string init;
  int t_min = 0;
  int t_max = 10;
  std::uint64_t seed = 0;
  std::string out;
  int bins = 100;
  int states = 100;
  int realizations = 10;
  int lines = 10000;
  int oversample = kDefaultOversample;
  bool no_timestamp = false;
};

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); }

Spin spin_of(double J) {
  const double twice = 2 * J;
  const long rounded = std::lround(twice);
  if (std::abs(twice - rounded) > 1e-9 || rounded < 1) config_error("--J must be a positive multiple of 1/2");
  return Spin::from_twice(static_cast<int>(rounded));
}

std::string spin_text(Spin J) {
  return J.is_integer() ? std::to_string(J.twice() / 2) : std::to_string(J.twice()) + "/2";
}

bool dynamical(const Options& o) { return o.system == "sawtooth" || o.system == "kicked-top"; }

MapConfig map_config(const Options& o) {
  if (o.system == "sawtooth") {
    const torus::TorusMapParams p{o.K0, o.L, o.N};
    p.validate();
    return p;
  }
  if (o.system == "kicked-top") {
    const sphere::TopParams p{o.alpha, o.gamma, spin_of(o.J)};
    p.validate();
    return p;
  }
  config_error("system '" + o.system + "' has no dynamics for this subcommand");
}

Geometry geometry_of(const Options& o) {
  if (dynamical(o)) return wigstat::geometry_of(map_config(o));
  if (o.geometry == "torus") {
    torus::require_odd_dimension(o.N);
    return TorusGeometry{o.N};
  }
  if (o.geometry == "sphere") return SphereGeometry{spin_of(o.J)};
  config_error("unknown geometry '" + o.geometry + "'");
}

bool is_torus(const Geometry& g) { return std::holds_alternative<TorusGeometry>(g); }

double parse_real(const std::string& text) {
  double x = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size()) config_error("not a number: '" + text + "'");
  return x;
}

// coherent[:a=..,b=..] | random | basis:i
QuantumState initial_state(const Options& o, const MapConfig& cfg, CoherentSpec fallback, RngStream& rng) {
  const int dim = hilbert_dim(wigstat::geometry_of(cfg));
  const std::string& s = o.init;
  if (s == "random") return random_state(dim, rng);
  if (s.rfind("basis:", 0) == 0) {
    long i = 0;
    const std::string idx = s.substr(6);
    const auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), i);
    if (ec != std::errc() || ptr != idx.data() + idx.size()) config_error("bad basis index in '" + s + "'");
    return QuantumState::basis(dim, static_cast<int>(i));
  }
  if (s.empty() || s == "coherent") return coherent_initial_state(cfg, fallback);
  if (s.rfind("coherent:", 0) != 0) config_error("unknown initial state '" + s + "'");
  const bool torus = std::holds_alternative<torus::TorusMapParams>(cfg);
  const char* first = torus ? "q" : "theta";
  const char* second = torus ? "p" : "phi";
  CoherentSpec spec = fallback;
  std::stringstream fields(s.substr(9));
  std::string field;
  while (std::getline(fields, field, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) config_error("expected key=value in '" + s + "'");
    const std::string key = field.substr(0, eq);
    const double value = parse_real(field.substr(eq + 1));
    if (key == first) {
      spec.a = value;
    } else if (key == second) {
      spec.b = value;
    } else {
      config_error("unknown coherent-state coordinate '" + key + "'");
    }
  }
  return coherent_initial_state(cfg, spec);
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

class Output {
 public:
  Output(const Options& o, std::string command) : dir_(o.out), command_(std::move(command)) {
    if (dir_.empty()) {
      const char* env = std::getenv("WIGSTAT_OUTPUT_DIR");
      dir_ = env && *env ? env : ".";
    }
    header_.push_back("wigstat " + std::string(kVersion) + " " + command_);
    std::ostringstream cfg;
    cfg << "system=" << o.system;
    if (o.system == "sawtooth") {
      cfg << " N=" << o.N << " K0=" << format_real(o.K0) << " L=" << o.L;
    } else if (o.system == "kicked-top") {
      cfg << " J=" << spin_text(spin_of(o.J)) << " alpha=" << format_real(o.alpha)
          << " gamma=" << format_real(o.gamma);
    } else {
      cfg << " geometry=" << o.geometry;
      cfg << (o.geometry == "sphere" ? " J=" + spin_text(spin_of(o.J)) : " N=" + std::to_string(o.N));
    }
    header_.push_back(cfg.str());
    header_.push_back("init=" + (o.init.empty() ? std::string("coherent") : o.init) +
                      " t_min=" + std::to_string(o.t_min) + " t_max=" + std::to_string(o.t_max) +
                      " seed=" + std::to_string(o.seed));
    header_.push_back("bins=" + std::to_string(o.bins) + " states=" + std::to_string(o.states) +
                      " realizations=" + std::to_string(o.realizations) + " lines=" + std::to_string(o.lines) +
                      " oversample=" + std::to_string(o.oversample));
    if (!o.no_timestamp) header_.push_back("created " + timestamp());
  }

  void note(std::string line) { notes_.push_back(std::move(line)); }

  std::filesystem::path write(const std::string& name, std::vector<std::string> columns,
                              std::span<const double> data) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir_.string() + ": " + ec.message());
    std::vector<std::string> header = header_;
    header.insert(header.end(), notes_.begin(), notes_.end());
    const auto path = dir_ / (name + ".csv");
    write_csv(path, header, columns, data);
    return path;
  }

 private:
  std::filesystem::path dir_;
  std::string command_;
  std::vector<std::string> header_;
  std::vector<std::string> notes_;
};

std::string step_name(const std::string& stem, int t) {
  std::ostringstream os;
  os << stem << "_t" << std::setw(3) << std::setfill('0') << t;
  return os.str();
}

void require_positive(int value, const char* flag) {
  if (value < 1) config_error(std::string(flag) + " must be positive");
}

void require_window(const Options& o) {
  if (o.t_min < 0 || o.t_max < o.t_min) config_error("need 0 <= --t-min <= --t-max");
}

// Visits the evolved state at t = 0 ... t_max.
void evolve_states(const Options& o, CoherentSpec fallback,
                   const std::function<void(int, const QuantumState&)>& visit) {
  const MapConfig cfg = map_config(o);
  RngStream rng(o.seed, 0);
  QuantumState psi = initial_state(o, cfg, fallback, rng);
  const Propagator U(cfg);
  for (int t = 0; t <= o.t_max; ++t) {
    if (t > 0) psi = U.step(psi);
    visit(t, psi);
  }
}

constexpr CoherentSpec kEvolutionCenter{2 * std::numbers::pi / 3, std::numbers::pi / 3};
constexpr CoherentSpec kAutocorrCenter{2.1, 1.2};

void cmd_evolve(const Options& o, std::ostream& out) {
  require_window(o);
  Output files(o, "evolve");
  const Geometry g = geometry_of(o);
  const WignerSampler sampler(g);
  evolve_states(o, kEvolutionCenter, [&](int t, const QuantumState& psi) {
    if (t < o.t_min) return;
    const auto w = sampler.sample(psi);
    std::vector<double> rows;
    if (const auto* tg = std::get_if<TorusGeometry>(&g)) {
      const int N = tg->N, M = (N - 1) / 2;
      rows.reserve(3 * w.size());
      for (int n = -M; n <= M; ++n)
        for (int k = -M; k <= M; ++k) {
          rows.insert(rows.end(), {double(n), double(k),
                                   w[static_cast<std::size_t>(torus::storage_index(n, N)) * N + torus::storage_index(k, N)]});
        }
      files.write(step_name("evolve", t), {"n", "k", "w"}, rows);
    } else {
      const sphere::SphereQuadrature quad(std::get<SphereGeometry>(g).J);
      const auto weights = quad.weights();
      rows.reserve(4 * w.size());
      for (int i = 0; i < quad.theta_count(); ++i)
        for (int j = 0; j < quad.phi_count(); ++j) {
          const std::size_t idx = static_cast<std::size_t>(i) * quad.phi_count() + j;
          rows.insert(rows.end(), {quad.thetas()[i], 2 * std::numbers::pi * j / quad.phi_count(), weights[idx], w[idx]});
        }
      files.write(step_name("evolve", t), {"theta", "phi", "weight", "w"}, rows);
    }
  });
  out << "wrote " << (o.t_max - o.t_min + 1) << " grids\n";
}

void cmd_value_stats(const Options& o, std::ostream& out) {
  require_window(o);
  require_positive(o.bins, "--bins");
  Output files(o, "value-stats");
  const Geometry g = geometry_of(o);
  const WignerSampler sampler(g);
  const double mean = wigner_mean(g);
  const GaussianDensity gauss = gaussian_reference(mean);
  std::vector<double> stats, hist;
  auto record = [&](int t, const QuantumState& psi) {
    if (t < o.t_min) return;
    const auto values = sampler.sample(psi);
    const WeightedSamples s{values, sampler.weights()};
    const auto sum = moments_and_excess(s);
    stats.insert(stats.end(), {double(t), sum.mean, sum.variance, sum.excess, sum.negative_fraction,
                               gaussian_negative_fraction(mean)});
    const auto h = value_histogram(s, o.bins, std::pair{mean - 6.0, mean + 6.0});
    for (std::size_t i = 0; i < h.bins(); ++i) hist.insert(hist.end(), {double(t), h.center(i), h.densities[i], gauss(h.center(i))});
  };
  if (dynamical(o)) {
    evolve_states(o, kEvolutionCenter, record);
  } else {
    // random-model: one independent random state per index
    RngStream rng(o.seed, 0);
    const int dim = hilbert_dim(g);
    for (int i = 0; i < o.states; ++i) record(i, random_state(dim, rng));
  }
  files.write("value_stats", {"t", "mean", "variance", "excess", "neg_fraction", "gaussian_neg_fraction"}, stats);
  files.write("value_hist", {"t", "w", "density", "gaussian"}, hist);
  out << "wrote " << stats.size() / 6 << " distributions\n";
}

void cmd_relaxation(const Options& o, std::ostream& out) {
  if (o.t_max < 1) config_error("--t-max must be at least 1");
  Output files(o, "relaxation");
  const MapConfig cfg = map_config(o);
  RngStream rng(o.seed, 0);
  const auto r = relaxation_scan(cfg, initial_state(o, cfg, kEvolutionCenter, rng), o.t_max);
  auto opt = [](std::optional<int> t) { return t ? std::to_string(*t) : std::string("none"); };
  std::ostringstream summary;
  summary << "t_r=" << opt(r.t_r) << " t_c=" << opt(r.t_c) << " threshold=" << format_real(r.excess_threshold);
  if (const auto plateau = plateau_excess(r)) summary << " plateau=" << format_real(*plateau);
  if (const auto* p = std::get_if<torus::TorusMapParams>(&cfg)) summary << " lyapunov=" << format_real(lyapunov_sawtooth(p->K0));
  files.note(summary.str());
  std::vector<double> rows;
  for (const auto& p : r.series) rows.insert(rows.end(), {double(p.t), p.stats.excess, p.stats.negative_fraction});
  files.write("relaxation", {"t", "excess", "neg_fraction"}, rows);
  out << summary.str() << "\n";
}

void cmd_autocorr(const Options& o, std::ostream& out) {
  require_window(o);
  if (o.system != "sawtooth" && !(o.system == "random-model" && o.geometry == "torus")) {
    config_error("autocorr needs the torus (sawtooth or random-model)");
  }
  Output files(o, "autocorr");
  const int N = o.N;
  torus::require_odd_dimension(N);
  std::vector<double> grid(static_cast<std::size_t>(N) * N, 0.0);
  std::vector<double> radial_sum;
  std::vector<double> radii;
  std::vector<std::size_t> radial_count;
  int averaged = 0;
  auto accumulate = [&](const Autocorrelation& c, bool keep_grid) {
    if (keep_grid) grid = c.grid;
    if (radial_sum.empty()) {
      radial_sum.assign(c.radial.size(), 0.0);
      radial_count.assign(c.radial.size(), 0);
      for (const auto& p : c.radial) radii.push_back(p.r);
    }
    for (std::size_t i = 0; i < c.radial.size(); ++i) {
      radial_sum[i] += c.radial[i].value;
      radial_count[i] = c.radial[i].count;
    }
    ++averaged;
  };
  if (o.system == "random-model" || o.init == "random") {
    require_positive(o.states, "--states");
    RngStream rng(o.seed, 0);
    std::vector<double> mean_grid(grid.size(), 0.0);
    for (int s = 0; s < o.states; ++s) {
      const auto c = autocorrelation_torus(torus::wigner(random_state(N, rng)));
      for (std::size_t i = 0; i < grid.size(); ++i) mean_grid[i] += c.grid[i] / o.states;
      accumulate(c, false);
    }
    grid = mean_grid;
  } else {
    evolve_states(o, kAutocorrCenter, [&](int t, const QuantumState& psi) {
      if (t < o.t_min) return;
      accumulate(autocorrelation_torus(torus::wigner(psi)), t == o.t_max);
    });
  }
  const int M = (N - 1) / 2;
  std::vector<double> rows;
  rows.reserve(3 * grid.size());
  for (int dn = -M; dn <= M; ++dn)
    for (int dm = -M; dm <= M; ++dm) {
      rows.insert(rows.end(), {double(dn), double(dm),
                               grid[static_cast<std::size_t>(torus::storage_index(dn, N)) * N + torus::storage_index(dm, N)]});
    }
  files.note("random-state mean over dx != 0: N/(N^2-1) = " + format_real(N / (double(N) * N - 1)));
  files.write("autocorr_grid", {"dn", "dm", "C"}, rows);
  rows.clear();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double mean = radial_sum[i] / averaged;
    rows.insert(rows.end(), {radii[i], mean, mean * N, double(radial_count[i])});
  }
  files.write("autocorr_radial", {"r", "C", "scaled_C", "count"}, rows);
  out << "averaged " << averaged << " autocorrelation grids\n";
}

void write_cdf(Output& files, const std::string& name, const ExcessDistribution& d) {
  std::vector<double> rows;
  for (std::size_t i = 0; i < d.sorted.size(); ++i) rows.insert(rows.end(), {d.sorted[i], d.cdf[i]});
  files.write(name, {"excess", "cdf"}, rows);
}

void cmd_eigen_excess(const Options& o, std::ostream& out) {
  Output files(o, "eigen-excess");
  const MapConfig cfg = map_config(o);
  const auto es = unitary_eigensystem(propagator_matrix(cfg));
  const auto d = excess_of_eigenstates(es, wigstat::geometry_of(cfg));
  files.note("median_abs_excess=" + format_real(d.median_abs()) + " max_residual=" + format_real(es.max_residual));
  std::vector<double> rows;
  for (int k = 0; k < es.dim(); ++k) rows.insert(rows.end(), {double(k), es.eigenphases[k], d.per_state[k]});
  files.write("eigen_excess", {"k", "omega", "excess"}, rows);
  write_cdf(files, "eigen_excess_cdf", d);
  out << "median |excess| = " << format_real(d.median_abs()) << " over " << es.dim() << " eigenstates\n";
}

void cmd_goe_excess(const Options& o, std::ostream& out) {
  require_positive(o.realizations, "--realizations");
  Output files(o, "goe-excess");
  const Geometry g = geometry_of(o);
  RngStream rng(o.seed, 0);
  const auto d = goe_ensemble_excess(hilbert_dim(g), o.realizations, g, rng);
  files.note("median_abs_excess=" + format_real(d.median_abs()));
  write_cdf(files, "goe_excess_cdf", d);
  out << "median |excess| = " << format_real(d.median_abs()) << " over " << d.per_state.size() << " eigenvectors\n";
}

void cmd_wfl_stats(const Options& o, std::ostream& out) {
  require_window(o);
  require_positive(o.bins, "--bins");
  Output files(o, "wfl-stats");
  const Geometry g = geometry_of(o);
  std::vector<WFLine> lines;
  if (o.system == "random-model") {
    require_positive(o.lines, "--lines");
    RngStream rng(o.seed, 0);
    for (int i = 0; i < o.lines; ++i) lines.push_back(random_wfl(g, rng));
  } else {
    evolve_states(o, kEvolutionCenter, [&](int t, const QuantumState& psi) {
      if (t < o.t_min) return;
      if (is_torus(g)) {
        auto batch = torus_lines(torus::wigner(psi), TorusAxis::kFixedPosition);
        lines.insert(lines.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
      } else {
        lines.push_back(wfl_sphere(psi, std::get<SphereGeometry>(g).J));
      }
    });
  }
  const auto s = structure_statistics(lines, o.oversample, o.bins);
  files.note("lines=" + std::to_string(lines.size()) + " arcs=" + std::to_string(s.spacings.size()));

  std::vector<double> rows;
  for (std::size_t i = 0; i < s.spacings.size(); ++i) rows.insert(rows.end(), {double(s.line_of[i]), s.spacings[i], s.amplitudes[i]});
  files.write("wfl_arcs", {"line", "s", "A"}, rows);
  rows.clear();
  for (std::size_t i = 0; i < s.spacing_histogram.bins(); ++i) {
    rows.insert(rows.end(), {s.spacing_histogram.center(i), s.spacing_histogram.densities[i]});
  }
  files.write("wfl_spacing", {"s", "density"}, rows);
  rows.clear();
  for (std::size_t i = 0; i < s.amplitude_histogram.bins(); ++i) {
    rows.insert(rows.end(), {s.amplitude_histogram.center(i), s.amplitude_histogram.densities[i]});
  }
  files.write("wfl_amplitude", {"A", "density"}, rows);
  rows.clear();
  for (std::size_t i = 0; i < s.joint.s_bins(); ++i)
    for (std::size_t j = 0; j < s.joint.a_bins(); ++j) {
      rows.insert(rows.end(), {0.5 * (s.joint.s_edges[i] + s.joint.s_edges[i + 1]),
                               0.5 * (s.joint.a_edges[j] + s.joint.a_edges[j + 1]), s.joint.density(i, j)});
    }
  files.write("wfl_joint", {"s", "A", "density"}, rows);

  // Fourier-mode variances over the line ensemble, q = 0 is the offset mode
  const int M = lines.front().M;
  const double n = static_cast<double>(lines.size());
  rows.clear();
  for (int q = 0; q <= M; ++q) {
    double su = 0, suu = 0, sv = 0, svv = 0;
    for (const auto& l : lines) {
      const double u = q == 0 ? l.u0 : l.u[q - 1];
      const double v = q == 0 ? 0.0 : l.v[q - 1];
      su += u;
      suu += u * u;
      sv += v;
      svv += v * v;
    }
    double model = 0;
    if (is_torus(g)) {
      const double N = std::get<TorusGeometry>(g).N;
      model = (q == 0 ? 1.0 : 2.0) / (N - 1);
    } else {
      const Spin J = std::get<SphereGeometry>(g).J;
      model = q == 0 ? semicircle_variance(1, J) / 2 : semicircle_variance(q, J);
    }
    const double denom = n > 1 ? n - 1 : 1;
    rows.insert(rows.end(), {double(q), (suu - su * su / n) / denom, (svv - sv * sv / n) / denom, model});
  }
  files.write("wfl_modes", {"q", "var_u", "var_v", "model"}, rows);
  out << "collected " << s.spacings.size() << " arcs from " << lines.size() << " lines\n";
}

void cmd_clusters(const Options& o, std::ostream& out) {
  require_window(o);
  if (o.system == "kicked-top" || (o.system == "random-model" && o.geometry != "torus")) {
    config_error("clusters needs the torus (sawtooth or random-model)");
  }
  Output files(o, "clusters");
  const int N = o.N;
  torus::require_odd_dimension(N);
  const double offset = torus::TorusWigner::mean_value(N);
  std::vector<std::size_t> counts;
  std::size_t total = 0;
  auto add = [&](const QuantumState& psi) {
    const auto d = discrete_cluster_distribution(torus::wigner(psi), offset);
    if (counts.size() < d.counts.size()) counts.resize(d.counts.size(), 0);
    for (std::size_t i = 0; i < d.counts.size(); ++i) counts[i] += d.counts[i];
    total += d.total;
  };
  if (o.system == "random-model" || o.init == "random") {
    require_positive(o.states, "--states");
    RngStream rng(o.seed, 0);
    for (int s = 0; s < o.states; ++s) add(random_state(N, rng));
  } else {
    evolve_states(o, kEvolutionCenter, [&](int t, const QuantumState& psi) {
      if (t >= o.t_min) add(psi);
    });
  }
  std::vector<double> rows;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double p = total ? static_cast<double>(counts[i]) / total : 0.0;
    const double law = std::ldexp(1.0, -static_cast<int>(i + 1));
    const double se = total ? std::sqrt(law * (1 - law) / total) : 0.0;
    rows.insert(rows.end(), {double(i + 1), double(counts[i]), p, law, se});
  }
  files.note("clusters=" + std::to_string(total));
  files.write("clusters", {"s", "count", "probability", "law", "std_error"}, rows);
  out << "counted " << total << " clusters\n";
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDimension:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kOutOfRange:
    case ErrorCode::kOutOfDomain:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(const std::filesystem::path& path, std::span<const std::string> header,
               std::span<const std::string> columns, std::span<const double> data) {
  if (columns.empty() || data.size() % columns.size() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "row data does not match the column count");
  }
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  for (const auto& line : header) os << "# " << line << '\n';
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
  os << '\n';
  std::string line;
  for (std::size_t r = 0; r < data.size(); r += columns.size()) {
    line.clear();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) line += ',';
      line += format_real(data[r + c]);
    }
    line += '\n';
    os << line;
  }
  os.flush();
  if (!os) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wigner function statistics of quantized chaotic maps", "wigstat"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--system", o.system, "sawtooth | kicked-top | random-model")
      ->check(CLI::IsMember({"sawtooth", "kicked-top", "random-model"}));
  app.add_option("--geometry", o.geometry, "random-model phase space: torus | sphere")
      ->check(CLI::IsMember({"torus", "sphere"}));
  app.add_option("--N", o.N, "torus dimension (odd)");
  app.add_option("--K0", o.K0, "sawtooth kick strength");
  app.add_option("--L", o.L, "sawtooth winding");
  app.add_option("--J", o.J, "spin (integer or half-integer)");
  app.add_option("--alpha", o.alpha, "kicked-top twist");
  app.add_option("--gamma", o.gamma, "kicked-top rotation angle (radians)");
  app.add_option("--init", o.init, "coherent[:q=..,p=..|:theta=..,phi=..] | random | basis:i");
  app.add_option("--t-min", o.t_min, "first recorded step");
  app.add_option("--t-max", o.t_max, "last step");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--out", o.out, "output directory (default $WIGSTAT_OUTPUT_DIR or .)");
  app.add_option("--bins", o.bins, "histogram bins");
  app.add_option("--states", o.states, "random states in an ensemble");
  app.add_option("--realizations", o.realizations, "GOE matrices");
  app.add_option("--lines", o.lines, "random-model lines");
  app.add_option("--oversample", o.oversample, "zero-search grid points per mode");
  app.add_flag("--no-timestamp", o.no_timestamp, "omit the creation time from headers");

  using Command = void (*)(const Options&, std::ostream&);
  const std::vector<std::tuple<const char*, const char*, Command>> commands{
      {"evolve", "Wigner grid after every step", cmd_evolve},
      {"value-stats", "value histograms and moments per step", cmd_value_stats},
      {"relaxation", "excess and negative fraction versus time", cmd_relaxation},
      {"autocorr", "phase-space autocorrelation grid and radial profile", cmd_autocorr},
      {"eigen-excess", "excess of every propagator eigenstate", cmd_eigen_excess},
      {"goe-excess", "excess of GOE eigenvectors", cmd_goe_excess},
      {"wfl-stats", "zero spacings and arc amplitudes along lines", cmd_wfl_stats},
      {"clusters", "constant-sign run lengths on grid lines", cmd_clusters},
  };
  Command selected = nullptr;
  for (const auto& [name, help, fn] : commands) {
    app.add_subcommand(name, help)->callback([&selected, f = fn] { selected = f; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << app.help();
    return 2;
  }
  try {
    selected(o, out);
  } catch (const Error& e) {
    err << "wigstat: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "wigstat: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace wigstat::cli
