#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "wigstat/wigstat.hpp"

using namespace wigstat;

namespace {

void BM_TorusWigner(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  RngStream rng(1, 0);
  const auto psi = random_state(N, rng);
  for (auto _ : state) benchmark::DoNotOptimize(torus::wigner(psi));
}
BENCHMARK(BM_TorusWigner)->Arg(243)->Arg(729)->Arg(2187)->Unit(benchmark::kMillisecond);

void BM_SawtoothStep(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const torus::SawtoothMap map(torus::TorusMapParams{0.5, 1, N});
  auto psi = torus::coherent_state(2.1, 1.2, N);
  for (auto _ : state) {
    psi = map.step(psi);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_SawtoothStep)->Arg(243)->Arg(2187)->Unit(benchmark::kMicrosecond);

void BM_SphereCoefficientsAndGrid(benchmark::State& state) {
  const Spin J = 50;
  RngStream rng(2, 0);
  const auto psi = random_state(spin_dim(J), rng);
  const sphere::SphereQuadrature quad(J);
  for (auto _ : state) benchmark::DoNotOptimize(quad.sample(sphere::gkq_coefficients(psi, J)));
}
BENCHMARK(BM_SphereCoefficientsAndGrid)->Unit(benchmark::kMillisecond);

void BM_KickedTopStep(benchmark::State& state) {
  const sphere::KickedTop top(sphere::TopParams{10.0, std::numbers::pi / 2, 50});
  auto psi = sphere::coherent_state(1.0, 0.5, 50);
  for (auto _ : state) {
    psi = top.step(psi);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_KickedTopStep)->Unit(benchmark::kMicrosecond);

void BM_FindZeros(benchmark::State& state) {
  RngStream rng(3, 0);
  std::vector<WFLine> lines;
  for (int i = 0; i < 64; ++i) lines.push_back(random_wfl(TorusGeometry{101}, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_zeros(lines[i++ % lines.size()]));
}
BENCHMARK(BM_FindZeros)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
