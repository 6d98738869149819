#include <benchmark/benchmark.h>

#include <complex>
#include <numbers>
#include <vector>

#include "vortexlab/field_verify.hpp"
#include "vortexlab/moment.hpp"
#include "vortexlab/ring.hpp"
#include "vortexlab/spin.hpp"
#include "vortexlab/vortex.hpp"

namespace {

using namespace vortexlab;

constexpr double kPi = std::numbers::pi;

VortexParams reference_params() {
  return VortexParams{1.0, 1.0, 2.0 * kPi, 16.0};
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = a + (b - a) * i / (n - 1);
  return g;
}

void BM_FieldSample(benchmark::State& state) {
  const VortexParams p = reference_params();
  const auto grid = linspace(0.0, 8.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto prof = sample_radial_field(ProfileKind::speed, grid, 0.37, p);
    benchmark::DoNotOptimize(prof.values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FieldSample)->Arg(161)->Arg(1025);

void BM_WallConstant(benchmark::State& state) {
  for (auto _ : state) {
    auto wc = solve_wall_constant();
    benchmark::DoNotOptimize(wc.a0);
  }
}
BENCHMARK(BM_WallConstant);

void BM_PdeResidual(benchmark::State& state) {
  const VortexParams p = reference_params();
  const auto grid = linspace(0.25, 8.0, 64);
  for (auto _ : state) {
    auto rep = pde_residual(p, grid, 0.37, 1e-3, 1e-3);
    benchmark::DoNotOptimize(rep.norm_inf);
  }
}
BENCHMARK(BM_PdeResidual);

void BM_SpectralEvolve(benchmark::State& state) {
  const VortexParams p = reference_params();
  TransformEvolverSpec spec;
  spec.modes = static_cast<int>(state.range(0));
  const auto start = sample_radial_field(ProfileKind::vorticity, linspace(0.0, 40.0, 513), 0.0, p);
  // prime the cached transform tables so the loop times the evolution itself
  benchmark::DoNotOptimize(spectral_evolve(start, p, 0.37, spec).values.data());
  for (auto _ : state) {
    auto evolved = spectral_evolve(start, p, 0.37, spec);
    benchmark::DoNotOptimize(evolved.values.data());
  }
}
BENCHMARK(BM_SpectralEvolve)->Arg(64)->Arg(256);

void BM_SelfIntersections(benchmark::State& state) {
  RingParams p;
  p.a0 = 1.0;
  p.b1 = 0.0;
  p.omega0 = 1.0;
  p.omega1 = 1.0 / 3.0;
  for (auto _ : state) {
    auto hits = find_self_intersections(p, 1e-9);
    benchmark::DoNotOptimize(hits.data());
  }
}
BENCHMARK(BM_SelfIntersections);

void BM_SpinorEvolution(benchmark::State& state) {
  const double w = 1.0;
  auto drive = [w](double t) { return drive_from_omega(omega_closed_form(t, w), 1.0); };
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto trace = evolve_spinor(Spinor{}, drive, 0.0, 4.0 * kPi, steps);
    benchmark::DoNotOptimize(trace.spinors.data());
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_SpinorEvolution)->Arg(1000)->Arg(10000);

void BM_ContinuedFraction(benchmark::State& state) {
  const auto c = PhysConstants::paper_quoted();
  FractionSpec spec;
  for (auto _ : state) {
    auto res = continued_fraction_mu(spec, c);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_ContinuedFraction);

}  // namespace

BENCHMARK_MAIN();
