// Microbenchmarks for the numeric hot paths: Bessel evaluation in each
// regime, grid construction, transform application, density assembly, and
// the per-alpha seminorm routes.
#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>

#include "critlab/bessel.hpp"
#include "critlab/density.hpp"
#include "critlab/operators.hpp"
#include "critlab/profiles.hpp"
#include "critlab/semigroup.hpp"
#include "critlab/transform.hpp"
#include "critlab/wave.hpp"

using namespace critlab;

namespace {

std::shared_ptr<const SpectralTransform> transform_for(int m) {
  static std::map<int, std::shared_ptr<const SpectralTransform>> cache;
  auto& slot = cache[m];
  if (!slot) {
    slot = std::make_shared<SpectralTransform>(parse_operator("free:3"), m, 40.0);
  }
  return slot;
}

SampledFunction gaussian_on(int m) {
  return SampledFunction::from_profile(transform_for(m), gaussian_profile(1.0));
}

void BM_bessel_series(benchmark::State& state) {
  // Below the crossover the ascending series runs.
  double x = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(0.5, x));
    x = x < 10.0 ? x + 1e-6 : 2.0;
  }
}
BENCHMARK(BM_bessel_series);

void BM_bessel_asymptotic(benchmark::State& state) {
  double x = 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(0.5, x));
    x = x < 1000.0 ? x + 1e-5 : 100.0;
  }
}
BENCHMARK(BM_bessel_asymptotic);

void BM_bessel_high_order(benchmark::State& state) {
  double x = 30.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(10.6, x));
    x = x < 60.0 ? x + 1e-5 : 30.0;
  }
}
BENCHMARK(BM_bessel_high_order);

void BM_bessel_zeros(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_zeros(0.5, n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_bessel_zeros)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_transform_build(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ModelOperator op = parse_operator("free:3");
  for (auto _ : state) {
    SpectralTransform t(op, m, 40.0);
    benchmark::DoNotOptimize(t.band_limit());
  }
  state.SetComplexityN(m);
}
BENCHMARK(BM_transform_build)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Complexity();

void BM_transform_forward(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SampledFunction g = gaussian_on(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.transform->forward(g.h));
  }
  state.SetComplexityN(m);
}
BENCHMARK(BM_transform_forward)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_density_build(benchmark::State& state) {
  const SampledFunction g = gaussian_on(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SpectralDensity rho(g, 1e6);
    benchmark::DoNotOptimize(rho.norm_sq());
  }
}
BENCHMARK(BM_density_build)->Arg(128)->Arg(256);

void BM_heat_norm(benchmark::State& state) {
  const SampledFunction g = gaussian_on(256);
  const SpectralDensity rho(g, 1e6);
  const double t = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho.heat_norm_sq(t));
  }
}
BENCHMARK(BM_heat_norm)->Arg(-2)->Arg(0)->Arg(2)->Arg(4);

void BM_wave_norm(benchmark::State& state) {
  // t = 1 exercises the direct panels, t = 1e4 the Filon branch.
  const SampledFunction g = gaussian_on(256);
  const SpectralDensity rho(g, 1e6);
  const double t = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho.wave_norm_sq(t));
  }
}
BENCHMARK(BM_wave_norm)->Arg(0)->Arg(2)->Arg(4);

void BM_seminorm_freq(benchmark::State& state) {
  const SampledFunction g = gaussian_on(256);
  const SpectralDensity rho(g, 1e6);
  const double alpha = 0.1 * static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(seminorm_freq(g, alpha, &rho));
  }
}
BENCHMARK(BM_seminorm_freq)->Arg(1)->Arg(4)->Arg(7);

void BM_seminorm_time(benchmark::State& state) {
  const SampledFunction g = gaussian_on(256);
  const SpectralDensity rho(g, 1e6);
  const double alpha = 0.1 * static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(seminorm_time(g, alpha, {}, &rho));
  }
}
BENCHMARK(BM_seminorm_time)->Arg(1)->Arg(4);

void BM_wave_evolve(benchmark::State& state) {
  const SampledFunction g = gaussian_on(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wave_evolve(g, 10.0).norm());
  }
}
BENCHMARK(BM_wave_evolve)->Arg(256)->Arg(1024);

} // namespace

BENCHMARK_MAIN();
