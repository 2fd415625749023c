#include <benchmark/benchmark.h>

#include "curvcert/cert/run.hpp"
#include "curvcert/dynamics/dynamics.hpp"
#include "curvcert/exact/tower.hpp"
#include "curvcert/kovacic/kovacic.hpp"
#include "curvcert/models/system.hpp"

using namespace curvcert;
using exact::GaussRational;
using exact::Rational;
using exact::TowerScalar;
using models::Potential;
using models::Space;

namespace {

models::ModelParams sn_reference() {
  return models::derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0);
}

void BM_TowerMultiplyInverse(benchmark::State& state) {
  auto ctx = exact::make_context(GaussRational(-2), GaussRational(-3));
  auto x = TowerScalar(ctx, Rational(3, 7)) + TowerScalar::kappa(ctx) * TowerScalar(ctx, Rational(5, 11)) +
           TowerScalar::lambda(ctx);
  for (auto _ : state) {
    auto y = x * x + TowerScalar::kappa(ctx) * TowerScalar::lambda(ctx);
    benchmark::DoNotOptimize(y.inverse());
  }
}
BENCHMARK(BM_TowerMultiplyInverse);

void BM_NormalForm(benchmark::State& state) {
  auto prm = sn_reference();
  for (auto _ : state) benchmark::DoNotOptimize(models::pipeline_r(prm));
}
BENCHMARK(BM_NormalForm)->Unit(benchmark::kMillisecond);

void BM_Case1Search(benchmark::State& state) {
  auto prm = sn_reference();
  auto r = models::pipeline_r(prm);
  auto spec = linode::singularity_spectrum(r, prm.singular_points());
  for (auto _ : state) benchmark::DoNotOptimize(kovacic::case1_search(r, spec));
}
BENCHMARK(BM_Case1Search)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  cert::RunConfig cfg;
  cfg.space = state.range(0) ? Space::Hyperbolic : Space::Sphere;
  cfg.strength = cfg.space == Space::Sphere ? 2 : 1;
  cfg.eps = cfg.space == Space::Sphere ? 0 : -2;
  for (auto _ : state) benchmark::DoNotOptimize(cert::certify(cfg));
}
BENCHMARK(BM_Certify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Integrate(benchmark::State& state) {
  auto h = dynamics::gamma_hamiltonian(sn_reference());
  dynamics::PhaseState x0{0.80, -0.29, 0.27, 0.20, 1.15, Space::Sphere};
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::integrate(h, x0, 10.0));
}
BENCHMARK(BM_Integrate)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
