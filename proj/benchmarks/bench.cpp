#include <benchmark/benchmark.h>

#include "tubal/measure.hpp"
#include "tubal/rip.hpp"
#include "tubal/rng.hpp"
#include "tubal/solver.hpp"
#include "tubal/t_algebra.hpp"

using namespace tubal;

namespace {

Tensor3 random_tensor(std::int64_t n1, std::int64_t n2, std::int64_t n3,
                      std::uint64_t seed) {
  Rng rng(seed);
  Tensor3 x(n1, n2, n3);
  for (double& v : x.data()) v = rng.normal();
  return x;
}

void BM_tprod(benchmark::State& state) {
  const auto n = state.range(0);
  const Tensor3 a = random_tensor(n, n, 5, 1);
  const Tensor3 b = random_tensor(n, n, 5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tprod(a, b));
}
BENCHMARK(BM_tprod)->Arg(10)->Arg(30)->Arg(60);

void BM_tsvd(benchmark::State& state) {
  const auto n = state.range(0);
  const Tensor3 x = random_tensor(n, n, 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tsvd(x));
}
BENCHMARK(BM_tsvd)->Arg(10)->Arg(30)->Arg(60);

void BM_tsvt(benchmark::State& state) {
  const auto n = state.range(0);
  const Tensor3 x = random_tensor(n, n, 5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(tsvt(x, 0.5));
}
BENCHMARK(BM_tsvt)->Arg(10)->Arg(30)->Arg(60);

void BM_ensemble_apply(benchmark::State& state) {
  const Dims3 d{10, 10, 5};
  const MeasurementEnsemble e =
      make_ensemble(d, state.range(0), Distribution::gaussian, 5);
  const Tensor3 x = random_tensor(10, 10, 5, 6);
  for (auto _ : state) benchmark::DoNotOptimize(apply(e, x));
}
BENCHMARK(BM_ensemble_apply)->Arg(105)->Arg(420)->Arg(1680);

void BM_solve_rtnnm(benchmark::State& state) {
  const Dims3 d{10, 10, 5};
  const Tensor3 x = sample_unit_low_tubal_rank(d, 1, 7);
  const MeasurementEnsemble e =
      make_ensemble(d, state.range(0), Distribution::gaussian, 8);
  const Eigen::VectorXd y = noisy_measure(e, x, 1e-5, 9);
  SolverConfig cfg;
  cfg.lambda = 1e-6;
  cfg.max_iters = 400;
  for (auto _ : state) benchmark::DoNotOptimize(solve_rtnnm(e, y, cfg));
}
BENCHMARK(BM_solve_rtnnm)->Arg(210)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
