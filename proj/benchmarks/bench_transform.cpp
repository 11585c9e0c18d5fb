#include <benchmark/benchmark.h>

#include <random>

#include "permfft/bounds.hpp"
#include "permfft/transform.hpp"

using namespace permfft;

namespace {

Partition shape_for(int id) {
  switch (id) {
    case 0: return Partition({5, 5});
    case 1: return Partition({7, 3});
    case 2: return Partition({8, 4});
    case 3: return Partition({5, 1, 1, 1});
    case 4: return Partition({6, 1, 1, 1});
    default: return Partition({1, 1, 1, 1, 1, 1});
  }
}

std::vector<double> random_input(std::size_t m) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> d;
  std::vector<double> f(m);
  for (auto& x : f) x = d(rng);
  return f;
}

void BM_Plan(benchmark::State& state) {
  const auto lambda = shape_for(static_cast<int>(state.range(0)));
  const auto mode = state.range(1) ? Normalization::orthonormal : Normalization::leading_one;
  for (auto _ : state) benchmark::DoNotOptimize(plan(lambda, mode));
  state.SetLabel(lambda.to_string());
}

void BM_Apply(benchmark::State& state) {
  const auto p = plan(shape_for(static_cast<int>(state.range(0))));
  const auto f = random_input(p.size);
  OpCount ops;
  for (auto _ : state) {
    auto out = permfft::apply(p, f);
    ops = out.second;
    benchmark::DoNotOptimize(out);
  }
  state.counters["ops"] = static_cast<double>(ops.total());
  state.counters["m"] = static_cast<double>(p.size);
  state.SetLabel(p.shape.to_string());
}

void BM_ApplyNaive(benchmark::State& state) {
  const auto p = plan(shape_for(static_cast<int>(state.range(0))));
  const auto dense = dense_transform(p);
  const auto f = random_input(p.size);
  OpCount ops;
  for (auto _ : state) {
    auto out = apply_naive(dense, f);
    ops = out.second;
    benchmark::DoNotOptimize(out);
  }
  state.counters["ops"] = static_cast<double>(ops.total());
  state.counters["m"] = static_cast<double>(p.size);
  state.SetLabel(p.shape.to_string());
}

void BM_NBound(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(n_bound(k));
}

}  // namespace

BENCHMARK(BM_Plan)->ArgsProduct({{0, 1, 2, 3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Apply)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ApplyNaive)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NBound)->DenseRange(2, 10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
