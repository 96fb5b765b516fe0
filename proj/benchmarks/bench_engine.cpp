#include <benchmark/benchmark.h>

#include "hopfkit/engine.hpp"
#include "hopfkit/identities.hpp"
#include "hopfkit/presets.hpp"
#include "hopfkit/repr.hpp"

using namespace hopfkit;

namespace {

// Fresh handle per iteration so slice caches do not carry over.
void BM_GradedDimensions(benchmark::State& state, const char* name) {
  const ReducedDatum d = preset(name);
  const int height = static_cast<int>(state.range(0));
  for (auto _ : state) {
    AlgebraHandle h(d);
    std::size_t total = 0;
    for (const auto& alpha : degrees_up_to(h.theta(), 0, height)) total += h.dim(Side::Minus, alpha);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK_CAPTURE(BM_GradedDimensions, A2, "A2")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GradedDimensions, B2, "B2")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SimpleModule(benchmark::State& state) {
  const AlgebraHandle h(preset("A2"));
  const Weight chi = dominant_character(h, {static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(simple_module(h, chi).module.total_dim());
}
BENCHMARK(BM_SimpleModule)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_TensorDecomposition(benchmark::State& state) {
  const AlgebraHandle h(preset("A1"));
  const int m = static_cast<int>(state.range(0));
  const HighestWeightModule a = simple_module(h, dominant_character(h, {m}));
  for (auto _ : state) {
    const WeightModule t = tensor(a.module, a.module);
    benchmark::DoNotOptimize(decompose(h, t).summands.size());
  }
}
BENCHMARK(BM_TensorDecomposition)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
