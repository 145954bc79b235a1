// OpenMP kernels against their serial references.
//
//   ./build/bench/mgsn_bench --benchmark_filter=Gram
//   OMP_NUM_THREADS=8 ./build/bench/mgsn_bench

#include "mgsn/kernels.hpp"
#include "mgsn/metrics.hpp"
#include "mgsn/rng.hpp"
#include "mgsn/tudataset.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace mgsn;

const std::vector<Graph>& corpus() {
  static const std::vector<Graph> graphs = [] {
    DatasetSpec spec;
    spec.families = {{"cycle", 60, 10, 20}, {"complete", 60, 5, 9}, {"star", 60, 6, 14}, {"path", 60, 8, 16}};
    spec.attribute_dim = 1;
    spec.class_means = {{0.0}, {1.0}, {2.0}, {3.0}};
    spec.noise_std = 0.1;
    spec.seed = 11;
    return generate_synthetic(spec).graphs;
  }();
  return graphs;
}

Matrix blobs(Eigen::Index n) {
  Rng rng(5);
  Matrix m(n, 16);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < 16; ++j) m(i, j) = rng.normal() + static_cast<double>(i % 8);
  }
  return m;
}

template <Matrix (*Gram)(std::span<const Graph>, KernelKind, const StructuralKernelOptions&)>
void BM_StructuralGram(benchmark::State& state) {
  const auto kind = static_cast<KernelKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Gram(corpus(), kind, {}));
  state.SetLabel(to_string(kind));
}

BENCHMARK(BM_StructuralGram<&structural_gram>)
    ->Name("Gram/parallel")
    ->Arg(static_cast<int>(KernelKind::kWl))
    ->Arg(static_cast<int>(KernelKind::kSp))
    ->Arg(static_cast<int>(KernelKind::kRw))
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructuralGram<&serial::structural_gram>)
    ->Name("Gram/serial")
    ->Arg(static_cast<int>(KernelKind::kWl))
    ->Arg(static_cast<int>(KernelKind::kSp))
    ->Arg(static_cast<int>(KernelKind::kRw))
    ->Unit(benchmark::kMillisecond);

void BM_SparseGramParallel(benchmark::State& state) {
  const auto feats = wl_features(corpus(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(sparse_gram(feats));
}
void BM_SparseGramSerial(benchmark::State& state) {
  const auto feats = wl_features(corpus(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::sparse_gram(feats));
}
BENCHMARK(BM_SparseGramParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseGramSerial)->Unit(benchmark::kMillisecond);

void BM_KMeansParallel(benchmark::State& state) {
  const Matrix pts = blobs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kmeans(pts, 8, 1));
}
void BM_KMeansSerial(benchmark::State& state) {
  const Matrix pts = blobs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::kmeans(pts, 8, 1));
}
BENCHMARK(BM_KMeansParallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KMeansSerial)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
