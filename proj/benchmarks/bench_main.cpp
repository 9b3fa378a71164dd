#include <benchmark/benchmark.h>

#include "goldie/goldie.hpp"
#include "goldie/rs.hpp"

namespace {

using namespace goldie;

void BM_KLTableBuild(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    KLTable table = KLTable::build(n, threads);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_KLTableBuild)->Args({5, 1})->Args({5, 4})->Args({6, 4});

void BM_SchenstedInsertion(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<int> images(n);
  // a fixed scrambled word, no RNG needed for a stable benchmark
  for (int i = 0; i < n; ++i) images[i] = (i * 7 + 3) % n + 1;
  std::vector<int> seen;
  for (int i = 0; i < n; ++i)
    if (std::find(images.begin(), images.end(), i + 1) == images.end())
      seen.push_back(i + 1);
  // fall back to a reversal when the affine map is not a bijection
  if (!seen.empty())
    for (int i = 0; i < n; ++i) images[i] = n - i;
  Permutation w(images);
  for (auto _ : state) {
    RSPair pq = rs_pair(w);
    benchmark::DoNotOptimize(pq);
  }
}
BENCHMARK(BM_SchenstedInsertion)->Arg(8)->Arg(10);

void BM_GoldiePolynomial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  KLTable table = KLTable::build(n, 4);
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = n - i;
  Permutation w0(images);
  Permutation w = minimal_cell_rep(w0);
  for (auto _ : state) {
    MultiPoly p = goldie_poly_bform(table, w);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_GoldiePolynomial)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
