#include <benchmark/benchmark.h>

#include "fibercover/fiber.hpp"
#include "fibercover/kernels.hpp"

using namespace fibercover;

namespace {

// Translation action of (1,0), (0,1), (-1,-1) on Z_n x Z_n.
BranchedCover fermat(std::size_t n) {
  std::size_t d = n * n;
  auto translation = [&](std::size_t dx, std::size_t dy) {
    std::vector<Point> images(d);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        images[x + n * y] = static_cast<Point>((x + dx) % n + n * ((y + dy) % n));
    return Permutation::from_images(std::move(images));
  };
  BranchedCover c;
  c.degree = d;
  c.branch_points = {{BranchLabel::at(0), translation(1, 0), false},
                     {BranchLabel::at(1), translation(0, 1), false},
                     {BranchLabel::infinity(), translation(n - 1, n - 1), false}};
  return c;
}

void BM_PairPermutation(benchmark::State& state, Execution exec) {
  BranchedCover c = fermat(static_cast<std::size_t>(state.range(0)));
  const Permutation& p = c.branch_points[0].monodromy;
  const Permutation& q = c.branch_points[1].monodromy;
  for (auto _ : state) {
    auto r = exec == Execution::serial ? kernels::pair_permutation_serial(p, q)
                                       : kernels::pair_permutation_omp(p, q);
    benchmark::DoNotOptimize(r);
  }
}

void BM_Decompose(benchmark::State& state, Execution exec) {
  BranchedCover c1 = fermat(static_cast<std::size_t>(state.range(0)));
  BranchedCover c2 = fermat(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(c1, c2, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_PairPermutation, serial, Execution::serial)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK_CAPTURE(BM_PairPermutation, parallel, Execution::parallel)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK_CAPTURE(BM_Decompose, serial, Execution::serial)->Args({4, 2})->Args({6, 4})->Args({8, 6});
BENCHMARK_CAPTURE(BM_Decompose, parallel, Execution::parallel)->Args({4, 2})->Args({6, 4})->Args({8, 6});

BENCHMARK_MAIN();
