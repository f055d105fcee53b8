#include <benchmark/benchmark.h>

#include <vector>

#include "ddrec/families.hpp"
#include "ddrec/recurrence.hpp"

namespace {

using namespace ddrec;

// History {P_{n-1}, P_{n-2}} for the Dowling recurrence at row n.
std::vector<ExactPolynomial> history_at(const RecurrenceSpec& spec, int n) {
  const auto polys = generate(spec, n - 1);
  return {polys[static_cast<std::size_t>(n - 1)], polys[static_cast<std::size_t>(n - 2)]};
}

template <bool Parallel>
void BM_advance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RecurrenceSpec spec = catalog("r_whitney_assoc").spec;
  const auto history = history_at(spec, n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(advance(spec, history, n));
    } else {
      benchmark::DoNotOptimize(advance_reference(spec, history, n));
    }
  }
}

template <bool Parallel>
void BM_triangle_linear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(triangle_linear(3, 1, 3, n));
    } else {
      benchmark::DoNotOptimize(triangle_linear_reference(3, 1, 3, n));
    }
  }
}

}  // namespace

BENCHMARK(BM_advance<false>)->Name("advance/serial")->Arg(200)->Arg(800)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_advance<true>)->Name("advance/parallel")->Arg(200)->Arg(800)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_triangle_linear<false>)->Name("triangle_linear/serial")->Arg(150)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_triangle_linear<true>)->Name("triangle_linear/parallel")->Arg(150)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
