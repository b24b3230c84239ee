// Serial vs OpenMP kernels on the larger reference inputs.
#include <benchmark/benchmark.h>

#include "montes/algorithm.hpp"
#include "montes/corpus.hpp"
#include "montes/kernels.hpp"

using namespace montes;

namespace {

struct Input {
  IntPolynomial f, phi;
  std::size_t count;
};

const Input& input(int which) {
  static const Input inputs[] = {
      {corpus::tower(4), corpus::tower(1), 17},
      {corpus::cubic_power_example(), IntPolynomial{5, 1, 0, 1}, 51},
      {corpus::multi_branch(1), corpus::multi_branch_phi(), 2},
      {corpus::multi_branch(1), IntPolynomial{0, 1}, 121},
  };
  return inputs[which];
}

void BM_PhiPrefixSerial(benchmark::State& st) {
  const Input& in = input(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::phi_prefix_serial(in.f, in.phi, in.count));
}

void BM_PhiPrefixParallel(benchmark::State& st) {
  const Input& in = input(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::phi_prefix_parallel(in.f, in.phi, in.count));
}

struct PointsInput {
  Type t;
  unsigned k;
  std::vector<IntPolynomial> expansion;
};

const PointsInput& points_input() {
  static const PointsInput in = [] {
    IntPolynomial f = corpus::tower(4);
    RunResult r = run(f, 2);
    const Type& t = r.primes[0].type;
    unsigned k = t.order();
    return PointsInput{t, k, phi_expand(f, t.level(k).phi)};
  }();
  return in;
}

void BM_PointsSerial(benchmark::State& st) {
  const PointsInput& in = points_input();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::points_serial(in.t, in.k, in.expansion));
}

void BM_PointsParallel(benchmark::State& st) {
  const PointsInput& in = points_input();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::points_parallel(in.t, in.k, in.expansion));
}

}  // namespace

BENCHMARK(BM_PhiPrefixSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiPrefixParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointsParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
