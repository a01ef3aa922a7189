#include <algorithm>
// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to vary the pool.

#include <benchmark/benchmark.h>

#include "sperner/c_order.hpp"
#include "sperner/kernels.hpp"
#include "sperner/sampler.hpp"
#include "sperner/truncation.hpp"

using namespace sperner;

namespace {

const Truncation& fragment() {
  static const Truncation t = truncate({2, 2});
  return t;
}

std::vector<kernels::Mask> comparable_masks(const FinitePoset& p) {
  std::vector<kernels::Mask> c(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && p.comparable(i, j))
        c[i] |= kernels::Mask{1} << j;
  return c;
}

template <bool Parallel>
void BM_FillCOrder(benchmark::State& state) {
  const auto& el = fragment().elements();
  auto pred = [&](std::size_t i, std::size_t j) { return c_leq(el[i], el[j]); };
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::fill(el.size(), pred));
    else
      benchmark::DoNotOptimize(kernels::serial::fill(el.size(), pred));
  }
}

template <bool Parallel>
void BM_Closure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  BitMatrix chain(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    chain.set(i, i + 1);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::closure(chain));
    else
      benchmark::DoNotOptimize(kernels::serial::closure(chain));
  }
}

template <bool Parallel>
void BM_MaximalAntichains(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = comparable_masks(random_poset({n, 1, 3, 0.25}, 0));
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::maximal_antichain_masks(c));
    else
      benchmark::DoNotOptimize(kernels::serial::maximal_antichain_masks(c));
  }
}

template <bool Parallel>
void BM_DenseScan(benchmark::State& state) {
  const FinitePoset& p = fragment().poset();
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::first_dense_violation(p.relation(), p.geq()));
    else
      benchmark::DoNotOptimize(kernels::serial::first_dense_violation(p.relation(), p.geq()));
  }
}

template <bool Parallel>
void BM_SplitSearch(benchmark::State& state) {
  // An antichain that never splits forces the full 2^k scan.
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names{"bot"};
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::size_t> antichain;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string a = "a" + std::to_string(i);
    names.push_back(a);
    antichain.push_back(names.size() - 1);
    covers.emplace_back("bot", a);
    for (const char* leaf : {"l", "r"}) {
      names.push_back(a + leaf);
      covers.emplace_back(a, a + leaf);
    }
  }
  BitMatrix r(names.size());
  for (const auto& [a, b] : covers) {
    const auto ia = std::find(names.begin(), names.end(), a) - names.begin();
    const auto ib = std::find(names.begin(), names.end(), b) - names.begin();
    r.set(static_cast<std::size_t>(ia), static_cast<std::size_t>(ib));
  }
  const BitMatrix leq = kernels::serial::closure(r);
  const BitMatrix geq = leq.transposed();
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::first_split(leq, geq, antichain));
    else
      benchmark::DoNotOptimize(kernels::serial::first_split(leq, geq, antichain));
  }
}

} // namespace

BENCHMARK(BM_FillCOrder<false>)->Name("fill_c_order/serial");
BENCHMARK(BM_FillCOrder<true>)->Name("fill_c_order/parallel");
BENCHMARK(BM_Closure<false>)->Name("closure/serial")->Arg(256)->Arg(1024);
BENCHMARK(BM_Closure<true>)->Name("closure/parallel")->Arg(256)->Arg(1024);
BENCHMARK(BM_MaximalAntichains<false>)->Name("maximal_antichains/serial")->Arg(16)->Arg(20);
BENCHMARK(BM_MaximalAntichains<true>)->Name("maximal_antichains/parallel")->Arg(16)->Arg(20);
BENCHMARK(BM_DenseScan<false>)->Name("dense_scan/serial");
BENCHMARK(BM_DenseScan<true>)->Name("dense_scan/parallel");
BENCHMARK(BM_SplitSearch<false>)->Name("split_search/serial")->Arg(12)->Arg(16);
BENCHMARK(BM_SplitSearch<true>)->Name("split_search/parallel")->Arg(12)->Arg(16);

BENCHMARK_MAIN();
