// Finite-model search: OpenMP kernel against the serial reference.
// Equivalent pairs exhaust the budget, so both sides do the same work.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "folbench/equiv/brute_force.hpp"
#include "folbench/fol/normal_form.hpp"
#include "folbench/fol/parser.hpp"

using namespace folbench;

namespace {

fol::Signature sig() {
  fol::Signature s;
  s.add_predicate("P", 1);
  s.add_predicate("Q", 1);
  s.add_predicate("R", 2);
  s.add_constant("a");
  return s;
}

struct Pair {
  fol::Formula f, g;
};

Pair equivalent_pair() {
  const auto s = sig();
  auto f = fol::parse_formula("∀x (P(x) → ∃y (R(x,y) ∧ ¬Q(y))) ∨ Q(a)", s);
  return {f, fol::to_nnf(f)};
}

equiv::BruteForceOptions opts(std::int64_t budget) {
  equiv::BruteForceOptions o;
  o.max_domain = 3;
  o.budget = static_cast<std::uint64_t>(budget);
  return o;
}

void BM_Serial(benchmark::State& state) {
  const auto p = equivalent_pair();
  const auto s = sig();
  std::int64_t checked = 0;
  for (auto _ : state) {
    auto v = equiv::brute_force_check_serial(p.f, p.g, s, opts(state.range(0)));
    checked += static_cast<std::int64_t>(v.structures_checked);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(checked);
}

void BM_Parallel(benchmark::State& state) {
  const auto p = equivalent_pair();
  const auto s = sig();
  omp_set_num_threads(static_cast<int>(state.range(1)));
  std::int64_t checked = 0;
  for (auto _ : state) {
    auto v = equiv::brute_force_check(p.f, p.g, s, opts(state.range(0)));
    checked += static_cast<std::int64_t>(v.structures_checked);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(checked);
  state.counters["threads"] = static_cast<double>(state.range(1));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(20'000)->Arg(200'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)
    ->ArgsProduct({{20'000, 200'000}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
