// Serial against OpenMP kernels on fixed refutations.
#include <benchmark/benchmark.h>

#include "pgres/certificate.hpp"

using namespace pgres;

namespace {

const ConstraintSystem& system_for(std::uint32_t q, SearchKind kind) {
  static std::map<std::pair<std::uint32_t, SearchKind>, ConstraintSystem> cache;
  auto it = cache.find({q, kind});
  if (it == cache.end()) {
    const auto [p, h] = prime_power(q);
    const Plane pl(Field::make(p, h));
    it = cache.emplace(std::pair{q, kind}, build_constraints(pl, kind)).first;
  }
  return it->second;
}

const std::vector<Permutation>& group_for(std::uint32_t q, SearchKind kind) {
  static std::map<std::pair<std::uint32_t, SearchKind>, std::vector<Permutation>> cache;
  auto it = cache.find({q, kind});
  if (it == cache.end()) {
    const auto [p, h] = prime_power(q);
    const Plane pl(Field::make(p, h));
    it = cache.emplace(std::pair{q, kind}, symmetry_group(pl, kind)).first;
  }
  return it->second;
}

// mu(PG(2,3)) > 7: 657800 candidates.
void BM_ExhaustiveSerial(benchmark::State& state) {
  const auto& sys = system_for(3, SearchKind::Resolving);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_serial(sys, 7, 0, binomial(sys.universe, 7)));
}

void BM_ExhaustiveParallel(benchmark::State& state) {
  const auto& sys = system_for(3, SearchKind::Resolving);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_parallel(sys, 7, 0, binomial(sys.universe, 7)));
}

// mu(PG(2,4)) > 9 and tau2(PG(2,5)) > 14.
void BM_BranchAndBoundSerial(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto kind = q == 4 ? SearchKind::Resolving : SearchKind::DoubleBlocking;
  const auto& sys = system_for(q, kind);
  const auto& g = group_for(q, kind);
  const std::uint32_t k = q == 4 ? 9 : 14;
  for (auto _ : state) benchmark::DoNotOptimize(branch_and_bound_serial(sys, k, g));
}

void BM_BranchAndBoundParallel(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto kind = q == 4 ? SearchKind::Resolving : SearchKind::DoubleBlocking;
  const auto& sys = system_for(q, kind);
  const auto& g = group_for(q, kind);
  const std::uint32_t k = q == 4 ? 9 : 14;
  for (auto _ : state) benchmark::DoNotOptimize(branch_and_bound_parallel(sys, k, g));
}

}  // namespace

BENCHMARK(BM_ExhaustiveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BranchAndBoundSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BranchAndBoundParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
