#include <benchmark/benchmark.h>

#include "metafusion/automorphism.hpp"
#include "metafusion/metacyclic.hpp"
#include "metafusion/subgroup.hpp"

using namespace metafusion;

namespace {

MetacyclicParams params_for_order(long long order) {
  // dihedral at each order keeps subgroup lattices nontrivial
  return standard_family(FamilyTag::Dihedral, order);
}

void BM_BuildTable(benchmark::State& state) {
  const auto p = params_for_order(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build(p));
}
BENCHMARK(BM_BuildTable)->Arg(64)->Arg(128)->Arg(256);

void BM_ConjugacyClasses(benchmark::State& state) {
  auto t = build(params_for_order(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(t));
}
BENCHMARK(BM_ConjugacyClasses)->Arg(64)->Arg(256);

void BM_AllSubgroups(benchmark::State& state) {
  auto t = build(params_for_order(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(t));
}
BENCHMARK(BM_AllSubgroups)->Arg(32)->Arg(64)->Arg(128);

void BM_ComputeAutDihedral(benchmark::State& state) {
  auto g = build_group(params_for_order(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_aut(g));
}
BENCHMARK(BM_ComputeAutDihedral)->Arg(32)->Arg(64)->Arg(128);

void BM_ComputeAutHomocyclic(benchmark::State& state) {
  auto g = build_group(standard_family(FamilyTag::Homocyclic, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_aut(g));
}
BENCHMARK(BM_ComputeAutHomocyclic)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
