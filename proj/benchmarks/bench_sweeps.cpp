#include <benchmark/benchmark.h>

#include "metafusion/automorphism.hpp"
#include "metafusion/block.hpp"
#include "metafusion/fusion.hpp"

using namespace metafusion;

namespace {

void BM_EnumerateTypes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(state.range(0)));
}
BENCHMARK(BM_EnumerateTypes)->Arg(32)->Arg(64)->Arg(128);

void BM_Lemma1Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lemma1_sweep(state.range(0)));
}
BENCHMARK(BM_Lemma1Sweep)->Arg(32)->Arg(64);

void BM_Theorem3Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theorem3_sweep(state.range(0)));
}
BENCHMARK(BM_Theorem3Sweep)->Arg(32)->Arg(64);

void BM_DegreesSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(degrees_sweep(state.range(0)));
}
BENCHMARK(BM_DegreesSweep)->Arg(64)->Arg(128);

}  // namespace
// main lives in bench_group_ops.cpp
