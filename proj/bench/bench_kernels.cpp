// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "powerclass/catalog.hpp"
#include "powerclass/groups.hpp"
#include "powerclass/power_graph.hpp"
#include "powerclass/survey.hpp"

using namespace powerclass;

namespace {

const Group& group_for(std::int64_t arg) {
  static const Group c = make_cyclic(360);
  static const Group p = construct_group("product:cyclic:2,cyclic:6,cyclic:30");
  static const Group d = make_dihedral(180);
  switch (arg) {
    case 0: return c;
    case 1: return p;
    default: return d;
  }
}

void BM_CyclicSubgroupsSerial(benchmark::State& st) {
  const auto& g = group_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cyclic_subgroups_serial(g.table()));
}

void BM_CyclicSubgroupsParallel(benchmark::State& st) {
  const auto& g = group_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cyclic_subgroups_parallel(g.table()));
}

void BM_PowerGraphSerial(benchmark::State& st) {
  const auto& g = group_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_power_graph_serial(g));
}

void BM_PowerGraphParallel(benchmark::State& st) {
  const auto& g = group_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_power_graph(g));
}

void BM_SurveySerial(benchmark::State& st) {
  const auto cat = generate_catalog(static_cast<std::size_t>(st.range(0)));
  SurveyOptions opt;
  opt.witness = true;
  for (auto _ : st) benchmark::DoNotOptimize(run_survey_serial(cat, opt));
}

void BM_SurveyParallel(benchmark::State& st) {
  const auto cat = generate_catalog(static_cast<std::size_t>(st.range(0)));
  SurveyOptions opt;
  opt.witness = true;
  for (auto _ : st) benchmark::DoNotOptimize(run_survey(cat, opt));
}

}  // namespace

BENCHMARK(BM_CyclicSubgroupsSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclicSubgroupsParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PowerGraphSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerGraphParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SurveySerial)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurveyParallel)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
