// Microbenchmarks for model fitting and pairwise scoring.  Scoring is the
// hot path of a d x d match run; it should scale with parameter counts,
// not record counts.

#include <benchmark/benchmark.h>

#include "fieldmatch/matcher.hpp"
#include "fieldmatch/models.hpp"
#include "fieldmatch/stats.hpp"
#include "fieldmatch/synthetic.hpp"

namespace {

using namespace fieldmatch;

Table fixture(std::size_t rows) {
  auto formats = synthetic_fixture_formats();
  return generate_synthetic_table(formats, rows, 20240901);
}

void BM_FitApositional(benchmark::State& state) {
  Table table = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& field : table.fields)
      benchmark::DoNotOptimize(fit_apositional(field));
  }
  state.SetItemsProcessed(state.iterations() * table.record_count * table.fields.size());
}
BENCHMARK(BM_FitApositional)->Arg(500)->Arg(5000);

void BM_FitPositional(benchmark::State& state) {
  Table table = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& field : table.fields)
      benchmark::DoNotOptimize(fit_positional(field));
  }
}
BENCHMARK(BM_FitPositional)->Arg(500)->Arg(5000);

// Post-fit pair scoring: merge + three joints + posterior.
void BM_ScoreMergedApositional(benchmark::State& state) {
  Table table = fixture(static_cast<std::size_t>(state.range(0)));
  ModelPriors priors;
  std::vector<ApositionalStats> stats;
  for (const auto& field : table.fields) stats.push_back(fit_apositional(field));
  std::size_t d = stats.size();
  for (auto _ : state) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        benchmark::DoNotOptimize(
            log_joint_apositional(merge_stats(stats[i], stats[j]), priors));
  }
  state.SetItemsProcessed(state.iterations() * d * d);
}
BENCHMARK(BM_ScoreMergedApositional)->Arg(500)->Arg(5000);

void BM_MatchMatrix(benchmark::State& state) {
  Table table = fixture(1000);
  MatchConfig config;
  config.workers = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        match_matrix(table, table, Scorer::kApositional, config));
}
BENCHMARK(BM_MatchMatrix);

}  // namespace

BENCHMARK_MAIN();
