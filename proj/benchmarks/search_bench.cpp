#include "tarski/axioms.hpp"
#include "tarski/search.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_ExhaustivePrimedWithoutReflexivity(benchmark::State& state) {
  tarski::SearchBudget budget;
  budget.workers = static_cast<unsigned>(state.range(0));
  const auto& required = tarski::get_system("A'").first_order;
  for (auto _ : state)
    benchmark::DoNotOptimize(tarski::search_finite_models(required, tarski::get_axiom("RE"), 2, budget));
}
BENCHMARK(BM_ExhaustivePrimedWithoutReflexivity)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveFiveSegmentVariants(benchmark::State& state) {
  std::vector<tarski::NamedFormula> required{tarski::get_axiom("RE"), tarski::get_axiom("TE"),
                                             tarski::get_axiom("FS")};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        tarski::search_finite_models(required, tarski::get_axiom("FS'"), 2, tarski::SearchBudget{}));
}
BENCHMARK(BM_ExhaustiveFiveSegmentVariants)->Unit(benchmark::kMillisecond);

void BM_SampledSizeThree(benchmark::State& state) {
  tarski::SearchBudget budget;
  budget.mode = tarski::SearchMode::Sampled;
  budget.samples = static_cast<std::uint64_t>(state.range(0));
  const auto& required = tarski::get_system("A'").first_order;
  for (auto _ : state)
    benchmark::DoNotOptimize(tarski::search_finite_models(required, tarski::get_axiom("RE"), 3, budget));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * state.range(0)));
}
BENCHMARK(BM_SampledSizeThree)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
