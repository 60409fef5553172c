#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "synthetic.hpp"
#include "phrasecat/qa.hpp"
#include "phrasecat/render.hpp"

using namespace phrasecat;

namespace {

const Catalogue& fixture() {
  static const Catalogue cat = testkit::load_fixture();
  return cat;
}

const Catalogue& synthetic() {
  static const Catalogue cat = parse_catalogue(testkit::synthetic_catalogue());
  return cat;
}

void BM_RenderNestedSentence(benchmark::State& state) {
  const auto selections = generate_random(fixture(), GenerationSpec{"p19", 1, 256});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_sentence(fixture(), selections[i++ % selections.size()], "fr"));
  }
}
BENCHMARK(BM_RenderNestedSentence);

void BM_RenderValidatedSentence(benchmark::State& state) {
  const auto selections = generate_random(fixture(), GenerationSpec{"p19", 1, 256});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_validated(fixture(), selections[i++ % selections.size()], "it"));
  }
}
BENCHMARK(BM_RenderValidatedSentence);

void BM_RenderSyntheticSentence(benchmark::State& state) {
  std::vector<Selection> selections;
  for (const Phrase* p : synthetic().phrases_by_number()) {
    auto more = generate_random(synthetic(), GenerationSpec{p->id, 3, 8});
    selections.insert(selections.end(), more.begin(), more.end());
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_sentence(synthetic(), selections[i++ % selections.size()], "en"));
  }
}
BENCHMARK(BM_RenderSyntheticSentence);

void BM_GenerateSelections(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_random(fixture(), GenerationSpec{"p19", seed++, 100}));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_GenerateSelections);

void BM_EnumerateCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_count(fixture(), "p19"));
}
BENCHMARK(BM_EnumerateCount);

}  // namespace
