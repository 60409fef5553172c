#include <benchmark/benchmark.h>

#include "synthetic.hpp"
#include "phrasecat/search.hpp"

using namespace phrasecat;

namespace {

void BM_BuildIndex(benchmark::State& state) {
  const Catalogue cat = parse_catalogue(testkit::synthetic_catalogue());
  for (auto _ : state) benchmark::DoNotOptimize(build_index(cat));
}
BENCHMARK(BM_BuildIndex)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  const PhraseIndex index = build_index(parse_catalogue(testkit::synthetic_catalogue()));
  std::vector<std::string> terms;
  for (const auto& [term, df] : index.document_frequency) terms.push_back(term);
  std::size_t i = 0;
  for (auto _ : state) {
    const std::string query = terms[i % terms.size()] + " " + terms[(i * 7 + 3) % terms.size()];
    ++i;
    benchmark::DoNotOptimize(search(index, query));
  }
}
BENCHMARK(BM_Search);

}  // namespace
