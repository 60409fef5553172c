#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "synthetic.hpp"
#include "phrasecat/validate.hpp"

using namespace phrasecat;

namespace {

void BM_ParseSynthetic(benchmark::State& state) {
  const std::string document = testkit::synthetic_catalogue();
  for (auto _ : state) benchmark::DoNotOptimize(parse_catalogue(document));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(document.size()));
}
BENCHMARK(BM_ParseSynthetic)->Unit(benchmark::kMillisecond);

void BM_ValidateSynthetic(benchmark::State& state) {
  const Catalogue cat = parse_catalogue(testkit::synthetic_catalogue());
  for (auto _ : state) benchmark::DoNotOptimize(validate_catalogue(cat));
}
BENCHMARK(BM_ValidateSynthetic)->Unit(benchmark::kMillisecond);

void BM_SerializeSynthetic(benchmark::State& state) {
  const Catalogue cat = parse_catalogue(testkit::synthetic_catalogue());
  for (auto _ : state) benchmark::DoNotOptimize(serialize_catalogue(cat));
}
BENCHMARK(BM_SerializeSynthetic)->Unit(benchmark::kMillisecond);

void BM_ValidateFixture(benchmark::State& state) {
  const Catalogue cat = testkit::load_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(validate_catalogue(cat));
}
BENCHMARK(BM_ValidateFixture);

}  // namespace
