#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "phrasecat/search.hpp"

using namespace phrasecat;

namespace {

const PhraseIndex& index() {
  static const PhraseIndex idx = build_index(testkit::load_fixture());
  return idx;
}

const testkit::NaiveOracle& oracle() {
  static const testkit::NaiveOracle o(testkit::load_fixture_json());
  return o;
}

std::vector<std::string> ids(const std::vector<SearchHit>& hits) {
  std::vector<std::string> out;
  for (const auto& h : hits) out.push_back(h.phrase_id);
  return out;
}

void check_against_oracle(const std::string& query) {
  CAPTURE(query);
  const auto ours = search(index(), query, 1000);
  const auto theirs = oracle().search(query);
  REQUIRE(ours.size() == theirs.size());
  for (std::size_t i = 0; i < ours.size(); ++i) {
    CHECK(ours[i].phrase_id == theirs[i].phrase_id);
    CHECK(ours[i].matched_terms.size() == theirs[i].matched);
    CHECK(ours[i].score == doctest::Approx(theirs[i].score).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("nested vocabulary is indexed under its phrase") {
  const IndexedPhrase* p19 = nullptr;
  for (const auto& p : index().phrases) {
    if (p.phrase_id == "p19") p19 = &p;
  }
  REQUIRE(p19 != nullptr);
  for (const char* term : {"passlagen", "kamm", "alpennordhang", "urseren", "interlaken", "östlich", "reuss"}) {
    CAPTURE(term);
    CHECK(p19->term_frequency.count(term) == 1);
  }
  CHECK(p19->term_frequency.count("gebiet") == 0);
  CHECK(p19->term_frequency.count("vor_alle") == 0);
}

TEST_CASE("phrases are found by words of their deepest options") {
  const auto hits = search(index(), "Triebschneeansammlungen Passlagen");
  REQUIRE_FALSE(hits.empty());
  CHECK(hits[0].phrase_id == "p19");
  CHECK(hits[0].matched_terms == std::vector<std::string>{"triebschneeansammlungen", "passlagen"});
  CHECK(ids(search(index(), "Interlaken")) == std::vector<std::string>{"p19"});
}

TEST_CASE("each synonym finds the same phrase") {
  for (const char* query : {"Wiesenhänge", "Grashänge", "steile Hänge", "GRASHÄNGE"}) {
    CAPTURE(query);
    const auto hits = search(index(), query);
    REQUIRE_FALSE(hits.empty());
    CHECK(hits[0].phrase_id == "p70");
  }
}

TEST_CASE("queries without known words find nothing") {
  CHECK(search(index(), "").empty());
  CHECK(search(index(), "  ,.  ").empty());
  CHECK(search(index(), "Xylophon").empty());
}

TEST_CASE("limit and determinism") {
  const auto all = search(index(), "die Lawinen können", 1000);
  REQUIRE(all.size() > 3);
  const auto all_ids = ids(all);
  CHECK(ids(search(index(), "die Lawinen können", 3)) == std::vector<std::string>(all_ids.begin(), all_ids.begin() + 3));
  CHECK(search(index(), "die Lawinen können", 0).empty());
  CHECK(ids(search(index(), "können Lawinen die", 1000)) == all_ids);
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].matched_terms.size() >= all[i].matched_terms.size());
  }
}

TEST_CASE("ranking matches an independent recount") {
  for (const char* q : {"Triebschneeansammlungen Passlagen", "Lawinen", "die Lawinen können", "steile Hänge",
                        "Altschnee Bise", "Wintersportlern klein"}) {
    check_against_oracle(q);
  }
  const auto vocab = oracle().vocabulary();
  std::mt19937_64 rng(2013);
  for (int i = 0; i < 200; ++i) {
    std::string query;
    const int words = 1 + static_cast<int>(rng() % 4);
    for (int w = 0; w < words; ++w) query += vocab[rng() % vocab.size()] + " ";
    check_against_oracle(query);
  }
}
