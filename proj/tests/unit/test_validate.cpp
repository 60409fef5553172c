#include <doctest.h>

#include "fixtures.hpp"
#include "mutations.hpp"
#include "phrasecat/validate.hpp"

using namespace phrasecat;
using nlohmann::json;

namespace {

ValidationReport validate_json(const json& doc) { return validate_catalogue(parse_catalogue(doc.dump())); }

json& list_named(json& doc, const std::string& id) {
  for (auto& l : doc["lists"]) {
    if (l["id"] == id) return l;
  }
  throw std::runtime_error("no list " + id);
}

json& phrase_named(json& doc, const std::string& id) {
  for (auto& p : doc["phrases"]) {
    if (p["id"] == id) return p;
  }
  throw std::runtime_error("no phrase " + id);
}

}  // namespace

TEST_CASE("the fixture catalogue is clean, lints included") {
  const Catalogue cat = testkit::load_fixture();
  const ValidationReport report = validate_catalogue(cat);
  CHECK(report.ok());
  CHECK(report.warnings.empty());
  const ValidationReport lint = lint_agreement(cat);
  CHECK(lint.errors.empty());
  CHECK(lint.warnings.empty());
}

TEST_CASE("every seeded mutation is caught with its code") {
  const json base = testkit::load_fixture_json();
  for (const auto& mutation : testkit::catalogue_mutations()) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      json doc = base;
      const std::string what = mutation.apply(doc, seed);
      CAPTURE(mutation.name);
      CAPTURE(what);
      const ValidationReport report = validate_json(doc);
      CHECK_FALSE(report.ok());
      CHECK(report.has_error(mutation.expected_code));
    }
  }
}

TEST_CASE("missing text names the option and language") {
  json doc = testkit::load_fixture_json();
  list_named(doc, "Ort")["options"][1]["text"].erase("it");
  const ValidationReport report = validate_json(doc);
  REQUIRE(report.has_error("MISSING_TEXT"));
  bool found = false;
  for (const auto& f : report.errors) {
    if (f.code == "MISSING_TEXT") found = f.path.find("Ort") != std::string::npos && f.path.find("it") != std::string::npos;
  }
  CHECK(found);
}

TEST_CASE("placeholder parity ignores position but not count") {
  json doc = testkit::load_fixture_json();
  list_named(doc, "Gebiet")["options"][1]["text"]["en"] = "{{Ort}} on the northern flank of the Alps {{östlich}}";
  CHECK(validate_json(doc).ok());
  list_named(doc, "Gebiet")["options"][1]["text"]["en"] = "{{Ort}} {{Ort}} {{östlich}}";
  CHECK(validate_json(doc).has_error("PLACEHOLDER_PARITY"));
}

TEST_CASE("list structure errors") {
  const json base = testkit::load_fixture_json();

  json doc = base;
  list_named(doc, "östlich")["depth"] = 3;
  CHECK(validate_json(doc).has_error("DEPTH_BOUND"));

  doc = base;
  list_named(doc, "Ort")["depth"] = 1;
  CHECK(validate_json(doc).has_error("DEPTH_ORDER"));

  doc = base;
  list_named(doc, "Ort")["options"][0]["text"] = {{"de", "{Gebiet}"}, {"fr", "{Gebiet}"}, {"it", "{Gebiet}"}, {"en", "{Gebiet}"}};
  const ValidationReport cyclic = validate_json(doc);
  CHECK(cyclic.has_error("CYCLE"));
  CHECK(cyclic.has_error("DEPTH_ORDER"));

  doc = base;
  list_named(doc, "p90_caution")["options"] = json::array();
  CHECK(validate_json(doc).has_error("EMPTY_LIST"));

  doc = base;
  list_named(doc, "p22_between")["split_languages"] = {"de", "it"};
  CHECK(validate_json(doc).has_error("SPLIT_SOURCE"));

  doc = base;
  list_named(doc, "Ort")["split_languages"] = {"fr"};
  CHECK(validate_json(doc).has_error("SPLIT_NESTED"));

  doc = base;
  list_named(doc, "p22_between")["split_languages"] = json::array();
  const ValidationReport unsplit = validate_json(doc);
  CHECK(unsplit.has_error("SPLIT_MISMATCH"));
  CHECK(unsplit.has_error("LAYOUT_SPLIT"));
}

TEST_CASE("phrase structure errors") {
  const json base = testkit::load_fixture_json();

  json doc = base;
  phrase_named(doc, "p22")["segments"][1] = "Gebiet";
  CHECK(validate_json(doc).has_error("SEGMENT_DEPTH"));

  doc = base;
  json& p90 = phrase_named(doc, "p90");
  for (int i = 0; i < 10; ++i) p90["segments"].push_back("p90_caution");
  CHECK(validate_json(doc).has_error("SEGMENT_COUNT"));

  doc = base;
  phrase_named(doc, "p41")["layouts"].erase("fr");
  CHECK(validate_json(doc).has_error("LAYOUT_MISSING"));

  doc = base;
  phrase_named(doc, "p41")["layouts"]["de"] = {"2", "1"};
  CHECK(validate_json(doc).has_error("LAYOUT_PERMUTATION"));

  doc = base;
  phrase_named(doc, "p41")["layouts"]["fr"] = {"1"};
  CHECK(validate_json(doc).has_error("LAYOUT_PERMUTATION"));

  doc = base;
  phrase_named(doc, "p22")["layouts"]["it"] = {"1", "2b", "3", "4", "2a", "5"};
  CHECK(validate_json(doc).has_error("LAYOUT_PERMUTATION"));
}

TEST_CASE("a lone empty option is only a warning") {
  json doc = testkit::load_fixture_json();
  json& list = list_named(doc, "p90_caution");
  list["options"] = {{{"id", "o1"}, {"text", {{"de", ""}, {"fr", ""}, {"it", ""}, {"en", ""}}}}};
  const ValidationReport report = validate_json(doc);
  CHECK(report.ok());
  CHECK(report.has_warning("EMPTY_REQUIRED_OPTION"));
}

TEST_CASE("language declarations") {
  json doc = testkit::load_fixture_json();
  doc["languages"][0]["source"] = false;
  doc["languages"][1]["source"] = true;
  // fr becomes the source; the fr-split list p19_article now splits the source.
  CHECK(validate_json(doc).has_error("SPLIT_SOURCE"));

  doc = testkit::load_fixture_json();
  doc["languages"][1]["source"] = true;
  CHECK(validate_json(doc).has_error("SOURCE_LANGUAGE"));
}

TEST_CASE("agreement lint") {
  json doc = testkit::load_fixture_json();
  json& drifts = list_named(doc, "p19_drifts");
  json second = drifts["options"][0];
  second["id"] = "o2";
  second["agreement"]["features"]["fr"]["gender"] = "m";
  drifts["options"].push_back(second);
  ValidationReport lint = lint_agreement(parse_catalogue(doc.dump()));
  CHECK(lint.has_warning("AGREEMENT_CONFLICT"));
  CHECK(lint.ok());

  drifts["options"][1].erase("agreement");
  lint = lint_agreement(parse_catalogue(doc.dump()));
  CHECK(lint.has_warning("AGREEMENT_UNDECLARED"));
}

TEST_CASE("report formatting lists errors before warnings") {
  ValidationReport report;
  report.warning("W", "a", "warned");
  report.error("E", "b", "failed");
  CHECK(format_report(report) == "b: E: failed\na: W (warning): warned\n");
}
