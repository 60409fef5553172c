#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "phrasecat/digest.hpp"
#include "phrasecat/error.hpp"
#include "phrasecat/publish.hpp"

using namespace phrasecat;
namespace fs = std::filesystem;

namespace {

const Catalogue& fixture() {
  static const Catalogue cat = testkit::load_fixture();
  return cat;
}

const std::vector<std::string> kArtifacts = {"de.json", "de.txt", "en.json", "en.txt", "fr.json",
                                             "fr.txt",  "it.json", "it.txt", "manifest.json"};

struct Setup {
  testkit::TempDir dir;
  BulletinStore store{dir.path() / "store"};
  fs::path out = dir.path() / "out";
  std::string id;

  explicit Setup(const Bulletin& b = testkit::fixture_bulletin()) { id = store.store(b); }
};

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "OK";
}

}  // namespace

TEST_CASE("publishing writes text, structured output and a manifest per language") {
  Setup s;
  std::ostringstream log;
  PublishOptions options;
  options.log = &log;
  const Manifest manifest = publish(s.store, fixture(), s.id, s.out, options);

  const fs::path dir = s.out / s.id;
  std::vector<std::string> expected;
  for (const auto& f : kArtifacts) expected.push_back(s.id + "/" + f);
  CHECK(testkit::tree(s.out) == [&] {
    std::vector<std::string> v{s.id};
    v.insert(v.end(), expected.begin(), expected.end());
    return v;
  }());

  CHECK(manifest.joker_count == 1);
  CHECK(manifest.files.size() == 8);
  CHECK(manifest.catalogue_hash == catalogue_hash(fixture()));
  CHECK(log.str() == "published " + s.id + ": 9 files, catalogue " + manifest.catalogue_hash.substr(0, 12) +
                         ", joker_count=1\n");

  const std::string de = testkit::read_text(dir / "de.txt");
  CHECK(de.rfind("Alpennordhang\n" + testkit::bise_paragraphs().at("de") + "\n\nWallis\n", 0) == 0);
  CHECK(de.find("Nasse Lawinen können an sehr steilen Sonnenhängen gefährlich gross werden. Sie können") !=
        std::string::npos);
  CHECK(de.find("Ad-hoc-Warnung.\n") != std::string::npos);

  const auto it = nlohmann::json::parse(testkit::read_text(dir / "it.json"));
  CHECK(it["language"] == "it");
  CHECK(it["bulletin_id"] == s.id);
  CHECK(it["descriptions"].size() == 3);
  CHECK(it["descriptions"][2]["sentences"][0]["text"] == "Il legame degli accumuli di neve ventata è in corso.");
  CHECK(it["descriptions"][2]["sentences"][1]["kind"] == "joker");

  for (const auto& entry : manifest.files) {
    const std::string content = testkit::read_text(dir / entry.file);
    CHECK(entry.bytes == content.size());
    CHECK(entry.sha256 == sha256_hex(content));
  }
  const Manifest reread = manifest_from_json(testkit::read_text(dir / "manifest.json"));
  CHECK(reread.files.size() == manifest.files.size());
  CHECK(reread.joker_count == 1);
  CHECK(verify_manifest(dir).empty());

  const Bulletin stored = s.store.load(s.id);
  CHECK(stored.status == BulletinStatus::Published);
  CHECK(stored.catalogue_hash == manifest.catalogue_hash);
  CHECK(s.store.load_catalogue(stored.catalogue_hash).has_value());
}

TEST_CASE("a tampered or missing artifact fails verification") {
  Setup s;
  publish(s.store, fixture(), s.id, s.out);
  const fs::path dir = s.out / s.id;
  {
    std::ofstream f(dir / "fr.txt", std::ios::app);
    f << "x";
  }
  fs::remove(dir / "en.json");
  CHECK(verify_manifest(dir) == std::vector<std::string>{"fr.txt", "en.json"});
  fs::remove(dir / "manifest.json");
  CHECK(verify_manifest(dir) == std::vector<std::string>{"manifest.json"});
}

TEST_CASE("validation failure writes nothing") {
  Bulletin b = testkit::fixture_bulletin();
  std::get<Selection>(b.descriptions[1].sentences[0]).segments.erase(3);
  Setup s(b);
  CHECK(code_of([&] { publish(s.store, fixture(), s.id, s.out); }) == "VALIDATION_FAILED");
  CHECK_FALSE(fs::exists(s.out));
  CHECK(s.store.load(s.id).status == BulletinStatus::Draft);

  Bulletin empty{"empty", "2013-02-24T08:00", "", BulletinStatus::Draft, "", {}};
  s.store.store(empty);
  CHECK(code_of([&] { publish(s.store, fixture(), "empty", s.out); }) == "VALIDATION_FAILED");

  Bulletin blank = testkit::fixture_bulletin();
  blank.bulletin_id = "blank";
  std::get<JokerSentence>(blank.descriptions[2].sentences[1]).texts["en"] = "Two  spaces.";
  s.store.store(blank);
  CHECK(code_of([&] { publish(s.store, fixture(), "blank", s.out); }) == "VALIDATION_FAILED");
  CHECK_FALSE(fs::exists(s.out));
}

TEST_CASE("a failure at any file leaves no partial artifacts") {
  for (const auto& failing : kArtifacts) {
    CAPTURE(failing);
    Setup s;
    PublishOptions options;
    options.before_write = [&](std::string_view file) {
      if (file == failing) throw std::runtime_error("disk full");
    };
    CHECK(code_of([&] { publish(s.store, fixture(), s.id, s.out, options); }) == "IO_FAILURE");
    CHECK(testkit::tree(s.out).empty());
    CHECK(s.store.load(s.id).status == BulletinStatus::Draft);

    publish(s.store, fixture(), s.id, s.out);
    CHECK(verify_manifest(s.out / s.id).empty());
  }
}

TEST_CASE("a published edition cannot be published again") {
  Setup s;
  publish(s.store, fixture(), s.id, s.out);
  CHECK(code_of([&] { publish(s.store, fixture(), s.id, s.out); }) == "IMMUTABLE_EDITION");
  CHECK(code_of([&] { publish(s.store, fixture(), "nope", s.out); }) == "NOT_FOUND");
}

TEST_CASE("an existing artifact directory is never overwritten") {
  Setup s;
  fs::create_directories(s.out / s.id);
  CHECK(code_of([&] { publish(s.store, fixture(), s.id, s.out); }) == "IO_FAILURE");
  CHECK(s.store.load(s.id).status == BulletinStatus::Draft);
}

TEST_CASE("malformed manifests are syntax errors") {
  CHECK(code_of([] { manifest_from_json("{"); }) == "SYNTAX");
  CHECK(code_of([] { manifest_from_json("{}"); }) == "SYNTAX");
}

TEST_CASE("digest matches published SHA-256 test vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
