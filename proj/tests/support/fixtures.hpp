#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "phrasecat/bulletin.hpp"
#include "phrasecat/catalogue.hpp"
#include "phrasecat/selection.hpp"

namespace phrasecat::testkit {

std::filesystem::path fixture_path(std::string_view name);
std::string read_text(const std::filesystem::path& path);

Catalogue load_fixture(std::string_view name = "avalanche.json");
nlohmann::json load_fixture_json(std::string_view name = "avalanche.json");

/// Selection from its wire form, e.g. R"({"phrase":"p22","choices":{...}})".
Selection selection(std::string_view wire);

struct Golden {
  std::string name;
  Selection selection;
  std::map<LanguageTag, std::string> expected;
};

/// Published reference sentences with their expected renderings, byte-exact.
std::vector<Golden> golden_sentences();

/// The four-sentence Bise paragraph per language, joined by one space.
std::map<LanguageTag, std::string> bise_paragraphs();
std::vector<SentenceSpec> bise_sentences();

/// Three descriptions, eight sentences, one joker.
Bulletin fixture_bulletin();

/// Removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Files and directories below `dir`, relative, sorted.
std::vector<std::string> tree(const std::filesystem::path& dir);

}  // namespace phrasecat::testkit
