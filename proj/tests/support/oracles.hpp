#pragma once

// Reference implementations used only by tests. They work on the raw JSON
// document and share no code with the engine beyond the Selection type.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phrasecat/selection.hpp"

namespace phrasecat::testkit {

class NaiveOracle {
 public:
  explicit NaiveOracle(nlohmann::json document);

  /// Textual substitution of slots into raw option strings, then marker
  /// stripping, whitespace normalization and capitalization.
  std::string render(const Selection& selection, const std::string& lang) const;

  /// Every complete selection, built by plain recursion without memoization.
  std::vector<Selection> enumerate(const std::string& phrase_id) const;

  struct Hit {
    std::string phrase_id;
    int number = 0;
    std::size_t matched = 0;
    double score = 0.0;
  };
  /// Scores every phrase against the query by direct recount of source
  /// strings; full ranking, no limit.
  std::vector<Hit> search(const std::string& query) const;

  /// Distinct lowercase words across all source texts.
  std::vector<std::string> vocabulary() const;

  std::size_t option_count() const;
  std::vector<std::string> phrase_ids() const;

 private:
  const nlohmann::json& option(const std::string& list_id, const std::string& option_id) const;
  std::string raw_text(const nlohmann::json& option, const std::string& lang, int part) const;
  std::string expand(const std::string& text, const Choice& choice, const std::string& lang,
                     std::map<std::string, int>& ordinals) const;
  std::vector<Choice> all_choices(const std::string& list_id) const;
  std::map<std::string, int> term_counts(const nlohmann::json& phrase) const;

  nlohmann::json doc_;
  std::string source_;
  std::map<std::string, const nlohmann::json*> lists_;
  std::map<std::string, const nlohmann::json*> phrases_;
};

/// Lowercased runs of letters/digits, via ICU directly.
std::vector<std::string> oracle_words(const std::string& text);
std::string oracle_capitalize(const std::string& text);

}  // namespace phrasecat::testkit
