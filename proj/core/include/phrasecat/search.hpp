#pragma once

#include <map>
#include <string>
#include <vector>

#include "phrasecat/catalogue.hpp"

namespace phrasecat {

struct IndexedPhrase {
  std::string phrase_id;
  int number = 0;
  std::map<std::string, int> term_frequency;
};

/// Bag-of-words index over the source-language text reachable from each
/// phrase through every slot depth.
struct PhraseIndex {
  std::string catalogue_hash;
  std::vector<IndexedPhrase> phrases;  // by number
  std::map<std::string, int> document_frequency;

  bool empty() const { return phrases.empty(); }
};

struct SearchHit {
  std::string phrase_id;
  int number = 0;
  double score = 0.0;
  std::vector<std::string> matched_terms;
};

PhraseIndex build_index(const Catalogue& catalogue);

/// Hits ranked by number of distinct matched query terms, then by TF-IDF
/// score (sum over matched terms of (1 + ln tf) * ln(1 + N / df)), then by
/// ascending phrase number.
std::vector<SearchHit> search(const PhraseIndex& index, std::string_view query,
                              std::size_t limit = 20);

}  // namespace phrasecat
