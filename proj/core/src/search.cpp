#include "phrasecat/search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "phrasecat/unicode.hpp"

namespace phrasecat {
namespace {

std::set<std::string> reachable_lists(const Catalogue& cat, const Phrase& phrase) {
  std::set<std::string> seen;
  std::deque<std::string> queue;
  for (const auto& seg : phrase.segments) {
    if (seen.insert(seg.list_id).second) queue.push_back(seg.list_id);
  }
  while (!queue.empty()) {
    const OptionList* list = cat.find_list(queue.front());
    queue.pop_front();
    if (!list) continue;
    for (const auto& option : list->options) {
      for (const auto& [lang, text] : option.texts) {
        for (const auto& ref : slot_refs(text)) {
          if (seen.insert(ref.list_id).second) queue.push_back(ref.list_id);
        }
      }
    }
  }
  return seen;
}

void add_terms(const TextPart& part, std::map<std::string, int>& tf) {
  for (const auto& token : part.tokens) {
    if (!token.is_literal()) continue;
    for (auto& word : unicode::words(token.literal())) ++tf[std::move(word)];
  }
}

}  // namespace

PhraseIndex build_index(const Catalogue& catalogue) {
  PhraseIndex index;
  index.catalogue_hash = catalogue_hash(catalogue);
  const LanguageTag& source = catalogue.source_language();
  for (const Phrase* phrase : catalogue.phrases_by_number()) {
    IndexedPhrase entry;
    entry.phrase_id = phrase->id;
    entry.number = phrase->number;
    for (const auto& list_id : reachable_lists(catalogue, *phrase)) {
      const OptionList* list = catalogue.find_list(list_id);
      if (!list) continue;
      for (const auto& option : list->options) {
        const OptionText* text = option.text(source);
        if (!text) continue;
        add_terms(text->whole, entry.term_frequency);
      }
    }
    for (const auto& [term, count] : entry.term_frequency) ++index.document_frequency[term];
    index.phrases.push_back(std::move(entry));
  }
  return index;
}

std::vector<SearchHit> search(const PhraseIndex& index, std::string_view query, std::size_t limit) {
  std::vector<std::string> terms;
  for (auto& word : unicode::words(query)) {
    if (std::find(terms.begin(), terms.end(), word) == terms.end()) terms.push_back(std::move(word));
  }
  std::vector<SearchHit> hits;
  if (terms.empty()) return hits;

  const double n = static_cast<double>(index.phrases.size());
  for (const auto& phrase : index.phrases) {
    SearchHit hit;
    for (const auto& term : terms) {
      auto tf = phrase.term_frequency.find(term);
      if (tf == phrase.term_frequency.end()) continue;
      const double df = static_cast<double>(index.document_frequency.at(term));
      hit.score += (1.0 + std::log(static_cast<double>(tf->second))) * std::log(1.0 + n / df);
      hit.matched_terms.push_back(term);
    }
    if (hit.matched_terms.empty()) continue;
    hit.phrase_id = phrase.phrase_id;
    hit.number = phrase.number;
    hits.push_back(std::move(hit));
  }

  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.matched_terms.size() != b.matched_terms.size()) {
      return a.matched_terms.size() > b.matched_terms.size();
    }
    if (a.score != b.score) return a.score > b.score;
    if (a.number != b.number) return a.number < b.number;
    return a.phrase_id < b.phrase_id;
  });
  if (hits.size() > limit) hits.resize(limit);
  return hits;
}

}  // namespace phrasecat
