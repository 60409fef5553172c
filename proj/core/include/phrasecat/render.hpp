#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "phrasecat/catalogue.hpp"
#include "phrasecat/selection.hpp"

namespace phrasecat {

/// Free text supplied by hand in every language, bypassing the catalogue.
struct JokerSentence {
  std::map<LanguageTag, std::string> texts;
  friend bool operator==(const JokerSentence&, const JokerSentence&) = default;
};

using SentenceSpec = std::variant<Selection, JokerSentence>;

struct SentenceText {
  LanguageTag language;
  std::string text;
};

/// Segment-level assembly: walk the language's layout, expand each chosen
/// option (whole, part a or part b) with its nested slots, join fragments by
/// one space except across glue, drop empty fragments and capitalize.
/// Throws Error INCOMPLETE_SELECTION or UNKNOWN_LANGUAGE.
SentenceText render_sentence(const Catalogue& catalogue, const Selection& selection,
                             const LanguageTag& lang);

/// Same as render_sentence for a selection already known to validate.
std::string render_validated(const Catalogue& catalogue, const Selection& selection,
                             const LanguageTag& lang);

/// Sentences in order joined by a single space. Errors carry the index of
/// the failing sentence.
std::string render_description(const Catalogue& catalogue,
                               const std::vector<SentenceSpec>& sentences,
                               const LanguageTag& lang);

std::string joker_text(const JokerSentence& joker, const LanguageTag& lang);

}  // namespace phrasecat
