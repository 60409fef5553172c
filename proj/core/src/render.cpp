#include "phrasecat/render.hpp"

#include "phrasecat/error.hpp"
#include "phrasecat/unicode.hpp"

namespace phrasecat {
namespace {

// Joins leaf fragments with single spaces. A glue mark between two fragments
// suppresses the space; it survives empty fragments in between, so glue
// across an [Empty] slot still holds.
class Assembler {
 public:
  void glue() { pending_glue_ = true; }

  void text(const std::string& fragment) {
    if (fragment.empty()) return;
    if (!out_.empty() && !pending_glue_) out_ += ' ';
    out_ += fragment;
    pending_glue_ = false;
  }

  std::string take() { return std::move(out_); }

 private:
  std::string out_;
  bool pending_glue_ = false;
};

class SentenceRenderer {
 public:
  SentenceRenderer(const Catalogue& cat, const LanguageTag& lang) : cat_(cat), lang_(lang) {}

  void part(const TextPart& part, const Choice& choice) {
    if (part.glue_before) out_.glue();
    for (const Token& token : part.tokens) {
      if (token.attached) out_.glue();
      if (token.is_literal()) {
        out_.text(token.literal());
        continue;
      }
      const SlotRef& slot = token.slot();
      const Choice& child = choice.children.at(slot);
      const OptionEntry& option = lookup(slot.list_id, child.option_id);
      const OptionText& text = language_text(option);
      if (text.split) {
        this->part(text.split->first, child);
        this->part(text.split->second, child);
      } else {
        this->part(text.whole, child);
      }
    }
    if (part.glue_after) out_.glue();
  }

  void segment(const Phrase& phrase, const Selection& selection, const LayoutPart& layout_part) {
    const Segment* seg = phrase.segment(layout_part.segment);
    const Choice& choice = selection.segments.at(layout_part.segment);
    const OptionEntry& option = lookup(seg->list_id, choice.option_id);
    const OptionText& text = language_text(option);
    switch (layout_part.kind) {
      case PartKind::Whole:
        part(text.whole, choice);
        break;
      case PartKind::A:
        if (text.split) part(text.split->first, choice);
        break;
      case PartKind::B:
        if (text.split) part(text.split->second, choice);
        break;
    }
  }

  std::string finish() { return unicode::capitalize_first_letter(out_.take()); }

 private:
  const OptionEntry& lookup(const std::string& list_id, const std::string& option_id) const {
    const OptionList* list = cat_.find_list(list_id);
    const OptionEntry* option = list ? list->find(option_id) : nullptr;
    if (!option) {
      throw Error("INCOMPLETE_SELECTION", "option \"" + option_id + "\" not in list \"" + list_id + "\"");
    }
    return *option;
  }

  const OptionText& language_text(const OptionEntry& option) const {
    const OptionText* text = option.text(lang_);
    if (!text) {
      throw Error("MISSING_TEXT", "option \"" + option.id + "\" has no text in \"" + lang_ + "\"");
    }
    return *text;
  }

  const Catalogue& cat_;
  const LanguageTag& lang_;
  Assembler out_;
};

}  // namespace

std::string render_validated(const Catalogue& catalogue, const Selection& selection,
                             const LanguageTag& lang) {
  const Phrase* phrase = catalogue.find_phrase(selection.phrase_id);
  if (!phrase) throw Error("INCOMPLETE_SELECTION", "unknown phrase \"" + selection.phrase_id + "\"");
  auto layout = phrase->layouts.find(lang);
  if (layout == phrase->layouts.end()) {
    throw Error("UNKNOWN_LANGUAGE", "phrase \"" + phrase->id + "\" has no layout for \"" + lang + "\"");
  }
  SentenceRenderer renderer(catalogue, lang);
  for (const LayoutPart& part : layout->second) renderer.segment(*phrase, selection, part);
  return renderer.finish();
}

SentenceText render_sentence(const Catalogue& catalogue, const Selection& selection,
                             const LanguageTag& lang) {
  if (!catalogue.has_language(lang)) {
    throw Error("UNKNOWN_LANGUAGE", "language \"" + lang + "\" is not in the catalogue");
  }
  const ValidationReport report = validate_selection(catalogue, selection);
  if (!report.ok()) {
    const Finding& first = report.errors.front();
    throw Error("INCOMPLETE_SELECTION", first.code + " at " + first.path + ": " + first.message, first.path);
  }
  return SentenceText{lang, render_validated(catalogue, selection, lang)};
}

std::string joker_text(const JokerSentence& joker, const LanguageTag& lang) {
  auto it = joker.texts.find(lang);
  if (it == joker.texts.end()) {
    throw Error("MISSING_TEXT", "joker sentence has no text in \"" + lang + "\"");
  }
  std::string_view text = it->second;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw Error("MISSING_TEXT", "joker sentence is empty in \"" + lang + "\"");
  return std::string(text);
}

std::string render_description(const Catalogue& catalogue,
                               const std::vector<SentenceSpec>& sentences,
                               const LanguageTag& lang) {
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    std::string text;
    try {
      if (const auto* selection = std::get_if<Selection>(&sentences[i])) {
        text = render_sentence(catalogue, *selection, lang).text;
      } else {
        text = joker_text(std::get<JokerSentence>(sentences[i]), lang);
      }
    } catch (Error& e) {
      Error wrapped(e.code(), "sentence " + std::to_string(i + 1) + ": " + e.what(), e.path());
      wrapped.sentence_index = i;
      throw wrapped;
    }
    if (!out.empty()) out += ' ';
    out += text;
  }
  return out;
}

}  // namespace phrasecat
