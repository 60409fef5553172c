#include "phrasecat/catalogue.hpp"

#include <algorithm>
#include <charconv>

namespace phrasecat {

bool OptionText::empty() const {
  if (split) return split->first.empty() && split->second.empty();
  return whole.empty();
}

std::vector<SlotRef> slot_refs(const OptionText& text) {
  std::vector<SlotRef> out;
  auto collect = [&out](const TextPart& part) {
    for (const auto& token : part.tokens) {
      if (token.is_slot()) out.push_back(token.slot());
    }
  };
  if (text.split) {
    collect(text.split->first);
    collect(text.split->second);
  } else {
    collect(text.whole);
  }
  return out;
}

const OptionText* OptionEntry::text(const LanguageTag& lang) const {
  auto it = texts.find(lang);
  return it == texts.end() ? nullptr : &it->second;
}

bool OptionEntry::has_hint() const {
  return std::any_of(hints.begin(), hints.end(),
                     [](const auto& kv) { return !kv.second.empty(); });
}

const OptionEntry* OptionList::find(std::string_view option_id) const {
  for (const auto& option : options) {
    if (option.id == option_id) return &option;
  }
  return nullptr;
}

std::string to_string(const LayoutPart& part) {
  std::string out = std::to_string(part.segment);
  if (part.kind == PartKind::A) out += 'a';
  if (part.kind == PartKind::B) out += 'b';
  return out;
}

std::optional<LayoutPart> parse_layout_part(std::string_view text) {
  LayoutPart part;
  if (!text.empty() && (text.back() == 'a' || text.back() == 'b')) {
    part.kind = text.back() == 'a' ? PartKind::A : PartKind::B;
    text.remove_suffix(1);
  }
  if (text.empty() || text.front() == '+' || text.front() == '-') return std::nullopt;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, part.segment);
  if (ec != std::errc{} || ptr != end || part.segment < 1) return std::nullopt;
  return part;
}

const Segment* Phrase::segment(int seg_number) const {
  for (const auto& s : segments) {
    if (s.number == seg_number) return &s;
  }
  return nullptr;
}

const LanguageTag& Catalogue::source_language() const {
  for (const auto& lang : languages) {
    if (lang.source) return lang.code;
  }
  static const LanguageTag kNone;
  return languages.empty() ? kNone : languages.front().code;
}

bool Catalogue::has_language(std::string_view code) const {
  return std::any_of(languages.begin(), languages.end(),
                     [code](const Language& l) { return l.code == code; });
}

std::vector<LanguageTag> Catalogue::language_codes() const {
  std::vector<LanguageTag> out;
  out.reserve(languages.size());
  for (const auto& l : languages) out.push_back(l.code);
  return out;
}

const OptionList* Catalogue::find_list(std::string_view id) const {
  auto it = lists.find(std::string(id));
  return it == lists.end() ? nullptr : &it->second;
}

const Phrase* Catalogue::find_phrase(std::string_view id) const {
  auto it = phrases.find(std::string(id));
  return it == phrases.end() ? nullptr : &it->second;
}

std::vector<const Phrase*> Catalogue::phrases_by_number() const {
  std::vector<const Phrase*> out;
  out.reserve(phrases.size());
  for (const auto& [id, phrase] : phrases) out.push_back(&phrase);
  std::stable_sort(out.begin(), out.end(), [](const Phrase* a, const Phrase* b) {
    return a->number < b->number;
  });
  return out;
}

}  // namespace phrasecat
