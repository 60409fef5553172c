#include "phrasecat/selection.hpp"

#include <algorithm>
#include <charconv>

#include "phrasecat/error.hpp"

namespace phrasecat {

bool operator<(const Choice& a, const Choice& b) {
  if (a.option_id != b.option_id) return a.option_id < b.option_id;
  return std::lexicographical_compare(
      a.children.begin(), a.children.end(), b.children.begin(), b.children.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

bool operator<(const Selection& a, const Selection& b) {
  if (a.phrase_id != b.phrase_id) return a.phrase_id < b.phrase_id;
  return std::lexicographical_compare(
      a.segments.begin(), a.segments.end(), b.segments.begin(), b.segments.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

std::string slot_key(const SlotRef& slot) {
  return slot.list_id + "#" + std::to_string(slot.ordinal);
}

std::optional<SlotRef> parse_slot_key(std::string_view key) {
  SlotRef slot;
  const auto hash = key.rfind('#');
  if (hash == std::string_view::npos) {
    if (key.empty()) return std::nullopt;
    slot.list_id = std::string(key);
    return slot;
  }
  slot.list_id = std::string(key.substr(0, hash));
  const auto digits = key.substr(hash + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), slot.ordinal);
  if (slot.list_id.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() ||
      slot.ordinal < 1) {
    return std::nullopt;
  }
  return slot;
}

namespace {

std::vector<SlotOptionView> option_views(const Catalogue& cat, const OptionList& list) {
  std::vector<SlotOptionView> views;
  views.reserve(list.options.size());
  const LanguageTag& source = cat.source_language();
  for (const auto& option : list.options) {
    SlotOptionView view;
    view.option_id = option.id;
    if (const OptionText* t = option.text(source); t && !t->empty()) {
      view.text = format_text_part(cat, t->whole);
    } else {
      view.text = "[Empty]";
    }
    if (auto it = option.hints.find(source); it != option.hints.end()) view.hint = it->second;
    views.push_back(std::move(view));
  }
  return views;
}

std::vector<SlotRef> source_slots(const Catalogue& cat, const OptionEntry& option) {
  const OptionText* t = option.text(cat.source_language());
  return t ? slot_refs(*t) : std::vector<SlotRef>{};
}

void resolve_node(const Catalogue& cat, const OptionList& list, const Choice* choice,
                  const std::string& path, SlotTree& tree) {
  SlotDescriptor slot;
  slot.path = path;
  slot.list_id = list.id;
  slot.depth = list.depth;
  slot.options = option_views(cat, list);
  const OptionEntry* chosen = nullptr;
  if (choice) {
    chosen = list.find(choice->option_id);
    if (!chosen) {
      throw Error("UNKNOWN_OPTION",
                  path + ": option \"" + choice->option_id + "\" not in list \"" + list.id + "\"", path);
    }
    slot.chosen = choice->option_id;
  }
  tree.slots.push_back(std::move(slot));
  if (!chosen) return;
  for (const auto& ref : source_slots(cat, *chosen)) {
    const OptionList* child_list = cat.find_list(ref.list_id);
    if (!child_list) continue;
    auto it = choice->children.find(ref);
    resolve_node(cat, *child_list, it == choice->children.end() ? nullptr : &it->second,
                 path + "/" + chosen->id + "/" + slot_key(ref), tree);
  }
}

void validate_node(const Catalogue& cat, const OptionList& list, const Choice& choice,
                   const std::string& path, ValidationReport& report) {
  const OptionEntry* option = list.find(choice.option_id);
  if (!option) {
    report.error("STALE_OPTION", path,
                 "option \"" + choice.option_id + "\" no longer exists in list \"" + list.id + "\"");
    return;
  }
  if (option->has_hint()) {
    std::string hint;
    if (auto it = option->hints.find(cat.source_language()); it != option->hints.end()) hint = it->second;
    report.warning("PRONOUN_CHECK", path,
                   "option \"" + option->id + "\" carries the editor hint \"" + hint +
                       "\"; confirm it still refers to the intended noun");
  }
  const auto slots = source_slots(cat, *option);
  for (const auto& ref : slots) {
    const std::string child_path = path + "/" + option->id + "/" + slot_key(ref);
    auto it = choice.children.find(ref);
    if (it == choice.children.end()) {
      report.error("MISSING_CHOICE", child_path, "no option chosen for slot \"" + ref.list_id + "\"");
      continue;
    }
    const OptionList* child_list = cat.find_list(ref.list_id);
    if (!child_list) {
      report.error("STALE_OPTION", child_path, "list \"" + ref.list_id + "\" no longer exists");
      continue;
    }
    validate_node(cat, *child_list, it->second, child_path, report);
  }
  for (const auto& [ref, child] : choice.children) {
    if (std::find(slots.begin(), slots.end(), ref) == slots.end()) {
      report.error("EXTRANEOUS_CHOICE", path + "/" + option->id + "/" + slot_key(ref),
                   "option \"" + option->id + "\" has no slot \"" + slot_key(ref) + "\"");
    }
  }
}

}  // namespace

SlotTree resolve_slots(const Catalogue& catalogue, const Selection& selection) {
  const Phrase* phrase = catalogue.find_phrase(selection.phrase_id);
  if (!phrase) throw Error("UNKNOWN_PHRASE", "unknown phrase \"" + selection.phrase_id + "\"");
  SlotTree tree;
  tree.phrase_id = phrase->id;
  for (const auto& seg : phrase->segments) {
    const OptionList* list = catalogue.find_list(seg.list_id);
    if (!list) continue;
    auto it = selection.segments.find(seg.number);
    resolve_node(catalogue, *list, it == selection.segments.end() ? nullptr : &it->second,
                 std::to_string(seg.number), tree);
  }
  return tree;
}

ValidationReport validate_selection(const Catalogue& catalogue, const Selection& selection) {
  ValidationReport report;
  const Phrase* phrase = catalogue.find_phrase(selection.phrase_id);
  if (!phrase) {
    report.error("UNKNOWN_PHRASE", "", "unknown phrase \"" + selection.phrase_id + "\"");
    return report;
  }
  for (const auto& seg : phrase->segments) {
    const std::string path = std::to_string(seg.number);
    auto it = selection.segments.find(seg.number);
    if (it == selection.segments.end()) {
      report.error("MISSING_CHOICE", path, "no option chosen for segment " + path);
      continue;
    }
    const OptionList* list = catalogue.find_list(seg.list_id);
    if (!list) {
      report.error("STALE_OPTION", path, "list \"" + seg.list_id + "\" no longer exists");
      continue;
    }
    validate_node(catalogue, *list, it->second, path, report);
  }
  for (const auto& [number, choice] : selection.segments) {
    if (!phrase->segment(number)) {
      report.error("EXTRANEOUS_CHOICE", std::to_string(number),
                   "phrase \"" + phrase->id + "\" has no segment " + std::to_string(number));
    }
  }
  return report;
}

}  // namespace phrasecat
