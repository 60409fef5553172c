#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phrasecat/catalogue.hpp"
#include "phrasecat/validate.hpp"

namespace phrasecat {

/// A chosen option plus the choices for the slots its source text opens.
struct Choice {
  std::string option_id;
  std::map<SlotRef, Choice> children;

  friend bool operator==(const Choice&, const Choice&) = default;
};

/// Language-independent description of one sentence: the phrase and a tree
/// of option ids, keyed by segment number at the top.
struct Selection {
  std::string phrase_id;
  std::map<int, Choice> segments;

  friend bool operator==(const Selection&, const Selection&) = default;
  friend bool operator<(const Selection& a, const Selection& b);
};

bool operator<(const Choice& a, const Choice& b);

/// "Gebiet#2"
std::string slot_key(const SlotRef& slot);
std::optional<SlotRef> parse_slot_key(std::string_view key);

struct SlotOptionView {
  std::string option_id;
  std::string text;  // source-language text with markers, "[Empty]" if empty
  std::string hint;  // source-language editor hint
};

struct SlotDescriptor {
  std::string path;
  std::string list_id;
  int depth = 0;
  std::optional<std::string> chosen;
  std::vector<SlotOptionView> options;
};

struct SlotTree {
  std::string phrase_id;
  std::vector<SlotDescriptor> slots;  // pre-order
};

/// All slots fillable under a partial selection. Throws Error UNKNOWN_PHRASE
/// or UNKNOWN_OPTION.
SlotTree resolve_slots(const Catalogue& catalogue, const Selection& selection);

/// Errors: UNKNOWN_PHRASE, MISSING_CHOICE, EXTRANEOUS_CHOICE, STALE_OPTION.
/// Warning PRONOUN_CHECK for chosen options that carry an editor hint.
ValidationReport validate_selection(const Catalogue& catalogue, const Selection& selection);

}  // namespace phrasecat
