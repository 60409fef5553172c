#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace phrasecat {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kMaxListDepth = 2;
inline constexpr std::size_t kMaxSegments = 10;

using LanguageTag = std::string;

/// Placeholder for a nested slot. `ordinal` is the 1-based occurrence index
/// among references to the same list inside one option text, which is how
/// child choices bind regardless of where a translation puts the slot.
struct SlotRef {
  std::string list_id;
  int ordinal = 1;

  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

struct Token {
  std::variant<std::string, SlotRef> value;
  // No whitespace separated this token from the previous one in the
  // authored text ("{an_steilen},").
  bool attached = false;

  bool is_literal() const { return std::holds_alternative<std::string>(value); }
  bool is_slot() const { return std::holds_alternative<SlotRef>(value); }
  const std::string& literal() const { return std::get<std::string>(value); }
  const SlotRef& slot() const { return std::get<SlotRef>(value); }

  friend bool operator==(const Token&, const Token&) = default;
};

/// One renderable stretch of option text. Glue flags come from the "(-)"
/// marker at the start (no space before) or the end (no space after).
struct TextPart {
  std::vector<Token> tokens;
  bool glue_before = false;
  bool glue_after = false;

  bool empty() const { return tokens.empty(); }
  friend bool operator==(const TextPart&, const TextPart&) = default;
};

/// Text of one option in one language. Lists that are split in a language
/// carry parts a and b instead of a whole text.
struct OptionText {
  TextPart whole;
  std::optional<std::pair<TextPart, TextPart>> split;

  bool is_split() const { return split.has_value(); }
  bool empty() const;
  friend bool operator==(const OptionText&, const OptionText&) = default;
};

/// Slot references in occurrence order (part a before part b).
std::vector<SlotRef> slot_refs(const OptionText& text);

struct GrammaticalFeatures {
  std::string gender;
  std::string number;
  friend bool operator==(const GrammaticalFeatures&, const GrammaticalFeatures&) = default;
};

/// Subjects declare per-language features; adjectives declare the list whose
/// subjects they must agree with.
struct Agreement {
  std::map<LanguageTag, GrammaticalFeatures> features;
  std::optional<std::string> agrees_with;
  friend bool operator==(const Agreement&, const Agreement&) = default;
};

struct OptionEntry {
  std::string id;
  std::map<LanguageTag, OptionText> texts;
  // Shown next to the option in the editor only, never rendered.
  std::map<LanguageTag, std::string> hints;
  std::optional<Agreement> agreement;
  // Author's estimate of when a described future process happens. Stored,
  // never interpreted.
  std::optional<std::string> future_time;

  const OptionText* text(const LanguageTag& lang) const;
  bool has_hint() const;
  friend bool operator==(const OptionEntry&, const OptionEntry&) = default;
};

struct OptionList {
  std::string id;
  int depth = 0;
  std::vector<OptionEntry> options;
  std::set<LanguageTag> split_languages;

  const OptionEntry* find(std::string_view option_id) const;
  friend bool operator==(const OptionList&, const OptionList&) = default;
};

enum class PartKind { Whole, A, B };

struct LayoutPart {
  int segment = 0;
  PartKind kind = PartKind::Whole;

  friend bool operator==(const LayoutPart&, const LayoutPart&) = default;
};

std::string to_string(const LayoutPart& part);
std::optional<LayoutPart> parse_layout_part(std::string_view text);

struct Segment {
  int number = 0;
  std::string list_id;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Phrase {
  std::string id;
  int number = 0;
  std::string title;
  std::vector<Segment> segments;
  std::map<LanguageTag, std::vector<LayoutPart>> layouts;

  const Segment* segment(int number) const;
  friend bool operator==(const Phrase&, const Phrase&) = default;
};

struct Language {
  LanguageTag code;
  bool source = false;
  friend bool operator==(const Language&, const Language&) = default;
};

/// Immutable snapshot of a phrase catalogue.
struct Catalogue {
  int schema_version = kSchemaVersion;
  std::vector<Language> languages;
  std::map<std::string, OptionList> lists;
  std::map<std::string, Phrase> phrases;

  /// The flagged source language, or the first language when none is flagged.
  const LanguageTag& source_language() const;
  bool has_language(std::string_view code) const;
  std::vector<LanguageTag> language_codes() const;
  const OptionList* find_list(std::string_view id) const;
  const Phrase* find_phrase(std::string_view id) const;
  /// Phrases ordered by display number, then id.
  std::vector<const Phrase*> phrases_by_number() const;

  friend bool operator==(const Catalogue&, const Catalogue&) = default;
};

/// Parses a UTF-8 catalogue document. Throws Error with codes SYNTAX,
/// SCHEMA, SCHEMA_VERSION, DUPLICATE_ID, MARKER or UNKNOWN_LIST.
Catalogue parse_catalogue(std::string_view document);
Catalogue load_catalogue_file(const std::string& path);

/// Canonical document; a fixed point of serialize(parse(.)).
std::string serialize_catalogue(const Catalogue& catalogue);

/// Canonical text of one option part with markers, as an author writes it.
std::string format_text_part(const Catalogue& catalogue, const TextPart& part);

/// Hex SHA-256 of the canonical serialization.
std::string catalogue_hash(const Catalogue& catalogue);

}  // namespace phrasecat
