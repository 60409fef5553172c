#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "phrasecat/catalogue.hpp"
#include "phrasecat/selection.hpp"

namespace phrasecat {

using BigCount = boost::multiprecision::cpp_int;

struct GenerationSpec {
  std::string phrase_id;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

/// Seeded sentence generator.
///
/// The stream is std::mt19937_64 seeded with `seed`. Slots are filled in
/// pre-order (segments by number, then the chosen option's source slots in
/// occurrence order, depth first). Each pick draws an index in [0, n) by
/// rejection: x = engine() is rejected while x >= 2^64 - (2^64 mod n), then
/// the index is x mod n. This keeps streams reproducible across platforms,
/// which std::uniform_int_distribution does not guarantee.
std::vector<Selection> generate_random(const Catalogue& catalogue, const GenerationSpec& spec);

std::uint64_t uniform_index(std::mt19937_64& engine, std::uint64_t n);

/// Exact number of distinct complete selections of a phrase.
BigCount enumerate_count(const Catalogue& catalogue, const std::string& phrase_id);

/// Complete selections in lexicographic order of option positions. Throws
/// Error LIMIT_EXCEEDED when the phrase has more than `limit` selections.
std::vector<Selection> enumerate_all(const Catalogue& catalogue, const std::string& phrase_id,
                                     std::size_t limit);

struct ReviewRow {
  std::string list_id;
  std::string option_id;
  std::vector<std::string> texts;  // catalogue language order
  std::vector<std::string> hints;
};

struct ReviewSheet {
  std::vector<LanguageTag> languages;
  std::vector<ReviewRow> rows;  // by list id, then option order
  std::vector<std::string> unreachable_lists;
};

/// Every option of every list with all languages side by side.
ReviewSheet option_walk(const Catalogue& catalogue);

/// Tab-separated sheet: list, option, one column per language.
std::string export_review_sheet(const ReviewSheet& sheet);

struct SurfaceViolation {
  std::string code;
  std::string message;
  friend bool operator==(const SurfaceViolation&, const SurfaceViolation&) = default;
};

/// DOUBLE_SPACE, LEADING_OR_TRAILING_SPACE, LOWERCASE_START,
/// UNRESOLVED_MARKER, EMPTY_TEXT.
std::vector<SurfaceViolation> check_surface_invariants(std::string_view text,
                                                       const LanguageTag& lang);

/// Whitespace subset applied to joker sentences.
std::vector<SurfaceViolation> check_whitespace(std::string_view text);

std::string format_violations(const std::string& path,
                              const std::vector<SurfaceViolation>& violations);

}  // namespace phrasecat
