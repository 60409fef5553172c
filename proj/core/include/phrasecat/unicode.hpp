#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace phrasecat::unicode {

/// Canonical composed form (NFC). All catalogue text passes through this at
/// load time so comparisons never depend on how a client encoded accents.
std::string nfc(std::string_view text);

bool is_valid_utf8(std::string_view text);

/// Uppercases the first alphabetic code point, leaving anything before it
/// (digits, quotes, punctuation) untouched. Idempotent.
std::string capitalize_first_letter(std::string_view text);

/// True when the first alphabetic code point would change under uppercasing.
bool starts_lowercase(std::string_view text);

std::string lowercase(std::string_view text);

/// Lowercased runs of letters and digits; everything else separates words.
std::vector<std::string> words(std::string_view text);

}  // namespace phrasecat::unicode
