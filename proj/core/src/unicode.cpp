#include "phrasecat/unicode.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "phrasecat/error.hpp"

namespace phrasecat::unicode {
namespace {

// Decodes the code point starting at byte offset `i`, advancing `i`.
// Returns a negative value on malformed input.
UChar32 next_code_point(std::string_view text, int32_t& i) {
  UChar32 c = 0;
  U8_NEXT(reinterpret_cast<const uint8_t*>(text.data()), i,
          static_cast<int32_t>(text.size()), c);
  return c;
}

std::string encode(UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  U8_APPEND_UNSAFE(reinterpret_cast<uint8_t*>(buf), len, c);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace

std::string nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error("UNICODE", "NFC normalizer unavailable");
  }
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  if (normalizer->isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(text);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error("UNICODE", "normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool is_valid_utf8(std::string_view text) {
  int32_t i = 0;
  while (i < static_cast<int32_t>(text.size())) {
    if (next_code_point(text, i) < 0) return false;
  }
  return true;
}

std::string capitalize_first_letter(std::string_view text) {
  int32_t i = 0;
  while (i < static_cast<int32_t>(text.size())) {
    const int32_t start = i;
    const UChar32 c = next_code_point(text, i);
    if (c < 0) break;
    if (!u_isalpha(c)) continue;
    const UChar32 upper = u_toupper(c);
    if (upper == c) break;
    std::string out;
    out.reserve(text.size() + 2);
    out.append(text.substr(0, static_cast<std::size_t>(start)));
    out.append(encode(upper));
    out.append(text.substr(static_cast<std::size_t>(i)));
    return out;
  }
  return std::string(text);
}

bool starts_lowercase(std::string_view text) {
  int32_t i = 0;
  while (i < static_cast<int32_t>(text.size())) {
    const UChar32 c = next_code_point(text, i);
    if (c < 0) return false;
    if (u_isalpha(c)) return u_toupper(c) != c;
  }
  return false;
}

std::string lowercase(std::string_view text) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  s.toLower(icu::Locale::getRoot());
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::vector<std::string> words(std::string_view text) {
  const std::string lower = nfc(lowercase(text));
  std::vector<std::string> out;
  std::string current;
  int32_t i = 0;
  while (i < static_cast<int32_t>(lower.size())) {
    const int32_t start = i;
    const UChar32 c = next_code_point(lower, i);
    if (c >= 0 && u_isalnum(c)) {
      current.append(lower, static_cast<std::size_t>(start), static_cast<std::size_t>(i - start));
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

}  // namespace phrasecat::unicode
