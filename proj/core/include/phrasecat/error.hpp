#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace phrasecat {

// Every failure raised by the engine carries a stable machine-readable code
// (e.g. "SYNTAX", "INCOMPLETE_SELECTION", "IMMUTABLE_EDITION") and, where
// meaningful, the location path of the offending element.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::string path = {})
      : std::runtime_error(message), code_(std::move(code)), path_(std::move(path)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }

  // Index of the sentence inside a description, when the error came from
  // rendering one sentence of several.
  std::optional<std::size_t> sentence_index;

 private:
  std::string code_;
  std::string path_;
};

}  // namespace phrasecat
