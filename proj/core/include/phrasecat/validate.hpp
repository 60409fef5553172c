#pragma once

#include <string>
#include <vector>

#include "phrasecat/catalogue.hpp"

namespace phrasecat {

struct Finding {
  std::string code;
  std::string path;
  std::string message;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> errors;
  std::vector<Finding> warnings;

  bool ok() const { return errors.empty(); }
  bool has_error(std::string_view code) const;
  bool has_warning(std::string_view code) const;
  void error(std::string code, std::string path, std::string message);
  void warning(std::string code, std::string path, std::string message);
  void merge(const ValidationReport& other, const std::string& path_prefix = {});
};

/// Checks every structural invariant that makes unsupervised rendering safe:
/// languages, per-language option presence, placeholder parity, split
/// coherence, depth ordering, acyclicity and phrase layouts.
ValidationReport validate_catalogue(const Catalogue& catalogue);

/// Agreement lint: an option that agrees with a governing list is only safe
/// if every subject in that list has identical gender and number per language.
ValidationReport lint_agreement(const Catalogue& catalogue);

/// "path: CODE: message" lines, errors first.
std::string format_report(const ValidationReport& report);

}  // namespace phrasecat
