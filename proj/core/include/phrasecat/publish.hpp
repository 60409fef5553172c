#pragma once

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "phrasecat/bulletin.hpp"
#include "phrasecat/catalogue.hpp"

namespace phrasecat {

struct ManifestEntry {
  std::string file;
  std::string sha256;
  std::size_t bytes = 0;
};

struct Manifest {
  std::string bulletin_id;
  std::string edition_timestamp;
  std::string catalogue_hash;
  std::size_t joker_count = 0;
  std::vector<LanguageTag> languages;
  std::vector<ManifestEntry> files;
};

struct PublishOptions {
  // Called before each artifact file is written; throwing from it simulates
  // an I/O failure at that point.
  std::function<void(std::string_view file)> before_write;
  std::ostream* log = nullptr;
};

/// Renders every description in every language, checks surface invariants,
/// and writes <out>/<bulletin_id>/{<lang>.txt, <lang>.json, manifest.json}
/// atomically. Marks the bulletin published on success.
///
/// Throws VALIDATION_FAILED (nothing written), IO_FAILURE (no partial
/// artifacts remain), IMMUTABLE_EDITION, NOT_FOUND.
Manifest publish(BulletinStore& store, const Catalogue& catalogue,
                 const std::string& bulletin_id, const std::filesystem::path& output_dir,
                 const PublishOptions& options = {});

std::string manifest_to_json(const Manifest& manifest);
Manifest manifest_from_json(std::string_view text);

/// Recomputes every checksum listed in <dir>/manifest.json. Returns the
/// names of files that are missing or do not match.
std::vector<std::string> verify_manifest(const std::filesystem::path& artifact_dir);

}  // namespace phrasecat
