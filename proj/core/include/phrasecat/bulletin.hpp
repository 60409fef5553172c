#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "phrasecat/catalogue.hpp"
#include "phrasecat/render.hpp"
#include "phrasecat/validate.hpp"

namespace phrasecat {

enum class BulletinStatus { Draft, Published };

std::string to_string(BulletinStatus status);
std::optional<BulletinStatus> parse_status(std::string_view text);

struct DangerDescription {
  std::string description_id;
  std::string region_label;
  std::vector<SentenceSpec> sentences;
  friend bool operator==(const DangerDescription&, const DangerDescription&) = default;
};

struct Bulletin {
  std::string bulletin_id;
  std::string edition_timestamp;  // ISO 8601, e.g. "2013-02-24T08:00"
  std::string next_update;
  BulletinStatus status = BulletinStatus::Draft;
  std::string catalogue_hash;
  std::vector<DangerDescription> descriptions;
  friend bool operator==(const Bulletin&, const Bulletin&) = default;
};

struct BulletinSummary {
  std::string bulletin_id;
  std::string edition_timestamp;
  BulletinStatus status = BulletinStatus::Draft;
  std::size_t description_count = 0;
};

/// Directory-per-bulletin store:
///
///   <root>/bulletins/<id>/bulletin.json
///   <root>/catalogues/<sha256>.json
///
/// Writes go through a temporary file and a rename, serialized by a single
/// writer lock. Published bulletins are never rewritten.
class BulletinStore {
 public:
  explicit BulletinStore(std::filesystem::path root);

  /// Assigns an id when the bulletin has none. Throws IMMUTABLE_EDITION when
  /// the stored bulletin with that id is published.
  std::string store(const Bulletin& bulletin);
  Bulletin load(const std::string& bulletin_id) const;  // NOT_FOUND
  bool exists(const std::string& bulletin_id) const;
  std::vector<BulletinSummary> list(std::optional<BulletinStatus> status = {}) const;
  void remove(const std::string& bulletin_id);  // drafts only

  /// Flips a draft to published. Used by the publish pipeline only.
  void mark_published(Bulletin bulletin);

  /// Content-addressed catalogue snapshots so old bulletins stay renderable.
  std::string save_catalogue(const Catalogue& catalogue);
  std::optional<Catalogue> load_catalogue(const std::string& hash) const;

  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path bulletin_file(const std::string& id) const;
  void write_bulletin(const Bulletin& bulletin);
  std::string next_id() const;

  std::filesystem::path root_;
  mutable std::mutex write_mutex_;
};

struct CopyResult {
  DangerDescription description;
  ValidationReport report;
};

/// Copies a description from any bulletin into a draft, revalidating every
/// selection against the current catalogue. Stale option ids surface as
/// STALE_OPTION errors, antecedent hints as PRONOUN_CHECK warnings.
CopyResult copy_description(BulletinStore& store, const Catalogue& catalogue,
                            const std::string& from_bulletin,
                            const std::string& description_id,
                            const std::string& into_draft);

/// Validates every catalogue sentence of a bulletin; paths are
/// "descriptions/<id>/sentences/<i>/...".
ValidationReport validate_bulletin(const Catalogue& catalogue, const Bulletin& bulletin);

}  // namespace phrasecat
