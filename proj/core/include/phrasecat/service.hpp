#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "phrasecat/bulletin.hpp"
#include "phrasecat/catalogue.hpp"
#include "phrasecat/search.hpp"

namespace phrasecat {

struct ServiceConfig {
  std::filesystem::path catalogue_path;
  std::filesystem::path store_path;
  std::filesystem::path publish_dir;  // defaults to <store>/published
};

/// Catalogue plus everything derived from it. Replaced as a whole on reload;
/// requests keep the snapshot they started with.
struct CatalogueSnapshot {
  Catalogue catalogue;
  std::string hash;
  PhraseIndex index;
};

std::shared_ptr<const CatalogueSnapshot> make_snapshot(Catalogue catalogue);

/// HTTP API for the editor UI:
///
///   GET  /phrases                      GET  /phrases/{id}/slots?selection=...
///   POST /render                       POST /validate-selection
///   GET  /search?q=&limit=             GET|POST /bulletins
///   GET|PUT|DELETE /bulletins/{id}     POST /bulletins/{id}/publish
///   POST /bulletins/{id}/copy-description
///   POST /admin/reload-catalogue
///
/// Errors are application/problem+json documents carrying the engine code.
class Service {
 public:
  /// Fails fast (throws Error) when the catalogue does not parse or validate.
  explicit Service(ServiceConfig config);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds and serves until stop(). Returns false if binding failed.
  bool listen(const std::string& host, int port);
  /// Binds to an ephemeral port; returns it (or -1). Follow with listen_after_bind().
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  bool is_running() const;

  std::shared_ptr<const CatalogueSnapshot> snapshot() const;
  /// Re-reads the catalogue file and swaps snapshots atomically. Throws and
  /// keeps the old snapshot if the new catalogue is invalid.
  std::string reload();

  BulletinStore& store();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace phrasecat
