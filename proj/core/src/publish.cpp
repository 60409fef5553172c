#include "phrasecat/publish.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "phrasecat/digest.hpp"
#include "phrasecat/error.hpp"
#include "phrasecat/qa.hpp"
#include "phrasecat/render.hpp"

namespace phrasecat {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct RenderedSentence {
  bool joker = false;
  std::string text;
};

struct RenderedDescription {
  std::string id;
  std::string region;
  std::vector<RenderedSentence> sentences;

  std::string text() const {
    std::string out;
    for (const auto& s : sentences) {
      if (!out.empty()) out += ' ';
      out += s.text;
    }
    return out;
  }
};

using Rendering = std::map<LanguageTag, std::vector<RenderedDescription>>;

[[noreturn]] void validation_failed(const std::string& message, const std::string& path = {}) {
  throw Error("VALIDATION_FAILED", message, path);
}

// Everything is rendered and checked in memory before the first byte is
// written, so a validation failure leaves the output directory untouched.
Rendering render_bulletin(const Catalogue& catalogue, const Bulletin& bulletin) {
  if (bulletin.descriptions.empty()) validation_failed("bulletin has no descriptions");
  const ValidationReport report = validate_bulletin(catalogue, bulletin);
  if (!report.ok()) {
    const Finding& first = report.errors.front();
    validation_failed(std::to_string(report.errors.size()) + " error(s); first: " + first.code + " at " +
                          first.path + ": " + first.message,
                      first.path);
  }

  Rendering out;
  for (const auto& lang : catalogue.language_codes()) {
    auto& descriptions = out[lang];
    for (const auto& d : bulletin.descriptions) {
      RenderedDescription rd{d.description_id, d.region_label, {}};
      for (std::size_t i = 0; i < d.sentences.size(); ++i) {
        const std::string path = "descriptions/" + d.description_id + "/sentences/" + std::to_string(i);
        RenderedSentence rs;
        std::vector<SurfaceViolation> violations;
        if (const auto* selection = std::get_if<Selection>(&d.sentences[i])) {
          rs.text = render_validated(catalogue, *selection, lang);
          violations = check_surface_invariants(rs.text, lang);
        } else {
          rs.joker = true;
          rs.text = joker_text(std::get<JokerSentence>(d.sentences[i]), lang);
          violations = check_whitespace(rs.text);
        }
        if (!violations.empty()) {
          validation_failed(format_violations(path + " [" + lang + "]", violations), path);
        }
        rd.sentences.push_back(std::move(rs));
      }
      descriptions.push_back(std::move(rd));
    }
  }
  return out;
}

std::string plain_text(const std::vector<RenderedDescription>& descriptions) {
  std::string out;
  for (const auto& d : descriptions) {
    if (!out.empty()) out += '\n';
    if (!d.region.empty()) out += d.region + '\n';
    out += d.text() + '\n';
  }
  return out;
}

std::string structured(const Bulletin& bulletin, const std::string& hash, const LanguageTag& lang,
                       const std::vector<RenderedDescription>& descriptions) {
  ordered_json doc;
  doc["bulletin_id"] = bulletin.bulletin_id;
  doc["edition"] = bulletin.edition_timestamp;
  doc["next_update"] = bulletin.next_update;
  doc["language"] = lang;
  doc["catalogue_hash"] = hash;
  ordered_json list = ordered_json::array();
  for (const auto& d : descriptions) {
    ordered_json sentences = ordered_json::array();
    for (const auto& s : d.sentences) {
      sentences.push_back({{"kind", s.joker ? "joker" : "catalogue"}, {"text", s.text}});
    }
    list.push_back({{"id", d.id}, {"region", d.region}, {"text", d.text()}, {"sentences", sentences}});
  }
  doc["descriptions"] = std::move(list);
  return doc.dump(2) + "\n";
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.flush();
  if (!out) throw Error("IO_FAILURE", "cannot write " + path.string(), path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO_FAILURE", "cannot read " + path.string(), path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string manifest_to_json(const Manifest& manifest) {
  ordered_json doc;
  doc["bulletin_id"] = manifest.bulletin_id;
  doc["edition"] = manifest.edition_timestamp;
  doc["catalogue_hash"] = manifest.catalogue_hash;
  doc["joker_count"] = manifest.joker_count;
  doc["languages"] = manifest.languages;
  ordered_json files = ordered_json::array();
  for (const auto& f : manifest.files) {
    files.push_back({{"file", f.file}, {"sha256", f.sha256}, {"bytes", f.bytes}});
  }
  doc["files"] = std::move(files);
  return doc.dump(2) + "\n";
}

Manifest manifest_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    Manifest m;
    m.bulletin_id = doc.at("bulletin_id").get<std::string>();
    m.edition_timestamp = doc.at("edition").get<std::string>();
    m.catalogue_hash = doc.at("catalogue_hash").get<std::string>();
    m.joker_count = doc.at("joker_count").get<std::size_t>();
    m.languages = doc.at("languages").get<std::vector<LanguageTag>>();
    for (const auto& f : doc.at("files")) {
      m.files.push_back(ManifestEntry{f.at("file").get<std::string>(), f.at("sha256").get<std::string>(),
                                      f.at("bytes").get<std::size_t>()});
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error("SYNTAX", std::string("invalid manifest: ") + e.what());
  }
}

Manifest publish(BulletinStore& store, const Catalogue& catalogue, const std::string& bulletin_id,
                 const fs::path& output_dir, const PublishOptions& options) {
  Bulletin bulletin = store.load(bulletin_id);
  if (bulletin.status == BulletinStatus::Published) {
    throw Error("IMMUTABLE_EDITION", "bulletin \"" + bulletin_id + "\" is already published", bulletin_id);
  }
  const Rendering rendering = render_bulletin(catalogue, bulletin);
  const std::string hash = catalogue_hash(catalogue);

  Manifest manifest;
  manifest.bulletin_id = bulletin.bulletin_id;
  manifest.edition_timestamp = bulletin.edition_timestamp;
  manifest.catalogue_hash = hash;
  manifest.languages = catalogue.language_codes();
  for (const auto& d : bulletin.descriptions) {
    for (const auto& s : d.sentences) manifest.joker_count += std::holds_alternative<JokerSentence>(s);
  }

  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& lang : manifest.languages) {
    const auto& descriptions = rendering.at(lang);
    files.emplace_back(lang + ".txt", plain_text(descriptions));
    files.emplace_back(lang + ".json", structured(bulletin, hash, lang, descriptions));
  }
  for (const auto& [name, content] : files) {
    manifest.files.push_back(ManifestEntry{name, sha256_hex(content), content.size()});
  }
  files.emplace_back("manifest.json", manifest_to_json(manifest));

  const fs::path final_dir = output_dir / bulletin.bulletin_id;
  const fs::path staging =
      output_dir / ("." + bulletin.bulletin_id + ".staging-" + std::to_string(::getpid()));
  std::error_code ec;
  if (fs::exists(final_dir, ec)) {
    throw Error("IO_FAILURE", "artifact directory " + final_dir.string() + " already exists",
                final_dir.string());
  }
  try {
    fs::create_directories(output_dir);
    fs::remove_all(staging, ec);
    fs::create_directory(staging);
    for (const auto& [name, content] : files) {
      if (options.before_write) options.before_write(name);
      write_file(staging / name, content);
    }
    fs::rename(staging, final_dir);
  } catch (const std::exception& e) {
    fs::remove_all(staging, ec);
    throw Error("IO_FAILURE", std::string("publish of \"") + bulletin_id + "\" failed: " + e.what(),
                final_dir.string());
  }

  try {
    bulletin.catalogue_hash = store.save_catalogue(catalogue);
    store.mark_published(bulletin);
  } catch (const std::exception& e) {
    fs::remove_all(final_dir, ec);
    throw Error("IO_FAILURE", std::string("cannot record publication of \"") + bulletin_id + "\": " + e.what(),
                bulletin_id);
  }

  if (options.log) {
    *options.log << "published " << bulletin.bulletin_id << ": " << manifest.files.size() + 1
                 << " files, catalogue " << hash.substr(0, 12) << ", joker_count=" << manifest.joker_count
                 << "\n";
  }
  return manifest;
}

std::vector<std::string> verify_manifest(const fs::path& artifact_dir) {
  const fs::path manifest_path = artifact_dir / "manifest.json";
  if (!fs::exists(manifest_path)) return {"manifest.json"};
  const Manifest manifest = manifest_from_json(read_file(manifest_path));
  std::vector<std::string> bad;
  for (const auto& entry : manifest.files) {
    const fs::path path = artifact_dir / entry.file;
    if (!fs::exists(path)) {
      bad.push_back(entry.file);
      continue;
    }
    const std::string content = read_file(path);
    if (content.size() != entry.bytes || sha256_hex(content) != entry.sha256) bad.push_back(entry.file);
  }
  return bad;
}

}  // namespace phrasecat
