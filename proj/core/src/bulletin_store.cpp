#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "phrasecat/bulletin.hpp"
#include "phrasecat/error.hpp"
#include "phrasecat/json_io.hpp"

namespace phrasecat {

namespace fs = std::filesystem;

std::string to_string(BulletinStatus status) {
  return status == BulletinStatus::Published ? "published" : "draft";
}

std::optional<BulletinStatus> parse_status(std::string_view text) {
  if (text == "draft") return BulletinStatus::Draft;
  if (text == "published") return BulletinStatus::Published;
  return std::nullopt;
}

namespace {

bool valid_bulletin_id(std::string_view id) {
  if (id.empty() || id.size() > 128 || id.front() == '.') return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
           c == '_' || c == '.';
  });
}

void require_valid_id(const std::string& id) {
  if (!valid_bulletin_id(id)) {
    throw Error("INVALID_ID", "invalid bulletin id \"" + id + "\"", id);
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO_FAILURE", "cannot read " + path.string(), path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomically(const fs::path& path, const std::string& content) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) throw Error("IO_FAILURE", "cannot create " + path.parent_path().string() + ": " + ec.message());
  const fs::path tmp = path.string() + ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw Error("IO_FAILURE", "cannot write " + path.string(), path.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("IO_FAILURE", "cannot replace " + path.string(), path.string());
  }
}

std::string unique_description_id(const Bulletin& draft, const std::string& wanted) {
  auto taken = [&draft](const std::string& id) {
    return std::any_of(draft.descriptions.begin(), draft.descriptions.end(),
                       [&id](const DangerDescription& d) { return d.description_id == id; });
  };
  if (!taken(wanted)) return wanted;
  for (int i = 2;; ++i) {
    std::string candidate = wanted + "-" + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

}  // namespace

BulletinStore::BulletinStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_ / "bulletins", ec);
  if (!ec) fs::create_directories(root_ / "catalogues", ec);
  if (ec) throw Error("IO_FAILURE", "cannot create store at " + root_.string() + ": " + ec.message());
}

fs::path BulletinStore::bulletin_file(const std::string& id) const {
  return root_ / "bulletins" / id / "bulletin.json";
}

bool BulletinStore::exists(const std::string& bulletin_id) const {
  return valid_bulletin_id(bulletin_id) && fs::exists(bulletin_file(bulletin_id));
}

Bulletin BulletinStore::load(const std::string& bulletin_id) const {
  if (!exists(bulletin_id)) {
    throw Error("NOT_FOUND", "bulletin \"" + bulletin_id + "\" not found", bulletin_id);
  }
  try {
    return json_io::bulletin_from_json(nlohmann::json::parse(read_file(bulletin_file(bulletin_id))));
  } catch (const nlohmann::json::exception& e) {
    throw Error("IO_FAILURE", "corrupt bulletin \"" + bulletin_id + "\": " + e.what(), bulletin_id);
  }
}

std::string BulletinStore::next_id() const {
  for (int n = 1;; ++n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "b%04d", n);
    if (!fs::exists(root_ / "bulletins" / buf)) return buf;
  }
}

void BulletinStore::write_bulletin(const Bulletin& bulletin) {
  write_file_atomically(bulletin_file(bulletin.bulletin_id), json_io::to_json(bulletin).dump(2) + "\n");
}

std::string BulletinStore::store(const Bulletin& bulletin) {
  std::lock_guard lock(write_mutex_);
  Bulletin copy = bulletin;
  if (copy.bulletin_id.empty()) copy.bulletin_id = next_id();
  require_valid_id(copy.bulletin_id);
  if (exists(copy.bulletin_id) && load(copy.bulletin_id).status == BulletinStatus::Published) {
    throw Error("IMMUTABLE_EDITION", "bulletin \"" + copy.bulletin_id + "\" is published", copy.bulletin_id);
  }
  write_bulletin(copy);
  return copy.bulletin_id;
}

void BulletinStore::mark_published(Bulletin bulletin) {
  std::lock_guard lock(write_mutex_);
  require_valid_id(bulletin.bulletin_id);
  if (exists(bulletin.bulletin_id) && load(bulletin.bulletin_id).status == BulletinStatus::Published) {
    throw Error("IMMUTABLE_EDITION", "bulletin \"" + bulletin.bulletin_id + "\" is already published",
                bulletin.bulletin_id);
  }
  bulletin.status = BulletinStatus::Published;
  write_bulletin(bulletin);
}

void BulletinStore::remove(const std::string& bulletin_id) {
  std::lock_guard lock(write_mutex_);
  if (load(bulletin_id).status == BulletinStatus::Published) {
    throw Error("IMMUTABLE_EDITION", "bulletin \"" + bulletin_id + "\" is published", bulletin_id);
  }
  std::error_code ec;
  fs::remove_all(root_ / "bulletins" / bulletin_id, ec);
  if (ec) throw Error("IO_FAILURE", "cannot remove bulletin \"" + bulletin_id + "\": " + ec.message());
}

std::vector<BulletinSummary> BulletinStore::list(std::optional<BulletinStatus> status) const {
  std::vector<BulletinSummary> out;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(root_ / "bulletins", ec)) {
    const std::string id = entry.path().filename().string();
    if (!entry.is_directory() || !exists(id)) continue;
    const Bulletin b = load(id);
    if (status && b.status != *status) continue;
    out.push_back(BulletinSummary{b.bulletin_id, b.edition_timestamp, b.status, b.descriptions.size()});
  }
  std::sort(out.begin(), out.end(), [](const BulletinSummary& a, const BulletinSummary& b) {
    if (a.edition_timestamp != b.edition_timestamp) return a.edition_timestamp < b.edition_timestamp;
    return a.bulletin_id < b.bulletin_id;
  });
  return out;
}

std::string BulletinStore::save_catalogue(const Catalogue& catalogue) {
  const std::string document = serialize_catalogue(catalogue);
  const std::string hash = catalogue_hash(catalogue);
  const fs::path path = root_ / "catalogues" / (hash + ".json");
  std::lock_guard lock(write_mutex_);
  if (!fs::exists(path)) write_file_atomically(path, document);
  return hash;
}

std::optional<Catalogue> BulletinStore::load_catalogue(const std::string& hash) const {
  const fs::path path = root_ / "catalogues" / (hash + ".json");
  if (hash.empty() || !fs::exists(path)) return std::nullopt;
  return parse_catalogue(read_file(path));
}

ValidationReport validate_bulletin(const Catalogue& catalogue, const Bulletin& bulletin) {
  ValidationReport report;
  for (const auto& d : bulletin.descriptions) {
    const std::string dpath = "descriptions/" + d.description_id;
    if (d.sentences.empty()) report.error("EMPTY_DESCRIPTION", dpath, "description has no sentences");
    for (std::size_t i = 0; i < d.sentences.size(); ++i) {
      const std::string spath = dpath + "/sentences/" + std::to_string(i);
      if (const auto* selection = std::get_if<Selection>(&d.sentences[i])) {
        report.merge(validate_selection(catalogue, *selection), spath);
        continue;
      }
      const auto& joker = std::get<JokerSentence>(d.sentences[i]);
      for (const auto& lang : catalogue.languages) {
        auto it = joker.texts.find(lang.code);
        if (it == joker.texts.end() || it->second.find_first_not_of(" \t\r\n") == std::string::npos) {
          report.error("MISSING_TEXT", spath, "joker sentence has no text in \"" + lang.code + "\"");
        }
      }
    }
  }
  return report;
}

CopyResult copy_description(BulletinStore& store, const Catalogue& catalogue,
                            const std::string& from_bulletin, const std::string& description_id,
                            const std::string& into_draft) {
  const Bulletin source = store.load(from_bulletin);
  auto it = std::find_if(source.descriptions.begin(), source.descriptions.end(),
                         [&](const DangerDescription& d) { return d.description_id == description_id; });
  if (it == source.descriptions.end()) {
    throw Error("NOT_FOUND", "bulletin \"" + from_bulletin + "\" has no description \"" + description_id + "\"",
                description_id);
  }
  Bulletin draft = store.load(into_draft);
  if (draft.status == BulletinStatus::Published) {
    throw Error("IMMUTABLE_EDITION", "bulletin \"" + into_draft + "\" is published", into_draft);
  }

  CopyResult result;
  result.description = *it;
  result.description.description_id = unique_description_id(draft, it->description_id);
  Bulletin single;
  single.descriptions.push_back(result.description);
  result.report = validate_bulletin(catalogue, single);

  draft.descriptions.push_back(result.description);
  store.store(draft);
  return result;
}

}  // namespace phrasecat
