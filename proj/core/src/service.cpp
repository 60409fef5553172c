#include "phrasecat/service.hpp"

#include <mutex>
#include <sstream>

#include <httplib.h>

#include "phrasecat/error.hpp"
#include "phrasecat/json_io.hpp"
#include "phrasecat/publish.hpp"
#include "phrasecat/render.hpp"
#include "phrasecat/validate.hpp"

namespace phrasecat {

using json_io::json;

std::shared_ptr<const CatalogueSnapshot> make_snapshot(Catalogue catalogue) {
  auto snap = std::make_shared<CatalogueSnapshot>();
  snap->hash = catalogue_hash(catalogue);
  snap->index = build_index(catalogue);
  snap->catalogue = std::move(catalogue);
  return snap;
}

namespace {

Catalogue load_valid_catalogue(const std::filesystem::path& path) {
  Catalogue catalogue = load_catalogue_file(path.string());
  const ValidationReport report = validate_catalogue(catalogue);
  if (!report.ok()) {
    throw Error("INVALID_CATALOGUE", "catalogue " + path.string() + " does not validate:\n" + format_report(report),
                path.string());
  }
  return catalogue;
}

int http_status(const std::string& code) {
  if (code == "NOT_FOUND" || code == "UNKNOWN_PHRASE") return 404;
  if (code == "IMMUTABLE_EDITION" || code == "CONFLICT") return 409;
  if (code == "BAD_REQUEST" || code == "SYNTAX" || code == "INVALID_ID") return 400;
  if (code == "IO_FAILURE") return 500;
  return 422;
}

void send_json(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_problem(httplib::Response& res, const std::string& code, const std::string& detail,
                  const std::string& path = {}) {
  const int status = http_status(code);
  json body{{"type", "about:blank"}, {"title", code}, {"status", status}, {"code", code}, {"detail", detail}};
  if (!path.empty()) body["path"] = path;
  res.status = status;
  res.set_content(body.dump(), "application/problem+json");
}

json parse_body(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw Error("BAD_REQUEST", std::string("request body is not valid JSON: ") + e.what());
  }
}

}  // namespace

struct Service::Impl {
  ServiceConfig config;
  BulletinStore store;
  httplib::Server server;
  mutable std::mutex snapshot_mutex;
  std::shared_ptr<const CatalogueSnapshot> current;
  std::mutex reload_mutex;

  explicit Impl(ServiceConfig cfg)
      : config(std::move(cfg)), store(config.store_path), current(make_snapshot(load_valid_catalogue(config.catalogue_path))) {
    if (config.publish_dir.empty()) config.publish_dir = config.store_path / "published";
    routes();
  }

  std::shared_ptr<const CatalogueSnapshot> snapshot() const {
    std::lock_guard lock(snapshot_mutex);
    return current;
  }

  std::string reload() {
    std::lock_guard serialize(reload_mutex);
    auto next = make_snapshot(load_valid_catalogue(config.catalogue_path));
    std::lock_guard lock(snapshot_mutex);
    current = std::move(next);
    return current->hash;
  }

  template <typename Handler>
  httplib::Server::Handler guarded(Handler handler) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
      try {
        handler(req, res);
      } catch (const Error& e) {
        send_problem(res, e.code(), e.what(), e.path());
      } catch (const json::exception& e) {
        send_problem(res, "BAD_REQUEST", e.what());
      } catch (const std::exception& e) {
        send_problem(res, "INTERNAL", e.what());
      }
    };
  }

  void routes() {
    server.Get("/phrases", guarded([this](const httplib::Request&, httplib::Response& res) {
      const auto snap = snapshot();
      json out = json::array();
      for (const Phrase* p : snap->catalogue.phrases_by_number()) {
        out.push_back({{"phrase_id", p->id}, {"number", p->number}, {"title", p->title}});
      }
      send_json(res, out);
    }));

    server.Get(R"(/phrases/([^/]+)/slots)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto snap = snapshot();
      Selection selection{req.matches[1].str(), {}};
      if (req.has_param("selection")) {
        selection = json_io::selection_from_json(json::parse(req.get_param_value("selection")));
        if (selection.phrase_id != req.matches[1].str()) {
          throw Error("BAD_REQUEST", "selection is for phrase \"" + selection.phrase_id + "\"");
        }
      }
      send_json(res, json_io::to_json(resolve_slots(snap->catalogue, selection)));
    }));

    server.Post("/render", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto snap = snapshot();
      const json body = parse_body(req);
      const Selection selection = json_io::selection_from_json(body.at("selection"));
      std::vector<LanguageTag> languages = snap->catalogue.language_codes();
      if (auto it = body.find("languages"); it != body.end()) languages = it->get<std::vector<LanguageTag>>();
      json sentences = json::array();
      for (const auto& lang : languages) {
        const SentenceText text = render_sentence(snap->catalogue, selection, lang);
        sentences.push_back({{"language", text.language}, {"text", text.text}});
      }
      send_json(res, {{"catalogue_hash", snap->hash}, {"sentences", std::move(sentences)}});
    }));

    server.Post("/validate-selection", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto snap = snapshot();
      json body = parse_body(req);
      if (auto it = body.find("selection"); it != body.end()) body = *it;
      send_json(res, json_io::to_json(validate_selection(snap->catalogue, json_io::selection_from_json(body))));
    }));

    server.Get("/search", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto snap = snapshot();
      std::size_t limit = 20;
      if (req.has_param("limit")) {
        try {
          limit = std::stoul(req.get_param_value("limit"));
        } catch (const std::exception&) {
          throw Error("BAD_REQUEST", "limit must be a non-negative integer");
        }
      }
      json hits = json::array();
      for (const auto& hit : search(snap->index, req.get_param_value("q"), limit)) {
        hits.push_back(json_io::to_json(hit));
      }
      send_json(res, {{"catalogue_hash", snap->hash}, {"hits", std::move(hits)}});
    }));

    server.Get("/bulletins", guarded([this](const httplib::Request& req, httplib::Response& res) {
      std::optional<BulletinStatus> status;
      if (req.has_param("status")) {
        status = parse_status(req.get_param_value("status"));
        if (!status) throw Error("BAD_REQUEST", "unknown status \"" + req.get_param_value("status") + "\"");
      }
      json out = json::array();
      for (const auto& s : store.list(status)) out.push_back(json_io::to_json(s));
      send_json(res, out);
    }));

    server.Post("/bulletins", guarded([this](const httplib::Request& req, httplib::Response& res) {
      Bulletin bulletin = json_io::bulletin_from_json(parse_body(req));
      if (!bulletin.bulletin_id.empty() && store.exists(bulletin.bulletin_id)) {
        throw Error("CONFLICT", "bulletin \"" + bulletin.bulletin_id + "\" already exists", bulletin.bulletin_id);
      }
      bulletin.status = BulletinStatus::Draft;
      send_json(res, {{"bulletin_id", store.store(bulletin)}}, 201);
    }));

    server.Get(R"(/bulletins/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      send_json(res, json_io::to_json(store.load(req.matches[1].str())));
    }));

    server.Put(R"(/bulletins/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      Bulletin bulletin = json_io::bulletin_from_json(parse_body(req));
      const std::string id = req.matches[1].str();
      if (!bulletin.bulletin_id.empty() && bulletin.bulletin_id != id) {
        throw Error("BAD_REQUEST", "body bulletin_id does not match the URL");
      }
      bulletin.bulletin_id = id;
      bulletin.status = BulletinStatus::Draft;
      send_json(res, {{"bulletin_id", store.store(bulletin)}});
    }));

    server.Delete(R"(/bulletins/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      store.remove(req.matches[1].str());
      res.status = 204;
    }));

    server.Post(R"(/bulletins/([^/]+)/publish)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const auto snap = snapshot();
                  std::ostringstream log;
                  PublishOptions options;
                  options.log = &log;
                  const Manifest manifest =
                      publish(store, snap->catalogue, req.matches[1].str(), config.publish_dir, options);
                  json body = json::parse(manifest_to_json(manifest));
                  body["log"] = log.str();
                  send_json(res, body);
                }));

    server.Post(R"(/bulletins/([^/]+)/copy-description)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  const auto snap = snapshot();
                  const json body = parse_body(req);
                  const CopyResult result =
                      copy_description(store, snap->catalogue, body.at("from").get<std::string>(),
                                       body.at("description_id").get<std::string>(), req.matches[1].str());
                  send_json(res, {{"description", json_io::to_json(result.description)},
                                  {"report", json_io::to_json(result.report)}});
                }));

    server.Post("/admin/reload-catalogue", guarded([this](const httplib::Request&, httplib::Response& res) {
      send_json(res, {{"catalogue_hash", reload()}});
    }));
  }
};

Service::Service(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}

Service::~Service() { stop(); }

bool Service::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int Service::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool Service::listen_after_bind() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_) impl_->server.stop();
}

bool Service::is_running() const { return impl_->server.is_running(); }

std::shared_ptr<const CatalogueSnapshot> Service::snapshot() const { return impl_->snapshot(); }

std::string Service::reload() { return impl_->reload(); }

BulletinStore& Service::store() { return impl_->store; }

}  // namespace phrasecat
