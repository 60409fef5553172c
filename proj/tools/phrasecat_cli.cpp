// phrasecat: command line front end to the catalogue engine.
//
// Exit status: 0 success, 1 validation findings, 2 usage or I/O error.

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "phrasecat/bulletin.hpp"
#include "phrasecat/catalogue.hpp"
#include "phrasecat/error.hpp"
#include "phrasecat/json_io.hpp"
#include "phrasecat/publish.hpp"
#include "phrasecat/qa.hpp"
#include "phrasecat/render.hpp"
#include "phrasecat/search.hpp"
#include "phrasecat/service.hpp"
#include "phrasecat/validate.hpp"

using namespace phrasecat;
using json_io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kUsage = 2;

int exit_code_for(const Error& e) {
  const std::string& code = e.code();
  return code == "IO_FAILURE" || code == "BAD_REQUEST" || code == "USAGE" ? kUsage : kFindings;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO_FAILURE", "cannot read " + path, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw Error("IO_FAILURE", "cannot write " + path, path);
}

// Commands other than `validate` refuse to work on a catalogue that does not
// validate.
Catalogue load_checked(const std::string& path) {
  if (path.empty()) throw Error("USAGE", "--catalogue is required");
  Catalogue catalogue = load_catalogue_file(path);
  const ValidationReport report = validate_catalogue(catalogue);
  if (!report.ok()) {
    throw Error("INVALID_CATALOGUE", "catalogue does not validate:\n" + format_report(report), path);
  }
  return catalogue;
}

std::vector<LanguageTag> pick_languages(const Catalogue& catalogue, const std::string& lang) {
  if (lang.empty() || lang == "all") return catalogue.language_codes();
  if (!catalogue.has_language(lang)) throw Error("USAGE", "language \"" + lang + "\" is not in the catalogue");
  return {lang};
}

struct Options {
  std::string catalogue;
  std::string store;
  std::string phrase;
  std::string choices;
  std::string lang;
  std::string out;
  std::string bulletin;
  std::string query;
  std::string addr = "127.0.0.1:8080";
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::size_t limit = 1000000;
  bool lint = false;
  bool list = false;
};

int cmd_validate(const Options& o) {
  const Catalogue catalogue = load_catalogue_file(o.catalogue);
  ValidationReport report = validate_catalogue(catalogue);
  if (o.lint) report.merge(lint_agreement(catalogue));
  std::cout << format_report(report);
  std::cout << (report.ok() ? "ok" : "invalid") << ": " << report.errors.size() << " error(s), "
            << report.warnings.size() << " warning(s)\n";
  return report.ok() ? kOk : kFindings;
}

int cmd_render(const Options& o) {
  const Catalogue catalogue = load_checked(o.catalogue);
  json doc = json::parse(read_file(o.choices));
  Selection selection;
  if (doc.contains("phrase") || !o.phrase.empty()) {
    if (!doc.contains("phrase")) doc["phrase"] = o.phrase;
    selection = json_io::selection_from_json(doc);
  }
  if (!o.phrase.empty() && selection.phrase_id != o.phrase) {
    throw Error("USAGE", "--phrase " + o.phrase + " does not match the choices file");
  }
  const ValidationReport report = validate_selection(catalogue, selection);
  if (!report.ok()) {
    std::cerr << format_report(report);
    return kFindings;
  }
  const auto languages = pick_languages(catalogue, o.lang);
  for (const auto& lang : languages) {
    const SentenceText text = render_sentence(catalogue, selection, lang);
    if (languages.size() > 1) std::cout << lang << '\t';
    std::cout << text.text << '\n';
  }
  return kOk;
}

int cmd_generate(const Options& o) {
  const Catalogue catalogue = load_checked(o.catalogue);
  const auto selections = generate_random(catalogue, GenerationSpec{o.phrase, o.seed, o.count});
  const auto languages = o.lang.empty() ? std::vector<LanguageTag>{} : pick_languages(catalogue, o.lang);
  int status = kOk;
  for (std::size_t i = 0; i < selections.size(); ++i) {
    if (languages.empty()) {
      std::cout << json_io::to_json(selections[i]).dump() << '\n';
      continue;
    }
    for (const auto& lang : languages) {
      const std::string text = render_validated(catalogue, selections[i], lang);
      const auto violations = check_surface_invariants(text, lang);
      if (!violations.empty()) {
        std::cerr << format_violations("sample " + std::to_string(i) + " [" + lang + "]", violations);
        status = kFindings;
      }
      std::cout << lang << '\t' << text << '\n';
    }
  }
  return status;
}

int cmd_enumerate(const Options& o) {
  const Catalogue catalogue = load_checked(o.catalogue);
  const BigCount count = enumerate_count(catalogue, o.phrase);
  std::cout << count.str() << '\n';
  if (!o.list) return kOk;
  const auto languages = pick_languages(catalogue, o.lang.empty() ? catalogue.source_language() : o.lang);
  for (const auto& selection : enumerate_all(catalogue, o.phrase, o.limit)) {
    for (const auto& lang : languages) std::cout << render_validated(catalogue, selection, lang) << '\n';
  }
  return kOk;
}

int cmd_walk(const Options& o) {
  const Catalogue catalogue = load_checked(o.catalogue);
  const ReviewSheet sheet = option_walk(catalogue);
  const std::string tsv = export_review_sheet(sheet);
  if (o.out.empty() || o.out == "-") {
    std::cout << tsv;
  } else {
    write_file(o.out, tsv);
  }
  for (const auto& id : sheet.unreachable_lists) std::cerr << "unreachable list: " << id << '\n';
  std::cerr << sheet.rows.size() << " option rows\n";
  return kOk;
}

int cmd_search(const Options& o) {
  const Catalogue catalogue = load_checked(o.catalogue);
  const PhraseIndex index = build_index(catalogue);
  for (const auto& hit : search(index, o.query, o.limit)) {
    const Phrase* phrase = catalogue.find_phrase(hit.phrase_id);
    std::cout << hit.number << '\t' << hit.phrase_id << '\t' << hit.matched_terms.size() << '\t' << hit.score
              << '\t' << (phrase ? phrase->title : std::string()) << '\n';
  }
  return kOk;
}

int cmd_publish(const Options& o) {
  if (o.store.empty()) throw Error("USAGE", "--store is required");
  const Catalogue catalogue = load_checked(o.catalogue);
  BulletinStore store(o.store);
  PublishOptions options;
  options.log = &std::cerr;
  try {
    const Manifest manifest = publish(store, catalogue, o.bulletin, o.out, options);
    std::cout << manifest_to_json(manifest);
  } catch (const Error& e) {
    if (e.code() == "NOT_FOUND") throw Error("USAGE", e.what(), e.path());
    throw;
  }
  return kOk;
}

Service* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

int cmd_serve(const Options& o) {
  if (o.store.empty()) throw Error("USAGE", "--store is required");
  if (o.catalogue.empty()) throw Error("USAGE", "--catalogue is required");
  const auto colon = o.addr.rfind(':');
  if (colon == std::string::npos) throw Error("USAGE", "--addr must be host:port");
  const std::string host = o.addr.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(o.addr.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error("USAGE", "--addr must be host:port");
  }
  Service service(ServiceConfig{o.catalogue, o.store, {}});
  g_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "serving catalogue " << service.snapshot()->hash.substr(0, 12) << " on " << o.addr << '\n';
  const bool ok = service.listen(host, port);
  g_service = nullptr;
  if (!ok) throw Error("IO_FAILURE", "cannot listen on " + o.addr);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phrasecat: multilingual phrase catalogue engine"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--catalogue", o.catalogue, "Catalogue document");
  app.add_option("--store", o.store, "Bulletin store directory");

  int (*run)(const Options&) = nullptr;

  auto* validate = app.add_subcommand("validate", "Validate a catalogue");
  validate->add_option("catalogue", o.catalogue, "Catalogue document");
  validate->add_flag("--lint", o.lint, "Also run agreement lints");
  validate->callback([&] { run = cmd_validate; });

  auto* render = app.add_subcommand("render", "Render a selection");
  render->add_option("--phrase", o.phrase, "Phrase id");
  render->add_option("--choices", o.choices, "Selection document")->required();
  render->add_option("--lang", o.lang, "Language code or \"all\"");
  render->callback([&] { run = cmd_render; });

  auto* generate = app.add_subcommand("generate", "Seeded random selections");
  generate->add_option("--phrase", o.phrase, "Phrase id")->required();
  generate->add_option("--seed", o.seed, "Generator seed");
  generate->add_option("--count", o.count, "Number of selections");
  generate->add_option("--lang", o.lang, "Render in this language (or \"all\") instead of printing selections");
  generate->callback([&] { run = cmd_generate; });

  auto* enumerate = app.add_subcommand("enumerate", "Count or list every selection of a phrase");
  enumerate->add_option("--phrase", o.phrase, "Phrase id")->required();
  enumerate->add_option("--limit", o.limit, "Refuse to list more than this many selections");
  enumerate->add_flag("--list", o.list, "Print every rendering after the count");
  enumerate->add_option("--lang", o.lang, "Language for --list");
  enumerate->callback([&] { run = cmd_enumerate; });

  auto* walk = app.add_subcommand("walk", "Export the option review sheet");
  walk->add_option("--out", o.out, "Output TSV file (\"-\" for stdout)");
  walk->callback([&] { run = cmd_walk; });

  auto* search_cmd = app.add_subcommand("search", "Search phrases by source-language words");
  search_cmd->add_option("query", o.query, "Query words")->required();
  search_cmd->add_option("--limit", o.limit, "Maximum number of hits");
  search_cmd->callback([&] {
    if (search_cmd->count("--limit") == 0) o.limit = 20;
    run = cmd_search;
  });

  auto* publish_cmd = app.add_subcommand("publish", "Publish a draft bulletin");
  publish_cmd->add_option("--bulletin", o.bulletin, "Bulletin id")->required();
  publish_cmd->add_option("--out", o.out, "Artifact output directory")->required();
  publish_cmd->callback([&] { run = cmd_publish; });

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--addr", o.addr, "host:port");
  serve->callback([&] { run = cmd_serve; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const json::exception& e) {
    std::cerr << "error: BAD_REQUEST: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
