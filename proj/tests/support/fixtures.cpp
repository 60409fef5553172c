#include "fixtures.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "phrasecat/json_io.hpp"

namespace phrasecat::testkit {

namespace fs = std::filesystem;

fs::path fixture_path(std::string_view name) { return fs::path(PHRASECAT_FIXTURE_DIR) / name; }

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Catalogue load_fixture(std::string_view name) { return parse_catalogue(read_text(fixture_path(name))); }

nlohmann::json load_fixture_json(std::string_view name) {
  return nlohmann::json::parse(read_text(fixture_path(name)));
}

Selection selection(std::string_view wire) { return json_io::selection_from_json(nlohmann::json::parse(wire)); }

namespace {

const char* kWetSlopes = R"({"phrase":"p65","choices":{
  "1":{"option":"o2"},"2":{"option":"o1"},
  "3":{"option":"o4","slots":{"an_steilen":{"option":"o2"}}},
  "4":{"option":"o1"},
  "5":{"option":"o2","slots":{"ziemlich":{"option":"o3"}}}}})";

const char* kPronounMargins = R"({"phrase":"p57","choices":{
  "1":{"option":"o4"},"2":{"option":"o5"},"3":{"option":"o3"},"4":{"option":"o1"}}})";

std::string bond_selection(const char* between, const char* article) {
  return std::string(R"({"phrase":"p22","choices":{"1":{"option":"o1"},"2":{"option":")") + between +
         R"("},"3":{"option":")" + article + R"("},"4":{"option":"o1"},"5":{"option":"o1"}}})";
}

const char* kBiseParagraph[] = {
    R"({"phrase":"p3","choices":{"1":{"option":"o1","slots":{"dem_Wind":{"option":"o3"}}},
        "2":{"option":"o1"},"3":{"option":"o2"},"4":{"option":"o1"}}})",
    R"({"phrase":"p41","choices":{"1":{"option":"o2"},"2":{"option":"o1"}}})",
    R"({"phrase":"p58","choices":{"1":{"option":"o1"},"2":{"option":"o1"},"3":{"option":"o1"},
        "4":{"option":"o2"}}})",
    R"({"phrase":"p90","choices":{"1":{"option":"o1"}}})",
};

}  // namespace

std::vector<Golden> golden_sentences() {
  std::vector<Golden> out;
  out.push_back({"phrase 65 (four languages)",
                 selection(kWetSlopes),
                 {{"de", "Nasse Lawinen können an sehr steilen Sonnenhängen gefährlich gross werden."},
                  {"en", "On very steep sunny slopes wet avalanches can reach dangerously large size."},
                  {"fr", "Des avalanches mouillées peuvent devenir dangereusement grandes sur les pentes très "
                         "raides au soleil."},
                  {"it", "Sui pendii soleggiati molto ripidi, le valanghe bagnate possono raggiungere dimensioni "
                         "pericolosamente grandi."}}});
  out.push_back({"phrase 57 (pronoun, Italian 2a/2b)",
                 selection(kPronounMargins),
                 {{"de", "Sie können in ihren Randbereichen schon von einzelnen Wintersportlern ausgelöst werden."},
                  {"en", "They can at their margins be released, even by a single winter sport participant."},
                  {"fr", "Elles peuvent à leur périphérie être déjà déclenchées par un seul amateur de sports "
                         "d'hiver."},
                  {"it", "Essi possono distaccarsi già in seguito al passaggio di un singolo appassionato di sport "
                         "invernali nelle zone marginali."}}});
  out.push_back({"phrase 22 degli",
                 selection(bond_selection("o1", "o1")),
                 {{"it", "Il legame degli accumuli di neve ventata è in corso."}}});
  out.push_back({"phrase 22 dei vari",
                 selection(bond_selection("o1", "o2")),
                 {{"it", "Il legame dei vari accumuli di neve ventata è in corso."}}});
  out.push_back({"phrase 22 tra gli",
                 selection(bond_selection("o4", "o1")),
                 {{"it", "Il legame tra i vari accumuli di neve ventata e quello tra gli accumuli di neve ventata "
                         "e la neve vecchia è in corso."}}});

  const std::map<LanguageTag, std::vector<std::string>> paragraph = {
      {"de",
       {"Mit der Bise entstehen meist kleine Triebsschneeansammlungen.",
        "Diese verbinden sich schlecht mit dem Altschnee.",
        "Lawinen können schon von einzelnen Wintersportlern ausgelöst werden, sind aber meist klein.",
        "Nebst der Verschüttungsgefahr sollte vor allem die Mitreiss- und Absturzgefahr beachtet werden."}},
      {"en",
       {"As a consequence of the Bise wind mostly small snow drift accumulations will form.",
        "These are bonding poorly with the old snowpack.",
        "Avalanches can be released, even by a single winter sport participant, but they will be small in most "
        "cases.",
        "Restraint should be exercised in view of the danger of being buried, but in particular because "
        "avalanches can sweep people along and give rise to falls."}},
      {"fr",
       {"Des accumulations de neige soufflée en général petites se forment avec la bise.",
        "Celles-ci se lient mal avec la neige ancienne.",
        "Des avalanches peuvent être déclenchées déjà par un seul amateur de sports d'hiver, mais sont en "
        "général plutôt petites.",
        "A côté du danger d'ensevelissement, il faut surtout penser au danger d'être emporté et de chuter."}},
      {"it",
       {"Con la bise si formeranno accumuli di neve ventata per lo più di piccole dimensioni.",
        "Questi ultimi non si legheranno bene con la neve vecchia.",
        "Le valanghe possono distaccarsi già in seguito al passaggio di un singolo appassionato di sport "
        "invernali, tuttavia raggiungere per lo più piccole dimensioni.",
        "Oltre al pericolo di seppellimento, occorre fare attenzione soprattutto al pericolo di trascinamento e "
        "caduta."}},
  };
  for (std::size_t i = 0; i < std::size(kBiseParagraph); ++i) {
    Golden g{"bise paragraph sentence " + std::to_string(i + 1), selection(kBiseParagraph[i]), {}};
    for (const auto& [lang, sentences] : paragraph) g.expected[lang] = sentences[i];
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<SentenceSpec> bise_sentences() {
  std::vector<SentenceSpec> out;
  for (const char* wire : kBiseParagraph) out.emplace_back(selection(wire));
  return out;
}

std::map<LanguageTag, std::string> bise_paragraphs() {
  std::map<LanguageTag, std::string> out;
  for (const auto& g : golden_sentences()) {
    if (g.name.rfind("bise paragraph", 0) != 0) continue;
    for (const auto& [lang, text] : g.expected) {
      auto& para = out[lang];
      if (!para.empty()) para += ' ';
      para += text;
    }
  }
  return out;
}

Bulletin fixture_bulletin() {
  Bulletin b;
  b.bulletin_id = "2013-02-24-0800";
  b.edition_timestamp = "2013-02-24T08:00";
  b.next_update = "2013-02-24T17:00";

  DangerDescription north{"d1", "Alpennordhang", bise_sentences()};
  DangerDescription valais{"d2", "Wallis", {selection(kWetSlopes), selection(kPronounMargins)}};
  JokerSentence joker{{{"de", "Ad-hoc-Warnung."},
                       {"fr", "Avertissement ad hoc."},
                       {"it", "Avviso ad hoc."},
                       {"en", "Ad-hoc warning."}}};
  DangerDescription ticino{"d3", "Tessin", {selection(bond_selection("o1", "o1")), joker}};
  b.descriptions = {north, valais, ticino};
  return b;
}

TempDir::TempDir() {
  std::random_device rd;
  const auto base = fs::temp_directory_path();
  for (;;) {
    path_ = base / ("phrasecat-test-" + std::to_string(rd()));
    if (fs::create_directory(path_)) break;
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::vector<std::string> tree(const fs::path& dir) {
  std::vector<std::string> out;
  if (!fs::exists(dir)) return out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    out.push_back(fs::relative(entry.path(), dir).generic_string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace phrasecat::testkit
