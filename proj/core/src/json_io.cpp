#include "phrasecat/json_io.hpp"

#include "phrasecat/error.hpp"
#include "phrasecat/unicode.hpp"

namespace phrasecat::json_io {
namespace {

[[noreturn]] void bad(const std::string& message) { throw Error("BAD_REQUEST", message); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return unicode::nfc(j.get<std::string>());
}

json choice_to_json(const Choice& choice) {
  json j = json::object();
  j["option"] = choice.option_id;
  if (!choice.children.empty()) {
    json slots = json::object();
    for (const auto& [ref, child] : choice.children) slots[slot_key(ref)] = choice_to_json(child);
    j["slots"] = std::move(slots);
  }
  return j;
}

Choice choice_from_json(const json& j) {
  Choice choice;
  choice.option_id = text(field(j, "option"), "option");
  if (auto it = j.find("slots"); it != j.end()) {
    if (!it->is_object()) bad("\"slots\" must be an object");
    for (const auto& [key, child] : it->items()) {
      auto ref = parse_slot_key(unicode::nfc(key));
      if (!ref) bad("invalid slot key \"" + key + "\"");
      choice.children.emplace(*ref, choice_from_json(child));
    }
  }
  return choice;
}

json findings(const std::vector<Finding>& list) {
  json out = json::array();
  for (const auto& f : list) out.push_back({{"code", f.code}, {"path", f.path}, {"message", f.message}});
  return out;
}

}  // namespace

json to_json(const Selection& selection) {
  json choices = json::object();
  for (const auto& [number, choice] : selection.segments) {
    choices[std::to_string(number)] = choice_to_json(choice);
  }
  return json{{"phrase", selection.phrase_id}, {"choices", std::move(choices)}};
}

Selection selection_from_json(const json& j) {
  Selection selection;
  selection.phrase_id = text(field(j, "phrase"), "phrase");
  if (auto it = j.find("choices"); it != j.end()) {
    if (!it->is_object()) bad("\"choices\" must be an object");
    for (const auto& [key, choice] : it->items()) {
      int number = 0;
      try {
        std::size_t used = 0;
        number = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        bad("segment key \"" + key + "\" is not a number");
      }
      selection.segments.emplace(number, choice_from_json(choice));
    }
  }
  return selection;
}

json to_json(const JokerSentence& joker) {
  json j = json::object();
  for (const auto& [lang, t] : joker.texts) j[lang] = t;
  return j;
}

JokerSentence joker_from_json(const json& j) {
  if (!j.is_object()) bad("joker must be an object of language texts");
  JokerSentence joker;
  for (const auto& [lang, t] : j.items()) joker.texts.emplace(lang, text(t, "joker text"));
  return joker;
}

json to_json(const SentenceSpec& sentence) {
  if (const auto* selection = std::get_if<Selection>(&sentence)) {
    return json{{"selection", to_json(*selection)}};
  }
  return json{{"joker", to_json(std::get<JokerSentence>(sentence))}};
}

SentenceSpec sentence_from_json(const json& j) {
  if (!j.is_object()) bad("sentence must be an object");
  if (auto it = j.find("selection"); it != j.end()) return selection_from_json(*it);
  if (auto it = j.find("joker"); it != j.end()) return joker_from_json(*it);
  bad("sentence needs \"selection\" or \"joker\"");
}

json to_json(const DangerDescription& description) {
  json sentences = json::array();
  for (const auto& s : description.sentences) sentences.push_back(to_json(s));
  return json{{"id", description.description_id},
              {"region", description.region_label},
              {"sentences", std::move(sentences)}};
}

DangerDescription description_from_json(const json& j) {
  DangerDescription d;
  d.description_id = text(field(j, "id"), "description id");
  if (auto it = j.find("region"); it != j.end()) d.region_label = text(*it, "region");
  if (auto it = j.find("sentences"); it != j.end()) {
    if (!it->is_array()) bad("\"sentences\" must be an array");
    for (const auto& s : *it) d.sentences.push_back(sentence_from_json(s));
  }
  return d;
}

json to_json(const Bulletin& bulletin) {
  json descriptions = json::array();
  for (const auto& d : bulletin.descriptions) descriptions.push_back(to_json(d));
  return json{{"bulletin_id", bulletin.bulletin_id},
              {"edition", bulletin.edition_timestamp},
              {"next_update", bulletin.next_update},
              {"status", to_string(bulletin.status)},
              {"catalogue_hash", bulletin.catalogue_hash},
              {"descriptions", std::move(descriptions)}};
}

Bulletin bulletin_from_json(const json& j) {
  if (!j.is_object()) bad("bulletin must be an object");
  Bulletin b;
  if (auto it = j.find("bulletin_id"); it != j.end()) b.bulletin_id = text(*it, "bulletin_id");
  if (auto it = j.find("edition"); it != j.end()) b.edition_timestamp = text(*it, "edition");
  if (auto it = j.find("next_update"); it != j.end()) b.next_update = text(*it, "next_update");
  if (auto it = j.find("status"); it != j.end()) {
    auto status = parse_status(text(*it, "status"));
    if (!status) bad("unknown status " + it->dump());
    b.status = *status;
  }
  if (auto it = j.find("catalogue_hash"); it != j.end()) b.catalogue_hash = text(*it, "catalogue_hash");
  if (auto it = j.find("descriptions"); it != j.end()) {
    if (!it->is_array()) bad("\"descriptions\" must be an array");
    for (const auto& d : *it) b.descriptions.push_back(description_from_json(d));
  }
  return b;
}

json to_json(const BulletinSummary& summary) {
  return json{{"bulletin_id", summary.bulletin_id},
              {"edition", summary.edition_timestamp},
              {"status", to_string(summary.status)},
              {"descriptions", summary.description_count}};
}

json to_json(const ValidationReport& report) {
  return json{{"ok", report.ok()}, {"errors", findings(report.errors)}, {"warnings", findings(report.warnings)}};
}

json to_json(const SlotTree& tree) {
  json slots = json::array();
  for (const auto& slot : tree.slots) {
    json options = json::array();
    for (const auto& o : slot.options) {
      json option{{"id", o.option_id}, {"text", o.text}};
      if (!o.hint.empty()) option["hint"] = o.hint;
      options.push_back(std::move(option));
    }
    json s{{"path", slot.path}, {"list", slot.list_id}, {"depth", slot.depth}, {"options", std::move(options)}};
    s["chosen"] = slot.chosen ? json(*slot.chosen) : json(nullptr);
    slots.push_back(std::move(s));
  }
  return json{{"phrase", tree.phrase_id}, {"slots", std::move(slots)}};
}

json to_json(const SearchHit& hit) {
  return json{{"phrase_id", hit.phrase_id},
              {"number", hit.number},
              {"score", hit.score},
              {"matched_terms", hit.matched_terms}};
}

}  // namespace phrasecat::json_io
