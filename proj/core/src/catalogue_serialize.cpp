#include <nlohmann/json.hpp>

#include "phrasecat/catalogue.hpp"
#include "phrasecat/digest.hpp"

namespace phrasecat {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json option_text_json(const Catalogue& cat, const OptionText& text) {
  if (text.split) {
    ordered_json j = ordered_json::object();
    j["a"] = format_text_part(cat, text.split->first);
    j["b"] = format_text_part(cat, text.split->second);
    return j;
  }
  return format_text_part(cat, text.whole);
}

ordered_json option_json(const Catalogue& cat, const OptionEntry& option) {
  ordered_json j = ordered_json::object();
  j["id"] = option.id;
  ordered_json texts = ordered_json::object();
  for (const auto& lang : cat.languages) {
    if (const OptionText* t = option.text(lang.code)) texts[lang.code] = option_text_json(cat, *t);
  }
  j["text"] = std::move(texts);
  if (option.has_hint()) {
    ordered_json hints = ordered_json::object();
    for (const auto& lang : cat.languages) {
      auto it = option.hints.find(lang.code);
      if (it != option.hints.end() && !it->second.empty()) hints[lang.code] = it->second;
    }
    j["hint"] = std::move(hints);
  }
  if (option.agreement) {
    ordered_json a = ordered_json::object();
    if (!option.agreement->features.empty()) {
      ordered_json features = ordered_json::object();
      for (const auto& lang : cat.languages) {
        auto it = option.agreement->features.find(lang.code);
        if (it == option.agreement->features.end()) continue;
        features[lang.code] = ordered_json{{"gender", it->second.gender}, {"number", it->second.number}};
      }
      a["features"] = std::move(features);
    }
    if (option.agreement->agrees_with) a["agrees_with"] = *option.agreement->agrees_with;
    j["agreement"] = std::move(a);
  }
  if (option.future_time) j["future_time"] = *option.future_time;
  return j;
}

}  // namespace

std::string format_text_part(const Catalogue& catalogue, const TextPart& part) {
  std::string out;
  if (part.glue_before) out += "(-)";
  for (std::size_t i = 0; i < part.tokens.size(); ++i) {
    const Token& token = part.tokens[i];
    if (i > 0 && !token.attached) out += ' ';
    if (token.is_literal()) {
      out += token.literal();
    } else {
      const OptionList* target = catalogue.find_list(token.slot().list_id);
      const bool doubled = target && target->depth >= 2;
      out += doubled ? "{{" : "{";
      out += token.slot().list_id;
      out += doubled ? "}}" : "}";
    }
  }
  if (part.glue_after) out += "(-)";
  return out;
}

std::string serialize_catalogue(const Catalogue& catalogue) {
  ordered_json root = ordered_json::object();
  root["schema_version"] = catalogue.schema_version;

  ordered_json languages = ordered_json::array();
  for (const auto& lang : catalogue.languages) {
    ordered_json l = ordered_json::object();
    l["code"] = lang.code;
    if (lang.source) l["source"] = true;
    languages.push_back(std::move(l));
  }
  root["languages"] = std::move(languages);

  ordered_json lists = ordered_json::array();
  for (const auto& [id, list] : catalogue.lists) {
    ordered_json l = ordered_json::object();
    l["id"] = id;
    l["depth"] = list.depth;
    if (!list.split_languages.empty()) {
      ordered_json split = ordered_json::array();
      for (const auto& lang : catalogue.languages) {
        if (list.split_languages.count(lang.code)) split.push_back(lang.code);
      }
      l["split_languages"] = std::move(split);
    }
    ordered_json options = ordered_json::array();
    for (const auto& option : list.options) options.push_back(option_json(catalogue, option));
    l["options"] = std::move(options);
    lists.push_back(std::move(l));
  }
  root["lists"] = std::move(lists);

  ordered_json phrases = ordered_json::array();
  for (const auto& [id, phrase] : catalogue.phrases) {
    ordered_json p = ordered_json::object();
    p["id"] = id;
    p["number"] = phrase.number;
    p["title"] = phrase.title;
    ordered_json segments = ordered_json::array();
    for (const auto& seg : phrase.segments) segments.push_back(seg.list_id);
    p["segments"] = std::move(segments);
    ordered_json layouts = ordered_json::object();
    for (const auto& lang : catalogue.languages) {
      auto it = phrase.layouts.find(lang.code);
      if (it == phrase.layouts.end()) continue;
      ordered_json parts = ordered_json::array();
      for (const auto& part : it->second) parts.push_back(to_string(part));
      layouts[lang.code] = std::move(parts);
    }
    p["layouts"] = std::move(layouts);
    phrases.push_back(std::move(p));
  }
  root["phrases"] = std::move(phrases);

  return root.dump(2, ' ', false) + "\n";
}

std::string catalogue_hash(const Catalogue& catalogue) {
  return sha256_hex(serialize_catalogue(catalogue));
}

}  // namespace phrasecat
