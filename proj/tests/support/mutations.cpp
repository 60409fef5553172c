#include "mutations.hpp"

#include <random>
#include <regex>

namespace phrasecat::testkit {

using nlohmann::json;

namespace {

template <typename T>
T& pick(std::vector<T>& items, std::mt19937_64& rng) {
  if (items.empty()) throw std::logic_error("mutation has no eligible target");
  return items[rng() % items.size()];
}

std::vector<std::string> target_languages(const json& doc) {
  std::vector<std::string> out;
  for (const auto& l : doc["languages"]) {
    if (!l.value("source", false)) out.push_back(l["code"].get<std::string>());
  }
  return out;
}

std::string drop_text(json& doc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<json*> options;
  for (auto& list : doc["lists"]) {
    for (auto& o : list["options"]) options.push_back(&o);
  }
  json& option = *pick(options, rng);
  auto langs = target_languages(doc);
  const std::string lang = pick(langs, rng);
  option["text"].erase(lang);
  return "removed \"" + lang + "\" text of option " + option["id"].get<std::string>();
}

const std::regex kSlot(R"(\{\{[^{}]+\}\}|\{[^{}]+\})");

std::string break_parity(json& doc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<json*, std::string>> targets;
  auto langs = target_languages(doc);
  for (auto& list : doc["lists"]) {
    for (auto& o : list["options"]) {
      for (const auto& lang : langs) {
        const json& t = o["text"][lang];
        const std::string all = t.is_string() ? t.get<std::string>() : t["a"].get<std::string>() + t["b"].get<std::string>();
        if (std::regex_search(all, kSlot)) targets.emplace_back(&o, lang);
      }
    }
  }
  auto& [option, lang] = pick(targets, rng);
  json& t = (*option)["text"][lang];
  auto strip = [](json& s) {
    std::string v = s.get<std::string>();
    std::smatch m;
    if (!std::regex_search(v, m, kSlot)) return false;
    s = m.prefix().str() + m.suffix().str();
    return true;
  };
  if (t.is_string()) {
    strip(t);
  } else if (!strip(t["a"])) {
    strip(t["b"]);
  }
  return "removed a slot from the \"" + lang + "\" text of option " + (*option)["id"].get<std::string>();
}

std::string flatten_depth(json& doc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<json*> nested;
  for (auto& list : doc["lists"]) {
    if (list["depth"].get<int>() > 0) nested.push_back(&list);
  }
  json& list = *pick(nested, rng);
  list["depth"] = 0;
  return "set depth of list " + list["id"].get<std::string>() + " to 0";
}

std::vector<std::pair<json*, std::string>> target_layouts(json& doc) {
  std::vector<std::pair<json*, std::string>> out;
  for (auto& p : doc["phrases"]) {
    for (const auto& lang : target_languages(doc)) {
      if (p["layouts"][lang].size() >= 2) out.emplace_back(&p, lang);
    }
  }
  return out;
}

std::string duplicate_layout_entry(json& doc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto layouts = target_layouts(doc);
  auto& [phrase, lang] = pick(layouts, rng);
  json& layout = (*phrase)["layouts"][lang];
  const std::size_t i = rng() % layout.size();
  std::size_t j = rng() % (layout.size() - 1);
  if (j >= i) ++j;
  layout[j] = layout[i];
  return "duplicated layout entry " + layout[i].get<std::string>() + " of " + (*phrase)["id"].get<std::string>() +
         " [" + lang + "]";
}

std::string toggle_split(json& doc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto layouts = target_layouts(doc);
  auto& [phrase, lang] = pick(layouts, rng);
  json& layout = (*phrase)["layouts"][lang];
  std::vector<std::size_t> split_a;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i].get<std::string>().back() == 'a') split_a.push_back(i);
  }
  if (!split_a.empty() && rng() % 2 == 0) {
    const std::size_t i = pick(split_a, rng);
    std::string seg = layout[i].get<std::string>();
    seg.pop_back();
    layout[i] = seg;
    for (std::size_t k = 0; k < layout.size(); ++k) {
      if (layout[k] == seg + "b") {
        layout.erase(k);
        break;
      }
    }
    return "merged split segment " + seg + " of " + (*phrase)["id"].get<std::string>() + " [" + lang + "]";
  }
  std::vector<std::size_t> whole;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const char c = layout[i].get<std::string>().back();
    if (c != 'a' && c != 'b') whole.push_back(i);
  }
  const std::size_t i = pick(whole, rng);
  const std::string seg = layout[i].get<std::string>();
  layout[i] = seg + "a";
  layout.insert(layout.begin() + static_cast<long>(i) + 1, seg + "b");
  return "split whole segment " + seg + " of " + (*phrase)["id"].get<std::string>() + " [" + lang + "]";
}

}  // namespace

std::vector<Mutation> catalogue_mutations() {
  return {
      {"missing language text", "MISSING_TEXT", drop_text},
      {"option-count mismatch", "PARALLEL_OPTION_COUNT", drop_text},
      {"placeholder-parity break", "PLACEHOLDER_PARITY", break_parity},
      {"depth violation", "DEPTH_ORDER", flatten_depth},
      {"bad layout permutation", "LAYOUT_PERMUTATION", duplicate_layout_entry},
      {"split/placement mismatch", "LAYOUT_SPLIT", toggle_split},
  };
}

}  // namespace phrasecat::testkit
