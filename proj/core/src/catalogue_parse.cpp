#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "phrasecat/catalogue.hpp"
#include "phrasecat/error.hpp"
#include "phrasecat/unicode.hpp"

namespace phrasecat {
namespace {

using nlohmann::json;

constexpr std::string_view kGlue = "(-)";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string collapse_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = false;
  for (char c : s) {
    if (is_space(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw Error("SCHEMA", path + ": " + message, path);
}

void require_keys(const json& j, const std::string& path,
                  std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_error(path, "unknown key \"" + key + "\"");
    }
  }
}

const json& member(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string string_value(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return unicode::nfc(j.get<std::string>());
}

int int_value(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](char c) {
    return c == '{' || c == '}' || c == '#' || is_space(c);
  });
}

std::string id_value(const json& j, const std::string& path) {
  std::string id = string_value(j, path);
  if (!valid_id(id)) schema_error(path, "invalid id \"" + id + "\"");
  return id;
}

// Parses authored option text: "(-)" at the very start or end sets glue,
// "{id}" / "{{id}}" are slots, everything else is literal text.
TextPart parse_text_part(std::string_view raw, std::map<std::string, int>& ordinals,
                         const std::string& path) {
  TextPart part;
  std::string_view s = trim(raw);
  if (s.empty()) return part;

  if (s.substr(0, kGlue.size()) == kGlue) {
    part.glue_before = true;
    s.remove_prefix(kGlue.size());
  }
  if (s.size() >= kGlue.size() && s.substr(s.size() - kGlue.size()) == kGlue) {
    part.glue_after = true;
    s.remove_suffix(kGlue.size());
  }
  if (trim(s).empty()) {
    throw Error("MARKER", path + ": glue marker without text", path);
  }
  if (s.find(kGlue) != std::string_view::npos) {
    throw Error("MARKER", path + ": \"(-)\" is only allowed at the start or end of a text", path);
  }

  bool separated = true;  // whitespace (or the text start) precedes the next token
  bool first = true;
  std::size_t i = 0;
  auto flush_literal = [&](std::string_view lit) {
    if (lit.empty()) return;
    const bool leading = is_space(lit.front());
    const bool trailing = is_space(lit.back());
    std::string text = collapse_spaces(lit);
    if (text.empty()) {
      separated = true;
      return;
    }
    part.tokens.push_back(Token{std::move(text), !first && !separated && !leading});
    first = false;
    separated = trailing;
  };

  std::size_t literal_start = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == '}') {
      throw Error("MARKER", path + ": unbalanced \"}\"", path);
    }
    if (c != '{') {
      ++i;
      continue;
    }
    flush_literal(s.substr(literal_start, i - literal_start));
    const bool doubled = i + 1 < s.size() && s[i + 1] == '{';
    const std::size_t id_start = i + (doubled ? 2 : 1);
    const std::size_t close = s.find('}', id_start);
    if (close == std::string_view::npos) {
      throw Error("MARKER", path + ": unterminated slot", path);
    }
    const std::string_view id = s.substr(id_start, close - id_start);
    if (!valid_id(id)) {
      throw Error("MARKER", path + ": invalid slot \"" + std::string(id) + "\"", path);
    }
    std::size_t end = close + 1;
    if (doubled) {
      if (end >= s.size() || s[end] != '}') {
        throw Error("MARKER", path + ": \"{{\" must close with \"}}\"", path);
      }
      ++end;
    }
    const std::string list_id(id);
    part.tokens.push_back(Token{SlotRef{list_id, ++ordinals[list_id]}, !first && !separated});
    first = false;
    separated = false;
    i = end;
    literal_start = end;
  }
  flush_literal(s.substr(literal_start));
  return part;
}

OptionText parse_option_text(const json& j, const std::string& path) {
  std::map<std::string, int> ordinals;
  OptionText text;
  if (j.is_string()) {
    text.whole = parse_text_part(string_value(j, path), ordinals, path);
    return text;
  }
  require_keys(j, path, {"a", "b"});
  TextPart a = parse_text_part(string_value(member(j, "a", path), path + ".a"), ordinals, path + ".a");
  TextPart b = parse_text_part(string_value(member(j, "b", path), path + ".b"), ordinals, path + ".b");
  text.split.emplace(std::move(a), std::move(b));
  return text;
}

std::size_t line_of(std::string_view document, std::size_t byte) {
  byte = std::min(byte, document.size());
  return 1 + static_cast<std::size_t>(std::count(document.begin(), document.begin() + byte, '\n'));
}

OptionEntry parse_option(const json& j, const std::string& path,
                         const std::set<LanguageTag>& languages) {
  require_keys(j, path, {"id", "text", "hint", "agreement", "future_time"});
  OptionEntry option;
  option.id = id_value(member(j, "id", path), path + ".id");
  const std::string opath = path;
  const json& texts = member(j, "text", opath);
  if (!texts.is_object()) schema_error(opath + ".text", "expected an object");
  for (const auto& [lang, value] : texts.items()) {
    const std::string tpath = opath + ".text." + lang;
    if (!languages.count(lang)) schema_error(tpath, "undeclared language \"" + lang + "\"");
    option.texts.emplace(lang, parse_option_text(value, tpath));
  }
  if (auto it = j.find("hint"); it != j.end()) {
    if (!it->is_object()) schema_error(opath + ".hint", "expected an object");
    for (const auto& [lang, value] : it->items()) {
      const std::string hpath = opath + ".hint." + lang;
      if (!languages.count(lang)) schema_error(hpath, "undeclared language \"" + lang + "\"");
      std::string hint = string_value(value, hpath);
      if (!hint.empty()) option.hints.emplace(lang, std::move(hint));
    }
  }
  if (auto it = j.find("agreement"); it != j.end()) {
    const std::string apath = opath + ".agreement";
    require_keys(*it, apath, {"features", "agrees_with"});
    Agreement agreement;
    if (auto f = it->find("features"); f != it->end()) {
      if (!f->is_object()) schema_error(apath + ".features", "expected an object");
      for (const auto& [lang, value] : f->items()) {
        const std::string fpath = apath + ".features." + lang;
        if (!languages.count(lang)) schema_error(fpath, "undeclared language \"" + lang + "\"");
        require_keys(value, fpath, {"gender", "number"});
        agreement.features.emplace(
            lang, GrammaticalFeatures{string_value(member(value, "gender", fpath), fpath + ".gender"),
                                      string_value(member(value, "number", fpath), fpath + ".number")});
      }
    }
    if (auto a = it->find("agrees_with"); a != it->end()) {
      agreement.agrees_with = id_value(*a, apath + ".agrees_with");
    }
    option.agreement = std::move(agreement);
  }
  if (auto it = j.find("future_time"); it != j.end()) {
    option.future_time = string_value(*it, opath + ".future_time");
  }
  return option;
}

void check_references(const Catalogue& cat) {
  auto require = [&cat](const std::string& list_id, const std::string& path) {
    if (!cat.find_list(list_id)) {
      throw Error("UNKNOWN_LIST", path + ": unknown list \"" + list_id + "\"", path);
    }
  };
  for (const auto& [id, list] : cat.lists) {
    for (const auto& option : list.options) {
      const std::string opath = "lists[" + id + "].options[" + option.id + "]";
      for (const auto& [lang, text] : option.texts) {
        for (const auto& slot : slot_refs(text)) require(slot.list_id, opath + ".text." + lang);
      }
      if (option.agreement && option.agreement->agrees_with) {
        require(*option.agreement->agrees_with, opath + ".agreement.agrees_with");
      }
    }
  }
  for (const auto& [id, phrase] : cat.phrases) {
    for (const auto& seg : phrase.segments) {
      require(seg.list_id, "phrases[" + id + "].segments[" + std::to_string(seg.number) + "]");
    }
  }
}

}  // namespace

Catalogue parse_catalogue(std::string_view document) {
  if (!unicode::is_valid_utf8(document)) {
    throw Error("SYNTAX", "document is not valid UTF-8");
  }
  json root;
  try {
    root = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw Error("SYNTAX", "line " + std::to_string(line_of(document, e.byte)) + ": " + e.what());
  }
  require_keys(root, "$", {"schema_version", "languages", "lists", "phrases"});

  Catalogue cat;
  const json& version = member(root, "schema_version", "$");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    throw Error("SCHEMA_VERSION", "unsupported schema_version " + version.dump(), "schema_version");
  }
  cat.schema_version = kSchemaVersion;

  const json& languages = member(root, "languages", "$");
  if (!languages.is_array()) schema_error("languages", "expected an array");
  std::set<LanguageTag> codes;
  for (std::size_t i = 0; i < languages.size(); ++i) {
    const std::string path = "languages[" + std::to_string(i) + "]";
    require_keys(languages[i], path, {"code", "source"});
    Language lang;
    lang.code = string_value(member(languages[i], "code", path), path + ".code");
    if (auto it = languages[i].find("source"); it != languages[i].end()) {
      if (!it->is_boolean()) schema_error(path + ".source", "expected a boolean");
      lang.source = it->get<bool>();
    }
    if (!codes.insert(lang.code).second) {
      throw Error("DUPLICATE_ID", path + ": duplicate language \"" + lang.code + "\"", path);
    }
    cat.languages.push_back(std::move(lang));
  }

  const json& lists = member(root, "lists", "$");
  if (!lists.is_array()) schema_error("lists", "expected an array");
  for (std::size_t i = 0; i < lists.size(); ++i) {
    const json& jl = lists[i];
    const std::string ipath = "lists[" + std::to_string(i) + "]";
    require_keys(jl, ipath, {"id", "depth", "split_languages", "options"});
    OptionList list;
    list.id = id_value(member(jl, "id", ipath), ipath + ".id");
    const std::string path = "lists[" + list.id + "]";
    list.depth = int_value(member(jl, "depth", path), path + ".depth");
    if (auto it = jl.find("split_languages"); it != jl.end()) {
      if (!it->is_array()) schema_error(path + ".split_languages", "expected an array");
      for (const auto& code : *it) {
        std::string c = string_value(code, path + ".split_languages");
        if (!codes.count(c)) schema_error(path + ".split_languages", "undeclared language \"" + c + "\"");
        list.split_languages.insert(std::move(c));
      }
    }
    const json& options = member(jl, "options", path);
    if (!options.is_array()) schema_error(path + ".options", "expected an array");
    std::set<std::string> option_ids;
    for (std::size_t k = 0; k < options.size(); ++k) {
      OptionEntry option = parse_option(options[k], path + ".options[" + std::to_string(k) + "]", codes);
      if (!option_ids.insert(option.id).second) {
        const std::string opath = path + ".options[" + option.id + "]";
        throw Error("DUPLICATE_ID", opath + ": duplicate option id", opath);
      }
      list.options.push_back(std::move(option));
    }
    if (cat.lists.count(list.id)) {
      throw Error("DUPLICATE_ID", path + ": duplicate list id", path);
    }
    cat.lists.emplace(list.id, std::move(list));
  }

  const json& phrases = member(root, "phrases", "$");
  if (!phrases.is_array()) schema_error("phrases", "expected an array");
  for (std::size_t i = 0; i < phrases.size(); ++i) {
    const json& jp = phrases[i];
    const std::string ipath = "phrases[" + std::to_string(i) + "]";
    require_keys(jp, ipath, {"id", "number", "title", "segments", "layouts"});
    Phrase phrase;
    phrase.id = id_value(member(jp, "id", ipath), ipath + ".id");
    const std::string path = "phrases[" + phrase.id + "]";
    phrase.number = int_value(member(jp, "number", path), path + ".number");
    if (auto it = jp.find("title"); it != jp.end()) phrase.title = string_value(*it, path + ".title");
    const json& segments = member(jp, "segments", path);
    if (!segments.is_array()) schema_error(path + ".segments", "expected an array");
    for (std::size_t k = 0; k < segments.size(); ++k) {
      phrase.segments.push_back(
          Segment{static_cast<int>(k + 1), id_value(segments[k], path + ".segments[" + std::to_string(k + 1) + "]")});
    }
    const json& layouts = member(jp, "layouts", path);
    if (!layouts.is_object()) schema_error(path + ".layouts", "expected an object");
    for (const auto& [lang, parts] : layouts.items()) {
      const std::string lpath = path + ".layouts." + lang;
      if (!codes.count(lang)) schema_error(lpath, "undeclared language \"" + lang + "\"");
      if (!parts.is_array()) schema_error(lpath, "expected an array");
      std::vector<LayoutPart> layout;
      for (const auto& p : parts) {
        const std::string text = p.is_string() ? p.get<std::string>() : p.dump();
        auto part = parse_layout_part(text);
        if (!part) schema_error(lpath, "invalid layout part \"" + text + "\"");
        layout.push_back(*part);
      }
      phrase.layouts.emplace(lang, std::move(layout));
    }
    if (cat.phrases.count(phrase.id)) {
      throw Error("DUPLICATE_ID", path + ": duplicate phrase id", path);
    }
    cat.phrases.emplace(phrase.id, std::move(phrase));
  }

  check_references(cat);
  return cat;
}

Catalogue load_catalogue_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO_FAILURE", "cannot open catalogue " + path, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalogue(buffer.str());
}

}  // namespace phrasecat
