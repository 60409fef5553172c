#include "phrasecat/qa.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "phrasecat/error.hpp"
#include "phrasecat/unicode.hpp"

namespace phrasecat {
namespace {

const Phrase& require_phrase(const Catalogue& cat, const std::string& phrase_id) {
  const Phrase* phrase = cat.find_phrase(phrase_id);
  if (!phrase) throw Error("UNKNOWN_PHRASE", "unknown phrase \"" + phrase_id + "\"");
  return *phrase;
}

const OptionList& require_list(const Catalogue& cat, const std::string& list_id) {
  const OptionList* list = cat.find_list(list_id);
  if (!list) throw Error("UNKNOWN_LIST", "unknown list \"" + list_id + "\"");
  return *list;
}

std::vector<SlotRef> source_slots(const Catalogue& cat, const OptionEntry& option) {
  const OptionText* t = option.text(cat.source_language());
  return t ? slot_refs(*t) : std::vector<SlotRef>{};
}

Choice random_choice(const Catalogue& cat, const OptionList& list, std::mt19937_64& engine) {
  if (list.options.empty()) throw Error("EMPTY_LIST", "list \"" + list.id + "\" has no options");
  const auto index = uniform_index(engine, list.options.size());
  const OptionEntry& option = list.options[static_cast<std::size_t>(index)];
  Choice choice{option.id, {}};
  for (const auto& ref : source_slots(cat, option)) {
    choice.children.emplace(ref, random_choice(cat, require_list(cat, ref.list_id), engine));
  }
  return choice;
}

class Counter {
 public:
  explicit Counter(const Catalogue& cat) : cat_(cat) {}

  const BigCount& list_count(const std::string& list_id) {
    if (auto it = memo_.find(list_id); it != memo_.end()) return it->second;
    const OptionList& list = require_list(cat_, list_id);
    BigCount total = 0;
    for (const auto& option : list.options) {
      BigCount product = 1;
      for (const auto& ref : source_slots(cat_, option)) product *= list_count(ref.list_id);
      total += product;
    }
    return memo_.emplace(list_id, std::move(total)).first->second;
  }

 private:
  const Catalogue& cat_;
  std::map<std::string, BigCount> memo_;
};

// All choices for a list, in option order; earlier slots vary slowest.
class Enumerator {
 public:
  explicit Enumerator(const Catalogue& cat) : cat_(cat) {}

  const std::vector<Choice>& choices(const std::string& list_id) {
    if (auto it = memo_.find(list_id); it != memo_.end()) return it->second;
    const OptionList& list = require_list(cat_, list_id);
    std::vector<Choice> out;
    for (const auto& option : list.options) {
      std::vector<Choice> partial{Choice{option.id, {}}};
      for (const auto& ref : source_slots(cat_, option)) {
        const auto& sub = choices(ref.list_id);
        std::vector<Choice> next;
        next.reserve(partial.size() * sub.size());
        for (const auto& p : partial) {
          for (const auto& s : sub) {
            Choice c = p;
            c.children.emplace(ref, s);
            next.push_back(std::move(c));
          }
        }
        partial = std::move(next);
      }
      out.insert(out.end(), std::make_move_iterator(partial.begin()),
                 std::make_move_iterator(partial.end()));
    }
    return memo_.emplace(list_id, std::move(out)).first->second;
  }

 private:
  const Catalogue& cat_;
  std::map<std::string, std::vector<Choice>> memo_;
};

std::string display(const Catalogue& cat, const TextPart& part) {
  return part.empty() ? std::string("[Empty]") : format_text_part(cat, part);
}

std::string display(const Catalogue& cat, const OptionText* text) {
  if (!text) return "[Missing]";
  if (text->split) return display(cat, text->split->first) + " | " + display(cat, text->split->second);
  return display(cat, text->whole);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string sanitize_cell(std::string cell) {
  for (char& c : cell) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return cell;
}

}  // namespace

std::uint64_t uniform_index(std::mt19937_64& engine, std::uint64_t n) {
  if (n == 0) throw Error("EMPTY_LIST", "cannot draw from an empty range");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t remainder = (kMax % n + 1) % n;  // 2^64 mod n
  std::uint64_t x = engine();
  if (remainder != 0) {
    const std::uint64_t limit = 0 - remainder;  // 2^64 - remainder
    while (x >= limit) x = engine();
  }
  return x % n;
}

std::vector<Selection> generate_random(const Catalogue& catalogue, const GenerationSpec& spec) {
  const Phrase& phrase = require_phrase(catalogue, spec.phrase_id);
  std::mt19937_64 engine(spec.seed);
  std::vector<Selection> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    Selection selection{phrase.id, {}};
    for (const auto& seg : phrase.segments) {
      selection.segments.emplace(seg.number,
                                 random_choice(catalogue, require_list(catalogue, seg.list_id), engine));
    }
    out.push_back(std::move(selection));
  }
  return out;
}

BigCount enumerate_count(const Catalogue& catalogue, const std::string& phrase_id) {
  const Phrase& phrase = require_phrase(catalogue, phrase_id);
  Counter counter(catalogue);
  BigCount total = 1;
  for (const auto& seg : phrase.segments) total *= counter.list_count(seg.list_id);
  return total;
}

std::vector<Selection> enumerate_all(const Catalogue& catalogue, const std::string& phrase_id,
                                     std::size_t limit) {
  const BigCount count = enumerate_count(catalogue, phrase_id);
  if (count > limit) {
    throw Error("LIMIT_EXCEEDED", "phrase \"" + phrase_id + "\" has " + count.str() +
                                      " selections, limit is " + std::to_string(limit));
  }
  const Phrase& phrase = require_phrase(catalogue, phrase_id);
  Enumerator enumerator(catalogue);
  std::vector<Selection> out{Selection{phrase.id, {}}};
  for (const auto& seg : phrase.segments) {
    const auto& sub = enumerator.choices(seg.list_id);
    std::vector<Selection> next;
    next.reserve(out.size() * sub.size());
    for (const auto& partial : out) {
      for (const auto& choice : sub) {
        Selection s = partial;
        s.segments.emplace(seg.number, choice);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}

ReviewSheet option_walk(const Catalogue& catalogue) {
  ReviewSheet sheet;
  sheet.languages = catalogue.language_codes();
  for (const auto& [list_id, list] : catalogue.lists) {
    for (const auto& option : list.options) {
      ReviewRow row;
      row.list_id = list_id;
      row.option_id = option.id;
      for (const auto& lang : sheet.languages) {
        row.texts.push_back(display(catalogue, option.text(lang)));
        auto it = option.hints.find(lang);
        row.hints.push_back(it == option.hints.end() ? std::string() : it->second);
      }
      sheet.rows.push_back(std::move(row));
    }
  }

  std::set<std::string> reachable;
  std::deque<std::string> queue;
  for (const auto& [id, phrase] : catalogue.phrases) {
    for (const auto& seg : phrase.segments) {
      if (reachable.insert(seg.list_id).second) queue.push_back(seg.list_id);
    }
  }
  while (!queue.empty()) {
    const OptionList* list = catalogue.find_list(queue.front());
    queue.pop_front();
    if (!list) continue;
    for (const auto& option : list->options) {
      for (const auto& [lang, text] : option.texts) {
        for (const auto& ref : slot_refs(text)) {
          if (reachable.insert(ref.list_id).second) queue.push_back(ref.list_id);
        }
      }
    }
  }
  for (const auto& [id, list] : catalogue.lists) {
    if (!reachable.count(id)) sheet.unreachable_lists.push_back(id);
  }
  return sheet;
}

std::string export_review_sheet(const ReviewSheet& sheet) {
  std::ostringstream out;
  out << "list\toption";
  for (const auto& lang : sheet.languages) out << '\t' << lang;
  out << '\n';
  for (const auto& row : sheet.rows) {
    out << sanitize_cell(row.list_id) << '\t' << sanitize_cell(row.option_id);
    for (std::size_t i = 0; i < row.texts.size(); ++i) {
      std::string cell = row.texts[i];
      if (i < row.hints.size() && !row.hints[i].empty()) cell += " (" + row.hints[i] + ")";
      out << '\t' << sanitize_cell(std::move(cell));
    }
    out << '\n';
  }
  return out.str();
}

std::vector<SurfaceViolation> check_whitespace(std::string_view text) {
  std::vector<SurfaceViolation> out;
  if (text.empty()) {
    out.push_back({"EMPTY_TEXT", "text is empty"});
    return out;
  }
  if (is_space(text.front()) || is_space(text.back())) {
    out.push_back({"LEADING_OR_TRAILING_SPACE", "text starts or ends with whitespace"});
  }
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (is_space(text[i]) && is_space(text[i - 1])) {
      out.push_back({"DOUBLE_SPACE", "consecutive whitespace at byte " + std::to_string(i - 1)});
      break;
    }
  }
  return out;
}

std::vector<SurfaceViolation> check_surface_invariants(std::string_view text, const LanguageTag&) {
  std::vector<SurfaceViolation> out = check_whitespace(text);
  if (text.empty()) return out;
  if (unicode::starts_lowercase(text)) {
    out.push_back({"LOWERCASE_START", "first letter is not capitalized"});
  }
  if (text.find('{') != std::string_view::npos || text.find('}') != std::string_view::npos ||
      text.find("(-)") != std::string_view::npos) {
    out.push_back({"UNRESOLVED_MARKER", "slot or glue marker left in output"});
  }
  return out;
}

std::string format_violations(const std::string& path,
                              const std::vector<SurfaceViolation>& violations) {
  std::string out;
  for (const auto& v : violations) out += path + ": " + v.code + ": " + v.message + "\n";
  return out;
}

}  // namespace phrasecat
