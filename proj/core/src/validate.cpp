#include "phrasecat/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace phrasecat {

bool ValidationReport::has_error(std::string_view code) const {
  return std::any_of(errors.begin(), errors.end(), [code](const Finding& f) { return f.code == code; });
}

bool ValidationReport::has_warning(std::string_view code) const {
  return std::any_of(warnings.begin(), warnings.end(),
                     [code](const Finding& f) { return f.code == code; });
}

void ValidationReport::error(std::string code, std::string path, std::string message) {
  errors.push_back(Finding{std::move(code), std::move(path), std::move(message)});
}

void ValidationReport::warning(std::string code, std::string path, std::string message) {
  warnings.push_back(Finding{std::move(code), std::move(path), std::move(message)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& path_prefix) {
  auto prefixed = [&path_prefix](Finding f) {
    if (!path_prefix.empty()) f.path = f.path.empty() ? path_prefix : path_prefix + "/" + f.path;
    return f;
  };
  for (const auto& f : other.errors) errors.push_back(prefixed(f));
  for (const auto& f : other.warnings) warnings.push_back(prefixed(f));
}

std::string format_report(const ValidationReport& report) {
  std::ostringstream out;
  for (const auto& f : report.errors) out << f.path << ": " << f.code << ": " << f.message << '\n';
  for (const auto& f : report.warnings) {
    out << f.path << ": " << f.code << " (warning): " << f.message << '\n';
  }
  return out.str();
}

namespace {

std::string list_path(const std::string& id) { return "lists[" + id + "]"; }

std::string option_path(const std::string& list_id, const std::string& option_id) {
  return list_path(list_id) + ".options[" + option_id + "]";
}

std::string phrase_path(const std::string& id) { return "phrases[" + id + "]"; }

std::multiset<SlotRef> slot_multiset(const OptionText& text) {
  auto refs = slot_refs(text);
  return {refs.begin(), refs.end()};
}

std::string describe(const std::multiset<SlotRef>& refs) {
  std::string out = "{";
  for (const auto& r : refs) {
    if (out.size() > 1) out += ", ";
    out += r.list_id + "#" + std::to_string(r.ordinal);
  }
  return out + "}";
}

void check_languages(const Catalogue& cat, ValidationReport& report) {
  if (cat.languages.empty()) {
    report.error("NO_LANGUAGES", "languages", "catalogue declares no language");
    return;
  }
  std::set<std::string> seen;
  int sources = 0;
  for (const auto& lang : cat.languages) {
    if (lang.code.empty()) report.error("EMPTY_LANGUAGE_CODE", "languages", "empty language code");
    if (!seen.insert(lang.code).second) {
      report.error("DUPLICATE_LANGUAGE", "languages", "language \"" + lang.code + "\" declared twice");
    }
    if (lang.source) ++sources;
  }
  if (sources != 1) {
    report.error("SOURCE_LANGUAGE", "languages",
                 "exactly one source language required, found " + std::to_string(sources));
  }
}

void check_option(const Catalogue& cat, const OptionList& list, const OptionEntry& option,
                  ValidationReport& report) {
  const std::string path = option_path(list.id, option.id);
  const LanguageTag& source = cat.source_language();

  for (const auto& [lang, text] : option.texts) {
    if (!cat.has_language(lang)) {
      report.error("UNKNOWN_LANGUAGE", path + ".text." + lang, "text for undeclared language");
    }
  }

  const OptionText* source_text = option.text(source);
  std::multiset<SlotRef> source_slots;
  if (source_text) {
    source_slots = slot_multiset(*source_text);
    std::map<std::string, std::vector<int>> ordinals;
    for (const auto& s : slot_refs(*source_text)) ordinals[s.list_id].push_back(s.ordinal);
    for (auto& [id, ords] : ordinals) {
      std::sort(ords.begin(), ords.end());
      for (std::size_t i = 0; i < ords.size(); ++i) {
        if (ords[i] != static_cast<int>(i + 1)) {
          report.error("SLOT_ORDINAL", path + ".text." + source,
                       "slot ordinals for \"" + id + "\" must run 1.." + std::to_string(ords.size()));
          break;
        }
      }
    }
  }

  for (const auto& lang : cat.languages) {
    const std::string tpath = path + ".text." + lang.code;
    const OptionText* text = option.text(lang.code);
    if (!text) {
      report.error("MISSING_TEXT", tpath, "no text in language \"" + lang.code + "\"");
      continue;
    }
    const bool split_expected = list.split_languages.count(lang.code) > 0;
    if (split_expected && !text->is_split()) {
      report.error("SPLIT_MISMATCH", tpath, "list is split in \"" + lang.code + "\" but the text has no a/b parts");
    } else if (!split_expected && text->is_split()) {
      report.error("SPLIT_MISMATCH", tpath, "a/b parts given but the list is not split in \"" + lang.code + "\"");
    }
    if (source_text && lang.code != source) {
      const auto slots = slot_multiset(*text);
      if (slots != source_slots) {
        report.error("PLACEHOLDER_PARITY", tpath,
                     "slots " + describe(slots) + " differ from source " + describe(source_slots));
      }
    }
    for (const auto& slot : slot_refs(*text)) {
      const OptionList* target = cat.find_list(slot.list_id);
      if (!target) {
        report.error("UNKNOWN_LIST", tpath, "slot references unknown list \"" + slot.list_id + "\"");
      } else if (target->depth <= list.depth) {
        report.error("DEPTH_ORDER", tpath,
                     "slot \"" + slot.list_id + "\" (depth " + std::to_string(target->depth) +
                         ") must be deeper than its list (depth " + std::to_string(list.depth) + ")");
      }
    }
  }

  if (option.agreement && option.agreement->agrees_with &&
      !cat.find_list(*option.agreement->agrees_with)) {
    report.error("UNKNOWN_LIST", path + ".agreement",
                 "agrees with unknown list \"" + *option.agreement->agrees_with + "\"");
  }
}

void check_list(const Catalogue& cat, const std::string& key, const OptionList& list,
                ValidationReport& report) {
  const std::string path = list_path(key);
  const LanguageTag& source = cat.source_language();
  if (list.id != key) report.error("LIST_ID", path, "list id \"" + list.id + "\" does not match its key");
  if (list.depth < 0 || list.depth > kMaxListDepth) {
    report.error("DEPTH_BOUND", path, "depth " + std::to_string(list.depth) + " outside 0.." +
                                          std::to_string(kMaxListDepth));
  }
  if (list.options.empty()) report.error("EMPTY_LIST", path, "list has no options");

  for (const auto& lang : list.split_languages) {
    if (!cat.has_language(lang)) {
      report.error("UNKNOWN_LANGUAGE", path + ".split_languages", "undeclared language \"" + lang + "\"");
    } else if (lang == source) {
      report.error("SPLIT_SOURCE", path + ".split_languages", "the source language cannot be split");
    }
  }
  if (!list.split_languages.empty() && list.depth != 0) {
    report.error("SPLIT_NESTED", path + ".split_languages", "only segment-level lists can be split");
  }

  std::set<std::string> ids;
  for (const auto& option : list.options) {
    if (!ids.insert(option.id).second) {
      report.error("DUPLICATE_OPTION", option_path(key, option.id), "duplicate option id");
    }
    check_option(cat, list, option, report);
  }

  const auto count_in = [&list](const LanguageTag& lang) {
    return std::count_if(list.options.begin(), list.options.end(),
                         [&lang](const OptionEntry& o) { return o.text(lang) != nullptr; });
  };
  const auto source_count = count_in(source);
  for (const auto& lang : cat.languages) {
    if (lang.code == source) continue;
    const auto n = count_in(lang.code);
    if (n != source_count) {
      report.error("PARALLEL_OPTION_COUNT", path,
                   "\"" + lang.code + "\" has " + std::to_string(n) + " options, source has " +
                       std::to_string(source_count));
    }
  }

  if (list.options.size() == 1) {
    const OptionText* t = list.options.front().text(source);
    if (t && t->empty()) {
      report.warning("EMPTY_REQUIRED_OPTION", option_path(key, list.options.front().id),
                     "the only option of this list is empty in the source language");
    }
  }
}

// Independent of the depth ordering: a plain DFS over list references.
void check_cycles(const Catalogue& cat, ValidationReport& report) {
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  std::set<std::string> reported;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    state[id] = 1;
    const OptionList* list = cat.find_list(id);
    if (list) {
      std::set<std::string> next;
      for (const auto& option : list->options) {
        for (const auto& [lang, text] : option.texts) {
          for (const auto& slot : slot_refs(text)) next.insert(slot.list_id);
        }
      }
      for (const auto& n : next) {
        if (!cat.find_list(n)) continue;
        if (state[n] == 1) {
          if (reported.insert(n).second) {
            report.error("CYCLE", list_path(n), "slot references form a cycle through \"" + id + "\"");
          }
        } else if (state[n] == 0) {
          visit(n);
        }
      }
    }
    state[id] = 2;
  };
  for (const auto& [id, list] : cat.lists) {
    if (state[id] == 0) visit(id);
  }
}

void check_layout(const Catalogue& cat, const Phrase& phrase, const LanguageTag& lang,
                  const std::vector<LayoutPart>& layout, ValidationReport& report) {
  const std::string path = phrase_path(phrase.id) + ".layouts." + lang;
  const int n = static_cast<int>(phrase.segments.size());

  if (lang == cat.source_language()) {
    bool identity = static_cast<int>(layout.size()) == n;
    for (int i = 0; identity && i < n; ++i) {
      identity = layout[static_cast<std::size_t>(i)] == LayoutPart{i + 1, PartKind::Whole};
    }
    if (!identity) {
      report.error("LAYOUT_PERMUTATION", path, "source layout must list segments 1.." + std::to_string(n) +
                                                   " in order without splits");
    }
    return;
  }

  std::map<int, std::vector<PartKind>> seen;
  for (const auto& part : layout) {
    if (!phrase.segment(part.segment)) {
      report.error("LAYOUT_PERMUTATION", path, "unknown segment " + to_string(part));
      continue;
    }
    seen[part.segment].push_back(part.kind);
  }
  for (const auto& seg : phrase.segments) {
    const auto& kinds = seen[seg.number];
    const bool whole = kinds == std::vector<PartKind>{PartKind::Whole};
    const bool split = kinds == std::vector<PartKind>{PartKind::A, PartKind::B};
    if (!whole && !split) {
      report.error("LAYOUT_PERMUTATION", path,
                   "segment " + std::to_string(seg.number) +
                       " must appear once whole, or once as a followed by once as b");
      continue;
    }
    const OptionList* list = cat.find_list(seg.list_id);
    if (!list) continue;
    const bool list_split = list->split_languages.count(lang) > 0;
    if (split != list_split) {
      report.error("LAYOUT_SPLIT", path,
                   "segment " + std::to_string(seg.number) + " is " + (split ? "" : "not ") +
                       "split in the layout but list \"" + list->id + "\" is " + (list_split ? "" : "not ") +
                       "split in \"" + lang + "\"");
    }
  }
}

void check_phrase(const Catalogue& cat, const std::string& key, const Phrase& phrase,
                  ValidationReport& report) {
  const std::string path = phrase_path(key);
  if (phrase.id != key) report.error("PHRASE_ID", path, "phrase id \"" + phrase.id + "\" does not match its key");
  if (phrase.segments.empty() || phrase.segments.size() > kMaxSegments) {
    report.error("SEGMENT_COUNT", path, std::to_string(phrase.segments.size()) + " segments, expected 1.." +
                                            std::to_string(kMaxSegments));
  }
  for (std::size_t i = 0; i < phrase.segments.size(); ++i) {
    const Segment& seg = phrase.segments[i];
    const std::string spath = path + ".segments[" + std::to_string(i + 1) + "]";
    if (seg.number != static_cast<int>(i + 1)) {
      report.error("SEGMENT_NUMBERING", spath, "segments must be numbered 1..n in order");
    }
    const OptionList* list = cat.find_list(seg.list_id);
    if (!list) {
      report.error("UNKNOWN_LIST", spath, "unknown list \"" + seg.list_id + "\"");
    } else if (list->depth != 0) {
      report.error("SEGMENT_DEPTH", spath, "segment list \"" + seg.list_id + "\" must have depth 0");
    }
  }
  for (const auto& [lang, layout] : phrase.layouts) {
    if (!cat.has_language(lang)) {
      report.error("UNKNOWN_LANGUAGE", path + ".layouts." + lang, "layout for undeclared language");
    }
  }
  for (const auto& lang : cat.languages) {
    auto it = phrase.layouts.find(lang.code);
    if (it == phrase.layouts.end()) {
      report.error("LAYOUT_MISSING", path + ".layouts." + lang.code, "no layout for \"" + lang.code + "\"");
      continue;
    }
    check_layout(cat, phrase, lang.code, it->second, report);
  }
}

}  // namespace

ValidationReport validate_catalogue(const Catalogue& catalogue) {
  ValidationReport report;
  if (catalogue.schema_version != kSchemaVersion) {
    report.error("SCHEMA_VERSION", "schema_version", "unsupported schema version");
  }
  check_languages(catalogue, report);
  for (const auto& [id, list] : catalogue.lists) check_list(catalogue, id, list, report);
  check_cycles(catalogue, report);
  for (const auto& [id, phrase] : catalogue.phrases) check_phrase(catalogue, id, phrase, report);
  return report;
}

ValidationReport lint_agreement(const Catalogue& catalogue) {
  ValidationReport report;
  for (const auto& [list_id, list] : catalogue.lists) {
    for (const auto& option : list.options) {
      if (!option.agreement || !option.agreement->agrees_with) continue;
      const std::string path = option_path(list_id, option.id);
      const OptionList* governing = catalogue.find_list(*option.agreement->agrees_with);
      if (!governing) continue;  // reported by validate_catalogue
      for (const auto& lang : catalogue.languages) {
        std::optional<GrammaticalFeatures> expected;
        for (const auto& subject : governing->options) {
          const GrammaticalFeatures* f = nullptr;
          if (subject.agreement) {
            auto it = subject.agreement->features.find(lang.code);
            if (it != subject.agreement->features.end()) f = &it->second;
          }
          if (!f) {
            report.warning("AGREEMENT_UNDECLARED", path,
                           "subject \"" + subject.id + "\" of \"" + governing->id +
                               "\" declares no gender/number in \"" + lang.code + "\"");
            expected.reset();
            break;
          }
          if (!expected) {
            expected = *f;
          } else if (!(*expected == *f)) {
            report.warning("AGREEMENT_CONFLICT", path,
                           "subjects of \"" + governing->id + "\" differ in \"" + lang.code + "\": " +
                               expected->gender + "/" + expected->number + " vs " + f->gender + "/" +
                               f->number + " (\"" + subject.id + "\")");
            break;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace phrasecat
