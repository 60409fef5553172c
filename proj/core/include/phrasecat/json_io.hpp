#pragma once

// JSON wire forms shared by the CLI, the HTTP service and the bulletin store.

#include <nlohmann/json.hpp>

#include "phrasecat/bulletin.hpp"
#include "phrasecat/qa.hpp"
#include "phrasecat/render.hpp"
#include "phrasecat/search.hpp"
#include "phrasecat/selection.hpp"
#include "phrasecat/validate.hpp"

namespace phrasecat::json_io {

using nlohmann::json;

// {"phrase": "p19", "choices": {"1": {"option": "o4", "slots": {"Gebiet#1": {...}}}}}
json to_json(const Selection& selection);
Selection selection_from_json(const json& j);  // throws Error BAD_REQUEST

json to_json(const JokerSentence& joker);
JokerSentence joker_from_json(const json& j);

// {"selection": {...}} or {"joker": {"de": "...", ...}}
json to_json(const SentenceSpec& sentence);
SentenceSpec sentence_from_json(const json& j);

json to_json(const Bulletin& bulletin);
Bulletin bulletin_from_json(const json& j);

json to_json(const DangerDescription& description);
DangerDescription description_from_json(const json& j);

json to_json(const BulletinSummary& summary);
json to_json(const ValidationReport& report);
json to_json(const SlotTree& tree);
json to_json(const SearchHit& hit);

}  // namespace phrasecat::json_io
