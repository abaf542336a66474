#include <nlohmann/json.hpp>

#include <ostream>
#include <set>

#include "genspect/error.h"
#include "genspect/generator.h"
#include "json_util.h"
#include "text_util.h"

namespace genspect {

using nlohmann::ordered_json;
using internal::Field;
using internal::RequireEnum;

std::string RecordToJson(const SentenceRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["tokens"] = r.tokens;
  j["text"] = r.text;
  j["occupation_index"] = r.occupation_index;
  j["occupation_lemma"] = r.occupation_lemma;
  j["occupation_stereotype"] = ToString(r.occupation_stereotype);
  j["trigger_lemma"] = r.trigger_lemma;
  j["trigger_gender"] = ToString(r.trigger_gender);
  j["trigger_kind"] = ToString(r.trigger_kind);
  j["trigger_position"] = ToString(r.trigger_position);
  j["cues"] = ordered_json::array();
  for (const auto& c : r.cues) {
    ordered_json cj;
    cj["lemma"] = c.lemma;
    cj["kind"] = ToString(c.kind);
    cj["indicative_gender"] = ToString(c.indicative_gender);
    cj["attachment"] = ToString(c.attachment);
    cj["token_index"] = c.token_index;
    j["cues"].push_back(std::move(cj));
  }
  j["frame_id"] = r.frame_id;
  j["expected_gender"] = ToString(r.expected_gender);
  j["bindings"] = ordered_json::array();
  for (const auto& [slot, value] : r.bindings) j["bindings"].push_back({slot, value});
  return j.dump();
}

SentenceRecord RecordFromJson(std::string_view line) {
  const auto j = internal::ParseJsonObject(line);
  SentenceRecord r;
  r.id = Field<std::string>(j, "id");
  r.tokens = Field<std::vector<std::string>>(j, "tokens");
  r.text = Field<std::string>(j, "text");
  r.occupation_index = Field<std::size_t>(j, "occupation_index");
  r.occupation_lemma = Field<std::string>(j, "occupation_lemma");
  r.occupation_stereotype = RequireEnum(j, "occupation_stereotype", ParseGender);
  r.trigger_lemma = Field<std::string>(j, "trigger_lemma");
  r.trigger_gender = RequireEnum(j, "trigger_gender", ParseGender);
  r.trigger_kind = RequireEnum(j, "trigger_kind", ParseTriggerKind);
  r.trigger_position = RequireEnum(j, "trigger_position", ParseTriggerPosition);
  r.frame_id = Field<std::string>(j, "frame_id");
  r.expected_gender = RequireEnum(j, "expected_gender", ParseGender);
  if (j.contains("cues")) {
    if (!j["cues"].is_array()) throw Error(ErrorCode::kMalformedLine, "'cues' is not an array");
    for (const auto& cj : j["cues"]) {
      CueInfo c;
      c.lemma = Field<std::string>(cj, "lemma");
      c.kind = RequireEnum(cj, "kind", ParseCueKind);
      c.indicative_gender = RequireEnum(cj, "indicative_gender", ParseGender);
      c.attachment = RequireEnum(cj, "attachment", ParseAttachment);
      c.token_index = Field<std::size_t>(cj, "token_index");
      r.cues.push_back(std::move(c));
    }
  }
  if (j.contains("bindings")) {
    for (const auto& b : j["bindings"]) {
      if (!b.is_array() || b.size() != 2 || !b[0].is_string() || !b[1].is_string()) {
        throw Error(ErrorCode::kMalformedLine, "'bindings' entries must be [slot, value]");
      }
      r.bindings.emplace_back(b[0].get<std::string>(), b[1].get<std::string>());
    }
  }
  if (r.tokens.empty()) throw Error(ErrorCode::kMalformedLine, "record has no tokens");
  if (r.occupation_index >= r.tokens.size()) {
    throw Error(ErrorCode::kMalformedLine, "occupation_index outside the token list");
  }
  return r;
}

void WriteCorpus(std::ostream& out, const CorpusHeader& header,
                 const std::vector<SentenceRecord>& records) {
  ordered_json h;
  h["schema"] = header.schema;
  h["grammar_hash"] = header.grammar_hash;
  h["lexicon_hash"] = header.lexicon_hash;
  h["seed"] = header.seed;
  h["rng"] = header.rng;
  h["cue_count"] = header.cue_count;
  h["per_quadrant"] = header.per_quadrant_cap ? ordered_json(*header.per_quadrant_cap) : ordered_json();
  h["frames"] = header.frames ? ordered_json(*header.frames) : ordered_json();
  out << h.dump() << '\n';
  for (const auto& r : records) out << RecordToJson(r) << '\n';
}

Corpus ReadCorpusText(std::string_view text, std::string_view source) {
  const auto lines = internal::Lines(text);
  if (lines.empty()) {
    throw Error(ErrorCode::kSchemaMismatch, std::string(source) + ": missing corpus header line");
  }
  Corpus corpus;
  try {
    const auto h = internal::ParseJsonObject(lines[0]);
    corpus.header.schema = Field<std::string>(h, "schema");
    if (corpus.header.schema != kCorpusSchema) {
      throw Error(ErrorCode::kSchemaMismatch, std::string(source) + ": schema '" +
                                                  corpus.header.schema + "', expected '" +
                                                  std::string(kCorpusSchema) + "'");
    }
    corpus.header.grammar_hash = h.value("grammar_hash", "");
    corpus.header.lexicon_hash = h.value("lexicon_hash", "");
    corpus.header.seed = h.value("seed", std::uint64_t{0});
    corpus.header.rng = h.value("rng", "");
    corpus.header.cue_count = h.value("cue_count", 0);
    if (h.contains("per_quadrant") && !h["per_quadrant"].is_null()) {
      corpus.header.per_quadrant_cap = h["per_quadrant"].get<std::size_t>();
    }
    if (h.contains("frames") && !h["frames"].is_null()) {
      corpus.header.frames = h["frames"].get<std::vector<std::string>>();
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchemaMismatch) throw;
    throw Error(ErrorCode::kSchemaMismatch, std::string(source) + ": bad header: " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch, std::string(source) + ": bad header: " + e.what());
  }
  std::set<std::string> ids;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (internal::Trim(lines[i]).empty()) continue;
    SentenceRecord r;
    try {
      r = RecordFromJson(lines[i]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedLine,
                  std::string(source) + ":" + std::to_string(i + 1) + ": " + e.what());
    }
    if (!ids.insert(r.id).second) {
      throw Error(ErrorCode::kDuplicateId, std::string(source) + ": duplicate record id " + r.id);
    }
    corpus.records.push_back(std::move(r));
  }
  return corpus;
}

Corpus ReadCorpus(const std::filesystem::path& path) {
  return ReadCorpusText(internal::ReadFile(path), path.string());
}

}  // namespace genspect
