#include "genspect/evaluator.h"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <set>
#include <thread>

#include "genspect/error.h"
#include "json_util.h"
#include "text_util.h"

namespace genspect {

std::string_view ToString(Verdict v) {
  switch (v) {
    case Verdict::kCorrect: return "Correct";
    case Verdict::kWrong: return "Wrong";
    case Verdict::kInconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view ToString(Reason r) {
  switch (r) {
    case Reason::kOk: return "OK";
    case Reason::kNoAlignment: return "NoAlignment";
    case Reason::kNoGenderTag: return "NoGenderTag";
    case Reason::kConflictingTags: return "ConflictingTags";
    case Reason::kMissingTranslation: return "MissingTranslation";
    case Reason::kMissingTags: return "MissingTags";
    case Reason::kIndexOutOfRange: return "IndexOutOfRange";
  }
  return "OK";
}

std::optional<Verdict> ParseVerdict(std::string_view s) {
  for (auto v : {Verdict::kCorrect, Verdict::kWrong, Verdict::kInconclusive}) {
    if (ToString(v) == s) return v;
  }
  return std::nullopt;
}

std::optional<Reason> ParseReason(std::string_view s) {
  for (auto r : {Reason::kOk, Reason::kNoAlignment, Reason::kNoGenderTag, Reason::kConflictingTags,
                 Reason::kMissingTranslation, Reason::kMissingTags, Reason::kIndexOutOfRange}) {
    if (ToString(r) == s) return r;
  }
  return std::nullopt;
}

std::string CueAttachmentSummary(const SentenceRecord& record) {
  if (record.cues.empty()) return "none";
  const Attachment first = record.cues.front().attachment;
  for (const auto& c : record.cues) {
    if (c.attachment != first) return "mixed";
  }
  return std::string(ToString(first));
}

Resolution ResolveTargetGender(const SentenceRecord& record, const Translation& translation,
                               const AlignmentSet& alignment, const MorphTags& tags) {
  if (translation.id != record.id || alignment.id != record.id || tags.id != record.id) {
    throw Error(ErrorCode::kIdMismatch, "inputs for record " + record.id + " carry ids " +
                                            translation.id + ", " + alignment.id + ", " + tags.id);
  }
  if (tags.per_token.size() != translation.tokens.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                record.id + ": " + std::to_string(tags.per_token.size()) + " tags for " +
                    std::to_string(translation.tokens.size()) + " tokens");
  }
  std::vector<std::size_t> targets;
  for (const auto& [s, t] : alignment.pairs) {
    if (s == record.occupation_index) targets.push_back(t);
  }
  if (targets.empty()) return {GrammaticalGender::kNone, Reason::kNoAlignment};
  for (std::size_t t : targets) {
    if (t >= translation.tokens.size()) return {GrammaticalGender::kNone, Reason::kIndexOutOfRange};
  }

  std::vector<const TokenTag*> marked;
  for (std::size_t t : targets) {
    const TokenTag& tag = tags.per_token[t];
    if (tag.gender == GrammaticalGender::kMasc || tag.gender == GrammaticalGender::kFem) {
      marked.push_back(&tag);
    }
  }
  if (marked.empty()) return {GrammaticalGender::kNone, Reason::kNoGenderTag};
  std::vector<const TokenTag*> nouns;
  std::copy_if(marked.begin(), marked.end(), std::back_inserter(nouns),
               [](const TokenTag* t) { return t->pos && *t->pos == "NOUN"; });
  const auto& pool = nouns.empty() ? marked : nouns;
  const GrammaticalGender g = pool.front()->gender;
  for (const TokenTag* t : pool) {
    if (t->gender != g) return {GrammaticalGender::kNone, Reason::kConflictingTags};
  }
  return {g, Reason::kOk};
}

Outcome Classify(const SentenceRecord& record, const Translation* translation,
                 const AlignmentSet* alignment, const MorphTags* tags,
                 std::string_view default_lang) {
  Outcome o;
  o.id = record.id;
  o.lang = translation != nullptr ? translation->lang : std::string(default_lang);
  o.trigger_gender = record.trigger_gender;
  o.occupation_stereotype = record.occupation_stereotype;
  o.occupation_lemma = record.occupation_lemma;
  o.frame_id = record.frame_id;
  o.trigger_position = record.trigger_position;
  o.trigger_kind = record.trigger_kind;
  o.cue_count = static_cast<int>(record.cues.size());
  o.cue_attachment = CueAttachmentSummary(record);

  Resolution r;
  if (translation == nullptr || translation->id != record.id) {
    r.reason = Reason::kMissingTranslation;
  } else if (tags == nullptr || tags->id != record.id ||
             tags->per_token.size() != translation->tokens.size()) {
    r.reason = Reason::kMissingTags;
  } else if (alignment == nullptr || alignment->id != record.id) {
    r.reason = Reason::kNoAlignment;
  } else {
    r = ResolveTargetGender(record, *translation, *alignment, *tags);
  }

  o.resolved_gender = r.gender;
  o.reason = r.reason;
  if (r.gender == GrammaticalGender::kNone) {
    o.verdict = Verdict::kInconclusive;
  } else if (r.gender == ExpectedMarking(record.expected_gender)) {
    o.verdict = Verdict::kCorrect;
  } else {
    o.verdict = Verdict::kWrong;
  }
  return o;
}

namespace {

template <typename Map>
const typename Map::mapped_type* Lookup(const Map* map, const std::string& id) {
  if (map == nullptr) return nullptr;
  const auto it = map->find(id);
  return it == map->end() ? nullptr : &it->second;
}

}  // namespace

std::vector<Outcome> EvaluateCorpus(const std::vector<SentenceRecord>& records,
                                    const EvaluationInputs& inputs, std::size_t jobs) {
  std::vector<Outcome> out(records.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& r = records[i];
      out[i] = Classify(r, Lookup(inputs.translations, r.id), Lookup(inputs.alignments, r.id),
                        Lookup(inputs.tags, r.id), inputs.default_lang);
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(records.size(), 1));
  if (jobs == 1) {
    work(0, records.size());
    return out;
  }
  std::vector<std::thread> workers;
  const std::size_t chunk = (records.size() + jobs - 1) / jobs;
  for (std::size_t begin = 0; begin < records.size(); begin += chunk) {
    workers.emplace_back(work, begin, std::min(records.size(), begin + chunk));
  }
  for (auto& w : workers) w.join();
  return out;
}

std::string OutcomeToJson(const Outcome& o) {
  nlohmann::ordered_json j;
  j["id"] = o.id;
  j["lang"] = o.lang;
  j["verdict"] = ToString(o.verdict);
  j["resolved_gender"] = ToString(o.resolved_gender);
  j["reason"] = ToString(o.reason);
  j["trigger_gender"] = ToString(o.trigger_gender);
  j["occupation_stereotype"] = ToString(o.occupation_stereotype);
  j["occupation_lemma"] = o.occupation_lemma;
  j["frame_id"] = o.frame_id;
  j["trigger_position"] = ToString(o.trigger_position);
  j["trigger_kind"] = ToString(o.trigger_kind);
  j["cue_count"] = o.cue_count;
  j["cue_attachment"] = o.cue_attachment;
  return j.dump();
}

Outcome OutcomeFromJson(std::string_view line) {
  using internal::Field;
  using internal::RequireEnum;
  const auto j = internal::ParseJsonObject(line);
  Outcome o;
  o.id = Field<std::string>(j, "id");
  o.lang = Field<std::string>(j, "lang");
  o.verdict = RequireEnum(j, "verdict", ParseVerdict);
  o.resolved_gender = RequireEnum(j, "resolved_gender", ParseGrammaticalGender);
  if (o.resolved_gender == GrammaticalGender::kNeut) {
    throw Error(ErrorCode::kMalformedLine, "resolved_gender cannot be Neut");
  }
  o.reason = RequireEnum(j, "reason", ParseReason);
  o.trigger_gender = RequireEnum(j, "trigger_gender", ParseGender);
  o.occupation_stereotype = RequireEnum(j, "occupation_stereotype", ParseGender);
  o.occupation_lemma = Field<std::string>(j, "occupation_lemma");
  o.frame_id = Field<std::string>(j, "frame_id");
  o.trigger_position = RequireEnum(j, "trigger_position", ParseTriggerPosition);
  o.trigger_kind = RequireEnum(j, "trigger_kind", ParseTriggerKind);
  o.cue_count = Field<int>(j, "cue_count");
  o.cue_attachment = Field<std::string>(j, "cue_attachment");
  return o;
}

void WriteOutcomes(std::ostream& out, const std::vector<Outcome>& outcomes) {
  for (const auto& o : outcomes) out << OutcomeToJson(o) << '\n';
}

std::vector<Outcome> ParseOutcomes(std::string_view text, std::string_view source) {
  std::vector<Outcome> out;
  std::set<std::string> seen;
  const auto lines = internal::Lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (internal::Trim(lines[i]).empty()) continue;
    try {
      out.push_back(OutcomeFromJson(lines[i]));
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedLine,
                  std::string(source) + ":" + std::to_string(i + 1) + ": " + e.what());
    }
    // Outcomes of several languages may share a record id.
    if (!seen.insert(out.back().lang + '\x1f' + out.back().id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  std::string(source) + ": duplicate outcome " + out.back().lang + "/" + out.back().id);
    }
  }
  return out;
}

std::vector<Outcome> ReadOutcomes(const std::filesystem::path& path) {
  return ParseOutcomes(internal::ReadFile(path), path.string());
}

}  // namespace genspect
