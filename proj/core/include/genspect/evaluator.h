#ifndef GENSPECT_EVALUATOR_H_
#define GENSPECT_EVALUATOR_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genspect/annotation.h"
#include "genspect/generator.h"
#include "genspect/types.h"

namespace genspect {

enum class Verdict { kCorrect, kWrong, kInconclusive };

enum class Reason {
  kOk,
  kNoAlignment,
  kNoGenderTag,
  kConflictingTags,
  kMissingTranslation,
  kMissingTags,
  kIndexOutOfRange,
};

std::string_view ToString(Verdict v);
std::string_view ToString(Reason r);
std::optional<Verdict> ParseVerdict(std::string_view s);
std::optional<Reason> ParseReason(std::string_view s);

struct Outcome {
  std::string id;
  std::string lang;
  Verdict verdict = Verdict::kInconclusive;
  // kMasc, kFem or kNone.
  GrammaticalGender resolved_gender = GrammaticalGender::kNone;
  Reason reason = Reason::kOk;

  // Copied from the record so reports need no join.
  Gender trigger_gender = Gender::kF;
  Gender occupation_stereotype = Gender::kF;
  std::string occupation_lemma;
  std::string frame_id;
  TriggerPosition trigger_position = TriggerPosition::kBefore;
  TriggerKind trigger_kind = TriggerKind::kPronoun;
  int cue_count = 0;
  // "none", "trigger", "occupation" or "mixed".
  std::string cue_attachment = "none";

  bool operator==(const Outcome&) const = default;
};

// Summary of where a record's cues attach, as stored in Outcome.
std::string CueAttachmentSummary(const SentenceRecord& record);

struct Resolution {
  GrammaticalGender gender = GrammaticalGender::kNone;
  Reason reason = Reason::kOk;

  bool operator==(const Resolution&) const = default;
};

// Gender of the target tokens aligned to the occupation. Among aligned
// tokens with a Masc/Fem tag, NOUN-tagged ones are preferred; disagreement
// gives kConflictingTags. Throws Error(kIdMismatch) when ids differ and
// Error(kLengthMismatch) when tags and tokens differ in length.
Resolution ResolveTargetGender(const SentenceRecord& record, const Translation& translation,
                               const AlignmentSet& alignment, const MorphTags& tags);

// Never throws on degraded input: every failure is an Inconclusive verdict
// with a reason. `default_lang` labels outcomes without a translation.
Outcome Classify(const SentenceRecord& record, const Translation* translation,
                 const AlignmentSet* alignment, const MorphTags* tags,
                 std::string_view default_lang = "");

struct EvaluationInputs {
  const TranslationMap* translations = nullptr;
  const AlignmentMap* alignments = nullptr;
  const MorphMap* tags = nullptr;
  std::string default_lang;
};

// One outcome per record, in record order, for any `jobs` >= 1.
std::vector<Outcome> EvaluateCorpus(const std::vector<SentenceRecord>& records,
                                    const EvaluationInputs& inputs, std::size_t jobs = 1);

std::string OutcomeToJson(const Outcome& outcome);
Outcome OutcomeFromJson(std::string_view line);
void WriteOutcomes(std::ostream& out, const std::vector<Outcome>& outcomes);
std::vector<Outcome> ParseOutcomes(std::string_view text, std::string_view source = "outcomes");
std::vector<Outcome> ReadOutcomes(const std::filesystem::path& path);

}  // namespace genspect

#endif  // GENSPECT_EVALUATOR_H_
