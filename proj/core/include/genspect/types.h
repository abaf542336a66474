#ifndef GENSPECT_TYPES_H_
#define GENSPECT_TYPES_H_

#include <optional>
#include <string_view>

namespace genspect {

// Referent gender fixed by a trigger, or the stereotype class of an
// occupation / indicative gender of a cue.
enum class Gender { kF, kM };

// Grammatical gender marked on a target-language token.
enum class GrammaticalGender { kMasc, kFem, kNeut, kNone };

enum class TriggerKind { kPronoun, kKinship, kPartner };
enum class PronounCase { kNom, kAcc, kPoss, kRefl };
enum class CueKind { kAdjective, kVerbSubj, kVerbObj };
enum class Attachment { kTrigger, kOccupation };
enum class TriggerPosition { kBefore, kAfter };

std::string_view ToString(Gender g);
std::string_view ToString(GrammaticalGender g);
std::string_view ToString(TriggerKind k);
std::string_view ToString(PronounCase c);
std::string_view ToString(CueKind k);
std::string_view ToString(Attachment a);
std::string_view ToString(TriggerPosition p);

std::optional<Gender> ParseGender(std::string_view s);
// Accepts Masc, Fem, Neut and "-" / None for kNone.
std::optional<GrammaticalGender> ParseGrammaticalGender(std::string_view s);
std::optional<TriggerKind> ParseTriggerKind(std::string_view s);
// Accepts the short forms used in data files (nom, acc, poss, refl).
std::optional<PronounCase> ParsePronounCase(std::string_view s);
std::optional<CueKind> ParseCueKind(std::string_view s);
std::optional<Attachment> ParseAttachment(std::string_view s);
std::optional<TriggerPosition> ParseTriggerPosition(std::string_view s);

inline Gender Opposite(Gender g) { return g == Gender::kF ? Gender::kM : Gender::kF; }

// Fixed mapping from referent gender to the grammatical gender a correct
// translation must carry.
inline GrammaticalGender ExpectedMarking(Gender g) {
  return g == Gender::kF ? GrammaticalGender::kFem : GrammaticalGender::kMasc;
}

}  // namespace genspect

#endif  // GENSPECT_TYPES_H_
