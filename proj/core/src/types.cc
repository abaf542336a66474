#include "genspect/types.h"

namespace genspect {

std::string_view ToString(Gender g) { return g == Gender::kF ? "F" : "M"; }

std::string_view ToString(GrammaticalGender g) {
  switch (g) {
    case GrammaticalGender::kMasc: return "Masc";
    case GrammaticalGender::kFem: return "Fem";
    case GrammaticalGender::kNeut: return "Neut";
    case GrammaticalGender::kNone: return "None";
  }
  return "None";
}

std::string_view ToString(TriggerKind k) {
  switch (k) {
    case TriggerKind::kPronoun: return "pronoun";
    case TriggerKind::kKinship: return "kinship";
    case TriggerKind::kPartner: return "partner";
  }
  return "pronoun";
}

std::string_view ToString(PronounCase c) {
  switch (c) {
    case PronounCase::kNom: return "nom";
    case PronounCase::kAcc: return "acc";
    case PronounCase::kPoss: return "poss";
    case PronounCase::kRefl: return "refl";
  }
  return "nom";
}

std::string_view ToString(CueKind k) {
  switch (k) {
    case CueKind::kAdjective: return "adjective";
    case CueKind::kVerbSubj: return "verb_subj";
    case CueKind::kVerbObj: return "verb_obj";
  }
  return "adjective";
}

std::string_view ToString(Attachment a) {
  return a == Attachment::kTrigger ? "trigger" : "occupation";
}

std::string_view ToString(TriggerPosition p) {
  return p == TriggerPosition::kBefore ? "before" : "after";
}

std::optional<Gender> ParseGender(std::string_view s) {
  if (s == "F") return Gender::kF;
  if (s == "M") return Gender::kM;
  return std::nullopt;
}

std::optional<GrammaticalGender> ParseGrammaticalGender(std::string_view s) {
  if (s == "Masc") return GrammaticalGender::kMasc;
  if (s == "Fem") return GrammaticalGender::kFem;
  if (s == "Neut") return GrammaticalGender::kNeut;
  if (s == "-" || s == "None") return GrammaticalGender::kNone;
  return std::nullopt;
}

std::optional<TriggerKind> ParseTriggerKind(std::string_view s) {
  if (s == "pronoun") return TriggerKind::kPronoun;
  if (s == "kinship") return TriggerKind::kKinship;
  if (s == "partner") return TriggerKind::kPartner;
  return std::nullopt;
}

std::optional<PronounCase> ParsePronounCase(std::string_view s) {
  if (s == "nom" || s == "nominative") return PronounCase::kNom;
  if (s == "acc" || s == "accusative") return PronounCase::kAcc;
  if (s == "poss" || s == "possessive") return PronounCase::kPoss;
  if (s == "refl" || s == "reflexive") return PronounCase::kRefl;
  return std::nullopt;
}

std::optional<CueKind> ParseCueKind(std::string_view s) {
  if (s == "adjective") return CueKind::kAdjective;
  if (s == "verb_subj") return CueKind::kVerbSubj;
  if (s == "verb_obj") return CueKind::kVerbObj;
  return std::nullopt;
}

std::optional<Attachment> ParseAttachment(std::string_view s) {
  if (s == "trigger") return Attachment::kTrigger;
  if (s == "occupation") return Attachment::kOccupation;
  return std::nullopt;
}

std::optional<TriggerPosition> ParseTriggerPosition(std::string_view s) {
  if (s == "before") return TriggerPosition::kBefore;
  if (s == "after") return TriggerPosition::kAfter;
  return std::nullopt;
}

}  // namespace genspect
