#ifndef GENSPECT_LEXICON_H_
#define GENSPECT_LEXICON_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genspect/types.h"

namespace genspect {

struct Trigger {
  std::string lemma;
  Gender gender = Gender::kF;
  TriggerKind kind = TriggerKind::kPronoun;
  // Present exactly when kind == kPronoun.
  std::optional<PronounCase> pronoun_case;

  bool operator==(const Trigger&) const = default;
};

struct Occupation {
  std::string lemma;
  Gender stereotype = Gender::kF;
  // Rendered form in generated text ("CEO" for the key "ceo").
  std::string surface;

  bool operator==(const Occupation&) const = default;
};

struct ContextCue {
  std::string lemma;
  CueKind kind = CueKind::kAdjective;
  Gender indicative_gender = Gender::kF;

  bool operator==(const ContextCue&) const = default;
};

// Gender-balanced word lists. Immutable once constructed; the constructor
// enforces uniqueness and balance and throws genspect::Error otherwise.
class Lexicon {
 public:
  Lexicon(std::vector<Trigger> triggers, std::vector<Occupation> occupations,
          std::vector<ContextCue> cues);

  const std::vector<Trigger>& triggers() const { return triggers_; }
  const std::vector<Occupation>& occupations() const { return occupations_; }
  const std::vector<ContextCue>& cues() const { return cues_; }

  const Occupation* FindOccupation(std::string_view lemma) const;

  bool operator==(const Lexicon&) const = default;

 private:
  std::vector<Trigger> triggers_;
  std::vector<Occupation> occupations_;
  std::vector<ContextCue> cues_;
};

// Reads triggers.tsv, occupations.tsv and cues.tsv from `dir`.
Lexicon LoadLexicon(const std::filesystem::path& dir);

// Same as LoadLexicon but over in-memory file contents.
Lexicon ParseLexicon(std::string_view triggers_tsv, std::string_view occupations_tsv,
                     std::string_view cues_tsv);

// Throws Error(kUnknownLemma) for lemmas not in the lexicon.
Gender StereotypeOf(const Lexicon& lexicon, std::string_view occupation_lemma);

}  // namespace genspect

#endif  // GENSPECT_LEXICON_H_
