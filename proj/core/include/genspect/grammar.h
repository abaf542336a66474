#ifndef GENSPECT_GRAMMAR_H_
#define GENSPECT_GRAMMAR_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genspect/lexicon.h"
#include "genspect/types.h"

namespace genspect {

// Agreement features carried by slots and lexical entries. An unset field
// unifies with anything.
struct FeatureBundle {
  std::optional<Gender> gender;
  std::optional<TriggerKind> trigger_kind;
  std::optional<PronounCase> pronoun_case;
  std::optional<Attachment> cue_attachment;

  bool operator==(const FeatureBundle&) const = default;
};

// Merge of two bundles, or nullopt when a shared key has conflicting values.
std::optional<FeatureBundle> Unify(const FeatureBundle& a, const FeatureBundle& b);

enum class SlotClass { kTrigger, kOcc, kAdjCue, kVSubjCue, kVObjCue };
enum class VerbForm { kBase, kPast };

std::string_view ToString(SlotClass c);
bool IsCueSlot(SlotClass c);

// A lexical slot of a frame, e.g. <TRIGGER:pron case=poss>.
struct Slot {
  std::string name;
  SlotClass slot_class = SlotClass::kOcc;
  // Requirements a lexical entry must unify with. For cue slots the
  // cue_attachment field records where the cue attaches.
  FeatureBundle features;
  VerbForm verb_form = VerbForm::kBase;
};

enum class SymbolKind {
  kLiteral,      // bare token
  kArticle,      // a/an, resolved against the following token
  kNonterminal,  // reference to a rule
  kSlot,         // lexical slot, see Frame::slots
};

struct Symbol {
  SymbolKind kind = SymbolKind::kLiteral;
  // Literal text or nonterminal name.
  std::string text;
  // Index into Frame::slots when kind == kSlot.
  std::size_t slot = 0;
};

// `constraint <frame> <lhs>.gender == <rhs>.gender`
struct GenderEquation {
  std::string lhs;
  std::string rhs;
};

struct Frame {
  std::string id;
  std::vector<Symbol> rhs;
  std::vector<Slot> slots;
  std::vector<GenderEquation> constraints;
  TriggerPosition trigger_position = TriggerPosition::kBefore;
  // Slot index of the trigger whose gender defines the expected gender.
  std::size_t primary_trigger = 0;
  std::size_t occ_slot = 0;
  // Last comment line preceding the frame in the grammar file.
  std::string unambiguity_note;

  // Number of ADJ/VSUBJ/VOBJ slots.
  int cue_count() const;
  // The id up to the first '/': "F-REFL/vobj" belongs to family "F-REFL".
  std::string_view family() const;
  const Slot* FindSlot(std::string_view name) const;
};

class Grammar {
 public:
  using Alternative = std::vector<Symbol>;

  Grammar(std::vector<Frame> frames, std::map<std::string, std::vector<Alternative>> rules,
          std::map<std::string, std::string> irregular_past, std::size_t depth_bound,
          std::string digest);

  // Sorted by id.
  const std::vector<Frame>& frames() const { return frames_; }
  const std::map<std::string, std::vector<Alternative>>& rules() const { return rules_; }
  const Frame* FindFrame(std::string_view id) const;

  // Every token sequence the nonterminal derives, in rule order. Articles
  // stay as the literal "a/an" marker.
  std::vector<std::vector<std::string>> Expansions(const std::string& nonterminal) const;

  std::string PastTense(std::string_view verb) const;

  // Longest chain of nested symbols from a frame down to a literal.
  std::size_t depth_bound() const { return depth_bound_; }
  // SHA-256 of the grammar source text.
  const std::string& digest() const { return digest_; }

 private:
  std::vector<Frame> frames_;
  std::map<std::string, std::vector<Alternative>> rules_;
  std::map<std::string, std::string> irregular_past_;
  std::size_t depth_bound_ = 0;
  std::string digest_;
};

Grammar ParseGrammar(const std::filesystem::path& path);
Grammar ParseGrammarText(std::string_view text);

// One bound choice point of a derivation: a lexical slot or a nonterminal
// occurrence (named "<NAME>#<k>" for the k-th nonterminal in the frame).
struct SlotBinding {
  std::string slot;
  // Bound lemma, or the chosen expansion joined by single spaces.
  std::string value;
  std::size_t token_index = 0;
  // Index into the lexicon list of the slot class (triggers, occupations or
  // cues), or the expansion index for nonterminals.
  std::size_t entry = 0;
  // Index into Frame::slots; empty for nonterminals.
  std::optional<std::size_t> frame_slot;

  bool operator==(const SlotBinding&) const = default;
};

struct Derivation {
  std::string frame_id;
  std::vector<SlotBinding> bindings;
  std::vector<std::string> tokens;

  const SlotBinding* Find(std::string_view slot) const;
  bool operator==(const Derivation&) const = default;
};

struct EnumerateOptions {
  // nullopt selects every frame; otherwise a frame is selected when its id
  // or its family is in the set. An empty set selects nothing.
  std::optional<std::set<std::string>> frames;
  // Only frames with exactly this many cue slots are enumerated (0, 1 or 2).
  int cue_count = 0;
};

bool FrameSelected(const Frame& frame, const EnumerateOptions& options);

// Streams every licensed derivation in deterministic order: frames by id,
// then an odometer over choice points left to right, each running through
// its candidates in lexicon-file order. Throws Error(kEmptySlotClass) when a
// selected frame has a slot no lexicon entry can fill.
void Enumerate(const Grammar& grammar, const Lexicon& lexicon, const EnumerateOptions& options,
               const std::function<void(const Derivation&)>& sink);

std::vector<Derivation> EnumerateAll(const Grammar& grammar, const Lexicon& lexicon,
                                     const EnumerateOptions& options);

// Rebuilds the derivation of `frame_id` for explicit (slot, value) bindings.
// Every choice point of the frame must be bound.
Derivation Realize(const Grammar& grammar, const Lexicon& lexicon, std::string_view frame_id,
                   const std::vector<std::pair<std::string, std::string>>& bindings);

}  // namespace genspect

#endif  // GENSPECT_GRAMMAR_H_
