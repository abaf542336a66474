#include "genspect/generator.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "genspect/error.h"
#include "genspect/hash.h"
#include "genspect/sampling.h"

namespace genspect {

std::string Quadrant::Name() const {
  return std::string(ToString(trigger_gender)) + std::string(ToString(occupation_stereotype));
}

std::optional<Quadrant> Quadrant::Parse(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  const auto t = ParseGender(name.substr(0, 1));
  const auto o = ParseGender(name.substr(1, 1));
  if (!t || !o) return std::nullopt;
  return Quadrant{*t, *o};
}

std::string Detokenize(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw Error(ErrorCode::kEmptyTokens, "cannot detokenize an empty token list");
  std::string text;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) text += ' ';
    text += tokens[i];
  }
  if (!text.empty()) text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  return text;
}

std::string RecordId(std::string_view frame_id,
                     const std::vector<std::pair<std::string, std::string>>& bindings) {
  std::string input(frame_id);
  input += '\x1f';
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    if (i > 0) input += '\x1f';
    input += bindings[i].second;
  }
  return Sha256Hex(input).substr(0, 16);
}

namespace {

struct FrameView {
  const Frame* frame = nullptr;
  const SlotBinding* occ = nullptr;
  const SlotBinding* trigger = nullptr;
};

FrameView View(const Grammar& grammar, const Derivation& d) {
  FrameView v;
  v.frame = grammar.FindFrame(d.frame_id);
  if (v.frame == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "derivation of unknown frame '" + d.frame_id + "'");
  }
  for (const auto& b : d.bindings) {
    if (b.frame_slot == v.frame->occ_slot) v.occ = &b;
    if (b.frame_slot == v.frame->primary_trigger) v.trigger = &b;
  }
  if (v.occ == nullptr || v.trigger == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "derivation of '" + d.frame_id + "' lacks OCC or trigger");
  }
  return v;
}

Quadrant QuadrantOfDerivation(const Grammar& grammar, const Lexicon& lexicon, const Derivation& d) {
  const FrameView v = View(grammar, d);
  return Quadrant{lexicon.triggers()[v.trigger->entry].gender,
                  lexicon.occupations()[v.occ->entry].stereotype};
}

std::size_t QuadrantIndex(const Quadrant& q) {
  return static_cast<std::size_t>(std::find(kQuadrants.begin(), kQuadrants.end(), q) -
                                  kQuadrants.begin());
}

}  // namespace

SentenceRecord MakeRecord(const Grammar& grammar, const Lexicon& lexicon, const Derivation& d) {
  const FrameView v = View(grammar, d);
  const Trigger& trigger = lexicon.triggers()[v.trigger->entry];
  const Occupation& occ = lexicon.occupations()[v.occ->entry];

  SentenceRecord r;
  r.tokens = d.tokens;
  r.text = Detokenize(d.tokens);
  r.occupation_index = v.occ->token_index;
  r.occupation_lemma = occ.lemma;
  r.occupation_stereotype = occ.stereotype;
  r.trigger_lemma = trigger.lemma;
  r.trigger_gender = trigger.gender;
  r.trigger_kind = trigger.kind;
  r.trigger_position = v.frame->trigger_position;
  r.frame_id = d.frame_id;
  r.expected_gender = trigger.gender;
  for (const auto& b : d.bindings) {
    r.bindings.emplace_back(b.slot, b.value);
    if (!b.frame_slot) continue;
    const Slot& slot = v.frame->slots[*b.frame_slot];
    if (!IsCueSlot(slot.slot_class)) continue;
    const ContextCue& cue = lexicon.cues()[b.entry];
    r.cues.push_back(CueInfo{cue.lemma, cue.kind, cue.indicative_gender,
                             slot.features.cue_attachment.value_or(Attachment::kTrigger),
                             b.token_index});
  }
  r.id = RecordId(r.frame_id, r.bindings);
  return r;
}

std::vector<SentenceRecord> GenerateCorpus(const Grammar& grammar, const Lexicon& lexicon,
                                           const GenerateOptions& options) {
  if (options.per_quadrant_cap && *options.per_quadrant_cap < 1) {
    throw Error(ErrorCode::kInvalidArgument, "per-quadrant cap must be at least 1");
  }
  EnumerateOptions enum_options;
  enum_options.frames = options.frames;
  enum_options.cue_count = options.cue_count;

  // Pass 1: count derivations per (frame, quadrant).
  std::map<std::string, std::array<std::size_t, 4>> counts;
  std::vector<std::string> frame_order;
  Enumerate(grammar, lexicon, enum_options, [&](const Derivation& d) {
    auto [it, inserted] = counts.try_emplace(d.frame_id, std::array<std::size_t, 4>{});
    if (inserted) frame_order.push_back(d.frame_id);
    ++it->second[QuadrantIndex(QuadrantOfDerivation(grammar, lexicon, d))];
  });

  std::array<std::size_t, 4> raw_totals{};
  for (const auto& [id, c] : counts) {
    for (std::size_t q = 0; q < 4; ++q) raw_totals[q] += c[q];
  }
  for (std::size_t q = 0; q < 4; ++q) {
    if (raw_totals[q] == 0) {
      throw Error(ErrorCode::kEmptyQuadrant,
                  "quadrant " + kQuadrants[q].Name() + " is empty for the selected frames");
    }
  }

  // Per-frame balance: keep min-quadrant-count derivations of each quadrant.
  Sampler sampler(options.seed);
  std::map<std::string, std::array<std::vector<bool>, 4>> keep;
  std::array<std::size_t, 4> balanced_total{};
  for (const auto& id : frame_order) {
    const auto& c = counts[id];
    const std::size_t m = *std::min_element(c.begin(), c.end());
    auto& k = keep[id];
    for (std::size_t q = 0; q < 4; ++q) {
      k[q].assign(c[q], false);
      for (std::size_t idx : sampler.Choose(c[q], m)) k[q][idx] = true;
      balanced_total[q] += m;
    }
  }
  if (balanced_total[0] == 0) {
    throw Error(ErrorCode::kEmptyQuadrant, "no selected frame yields all four quadrants");
  }

  if (options.per_quadrant_cap && *options.per_quadrant_cap < balanced_total[0]) {
    for (std::size_t q = 0; q < 4; ++q) {
      std::vector<std::pair<std::string, std::size_t>> kept;
      for (const auto& id : frame_order) {
        const auto& flags = keep[id][q];
        for (std::size_t i = 0; i < flags.size(); ++i) {
          if (flags[i]) kept.emplace_back(id, i);
        }
      }
      std::vector<bool> survive(kept.size(), false);
      for (std::size_t idx : sampler.Choose(kept.size(), *options.per_quadrant_cap)) survive[idx] = true;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (!survive[i]) keep[kept[i].first][q][kept[i].second] = false;
      }
    }
  }

  // Pass 2: materialise the kept derivations in enumeration order.
  std::vector<SentenceRecord> out;
  std::map<std::string, std::array<std::size_t, 4>> ordinal;
  Enumerate(grammar, lexicon, enum_options, [&](const Derivation& d) {
    const std::size_t q = QuadrantIndex(QuadrantOfDerivation(grammar, lexicon, d));
    const std::size_t i = ordinal[d.frame_id][q]++;
    if (keep[d.frame_id][q][i]) out.push_back(MakeRecord(grammar, lexicon, d));
  });
  return out;
}

}  // namespace genspect
