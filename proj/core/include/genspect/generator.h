#ifndef GENSPECT_GENERATOR_H_
#define GENSPECT_GENERATOR_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genspect/grammar.h"
#include "genspect/lexicon.h"
#include "genspect/types.h"

namespace genspect {

struct CueInfo {
  std::string lemma;
  CueKind kind = CueKind::kAdjective;
  Gender indicative_gender = Gender::kF;
  Attachment attachment = Attachment::kTrigger;
  std::size_t token_index = 0;

  bool operator==(const CueInfo&) const = default;
};

struct SentenceRecord {
  std::string id;
  std::vector<std::string> tokens;
  std::string text;
  std::size_t occupation_index = 0;
  std::string occupation_lemma;
  Gender occupation_stereotype = Gender::kF;
  std::string trigger_lemma;
  Gender trigger_gender = Gender::kF;
  TriggerKind trigger_kind = TriggerKind::kPronoun;
  TriggerPosition trigger_position = TriggerPosition::kBefore;
  std::vector<CueInfo> cues;
  std::string frame_id;
  // Always equal to trigger_gender.
  Gender expected_gender = Gender::kF;
  // Every choice point of the derivation as (slot, value), in frame order.
  // Enough to rebuild the sentence with Realize().
  std::vector<std::pair<std::string, std::string>> bindings;

  bool operator==(const SentenceRecord&) const = default;
};

struct Quadrant {
  Gender trigger_gender = Gender::kM;
  Gender occupation_stereotype = Gender::kM;

  // "MM", "MF", "FM" or "FF": trigger gender first.
  std::string Name() const;
  static std::optional<Quadrant> Parse(std::string_view name);
  auto operator<=>(const Quadrant&) const = default;
};

inline constexpr std::array<Quadrant, 4> kQuadrants = {
    Quadrant{Gender::kM, Gender::kM}, Quadrant{Gender::kM, Gender::kF},
    Quadrant{Gender::kF, Gender::kM}, Quadrant{Gender::kF, Gender::kF}};

inline Quadrant QuadrantOf(const SentenceRecord& r) {
  return Quadrant{r.trigger_gender, r.occupation_stereotype};
}

// Joins with single spaces and upper-cases the first character.
// Throws Error(kEmptyTokens) on an empty list.
std::string Detokenize(const std::vector<std::string>& tokens);

// First 16 hex digits of SHA-256 over frame_id, 0x1F, then the binding
// values joined by 0x1F.
std::string RecordId(std::string_view frame_id,
                     const std::vector<std::pair<std::string, std::string>>& bindings);

SentenceRecord MakeRecord(const Grammar& grammar, const Lexicon& lexicon, const Derivation& d);

struct GenerateOptions {
  std::optional<std::set<std::string>> frames;
  int cue_count = 0;
  std::optional<std::size_t> per_quadrant_cap;
  std::uint64_t seed = 0;
};

// Builds a quadrant-balanced corpus. Each frame is first balanced on its
// own (every quadrant down-sampled to the frame's smallest quadrant), so
// every frame that can produce all four quadrants keeps records in each.
// With a cap, each quadrant is then sampled down to min(cap, available).
// Sampling is seeded and uniform without replacement; records keep
// enumeration order. Throws Error(kEmptyQuadrant) when a quadrant is empty.
std::vector<SentenceRecord> GenerateCorpus(const Grammar& grammar, const Lexicon& lexicon,
                                           const GenerateOptions& options);

inline constexpr std::string_view kCorpusSchema = "genspect-corpus/1";

struct CorpusHeader {
  std::string schema{kCorpusSchema};
  std::string grammar_hash;
  std::string lexicon_hash;
  std::uint64_t seed = 0;
  std::string rng;
  int cue_count = 0;
  std::optional<std::size_t> per_quadrant_cap;
  std::optional<std::vector<std::string>> frames;

  bool operator==(const CorpusHeader&) const = default;
};

struct Corpus {
  CorpusHeader header;
  std::vector<SentenceRecord> records;
};

std::string RecordToJson(const SentenceRecord& record);
// Throws Error(kMalformedLine) with the reason when the JSON does not
// describe a record.
SentenceRecord RecordFromJson(std::string_view line);

void WriteCorpus(std::ostream& out, const CorpusHeader& header,
                 const std::vector<SentenceRecord>& records);
Corpus ReadCorpusText(std::string_view text, std::string_view source = "corpus");
Corpus ReadCorpus(const std::filesystem::path& path);

}  // namespace genspect

#endif  // GENSPECT_GENERATOR_H_
