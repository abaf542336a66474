#ifndef GENSPECT_ANNOTATION_H_
#define GENSPECT_ANNOTATION_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genspect/generator.h"
#include "genspect/types.h"

namespace genspect {

struct Translation {
  std::string id;
  std::string lang;
  std::vector<std::string> tokens;

  bool operator==(const Translation&) const = default;
};

struct AlignmentSet {
  std::string id;
  // (source index, target index), 0-based.
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  bool operator==(const AlignmentSet&) const = default;
};

struct TokenTag {
  std::string form;
  GrammaticalGender gender = GrammaticalGender::kNone;
  std::optional<std::string> pos;

  bool operator==(const TokenTag&) const = default;
};

struct MorphTags {
  std::string id;
  std::vector<TokenTag> per_token;

  bool operator==(const MorphTags&) const = default;
};

struct GenderDictionary {
  std::string lang;
  std::map<std::string, GrammaticalGender> form_to_gender;
  std::vector<std::pair<std::string, GrammaticalGender>> suffix_rules;
};

// Occupation lemma to the target forms that translate it.
struct Bidict {
  std::string lang;
  std::map<std::string, std::set<std::string>> forms;
};

using TranslationMap = std::map<std::string, Translation>;
using AlignmentMap = std::map<std::string, AlignmentSet>;
using MorphMap = std::map<std::string, MorphTags>;

// Readers throw Error(kMalformedLine) with "source:line: reason", and
// Error(kDuplicateId) when an id repeats.
TranslationMap ParseTranslations(std::string_view text, std::string_view source = "translations");
TranslationMap ReadTranslations(const std::filesystem::path& path);
// Writes in map (id) order.
void WriteTranslations(std::ostream& out, const TranslationMap& translations);

// `id<TAB>i-j i-j ...`; an empty pair field is an empty set.
AlignmentMap ParseAlignments(std::string_view text, std::string_view source = "alignments");
AlignmentMap ReadAlignments(const std::filesystem::path& path);
void WriteAlignments(std::ostream& out, const AlignmentMap& alignments);

// TSV rows `id token_index form gender pos` after a '#' header line. Rows of
// one id must be contiguous with indices 0, 1, 2, ...
MorphMap ParseMorph(std::string_view text, std::string_view source = "morph");
MorphMap ReadMorph(const std::filesystem::path& path);
void WriteMorph(std::ostream& out, const MorphMap& tags);

// Rows `form<TAB>Masc|Fem`, `suffix:<sfx><TAB>Masc|Fem` and one
// `lang:<code>` line. '#' starts a comment line.
GenderDictionary ParseGenderDictionary(std::string_view text, std::string_view source = "dictionary");
GenderDictionary LoadGenderDictionary(const std::filesystem::path& path);

// Rows `lemma<TAB>form` and one `lang:<code>` line.
Bidict ParseBidict(std::string_view text, std::string_view source = "bidict");
Bidict LoadBidict(const std::filesystem::path& path);

// Gender of one form: exact entry, else the first suffix rule that leaves a
// nonempty stem, else kNone.
GrammaticalGender LookupGender(const GenderDictionary& dict, std::string_view form);

// One tag per token. Throws Error(kLanguageMismatch).
MorphTags DictTag(const GenderDictionary& dict, const Translation& translation);

// {(occupation_index, j)} for the smallest j whose token is a known form of
// the occupation lemma, or an empty set.
AlignmentSet DictAlign(const Bidict& bidict, const SentenceRecord& record,
                       const Translation& translation);

}  // namespace genspect

#endif  // GENSPECT_ANNOTATION_H_
