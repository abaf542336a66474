#include "genspect/lexicon.h"

#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "genspect/error.h"
#include "text_util.h"

namespace genspect {
namespace {

using internal::Lines;
using internal::Split;
using internal::Trim;

// Visits the data rows of a TSV file, skipping blanks and # comments.
template <typename Fn>
void ForEachRow(std::string_view file, std::string_view text, Fn&& fn) {
  const auto lines = Lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (Trim(line).empty() || line.front() == '#') continue;
    auto fields = Split(line, '\t');
    for (auto& f : fields) f = Trim(f);
    fn(fields, i + 1, [&](const std::string& why) {
      return Error(ErrorCode::kMalformedRow,
                   std::string(file) + ":" + std::to_string(i + 1) + ": " + why);
    });
  }
}

std::vector<Trigger> ParseTriggers(std::string_view text) {
  std::vector<Trigger> out;
  ForEachRow("triggers.tsv", text, [&](const auto& f, std::size_t, auto fail) {
    if (f.size() != 4) throw fail("expected 4 columns, got " + std::to_string(f.size()));
    Trigger t;
    t.lemma = std::string(f[0]);
    if (t.lemma.empty()) throw fail("empty lemma");
    auto gender = ParseGender(f[1]);
    if (!gender) throw fail("bad gender '" + std::string(f[1]) + "'");
    auto kind = ParseTriggerKind(f[2]);
    if (!kind) throw fail("bad kind '" + std::string(f[2]) + "'");
    t.gender = *gender;
    t.kind = *kind;
    if (f[3] != "-") {
      auto pcase = ParsePronounCase(f[3]);
      if (!pcase) throw fail("bad case '" + std::string(f[3]) + "'");
      t.pronoun_case = pcase;
    }
    if ((t.kind == TriggerKind::kPronoun) != t.pronoun_case.has_value()) {
      throw fail("case must be set exactly for pronouns");
    }
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<Occupation> ParseOccupations(std::string_view text) {
  std::vector<Occupation> out;
  ForEachRow("occupations.tsv", text, [&](const auto& f, std::size_t, auto fail) {
    if (f.size() != 2 && f.size() != 3) {
      throw fail("expected 2 or 3 columns, got " + std::to_string(f.size()));
    }
    Occupation o;
    o.lemma = std::string(f[0]);
    if (o.lemma.empty()) throw fail("empty lemma");
    auto stereotype = ParseGender(f[1]);
    if (!stereotype) throw fail("bad stereotype '" + std::string(f[1]) + "'");
    o.stereotype = *stereotype;
    o.surface = (f.size() == 3 && !f[2].empty()) ? std::string(f[2]) : o.lemma;
    out.push_back(std::move(o));
  });
  return out;
}

std::vector<ContextCue> ParseCues(std::string_view text) {
  std::vector<ContextCue> out;
  ForEachRow("cues.tsv", text, [&](const auto& f, std::size_t, auto fail) {
    if (f.size() != 3) throw fail("expected 3 columns, got " + std::to_string(f.size()));
    ContextCue c;
    c.lemma = std::string(f[0]);
    if (c.lemma.empty()) throw fail("empty lemma");
    auto kind = ParseCueKind(f[1]);
    if (!kind) throw fail("bad kind '" + std::string(f[1]) + "'");
    auto gender = ParseGender(f[2]);
    if (!gender) throw fail("bad indicative gender '" + std::string(f[2]) + "'");
    c.kind = *kind;
    c.indicative_gender = *gender;
    out.push_back(std::move(c));
  });
  return out;
}

std::string TriggerClassName(TriggerKind kind, std::optional<PronounCase> pcase) {
  std::string name(ToString(kind));
  if (pcase) name += "/" + std::string(ToString(*pcase));
  return name;
}

}  // namespace

Lexicon::Lexicon(std::vector<Trigger> triggers, std::vector<Occupation> occupations,
                 std::vector<ContextCue> cues)
    : triggers_(std::move(triggers)),
      occupations_(std::move(occupations)),
      cues_(std::move(cues)) {
  using ClassKey = std::pair<TriggerKind, std::optional<PronounCase>>;
  std::map<ClassKey, std::pair<int, int>> trigger_counts;
  std::set<std::tuple<TriggerKind, std::optional<PronounCase>, std::string>> seen_triggers;
  for (const auto& t : triggers_) {
    if ((t.kind == TriggerKind::kPronoun) != t.pronoun_case.has_value()) {
      throw Error(ErrorCode::kMalformedRow,
                  "trigger '" + t.lemma + "': case must be set exactly for pronouns");
    }
    if (!seen_triggers.emplace(t.kind, t.pronoun_case, t.lemma).second) {
      throw Error(ErrorCode::kMalformedRow, "duplicate trigger '" + t.lemma + "' in class " +
                                                TriggerClassName(t.kind, t.pronoun_case));
    }
    auto& c = trigger_counts[{t.kind, t.pronoun_case}];
    (t.gender == Gender::kF ? c.first : c.second)++;
  }
  for (const auto& [key, counts] : trigger_counts) {
    if (counts.first != counts.second) {
      throw Error(ErrorCode::kBalanceViolation,
                  "triggers " + TriggerClassName(key.first, key.second) +
                      ": F=" + std::to_string(counts.first) +
                      " M=" + std::to_string(counts.second));
    }
  }

  int occ_f = 0;
  int occ_m = 0;
  std::set<std::string> seen_occ;
  for (const auto& o : occupations_) {
    if (!seen_occ.insert(o.lemma).second) {
      throw Error(ErrorCode::kMalformedRow, "duplicate occupation '" + o.lemma + "'");
    }
    (o.stereotype == Gender::kF ? occ_f : occ_m)++;
  }
  if (occ_f != occ_m) {
    throw Error(ErrorCode::kBalanceViolation, "occupations: F=" + std::to_string(occ_f) +
                                                  " M=" + std::to_string(occ_m));
  }

  std::set<std::pair<CueKind, std::string>> seen_cues;
  for (const auto& c : cues_) {
    if (!seen_cues.emplace(c.kind, c.lemma).second) {
      throw Error(ErrorCode::kMalformedRow, "duplicate cue '" + c.lemma + "' of kind " +
                                                std::string(ToString(c.kind)));
    }
  }
}

const Occupation* Lexicon::FindOccupation(std::string_view lemma) const {
  for (const auto& o : occupations_) {
    if (o.lemma == lemma) return &o;
  }
  return nullptr;
}

Lexicon ParseLexicon(std::string_view triggers_tsv, std::string_view occupations_tsv,
                     std::string_view cues_tsv) {
  return Lexicon(ParseTriggers(triggers_tsv), ParseOccupations(occupations_tsv),
                 ParseCues(cues_tsv));
}

Lexicon LoadLexicon(const std::filesystem::path& dir) {
  const auto triggers = internal::ReadFile(dir / "triggers.tsv");
  const auto occupations = internal::ReadFile(dir / "occupations.tsv");
  const auto cues = internal::ReadFile(dir / "cues.tsv");
  return ParseLexicon(triggers, occupations, cues);
}

Gender StereotypeOf(const Lexicon& lexicon, std::string_view occupation_lemma) {
  const auto* occ = lexicon.FindOccupation(occupation_lemma);
  if (occ == nullptr) {
    throw Error(ErrorCode::kUnknownLemma,
                "unknown occupation '" + std::string(occupation_lemma) + "'");
  }
  return occ->stereotype;
}

}  // namespace genspect
