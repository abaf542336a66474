#include "genspect/annotation.h"

#include <nlohmann/json.hpp>

#include <ostream>

#include "genspect/error.h"
#include "json_util.h"
#include "text_util.h"

namespace genspect {
namespace {

[[noreturn]] void Malformed(std::string_view source, std::size_t line, const std::string& why) {
  throw Error(ErrorCode::kMalformedLine,
              std::string(source) + ":" + std::to_string(line) + ": " + why);
}

bool Skippable(std::string_view line) {
  const auto t = internal::Trim(line);
  return t.empty() || t.front() == '#';
}

std::string_view GenderCell(GrammaticalGender g) {
  return g == GrammaticalGender::kNone ? std::string_view("-") : ToString(g);
}

}  // namespace

TranslationMap ParseTranslations(std::string_view text, std::string_view source) {
  TranslationMap out;
  const auto lines = internal::Lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (internal::Trim(lines[i]).empty()) continue;
    Translation t;
    try {
      const auto j = internal::ParseJsonObject(lines[i]);
      t.id = internal::Field<std::string>(j, "id");
      t.lang = internal::Field<std::string>(j, "lang");
      t.tokens = internal::Field<std::vector<std::string>>(j, "tokens");
    } catch (const Error& e) {
      Malformed(source, i + 1, e.what());
    }
    if (t.id.empty()) Malformed(source, i + 1, "empty id");
    if (t.tokens.empty()) Malformed(source, i + 1, "translation " + t.id + " has no tokens");
    const std::string id = t.id;
    if (!out.emplace(id, std::move(t)).second) {
      throw Error(ErrorCode::kDuplicateId, std::string(source) + ": duplicate id " + id);
    }
  }
  return out;
}

TranslationMap ReadTranslations(const std::filesystem::path& path) {
  return ParseTranslations(internal::ReadFile(path), path.string());
}

void WriteTranslations(std::ostream& out, const TranslationMap& translations) {
  for (const auto& [id, t] : translations) {
    nlohmann::ordered_json j;
    j["id"] = t.id;
    j["lang"] = t.lang;
    j["tokens"] = t.tokens;
    out << j.dump() << '\n';
  }
}

AlignmentMap ParseAlignments(std::string_view text, std::string_view source) {
  AlignmentMap out;
  const auto lines = internal::Lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (Skippable(lines[i])) continue;
    const auto tab = lines[i].find('\t');
    AlignmentSet a;
    a.id = std::string(internal::Trim(std::string_view(lines[i]).substr(0, tab)));
    if (a.id.empty()) Malformed(source, i + 1, "empty id");
    if (a.id.find_first_of(" \t") != std::string::npos) Malformed(source, i + 1, "id contains whitespace");
    if (tab != std::string::npos) {
      for (auto pair : internal::SplitWhitespace(std::string_view(lines[i]).substr(tab + 1))) {
        const auto dash = pair.find('-');
        std::size_t s = 0;
        std::size_t t = 0;
        if (dash == std::string_view::npos || !internal::ParseSize(pair.substr(0, dash), s) ||
            !internal::ParseSize(pair.substr(dash + 1), t)) {
          Malformed(source, i + 1, "bad alignment pair '" + std::string(pair) + "'");
        }
        a.pairs.emplace(s, t);
      }
    }
    const std::string id = a.id;
    if (!out.emplace(id, std::move(a)).second) {
      throw Error(ErrorCode::kDuplicateId, std::string(source) + ": duplicate id " + id);
    }
  }
  return out;
}

AlignmentMap ReadAlignments(const std::filesystem::path& path) {
  return ParseAlignments(internal::ReadFile(path), path.string());
}

void WriteAlignments(std::ostream& out, const AlignmentMap& alignments) {
  for (const auto& [id, a] : alignments) {
    out << id << '\t';
    bool first = true;
    for (const auto& [s, t] : a.pairs) {
      if (!first) out << ' ';
      first = false;
      out << s << '-' << t;
    }
    out << '\n';
  }
}

MorphMap ParseMorph(std::string_view text, std::string_view source) {
  MorphMap out;
  const auto lines = internal::Lines(text);
  std::string current;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (Skippable(lines[i])) continue;
    const auto cells = internal::Split(lines[i], '\t');
    if (cells.size() != 5) {
      Malformed(source, i + 1, "expected 5 tab-separated columns, got " + std::to_string(cells.size()));
    }
    const std::string id(cells[0]);
    if (id.empty()) Malformed(source, i + 1, "empty id");
    std::size_t index = 0;
    if (!internal::ParseSize(cells[1], index)) {
      Malformed(source, i + 1, "bad token index '" + std::string(cells[1]) + "'");
    }
    const auto gender = ParseGrammaticalGender(cells[3]);
    if (!gender) Malformed(source, i + 1, "bad gender '" + std::string(cells[3]) + "'");

    if (id != current) {
      if (out.count(id)) {
        throw Error(ErrorCode::kDuplicateId,
                    std::string(source) + ":" + std::to_string(i + 1) + ": rows of id " + id +
                        " are not contiguous");
      }
      out[id].id = id;
      current = id;
    }
    auto& tags = out[id];
    if (index != tags.per_token.size()) {
      Malformed(source, i + 1,
                "token index " + std::to_string(index) + ", expected " +
                    std::to_string(tags.per_token.size()));
    }
    TokenTag tag;
    tag.form = std::string(cells[2]);
    tag.gender = *gender;
    if (cells[4] != "-" && !cells[4].empty()) tag.pos = std::string(cells[4]);
    tags.per_token.push_back(std::move(tag));
  }
  return out;
}

MorphMap ReadMorph(const std::filesystem::path& path) {
  return ParseMorph(internal::ReadFile(path), path.string());
}

void WriteMorph(std::ostream& out, const MorphMap& tags) {
  out << "# id\ttoken_index\tform\tgender\tpos\n";
  for (const auto& [id, m] : tags) {
    for (std::size_t i = 0; i < m.per_token.size(); ++i) {
      const auto& t = m.per_token[i];
      out << id << '\t' << i << '\t' << t.form << '\t' << GenderCell(t.gender) << '\t'
          << (t.pos ? *t.pos : "-") << '\n';
    }
  }
}

namespace {

// Shared by the two dictionary formats: returns the data rows as column
// pairs and fills `lang` from the directive.
std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> DictionaryRows(
    std::string_view text, std::string_view source, std::string& lang) {
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> rows;
  const auto lines = internal::Lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (Skippable(lines[i])) continue;
    const auto line = internal::Trim(lines[i]);
    if (line.substr(0, 5) == "lang:") {
      if (!lang.empty()) Malformed(source, i + 1, "second lang: directive");
      lang = std::string(internal::Trim(line.substr(5)));
      if (lang.empty()) Malformed(source, i + 1, "empty lang: directive");
      continue;
    }
    const auto cells = internal::Split(line, '\t');
    if (cells.size() != 2 || cells[0].empty() || cells[1].empty()) {
      Malformed(source, i + 1, "expected two tab-separated columns");
    }
    rows.push_back({i + 1, {std::string(cells[0]), std::string(cells[1])}});
  }
  if (lang.empty()) {
    throw Error(ErrorCode::kMalformedLine, std::string(source) + ": missing lang: directive");
  }
  return rows;
}

}  // namespace

GenderDictionary ParseGenderDictionary(std::string_view text, std::string_view source) {
  GenderDictionary dict;
  for (const auto& [line, row] : DictionaryRows(text, source, dict.lang)) {
    const auto& [key, value] = row;
    const auto g = ParseGrammaticalGender(value);
    if (!g || (*g != GrammaticalGender::kMasc && *g != GrammaticalGender::kFem)) {
      Malformed(source, line, "gender must be Masc or Fem, got '" + value + "'");
    }
    if (key.rfind("suffix:", 0) == 0) {
      const std::string suffix = key.substr(7);
      if (suffix.empty()) Malformed(source, line, "empty suffix");
      dict.suffix_rules.emplace_back(suffix, *g);
    } else if (!dict.form_to_gender.emplace(key, *g).second) {
      Malformed(source, line, "duplicate form '" + key + "'");
    }
  }
  return dict;
}

GenderDictionary LoadGenderDictionary(const std::filesystem::path& path) {
  return ParseGenderDictionary(internal::ReadFile(path), path.string());
}

Bidict ParseBidict(std::string_view text, std::string_view source) {
  Bidict bidict;
  for (const auto& [line, row] : DictionaryRows(text, source, bidict.lang)) {
    bidict.forms[row.first].insert(row.second);
  }
  return bidict;
}

Bidict LoadBidict(const std::filesystem::path& path) {
  return ParseBidict(internal::ReadFile(path), path.string());
}

GrammaticalGender LookupGender(const GenderDictionary& dict, std::string_view form) {
  if (const auto it = dict.form_to_gender.find(std::string(form)); it != dict.form_to_gender.end()) {
    return it->second;
  }
  for (const auto& [suffix, gender] : dict.suffix_rules) {
    if (form.size() > suffix.size() && form.substr(form.size() - suffix.size()) == suffix) {
      return gender;
    }
  }
  return GrammaticalGender::kNone;
}

MorphTags DictTag(const GenderDictionary& dict, const Translation& translation) {
  if (dict.lang != translation.lang) {
    throw Error(ErrorCode::kLanguageMismatch, "dictionary is '" + dict.lang + "' but translation " +
                                                  translation.id + " is '" + translation.lang + "'");
  }
  MorphTags tags;
  tags.id = translation.id;
  for (const auto& token : translation.tokens) {
    tags.per_token.push_back(TokenTag{token, LookupGender(dict, token), std::nullopt});
  }
  return tags;
}

AlignmentSet DictAlign(const Bidict& bidict, const SentenceRecord& record,
                       const Translation& translation) {
  if (record.id != translation.id) {
    throw Error(ErrorCode::kIdMismatch,
                "record " + record.id + " paired with translation " + translation.id);
  }
  AlignmentSet a;
  a.id = record.id;
  const auto it = bidict.forms.find(record.occupation_lemma);
  if (it == bidict.forms.end()) return a;
  for (std::size_t j = 0; j < translation.tokens.size(); ++j) {
    if (it->second.count(translation.tokens[j])) {
      a.pairs.emplace(record.occupation_index, j);
      break;
    }
  }
  return a;
}

}  // namespace genspect
