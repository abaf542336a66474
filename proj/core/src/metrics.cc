#include "genspect/metrics.h"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <set>

#include "genspect/error.h"
#include "text_util.h"

namespace genspect {
namespace {

__extension__ typedef unsigned __int128 U128;
__extension__ typedef __int128 I128;

}  // namespace

std::string_view ToString(Dimension d) {
  switch (d) {
    case Dimension::kLang: return "lang";
    case Dimension::kQuadrant: return "quadrant";
    case Dimension::kTriggerGender: return "trigger_gender";
    case Dimension::kOccupationStereotype: return "occupation_stereotype";
    case Dimension::kOccupationLemma: return "occupation_lemma";
    case Dimension::kFrameId: return "frame_id";
    case Dimension::kTriggerPosition: return "trigger_position";
    case Dimension::kCueCount: return "cue_count";
    case Dimension::kCueAttachment: return "cue_attachment";
  }
  return "lang";
}

Dimension ParseDimension(std::string_view s) {
  for (Dimension d : kAllDimensions) {
    if (ToString(d) == s) return d;
  }
  throw Error(ErrorCode::kUnknownDimension, "unknown dimension '" + std::string(s) + "'");
}

std::vector<Dimension> ParseDimensions(std::string_view list) {
  std::vector<Dimension> out;
  if (internal::Trim(list).empty()) return out;
  for (auto part : internal::Split(list, ',')) {
    const Dimension d = ParseDimension(internal::Trim(part));
    if (std::find(out.begin(), out.end(), d) != out.end()) {
      throw Error(ErrorCode::kInvalidArgument, "dimension '" + std::string(ToString(d)) + "' repeated");
    }
    out.push_back(d);
  }
  return out;
}

std::string DimensionValue(const Outcome& o, Dimension d) {
  switch (d) {
    case Dimension::kLang: return o.lang;
    case Dimension::kQuadrant: return Quadrant{o.trigger_gender, o.occupation_stereotype}.Name();
    case Dimension::kTriggerGender: return std::string(ToString(o.trigger_gender));
    case Dimension::kOccupationStereotype: return std::string(ToString(o.occupation_stereotype));
    case Dimension::kOccupationLemma: return o.occupation_lemma;
    case Dimension::kFrameId: return o.frame_id;
    case Dimension::kTriggerPosition: return std::string(ToString(o.trigger_position));
    case Dimension::kCueCount: return std::to_string(o.cue_count);
    case Dimension::kCueAttachment: return o.cue_attachment;
  }
  return {};
}

namespace {

void Count(ProportionRow& row, Verdict v) {
  ++row.n;
  switch (v) {
    case Verdict::kCorrect: ++row.n_correct; break;
    case Verdict::kWrong: ++row.n_wrong; break;
    case Verdict::kInconclusive: ++row.n_inconclusive; break;
  }
}

void Finish(ProportionRow& row) {
  if (row.n == 0) return;
  const double n = static_cast<double>(row.n);
  row.correct = static_cast<double>(row.n_correct) / n;
  row.wrong = static_cast<double>(row.n_wrong) / n;
  row.inconclusive = static_cast<double>(row.n_inconclusive) / n;
}

}  // namespace

std::vector<ProportionRow> Aggregate(const std::vector<Outcome>& outcomes,
                                     const std::vector<Dimension>& dimensions) {
  std::map<std::vector<std::string>, ProportionRow> groups;
  for (const auto& o : outcomes) {
    std::vector<std::string> values;
    values.reserve(dimensions.size());
    for (Dimension d : dimensions) values.push_back(DimensionValue(o, d));
    auto [it, inserted] = groups.try_emplace(values);
    if (inserted) {
      for (std::size_t i = 0; i < dimensions.size(); ++i) {
        it->second.key.emplace_back(dimensions[i], values[i]);
      }
    }
    Count(it->second, o.verdict);
  }
  std::vector<ProportionRow> rows;
  rows.reserve(groups.size());
  for (auto& [values, row] : groups) {
    Finish(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DeltaRow> DeltaTable(const std::vector<Outcome>& outcomes,
                                 std::vector<std::string>* warnings) {
  // Per language: (correct, n) for MM, MF, FM, FF.
  std::map<std::string, std::array<std::pair<std::int64_t, std::int64_t>, 4>> acc;
  for (const auto& o : outcomes) {
    const Quadrant q{o.trigger_gender, o.occupation_stereotype};
    const auto idx = static_cast<std::size_t>(
        std::find(kQuadrants.begin(), kQuadrants.end(), q) - kQuadrants.begin());
    auto& cell = acc[o.lang][idx];
    cell.second += 1;
    if (o.verdict == Verdict::kCorrect) cell.first += 1;
  }
  std::vector<DeltaRow> rows;
  for (const auto& [lang, cells] : acc) {
    std::string missing;
    for (std::size_t q = 0; q < 4; ++q) {
      if (cells[q].second == 0) missing += (missing.empty() ? "" : ",") + kQuadrants[q].Name();
    }
    if (!missing.empty()) {
      if (warnings != nullptr) {
        warnings->push_back("language '" + lang + "' lacks quadrant(s) " + missing + "; omitted");
      }
      continue;
    }
    auto diff = [&](std::size_t a, std::size_t b, std::int64_t& num, std::int64_t& den) {
      num = cells[a].first * cells[b].second - cells[b].first * cells[a].second;
      den = cells[a].second * cells[b].second;
    };
    DeltaRow row;
    row.lang = lang;
    diff(0, 1, row.delta_m_num, row.delta_m_den);  // MM - MF
    diff(3, 2, row.delta_f_num, row.delta_f_den);  // FF - FM
    row.delta_m = static_cast<double>(row.delta_m_num) / static_cast<double>(row.delta_m_den);
    row.delta_f = static_cast<double>(row.delta_f_num) / static_cast<double>(row.delta_f_den);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::pair<std::string, ProportionRow>> RankOccupations(
    const std::vector<Outcome>& outcomes, const Quadrant& quadrant) {
  std::vector<Outcome> selected;
  for (const auto& o : outcomes) {
    if (o.trigger_gender == quadrant.trigger_gender &&
        o.occupation_stereotype == quadrant.occupation_stereotype) {
      selected.push_back(o);
    }
  }
  std::vector<std::pair<std::string, ProportionRow>> ranked;
  for (auto& row : Aggregate(selected, {Dimension::kOccupationLemma})) {
    std::string lemma = row.key.front().second;
    ranked.emplace_back(std::move(lemma), std::move(row));
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    // Cross-multiplied so equal fractions with different n tie exactly.
    const auto lhs = static_cast<U128>(a.second.n_correct) * b.second.n;
    const auto rhs = static_cast<U128>(b.second.n_correct) * a.second.n;
    if (lhs != rhs) return lhs > rhs;
    return a.first < b.first;
  });
  return ranked;
}

std::optional<Format> ParseFormat(std::string_view s) {
  if (s == "csv") return Format::kCsv;
  if (s == "markdown" || s == "md") return Format::kMarkdown;
  return std::nullopt;
}

std::string FormatFraction(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorCode::kInvalidArgument, "fraction with non-positive denominator");
  const bool negative = num < 0;
  const auto mag = static_cast<U128>(negative ? -static_cast<I128>(num) : num);
  const auto d = static_cast<U128>(den);
  // Half-up on the magnitude: floor((2 * 10^4 * |num| + den) / (2 * den)).
  const auto scaled = static_cast<std::uint64_t>((mag * 20000 + d) / (2 * d));
  std::string frac = std::to_string(scaled % 10000);
  frac.insert(0, 4 - frac.size(), '0');
  std::string out = std::to_string(scaled / 10000) + "." + frac;
  if (negative && scaled != 0) out.insert(0, "-");
  return out;
}

namespace {

std::string CsvCell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Fraction(std::size_t count, std::size_t n) {
  if (n == 0) return FormatFraction(0, 1);
  return FormatFraction(static_cast<std::int64_t>(count), static_cast<std::int64_t>(n));
}

void WriteRow(std::ostream& out, const std::vector<std::string>& cells, Format format) {
  if (format == Format::kCsv) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << CsvCell(cells[i]);
  } else {
    out << '|';
    for (const auto& c : cells) out << ' ' << c << " |";
  }
  out << '\n';
}

void WriteHeader(std::ostream& out, const std::vector<std::string>& names, std::size_t text_columns,
                 Format format) {
  WriteRow(out, names, format);
  if (format == Format::kMarkdown) {
    out << '|';
    for (std::size_t i = 0; i < names.size(); ++i) out << (i < text_columns ? " --- |" : " ---: |");
    out << '\n';
  }
}

}  // namespace

void Render(std::ostream& out, const std::vector<ProportionRow>& rows,
            const std::vector<Dimension>& dimensions, Format format) {
  std::vector<std::string> header;
  for (Dimension d : dimensions) header.emplace_back(ToString(d));
  for (const char* c : {"n", "correct", "wrong", "inconclusive"}) header.emplace_back(c);
  if (format == Format::kCsv) {
    for (const char* c : {"n_correct", "n_wrong", "n_inconclusive"}) header.emplace_back(c);
  }
  WriteHeader(out, header, dimensions.size(), format);
  for (const auto& row : rows) {
    if (row.key.size() != dimensions.size()) {
      throw Error(ErrorCode::kInvalidArgument, "row key does not match the dimension list");
    }
    std::vector<std::string> cells;
    for (const auto& [d, v] : row.key) cells.push_back(v);
    cells.push_back(std::to_string(row.n));
    cells.push_back(Fraction(row.n_correct, row.n));
    cells.push_back(Fraction(row.n_wrong, row.n));
    cells.push_back(Fraction(row.n_inconclusive, row.n));
    if (format == Format::kCsv) {
      cells.push_back(std::to_string(row.n_correct));
      cells.push_back(std::to_string(row.n_wrong));
      cells.push_back(std::to_string(row.n_inconclusive));
    }
    WriteRow(out, cells, format);
  }
}

void RenderDelta(std::ostream& out, const std::vector<DeltaRow>& rows, Format format) {
  WriteHeader(out, {"lang", "delta_m", "delta_f"}, 1, format);
  for (const auto& r : rows) {
    WriteRow(out,
             {r.lang, FormatFraction(r.delta_m_num, r.delta_m_den),
              FormatFraction(r.delta_f_num, r.delta_f_den)},
             format);
  }
}

}  // namespace genspect
