#ifndef GENSPECT_METRICS_H_
#define GENSPECT_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genspect/evaluator.h"
#include "genspect/generator.h"

namespace genspect {

enum class Dimension {
  kLang,
  kQuadrant,
  kTriggerGender,
  kOccupationStereotype,
  kOccupationLemma,
  kFrameId,
  kTriggerPosition,
  kCueCount,
  kCueAttachment,
};

inline constexpr Dimension kAllDimensions[] = {
    Dimension::kLang,           Dimension::kQuadrant,        Dimension::kTriggerGender,
    Dimension::kOccupationStereotype, Dimension::kOccupationLemma, Dimension::kFrameId,
    Dimension::kTriggerPosition, Dimension::kCueCount,       Dimension::kCueAttachment};

std::string_view ToString(Dimension d);
// Throws Error(kUnknownDimension).
Dimension ParseDimension(std::string_view s);
// Comma-separated list, e.g. "lang,quadrant". Throws Error(kUnknownDimension)
// and Error(kInvalidArgument) on a repeated dimension.
std::vector<Dimension> ParseDimensions(std::string_view list);

std::string DimensionValue(const Outcome& o, Dimension d);

struct ProportionRow {
  std::vector<std::pair<Dimension, std::string>> key;
  std::size_t n = 0;
  std::size_t n_correct = 0;
  std::size_t n_wrong = 0;
  std::size_t n_inconclusive = 0;
  double correct = 0;
  double wrong = 0;
  double inconclusive = 0;

  bool empty() const { return n == 0; }
  bool operator==(const ProportionRow&) const = default;
};

// One row per distinct key, sorted by key values. Empty input gives no rows;
// no dimensions gives a single overall row.
std::vector<ProportionRow> Aggregate(const std::vector<Outcome>& outcomes,
                                     const std::vector<Dimension>& dimensions);

struct DeltaRow {
  std::string lang;
  double delta_m = 0;  // acc(MM) - acc(MF)
  double delta_f = 0;  // acc(FF) - acc(FM)
  // Exact values as num / den.
  std::int64_t delta_m_num = 0;
  std::int64_t delta_m_den = 1;
  std::int64_t delta_f_num = 0;
  std::int64_t delta_f_den = 1;

  bool operator==(const DeltaRow&) const = default;
};

// Per language, sorted by lang. Languages lacking a quadrant are left out and
// named in `warnings` when it is given.
std::vector<DeltaRow> DeltaTable(const std::vector<Outcome>& outcomes,
                                 std::vector<std::string>* warnings = nullptr);

// Occupations of one quadrant by descending Correct proportion, ties by lemma.
std::vector<std::pair<std::string, ProportionRow>> RankOccupations(
    const std::vector<Outcome>& outcomes, const Quadrant& quadrant);

enum class Format { kCsv, kMarkdown };
std::optional<Format> ParseFormat(std::string_view s);

// num / den rounded half-up to 4 decimals; den must be positive.
std::string FormatFraction(std::int64_t num, std::int64_t den);

// Key columns, n, the three fractions; CSV adds the raw counts. Rows without
// keys still get the count columns.
void Render(std::ostream& out, const std::vector<ProportionRow>& rows,
            const std::vector<Dimension>& dimensions, Format format);
void RenderDelta(std::ostream& out, const std::vector<DeltaRow>& rows, Format format);

}  // namespace genspect

#endif  // GENSPECT_METRICS_H_
