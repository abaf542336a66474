#include "fixtures.h"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fixtures {

std::filesystem::path DataDir() { return GENSPECT_TEST_DATA_DIR; }
std::filesystem::path FixtureDir() { return GENSPECT_TEST_FIXTURE_DIR; }
std::filesystem::path GrammarFile() { return DataDir() / "grammar" / "default.grammar"; }
std::filesystem::path LexiconDir() { return DataDir() / "lexicon"; }

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> ReadTsv(const std::filesystem::path& path) {
  std::istringstream in(ReadText(path));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::vector<QuadrantRate> LoadQuadrantRates() {
  std::vector<QuadrantRate> out;
  for (const auto& r : ReadTsv(FixtureDir() / "quadrant_rates.tsv")) {
    QuadrantRate q;
    q.lang = r.at(0);
    q.quadrant = *genspect::Quadrant::Parse(r.at(1));
    q.correct = std::stod(r.at(2));
    q.inconclusive = std::stod(r.at(3));
    q.wrong = std::stod(r.at(4));
    out.push_back(q);
  }
  return out;
}

std::vector<genspect::Outcome> Realize(const QuadrantRate& rate, std::size_t n,
                                       const std::string& occupation) {
  const auto correct = static_cast<std::size_t>(std::llround(rate.correct * static_cast<double>(n)));
  const auto inconclusive =
      static_cast<std::size_t>(std::llround(rate.inconclusive * static_cast<double>(n)));
  if (correct + inconclusive > n) throw std::runtime_error("rate row exceeds 1");
  std::vector<genspect::Outcome> out;
  for (std::size_t i = 0; i < n; ++i) {
    genspect::Outcome o;
    o.id = rate.lang + "-" + rate.quadrant.Name() + "-" + occupation + "-" + std::to_string(i);
    o.lang = rate.lang;
    o.trigger_gender = rate.quadrant.trigger_gender;
    o.occupation_stereotype = rate.quadrant.occupation_stereotype;
    o.occupation_lemma = occupation;
    o.frame_id = "synthetic";
    const auto expected = genspect::ExpectedMarking(o.trigger_gender);
    const auto opposite = genspect::ExpectedMarking(genspect::Opposite(o.trigger_gender));
    if (i < correct) {
      o.verdict = genspect::Verdict::kCorrect;
      o.resolved_gender = expected;
    } else if (i < correct + inconclusive) {
      o.verdict = genspect::Verdict::kInconclusive;
      o.reason = genspect::Reason::kNoGenderTag;
    } else {
      o.verdict = genspect::Verdict::kWrong;
      o.resolved_gender = opposite;
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<genspect::Outcome> QuadrantOutcomes(std::size_t n) {
  std::vector<genspect::Outcome> out;
  for (const auto& rate : LoadQuadrantRates()) {
    auto part = Realize(rate, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::map<std::string, double> LoadLanguageAccuracy() {
  std::map<std::string, double> out;
  for (const auto& r : ReadTsv(FixtureDir() / "language_accuracy.tsv")) out[r.at(0)] = std::stod(r.at(1));
  return out;
}

std::map<std::string, std::string> LoadDeltaDirection() {
  std::map<std::string, std::string> out;
  for (const auto& r : ReadTsv(FixtureDir() / "delta_direction.tsv")) out[r.at(0)] = r.at(1);
  return out;
}

std::vector<genspect::Outcome> FmOccupationOutcomes(std::size_t n) {
  std::vector<genspect::Outcome> out;
  for (const auto& r : ReadTsv(FixtureDir() / "fm_occupation_rates.tsv")) {
    QuadrantRate rate;
    rate.lang = "xx";
    rate.quadrant = {genspect::Gender::kF, genspect::Gender::kM};
    rate.correct = std::stod(r.at(1));
    rate.inconclusive = std::stod(r.at(2));
    rate.wrong = std::stod(r.at(3));
    auto part = Realize(rate, n, r.at(0));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

TempDir::TempDir() {
  std::random_device rd;
  const auto base = std::filesystem::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto candidate = base / ("genspect-test-" + std::to_string(rd()));
    if (std::filesystem::create_directory(candidate)) {
      path_ = candidate;
      return;
    }
  }
  throw std::runtime_error("cannot create a temporary directory");
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace fixtures
