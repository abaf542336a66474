#ifndef GENSPECT_TESTS_FIXTURES_H_
#define GENSPECT_TESTS_FIXTURES_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "genspect/evaluator.h"
#include "genspect/generator.h"

namespace fixtures {

std::filesystem::path DataDir();
std::filesystem::path FixtureDir();
std::filesystem::path GrammarFile();
std::filesystem::path LexiconDir();

// Non-comment rows of a TSV file, split on tabs.
std::vector<std::vector<std::string>> ReadTsv(const std::filesystem::path& path);
std::string ReadText(const std::filesystem::path& path);

struct QuadrantRate {
  std::string lang;
  genspect::Quadrant quadrant;
  double correct = 0;
  double inconclusive = 0;
  double wrong = 0;
};

std::vector<QuadrantRate> LoadQuadrantRates();

// `n` outcomes realizing one rate row: round(correct * n) Correct,
// round(inconclusive * n) Inconclusive, the rest Wrong.
std::vector<genspect::Outcome> Realize(const QuadrantRate& rate, std::size_t n,
                                       const std::string& occupation = "occ");

// Every quadrant of every language at n = 1000.
std::vector<genspect::Outcome> QuadrantOutcomes(std::size_t n = 1000);

// lang -> printed Correct proportion.
std::map<std::string, double> LoadLanguageAccuracy();
// lang -> "F" where the F-trigger drop is marked larger, "-" otherwise.
std::map<std::string, std::string> LoadDeltaDirection();
// FM outcomes per occupation, n per occupation.
std::vector<genspect::Outcome> FmOccupationOutcomes(std::size_t n = 100);

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace fixtures

#endif  // GENSPECT_TESTS_FIXTURES_H_
