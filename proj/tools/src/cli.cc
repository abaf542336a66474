#include "cli.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "genspect/annotation.h"
#include "genspect/error.h"
#include "genspect/evaluator.h"
#include "genspect/generator.h"
#include "genspect/grammar.h"
#include "genspect/hash.h"
#include "genspect/lexicon.h"
#include "genspect/metrics.h"
#include "genspect/sampling.h"

#ifndef GENSPECT_VERSION
#define GENSPECT_VERSION "0.0.0"
#endif

namespace genspect::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kLexiconFiles[] = {"triggers.tsv", "occupations.tsv", "cues.tsv"};

struct Manifest {
  std::string command;
  std::vector<std::string> args;
  std::map<std::string, std::string> inputs;
  std::optional<std::uint64_t> seed;
};

std::string Timestamp() {
  std::time_t t = 0;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void WriteFile(const fs::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kMissingFile, "cannot write " + path.string());
  f << bytes;
  if (!f.flush()) throw Error(ErrorCode::kMissingFile, "failed writing " + path.string());
}

void WriteManifest(const fs::path& output, const Manifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["args"] = m.args;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [path, digest] : m.inputs) j["inputs"][path] = digest;
  j["output"] = output.filename().string();
  j["output_sha256"] = FileSha256Hex(output);
  j["tool_version"] = GENSPECT_VERSION;
  j["seed"] = m.seed ? nlohmann::ordered_json(*m.seed) : nlohmann::ordered_json();
  j["timestamp"] = Timestamp();
  WriteFile(fs::path(output.string() + ".manifest.json"), j.dump(2) + "\n");
}

void AddInput(Manifest& m, const fs::path& path) { m.inputs[path.string()] = FileSha256Hex(path); }

std::optional<fs::path> DataDir() {
  const char* dir = std::getenv("GENSPECT_DATA");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return fs::path(dir);
}

// An explicit path wins; otherwise `relative` under GENSPECT_DATA.
fs::path Resolve(const std::string& given, const std::string& flag, const std::string& relative) {
  if (!given.empty()) return given;
  if (const auto dir = DataDir()) return *dir / relative;
  throw Error(ErrorCode::kInvalidArgument, flag + " is required when GENSPECT_DATA is not set");
}

std::set<std::string> CommaSet(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

struct GenerateArgs {
  std::string grammar;
  std::string lexicon;
  std::string out;
  std::string frames;
  int cues = 0;
  std::optional<std::size_t> per_quadrant;
  std::uint64_t seed = 0;
};

int Generate(const GenerateArgs& a, const std::vector<std::string>& raw, std::ostream& err) {
  const fs::path grammar_path = Resolve(a.grammar, "--grammar", "grammar/default.grammar");
  const fs::path lexicon_dir = Resolve(a.lexicon, "--lexicon", "lexicon");
  const Grammar grammar = ParseGrammar(grammar_path);
  const Lexicon lexicon = LoadLexicon(lexicon_dir);

  GenerateOptions options;
  if (!a.frames.empty()) options.frames = CommaSet(a.frames);
  options.cue_count = a.cues;
  options.per_quadrant_cap = a.per_quadrant;
  options.seed = a.seed;
  const auto records = GenerateCorpus(grammar, lexicon, options);

  Manifest m{"generate", raw, {}, a.seed};
  AddInput(m, grammar_path);
  std::string lexicon_digests;
  for (const char* name : kLexiconFiles) {
    AddInput(m, lexicon_dir / name);
    lexicon_digests += m.inputs[(lexicon_dir / name).string()];
  }

  CorpusHeader header;
  header.grammar_hash = grammar.digest();
  header.lexicon_hash = Sha256Hex(lexicon_digests);
  header.seed = a.seed;
  header.rng = Sampler::kAlgorithm;
  header.cue_count = a.cues;
  header.per_quadrant_cap = a.per_quadrant;
  if (options.frames) header.frames.emplace(options.frames->begin(), options.frames->end());

  std::ostringstream body;
  WriteCorpus(body, header, records);
  WriteFile(a.out, body.str());
  WriteManifest(a.out, m);

  std::map<std::string, std::size_t> per_quadrant;
  for (const auto& r : records) ++per_quadrant[QuadrantOf(r).Name()];
  err << "generate: " << records.size() << " records";
  for (const auto& [q, n] : per_quadrant) err << ' ' << q << '=' << n;
  err << " -> " << a.out << '\n';
  return 0;
}

struct TagArgs {
  std::string translations;
  std::string lang;
  std::string dict;
  std::string out;
};

int Tag(const TagArgs& a, const std::vector<std::string>& raw, std::ostream& err) {
  const fs::path dict_path = Resolve(a.dict, "--dict", "dict/" + a.lang + ".tsv");
  const GenderDictionary dict = LoadGenderDictionary(dict_path);
  if (!a.lang.empty() && a.lang != dict.lang) {
    throw Error(ErrorCode::kLanguageMismatch,
                "--lang is '" + a.lang + "' but " + dict_path.string() + " is '" + dict.lang + "'");
  }
  const auto translations = ReadTranslations(a.translations);
  MorphMap tags;
  for (const auto& [id, t] : translations) tags.emplace(id, DictTag(dict, t));

  std::ostringstream body;
  WriteMorph(body, tags);
  WriteFile(a.out, body.str());
  Manifest m{"tag", raw, {}, std::nullopt};
  AddInput(m, a.translations);
  AddInput(m, dict_path);
  WriteManifest(a.out, m);
  err << "tag: " << tags.size() << " translations -> " << a.out << '\n';
  return 0;
}

struct AlignArgs {
  std::string corpus;
  std::string translations;
  std::string lang;
  std::string bidict;
  std::string out;
};

int Align(const AlignArgs& a, const std::vector<std::string>& raw, std::ostream& err) {
  const fs::path bidict_path = Resolve(a.bidict, "--bidict", "bidict/" + a.lang + ".tsv");
  const Bidict bidict = LoadBidict(bidict_path);
  if (!a.lang.empty() && a.lang != bidict.lang) {
    throw Error(ErrorCode::kLanguageMismatch,
                "--lang is '" + a.lang + "' but " + bidict_path.string() + " is '" + bidict.lang + "'");
  }
  const Corpus corpus = ReadCorpus(a.corpus);
  const auto translations = ReadTranslations(a.translations);
  std::map<std::string, const SentenceRecord*> by_id;
  for (const auto& r : corpus.records) by_id.emplace(r.id, &r);

  AlignmentMap alignments;
  std::size_t unknown = 0;
  std::size_t empty = 0;
  for (const auto& [id, t] : translations) {
    if (t.lang != bidict.lang) {
      throw Error(ErrorCode::kLanguageMismatch,
                  "bidict is '" + bidict.lang + "' but translation " + id + " is '" + t.lang + "'");
    }
    const auto it = by_id.find(id);
    if (it == by_id.end()) {
      ++unknown;
      continue;
    }
    auto set = DictAlign(bidict, *it->second, t);
    if (set.pairs.empty()) ++empty;
    alignments.emplace(id, std::move(set));
  }
  if (unknown > 0) err << "align: warning: " << unknown << " translation ids not in the corpus\n";

  std::ostringstream body;
  WriteAlignments(body, alignments);
  WriteFile(a.out, body.str());
  Manifest m{"align", raw, {}, std::nullopt};
  AddInput(m, a.corpus);
  AddInput(m, a.translations);
  AddInput(m, bidict_path);
  WriteManifest(a.out, m);
  err << "align: " << alignments.size() << " alignments (" << empty << " empty) -> " << a.out << '\n';
  return 0;
}

struct EvaluateArgs {
  std::string corpus;
  std::string translations;
  std::string alignments;
  std::string tags;
  std::string lang;
  std::size_t jobs = 1;
  std::string out;
};

int Evaluate(const EvaluateArgs& a, const std::vector<std::string>& raw, std::ostream& err) {
  const Corpus corpus = ReadCorpus(a.corpus);
  const auto translations = ReadTranslations(a.translations);
  AlignmentMap alignments;
  MorphMap tags;
  if (!a.alignments.empty()) alignments = ReadAlignments(a.alignments);
  if (!a.tags.empty()) tags = ReadMorph(a.tags);

  EvaluationInputs inputs{&translations, &alignments, &tags, a.lang};
  if (inputs.default_lang.empty()) {
    std::set<std::string> langs;
    for (const auto& [id, t] : translations) langs.insert(t.lang);
    if (langs.size() == 1) inputs.default_lang = *langs.begin();
  }

  std::size_t missing_translation = 0;
  std::size_t missing_tags = 0;
  std::size_t missing_alignment = 0;
  for (const auto& r : corpus.records) {
    if (!translations.count(r.id)) ++missing_translation;
    if (!tags.count(r.id)) ++missing_tags;
    if (!alignments.count(r.id)) ++missing_alignment;
  }
  if (missing_translation > 0) {
    err << "evaluate: warning: " << missing_translation << " records lack a translation\n";
  }
  if (missing_tags > 0) err << "evaluate: warning: " << missing_tags << " records lack tags\n";
  if (missing_alignment > 0) {
    err << "evaluate: warning: " << missing_alignment << " records lack an alignment\n";
  }

  const auto outcomes = EvaluateCorpus(corpus.records, inputs, a.jobs);
  std::ostringstream body;
  WriteOutcomes(body, outcomes);
  WriteFile(a.out, body.str());

  Manifest m{"evaluate", raw, {}, std::nullopt};
  AddInput(m, a.corpus);
  AddInput(m, a.translations);
  if (!a.alignments.empty()) AddInput(m, a.alignments);
  if (!a.tags.empty()) AddInput(m, a.tags);
  WriteManifest(a.out, m);

  std::map<Verdict, std::size_t> counts;
  for (const auto& o : outcomes) ++counts[o.verdict];
  err << "evaluate: " << outcomes.size() << " outcomes (Correct=" << counts[Verdict::kCorrect]
      << " Wrong=" << counts[Verdict::kWrong] << " Inconclusive=" << counts[Verdict::kInconclusive]
      << ") -> " << a.out << '\n';
  return 0;
}

struct ReportArgs {
  std::vector<std::string> outcomes;
  std::string group_by = "lang";
  std::string format = "csv";
  bool delta = false;
  std::string rank;
  std::string out;
};

int Report(const ReportArgs& a, const std::vector<std::string>& raw, std::ostream& out,
           std::ostream& err) {
  const auto format = ParseFormat(a.format);
  if (!format) throw Error(ErrorCode::kInvalidArgument, "unknown --format '" + a.format + "'");
  if (a.delta && !a.rank.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--delta and --rank are exclusive");
  }
  const auto dimensions = ParseDimensions(a.group_by);
  std::optional<Quadrant> rank_quadrant;
  if (!a.rank.empty()) {
    rank_quadrant = Quadrant::Parse(a.rank);
    if (!rank_quadrant) throw Error(ErrorCode::kInvalidArgument, "bad --rank quadrant '" + a.rank + "'");
  }

  std::vector<Outcome> outcomes;
  for (const auto& path : a.outcomes) {
    auto part = ReadOutcomes(path);
    outcomes.insert(outcomes.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
  }

  std::ostringstream body;
  if (a.delta) {
    std::vector<std::string> warnings;
    const auto rows = DeltaTable(outcomes, &warnings);
    for (const auto& w : warnings) err << "report: warning: " << w << '\n';
    RenderDelta(body, rows, *format);
  } else if (rank_quadrant) {
    std::vector<ProportionRow> rows;
    for (auto& [lemma, row] : RankOccupations(outcomes, *rank_quadrant)) rows.push_back(row);
    Render(body, rows, {Dimension::kOccupationLemma}, *format);
  } else {
    Render(body, Aggregate(outcomes, dimensions), dimensions, *format);
  }

  if (a.out.empty()) {
    out << body.str();
    return 0;
  }
  WriteFile(a.out, body.str());
  Manifest m{"report", raw, {}, std::nullopt};
  for (const auto& path : a.outcomes) AddInput(m, path);
  WriteManifest(a.out, m);
  return 0;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gender-translation benchmark toolkit", "genspect"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GENSPECT_VERSION);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Enumerate the grammar into a balanced corpus");
  generate->add_option("--grammar", gen.grammar, "Grammar file (default: $GENSPECT_DATA/grammar/default.grammar)");
  generate->add_option("--lexicon", gen.lexicon, "Lexicon directory (default: $GENSPECT_DATA/lexicon)");
  generate->add_option("--out", gen.out, "Corpus JSONL to write")->required();
  generate->add_option("--frames", gen.frames, "Comma-separated frame ids or families");
  generate->add_option("--cues", gen.cues, "Context cues per sentence")->check(CLI::Range(0, 2));
  generate->add_option("--per-quadrant", gen.per_quadrant, "Cap on records per quadrant")
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "Sampling seed");

  TagArgs tag;
  auto* tag_cmd = app.add_subcommand("tag", "Tag translations with the offline gender dictionary");
  tag_cmd->add_option("--translations", tag.translations, "Translations JSONL")->required();
  tag_cmd->add_option("--lang", tag.lang, "Target language code");
  tag_cmd->add_option("--dict", tag.dict, "Gender dictionary (default: $GENSPECT_DATA/dict/<lang>.tsv)");
  tag_cmd->add_option("--out", tag.out, "Morph TSV to write")->required();

  AlignArgs align;
  auto* align_cmd = app.add_subcommand("align", "Align occupation nouns with the offline bidict");
  align_cmd->add_option("--corpus", align.corpus, "Corpus JSONL")->required();
  align_cmd->add_option("--translations", align.translations, "Translations JSONL")->required();
  align_cmd->add_option("--lang", align.lang, "Target language code");
  align_cmd->add_option("--bidict", align.bidict, "Bilingual lexicon (default: $GENSPECT_DATA/bidict/<lang>.tsv)");
  align_cmd->add_option("--out", align.out, "Alignment file to write")->required();

  EvaluateArgs eval;
  auto* evaluate = app.add_subcommand("evaluate", "Classify translations as Correct, Wrong or Inconclusive");
  evaluate->add_option("--corpus", eval.corpus, "Corpus JSONL")->required();
  evaluate->add_option("--translations", eval.translations, "Translations JSONL")->required();
  evaluate->add_option("--alignments", eval.alignments, "Alignment file");
  evaluate->add_option("--tags", eval.tags, "Morph TSV");
  evaluate->add_option("--lang", eval.lang, "Language for records without a translation");
  evaluate->add_option("--jobs", eval.jobs, "Worker threads")->check(CLI::PositiveNumber);
  evaluate->add_option("--out", eval.out, "Outcomes JSONL to write")->required();

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "Aggregate outcomes into tables");
  report->add_option("--outcomes", rep.outcomes, "Outcomes JSONL (repeatable)")->required();
  report->add_option("--group-by", rep.group_by, "Comma-separated dimensions");
  report->add_option("--format", rep.format, "csv or markdown");
  report->add_flag("--delta", rep.delta, "Per-language accuracy drop table");
  report->add_option("--rank", rep.rank, "Rank occupations within a quadrant (MM, MF, FM, FF)");
  report->add_option("--out", rep.out, "File to write (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) return Generate(gen, args, err);
    if (*tag_cmd) return Tag(tag, args, err);
    if (*align_cmd) return Align(align, args, err);
    if (*evaluate) return Evaluate(eval, args, err);
    if (*report) return Report(rep, args, out, err);
  } catch (const Error& e) {
    err << "genspect " << args.front() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "genspect " << args.front() << ": " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace genspect::cli
