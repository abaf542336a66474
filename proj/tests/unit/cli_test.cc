#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "fixtures.h"
#include "genspect/evaluator.h"
#include "genspect/generator.h"
#include "genspect/hash.h"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = genspect::cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& rel) { return (fixtures::DataDir() / rel).string(); }
std::string Examples(const std::string& rel) { return (fixtures::FixtureDir() / "es_examples" / rel).string(); }

void WriteText(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

std::vector<std::string> Generate(const fs::path& out, std::vector<std::string> extra) {
  std::vector<std::string> args = {"generate", "--grammar", Data("grammar/default.grammar"),
                                   "--lexicon", Data("lexicon"), "--out", out.string()};
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

TEST(Cli, HelpAndUsage) {
  EXPECT_EQ(Invoke({"--help"}).code, 0);
  EXPECT_EQ(Invoke({}).code, 2);
  EXPECT_EQ(Invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(Invoke({"generate"}).code, 2);
}

TEST(Cli, ExamplePipeline) {
  fixtures::TempDir dir;
  const auto tags = dir / "tags.tsv";
  const auto aligned = dir / "aligned.txt";
  const auto outcomes = dir / "outcomes.jsonl";

  auto r = Invoke({"tag", "--translations", Examples("translations.jsonl"), "--lang", "es", "--dict",
                Data("dict/es.tsv"), "--out", tags.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  r = Invoke({"align", "--corpus", Examples("corpus.jsonl"), "--translations", Examples("translations.jsonl"),
           "--lang", "es", "--bidict", Data("bidict/es.tsv"), "--out", aligned.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  // The dictionary aligner does not know "ingeniería", so the third pair stays empty.
  EXPECT_EQ(fixtures::ReadText(aligned), "es-ex-1\t4-3\nes-ex-2\t1-1\nes-ex-3\t\n");

  r = Invoke({"evaluate", "--corpus", Examples("corpus.jsonl"), "--translations", Examples("translations.jsonl"),
           "--alignments", Examples("alignments.txt"), "--tags", tags.string(), "--out", outcomes.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string verdicts;
  for (const auto& o : genspect::ReadOutcomes(outcomes)) verdicts += o.id + "\t" + std::string(ToString(o.verdict)) + "\n";
  EXPECT_EQ(verdicts, fixtures::ReadText(Examples("expected_verdicts.txt")));

  r = Invoke({"report", "--outcomes", outcomes.string(), "--group-by", "lang,quadrant"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "lang,quadrant,n,correct,wrong,inconclusive,n_correct,n_wrong,n_inconclusive\n"
            "es,FM,2,0.5000,0.0000,0.5000,1,0,1\n"
            "es,MF,1,0.0000,1.0000,0.0000,0,1,0\n");
}

TEST(Cli, ManifestRecordsInputsAndOutput) {
  fixtures::TempDir dir;
  const auto tags = dir / "tags.tsv";
  ASSERT_EQ(Invoke({"tag", "--translations", Examples("translations.jsonl"), "--dict", Data("dict/es.tsv"),
                 "--out", tags.string()})
                .code,
            0);
  const auto j = nlohmann::json::parse(fixtures::ReadText(tags.string() + ".manifest.json"));
  EXPECT_EQ(j.at("command"), "tag");
  EXPECT_EQ(j.at("output_sha256"), genspect::FileSha256Hex(tags));
  EXPECT_EQ(j.at("inputs").at(Data("dict/es.tsv")), genspect::FileSha256Hex(Data("dict/es.tsv")));
  EXPECT_TRUE(j.contains("tool_version"));
  EXPECT_TRUE(j.contains("timestamp"));
}

TEST(Cli, GenerateIsByteIdenticalForASeed) {
  fixtures::TempDir dir;
  ASSERT_EQ(Invoke(Generate(dir / "a.jsonl", {"--seed", "7", "--per-quadrant", "50"})).code, 0);
  ASSERT_EQ(Invoke(Generate(dir / "b.jsonl", {"--seed", "7", "--per-quadrant", "50"})).code, 0);
  ASSERT_EQ(Invoke(Generate(dir / "c.jsonl", {"--seed", "8", "--per-quadrant", "50"})).code, 0);
  const auto a = fixtures::ReadText(dir / "a.jsonl");
  EXPECT_EQ(a, fixtures::ReadText(dir / "b.jsonl"));
  EXPECT_NE(a, fixtures::ReadText(dir / "c.jsonl"));
  const auto corpus = genspect::ReadCorpus(dir / "a.jsonl");
  EXPECT_EQ(corpus.records.size(), 200u);
  EXPECT_EQ(corpus.header.seed, 7u);
  EXPECT_EQ(corpus.header.per_quadrant_cap, 50u);
  EXPECT_EQ(corpus.header.grammar_hash, genspect::FileSha256Hex(Data("grammar/default.grammar")));
}

TEST(Cli, GenerateFrameFamilyWithCues) {
  fixtures::TempDir dir;
  const auto r = Invoke(Generate(dir / "c.jsonl", {"--frames", "F-REFL", "--cues", "2"}));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto corpus = genspect::ReadCorpus(dir / "c.jsonl");
  ASSERT_FALSE(corpus.records.empty());
  for (const auto& rec : corpus.records) {
    EXPECT_EQ(rec.frame_id, "F-REFL/vobj+vsubj");
    EXPECT_EQ(rec.cues.size(), 2u);
  }
  EXPECT_EQ(Invoke(Generate(dir / "d.jsonl", {"--cues", "3"})).code, 2);
}

TEST(Cli, DataErrorsExitTwo) {
  fixtures::TempDir dir;
  const auto outcomes = dir / "o.jsonl";
  WriteText(outcomes, "");
  auto r = Invoke({"report", "--outcomes", outcomes.string(), "--group-by", "colour"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnknownDimension"), std::string::npos) << r.err;

  r = Invoke({"tag", "--translations", Examples("translations.jsonl"), "--lang", "de", "--dict",
           Data("dict/es.tsv"), "--out", (dir / "t.tsv").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("LanguageMismatch"), std::string::npos) << r.err;

  const auto bad = dir / "bad.jsonl";
  WriteText(bad, "{\"schema\":\"something-else/2\"}\n");
  r = Invoke({"evaluate", "--corpus", bad.string(), "--translations", Examples("translations.jsonl"), "--out",
           (dir / "e.jsonl").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SchemaMismatch"), std::string::npos) << r.err;

  r = Invoke({"report", "--outcomes", outcomes.string(), "--rank", "XY"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, EmptyTranslationsGiveHeaderOnlyTags) {
  fixtures::TempDir dir;
  const auto empty = dir / "empty.jsonl";
  WriteText(empty, "");
  const auto tags = dir / "tags.tsv";
  ASSERT_EQ(Invoke({"tag", "--translations", empty.string(), "--dict", Data("dict/es.tsv"), "--out",
                 tags.string()})
                .code,
            0);
  EXPECT_EQ(fixtures::ReadText(tags), "# id\ttoken_index\tform\tgender\tpos\n");
}

TEST(Cli, ReportDeltaAndRank) {
  fixtures::TempDir dir;
  const auto outcomes = dir / "o.jsonl";
  {
    std::ofstream out(outcomes);
    genspect::WriteOutcomes(out, fixtures::FmOccupationOutcomes(100));
  }
  auto r = Invoke({"report", "--outcomes", outcomes.string(), "--rank", "FM", "--format", "markdown"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = [&] {
    std::vector<std::string> v;
    std::istringstream in(r.out);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }();
  ASSERT_EQ(lines.size(), 21u);
  EXPECT_EQ(lines[0], "| occupation_lemma | n | correct | wrong | inconclusive |");
  EXPECT_EQ(lines[2].rfind("| laborer |", 0), 0u) << r.out;
  EXPECT_EQ(lines[20].rfind("| driver |", 0), 0u) << r.out;

  r = Invoke({"report", "--outcomes", outcomes.string(), "--delta"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "lang,delta_m,delta_f\n");
  EXPECT_NE(r.err.find("omitted"), std::string::npos);
}

TEST(Cli, RealBinary) {
  fixtures::TempDir dir;
  const std::string cmd = std::string("\"") + GENSPECT_CLI_BINARY + "\" report --outcomes \"" +
                          (dir / "missing.jsonl").string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  ASSERT_NE(status, -1);
  EXPECT_EQ(WEXITSTATUS(status), 2);
  const std::string ok = std::string("\"") + GENSPECT_CLI_BINARY + "\" --help >/dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(ok.c_str())), 0);
}

}  // namespace
