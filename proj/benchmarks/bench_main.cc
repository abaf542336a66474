#include <benchmark/benchmark.h>

#include <random>

#include "genspect/evaluator.h"
#include "genspect/generator.h"
#include "genspect/metrics.h"

namespace {

using namespace genspect;

const std::filesystem::path kData = GENSPECT_BENCH_DATA_DIR;

void BM_Enumerate(benchmark::State& state) {
  const Grammar grammar = ParseGrammar(kData / "grammar" / "default.grammar");
  const Lexicon lexicon = LoadLexicon(kData / "lexicon");
  EnumerateOptions opts;
  opts.cue_count = static_cast<int>(state.range(0));
  std::size_t n = 0;
  for (auto _ : state) {
    n = 0;
    Enumerate(grammar, lexicon, opts, [&n](const Derivation&) { ++n; });
  }
  state.counters["derivations"] = static_cast<double>(n);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  const Grammar grammar = ParseGrammar(kData / "grammar" / "default.grammar");
  const Lexicon lexicon = LoadLexicon(kData / "lexicon");
  GenerateOptions opts;
  opts.per_quadrant_cap = 100;
  for (auto _ : state) benchmark::DoNotOptimize(GenerateCorpus(grammar, lexicon, opts));
}
BENCHMARK(BM_Generate)->Unit(benchmark::kMillisecond);

std::vector<Outcome> RandomOutcomes(std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<Outcome> out(n);
  for (auto& o : out) {
    o.lang = std::string(1, static_cast<char>('a' + rng() % 20));
    o.verdict = static_cast<Verdict>(rng() % 3);
    o.trigger_gender = static_cast<Gender>(rng() % 2);
    o.occupation_stereotype = static_cast<Gender>(rng() % 2);
    o.occupation_lemma = "occ" + std::to_string(rng() % 38);
  }
  return out;
}

void BM_Aggregate(benchmark::State& state) {
  const auto outcomes = RandomOutcomes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Aggregate(outcomes, {Dimension::kLang, Dimension::kQuadrant}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Aggregate)->Arg(1000)->Arg(100000);

void BM_Classify(benchmark::State& state) {
  SentenceRecord r;
  r.id = "r";
  r.tokens = {"my", "sister", "is", "a", "carpenter", "."};
  r.occupation_index = 4;
  const Translation t{"r", "es", {"Mi", "hermana", "es", "carpintera", "."}};
  const AlignmentSet a{"r", {{4, 3}}};
  MorphTags tags{"r", {}};
  for (const auto& tok : t.tokens) tags.per_token.push_back({tok, GrammaticalGender::kFem, "NOUN"});
  for (auto _ : state) benchmark::DoNotOptimize(Classify(r, &t, &a, &tags));
}
BENCHMARK(BM_Classify);

}  // namespace
BENCHMARK_MAIN();
