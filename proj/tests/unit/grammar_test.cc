#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "fixtures.h"
#include "genspect/error.h"
#include "genspect/grammar.h"
#include "genspect/lexicon.h"

namespace genspect {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no genspect::Error thrown";
  return ErrorCode::kInvalidArgument;
}

const Lexicon& ShippedLexicon() {
  static const Lexicon lex = LoadLexicon(fixtures::LexiconDir());
  return lex;
}

const Grammar& ShippedGrammar() {
  static const Grammar g = ParseGrammar(fixtures::GrammarFile());
  return g;
}

TEST(Unify, Subsumption) {
  const FeatureBundle a{Gender::kF, {}, {}, {}};
  const FeatureBundle b{Gender::kF, TriggerKind::kKinship, {}, {}};
  EXPECT_EQ(Unify(a, b), b);
}

TEST(Unify, Clash) {
  EXPECT_FALSE(Unify(FeatureBundle{Gender::kF, {}, {}, {}}, FeatureBundle{Gender::kM, {}, {}, {}}));
  EXPECT_FALSE(Unify(FeatureBundle{{}, {}, PronounCase::kAcc, {}}, FeatureBundle{{}, {}, PronounCase::kNom, {}}));
}

TEST(Unify, DisjointKeysMerge) {
  const auto u = Unify(FeatureBundle{Gender::kM, {}, {}, {}}, FeatureBundle{{}, {}, {}, Attachment::kOccupation});
  ASSERT_TRUE(u);
  EXPECT_EQ(u->gender, Gender::kM);
  EXPECT_EQ(u->cue_attachment, Attachment::kOccupation);
}

TEST(Grammar, ShippedGrammarParses) {
  const Grammar& g = ShippedGrammar();
  EXPECT_GE(g.frames().size(), 12u);
  EXPECT_EQ(g.frames().size(), 21u);
  EXPECT_TRUE(std::is_sorted(g.frames().begin(), g.frames().end(),
                             [](const Frame& a, const Frame& b) { return a.id < b.id; }));
  const Frame* f = g.FindFrame("F-POSS-AFTER");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->slots[f->primary_trigger].name, "trigger2");
  EXPECT_EQ(f->trigger_position, TriggerPosition::kAfter);
  EXPECT_EQ(g.digest().size(), 64u);
  EXPECT_EQ(g.depth_bound(), 3u);
}

TEST(Grammar, FamilyAndCueCount) {
  const Frame* f = ShippedGrammar().FindFrame("F-REFL/vobj+vsubj");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->family(), "F-REFL");
  EXPECT_EQ(f->cue_count(), 2);
  EXPECT_EQ(ShippedGrammar().FindFrame("F-REFL")->family(), "F-REFL");
}

TEST(Grammar, LastCommentIsTheFrameNote) {
  const Frame* f = ShippedGrammar().FindFrame("F-CATAPHORA");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->unambiguity_note, "cataphoric possessive with \"own\"");
}

TEST(Grammar, SelfRecursionIsRejected) {
  EXPECT_EQ(CodeOf([] { ParseGrammarText("NP -> NP\nframe F position=before := <TRIGGER:kin> NP <OCC>\n"); }),
            ErrorCode::kRecursionDetected);
  EXPECT_EQ(CodeOf([] { ParseGrammarText("AA -> BB x\nBB -> y | AA\n"); }), ErrorCode::kRecursionDetected);
}

TEST(Grammar, OccSlotCountIsChecked) {
  EXPECT_EQ(CodeOf([] { ParseGrammarText("frame F position=before := <TRIGGER:kin> <OCC> <OCC>\n"); }),
            ErrorCode::kMissingOccSlot);
  EXPECT_EQ(CodeOf([] { ParseGrammarText("frame F position=before := <TRIGGER:kin> is here\n"); }),
            ErrorCode::kMissingOccSlot);
}

TEST(Grammar, TriggerSlotIsRequired) {
  EXPECT_EQ(CodeOf([] { ParseGrammarText("frame F position=before := the <OCC> .\n"); }),
            ErrorCode::kMissingTriggerSlot);
}

TEST(Grammar, PositionMustMatchSlotOrder) {
  EXPECT_EQ(CodeOf([] { ParseGrammarText("frame F position=after := my <TRIGGER:kin> is a <OCC> .\n"); }),
            ErrorCode::kPositionMismatch);
}

TEST(Grammar, TriggersMustBeLinked) {
  const char* text = "frame F position=after := the <OCC> is <TRIGGER:pron case=poss> <TRIGGER:kin> .\n";
  EXPECT_EQ(CodeOf([&] { ParseGrammarText(text); }), ErrorCode::kUnlinkedTriggers);
  const std::string linked = std::string(text) + "constraint F trigger1.gender == trigger2.gender\n";
  EXPECT_NO_THROW(ParseGrammarText(linked));
}

TEST(Grammar, SyntaxErrorsCarryTheLine) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"# c\nframe F position=before := <TRIGGER:kin> NOPE <OCC>\n", "line 2"},
      {"frame F position=before := <TRIGGER:kin> <OCC>\nframe F position=before := <TRIGGER:kin> <OCC>\n", "line 2"},
      {"AA -> x | x\n", "line 1"},
      {"frame F position=sideways := <TRIGGER:kin> <OCC>\n", "line 1"},
      {"frame F := <TRIGGER:kin> <OCC>\n", "line 1"},
      {"frame F position=before := <TRIGGER:pron> <OCC>\n", "line 1"},
      {"frame F position=before := <TRIGGER:kin> <OCC> <BOGUS>\n", "line 1"},
      {"frame F position=before := <TRIGGER:kin> <ADJ form=past> <OCC>\n", "line 1"},
      {"frame F position=before := <TRIGGER:kin> <OCC>\nconstraint F occ.gender == trigger1.gender\n", "line 2"},
      {"frame F position=before := <TRIGGER:kin> <OCC>\nconstraint G trigger1.gender == trigger1.gender\n", "line 2"},
      {"frame F position=before := <TRIGGER:kin> <OCC>\nconstraint F trigger1 == trigger1.gender\n", "line 2"},
      {"this is not a grammar line\n", "line 1"},
  };
  for (const auto& [text, where] : cases) {
    try {
      ParseGrammarText(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSyntaxError) << text;
      EXPECT_NE(std::string(e.what()).find(where), std::string::npos) << e.what();
    }
  }
}

TEST(Grammar, PastTense) {
  const Grammar g = ParseGrammarText("past weep wept\n");
  EXPECT_EQ(g.PastTense("weep"), "wept");
  EXPECT_EQ(g.PastTense("smile"), "smiled");
  EXPECT_EQ(g.PastTense("cry"), "cried");
  EXPECT_EQ(g.PastTense("play"), "played");
  EXPECT_EQ(g.PastTense("help"), "helped");
}

TEST(Grammar, ExpansionsFollowRuleOrder) {
  const Grammar g = ParseGrammarText("AA -> x BB | y\nBB -> p | q\n");
  EXPECT_EQ(g.Expansions("AA"),
            (std::vector<std::vector<std::string>>{{"x", "p"}, {"x", "q"}, {"y"}}));
}

TEST(Enumerate, SingleKinFrameCount) {
  EnumerateOptions opts;
  opts.frames = std::set<std::string>{"F-COP-KIN-BEFORE"};
  const auto all = EnumerateAll(ShippedGrammar(), ShippedLexicon(), opts);
  EXPECT_EQ(all.size(), 12u * 38u);
}

TEST(Enumerate, EmptyFilterSelectsNothing) {
  EnumerateOptions opts;
  opts.frames = std::set<std::string>{};
  EXPECT_TRUE(EnumerateAll(ShippedGrammar(), ShippedLexicon(), opts).empty());
}

TEST(Enumerate, FamilyFilterHonoursCueCount) {
  EnumerateOptions opts;
  opts.frames = std::set<std::string>{"F-REFL"};
  opts.cue_count = 2;
  const auto all = EnumerateAll(ShippedGrammar(), ShippedLexicon(), opts);
  ASSERT_FALSE(all.empty());
  for (const auto& d : all) EXPECT_EQ(d.frame_id, "F-REFL/vobj+vsubj");
}

TEST(Enumerate, BadCueCount) {
  EnumerateOptions opts;
  opts.cue_count = 3;
  EXPECT_EQ(CodeOf([&] { EnumerateAll(ShippedGrammar(), ShippedLexicon(), opts); }),
            ErrorCode::kInvalidArgument);
}

TEST(Enumerate, EmptySlotClass) {
  const Grammar g = ParseGrammarText("frame F position=before := my <TRIGGER:partner> is a/an <OCC> .\n");
  const Lexicon lex = ParseLexicon("sister\tF\tkinship\t-\nbrother\tM\tkinship\t-\n", "nurse\tF\njanitor\tM\n", "");
  EXPECT_EQ(CodeOf([&] { EnumerateAll(g, lex, {}); }), ErrorCode::kEmptySlotClass);
}

TEST(Enumerate, OrderIsOdometerOverLexiconOrder) {
  const Grammar g = ParseGrammarText("frame F position=before := my <TRIGGER:kin> is a/an <OCC> .\n");
  const Lexicon lex = ParseLexicon("sister\tF\tkinship\t-\nbrother\tM\tkinship\t-\n",
                                   "nurse\tF\nengineer\tM\n", "");
  std::vector<std::string> texts;
  for (const auto& d : EnumerateAll(g, lex, {})) {
    std::string t;
    for (const auto& tok : d.tokens) t += (t.empty() ? "" : " ") + tok;
    texts.push_back(t);
  }
  EXPECT_EQ(texts, (std::vector<std::string>{"my sister is a nurse .", "my sister is an engineer .",
                                              "my brother is a nurse .", "my brother is an engineer ."}));
}

TEST(Enumerate, AgreementRestrictsLinkedCues) {
  const Grammar g = ParseGrammarText(
      "frame F position=before := my <ADJ> <TRIGGER:kin> is a/an <OCC> .\n"
      "constraint F adj1.gender == trigger1.gender\n");
  const Lexicon lex = ParseLexicon("sister\tF\tkinship\t-\nbrother\tM\tkinship\t-\n", "nurse\tF\njanitor\tM\n",
                                   "gentle\tadjective\tF\nkind\tadjective\tF\nstrong\tadjective\tM\n");
  EnumerateOptions opts;
  opts.cue_count = 1;
  const auto all = EnumerateAll(g, lex, opts);
  // (2 F adjectives with sister + 1 M adjective with brother) x 2 occupations.
  ASSERT_EQ(all.size(), 6u);
  for (const auto& d : all) {
    const bool f_adj = d.Find("adj1")->value != "strong";
    EXPECT_EQ(f_adj, d.Find("trigger1")->value == "sister");
  }
}

TEST(Realize, SisterCarpenter) {
  const Derivation d = Realize(ShippedGrammar(), ShippedLexicon(), "F-COP-KIN-BEFORE",
                               {{"trigger1", "sister"}, {"occ", "carpenter"}});
  EXPECT_EQ(d.tokens, (std::vector<std::string>{"my", "sister", "is", "a", "carpenter", "."}));
  EXPECT_EQ(d.Find("occ")->token_index, 4u);
  EXPECT_EQ(d.Find("trigger1")->token_index, 1u);
}

TEST(Realize, ArticleFollowsTheOccupation) {
  const Derivation d = Realize(ShippedGrammar(), ShippedLexicon(), "F-COP-KIN-BEFORE",
                               {{"trigger1", "sister"}, {"occ", "engineer"}});
  EXPECT_EQ(d.tokens[3], "an");
}

TEST(Realize, NonterminalChoicePoint) {
  const Derivation d = Realize(ShippedGrammar(), ShippedLexicon(), "F-CATAPHORA",
                               {{"trigger1", "his"}, {"NEUTRAL_EVENT#1", "left"}, {"occ", "nurse"}});
  EXPECT_EQ(d.tokens, (std::vector<std::string>{"that", "his", "own", "child", "left", "surprised", "the",
                                                "nurse", "."}));
  EXPECT_EQ(d.Find("occ")->token_index, 7u);
}

TEST(Realize, PastFormOfVerbCue) {
  const Derivation d = Realize(ShippedGrammar(), ShippedLexicon(), "F-CATAPHORA/vsubj",
                               {{"trigger1", "her"}, {"vsubj1", "weep"}, {"occ", "guard"}});
  EXPECT_EQ(d.tokens[4], "wept");
}

TEST(Realize, Errors) {
  const auto& g = ShippedGrammar();
  const auto& lex = ShippedLexicon();
  EXPECT_EQ(CodeOf([&] { Realize(g, lex, "NOPE", {}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { Realize(g, lex, "F-COP-KIN-BEFORE", {{"trigger1", "sister"}}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { Realize(g, lex, "F-COP-KIN-BEFORE", {{"trigger1", "she"}, {"occ", "nurse"}}); }),
            ErrorCode::kUnknownLemma);
  EXPECT_EQ(CodeOf([&] {
              Realize(g, lex, "F-POSS-AFTER",
                      {{"occ", "nurse"}, {"trigger1", "his"}, {"trigger2", "sister"}});
            }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace genspect
