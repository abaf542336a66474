#include "genspect/grammar.h"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "genspect/error.h"
#include "genspect/hash.h"
#include "text_util.h"

namespace genspect {

std::optional<FeatureBundle> Unify(const FeatureBundle& a, const FeatureBundle& b) {
  FeatureBundle out = a;
  bool ok = true;
  auto merge = [&ok](auto& into, const auto& from) {
    if (!from) return;
    if (into && *into != *from) {
      ok = false;
      return;
    }
    into = from;
  };
  merge(out.gender, b.gender);
  merge(out.trigger_kind, b.trigger_kind);
  merge(out.pronoun_case, b.pronoun_case);
  merge(out.cue_attachment, b.cue_attachment);
  if (!ok) return std::nullopt;
  return out;
}

std::string_view ToString(SlotClass c) {
  switch (c) {
    case SlotClass::kTrigger: return "TRIGGER";
    case SlotClass::kOcc: return "OCC";
    case SlotClass::kAdjCue: return "ADJ";
    case SlotClass::kVSubjCue: return "VSUBJ";
    case SlotClass::kVObjCue: return "VOBJ";
  }
  return "OCC";
}

bool IsCueSlot(SlotClass c) {
  return c == SlotClass::kAdjCue || c == SlotClass::kVSubjCue || c == SlotClass::kVObjCue;
}

int Frame::cue_count() const {
  return static_cast<int>(std::count_if(slots.begin(), slots.end(),
                                        [](const Slot& s) { return IsCueSlot(s.slot_class); }));
}

std::string_view Frame::family() const {
  std::string_view v = id;
  return v.substr(0, v.find('/'));
}

const Slot* Frame::FindSlot(std::string_view name) const {
  for (const auto& s : slots) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const SlotBinding* Derivation::Find(std::string_view slot) const {
  for (const auto& b : bindings) {
    if (b.slot == slot) return &b;
  }
  return nullptr;
}

Grammar::Grammar(std::vector<Frame> frames, std::map<std::string, std::vector<Alternative>> rules,
                 std::map<std::string, std::string> irregular_past, std::size_t depth_bound,
                 std::string digest)
    : frames_(std::move(frames)),
      rules_(std::move(rules)),
      irregular_past_(std::move(irregular_past)),
      depth_bound_(depth_bound),
      digest_(std::move(digest)) {
  std::sort(frames_.begin(), frames_.end(),
            [](const Frame& a, const Frame& b) { return a.id < b.id; });
}

const Frame* Grammar::FindFrame(std::string_view id) const {
  for (const auto& f : frames_) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

std::vector<std::vector<std::string>> Grammar::Expansions(const std::string& nonterminal) const {
  std::vector<std::vector<std::string>> out;
  const auto it = rules_.find(nonterminal);
  if (it == rules_.end()) return out;
  for (const auto& alt : it->second) {
    std::vector<std::vector<std::string>> partial{{}};
    for (const auto& sym : alt) {
      if (sym.kind == SymbolKind::kNonterminal) {
        const auto sub = Expansions(sym.text);
        std::vector<std::vector<std::string>> next;
        for (const auto& prefix : partial) {
          for (const auto& tail : sub) {
            auto joined = prefix;
            joined.insert(joined.end(), tail.begin(), tail.end());
            next.push_back(std::move(joined));
          }
        }
        partial = std::move(next);
      } else {
        const std::string tok = sym.kind == SymbolKind::kArticle ? "a/an" : sym.text;
        for (auto& prefix : partial) prefix.push_back(tok);
      }
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

std::string Grammar::PastTense(std::string_view verb) const {
  const auto it = irregular_past_.find(std::string(verb));
  if (it != irregular_past_.end()) return it->second;
  std::string out(verb);
  if (out.empty()) return out;
  auto is_vowel = [](char c) { return std::string_view("aeiou").find(c) != std::string_view::npos; };
  if (out.back() == 'e') return out + "d";
  if (out.back() == 'y' && out.size() > 1 && !is_vowel(out[out.size() - 2])) {
    out.pop_back();
    return out + "ied";
  }
  return out + "ed";
}

namespace {

using internal::Lines;
using internal::SplitWhitespace;
using internal::Trim;

Error SyntaxAt(std::size_t line, const std::string& why) {
  return Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ": " + why);
}

bool IsNonterminalName(std::string_view s) {
  if (s.size() < 2 || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isupper(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '_';
  });
}

// Splits a right-hand side into tokens, keeping <...> slot specs whole.
std::vector<std::string> TokenizeRhs(std::string_view rhs, std::size_t line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < rhs.size()) {
    if (rhs[i] == ' ' || rhs[i] == '\t') {
      ++i;
      continue;
    }
    if (rhs[i] == '<') {
      const auto close = rhs.find('>', i);
      if (close == std::string_view::npos) throw SyntaxAt(line, "unterminated slot '<'");
      out.emplace_back(rhs.substr(i, close - i + 1));
      i = close + 1;
      continue;
    }
    const std::size_t start = i;
    while (i < rhs.size() && rhs[i] != ' ' && rhs[i] != '\t') ++i;
    out.emplace_back(rhs.substr(start, i - start));
  }
  return out;
}

std::map<std::string, std::string> ParseAttrs(const std::vector<std::string_view>& parts,
                                              std::size_t first, std::size_t line) {
  std::map<std::string, std::string> attrs;
  for (std::size_t i = first; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == parts[i].size()) {
      throw SyntaxAt(line, "expected key=value, got '" + std::string(parts[i]) + "'");
    }
    const std::string key(parts[i].substr(0, eq));
    if (!attrs.emplace(key, std::string(parts[i].substr(eq + 1))).second) {
      throw SyntaxAt(line, "repeated attribute '" + key + "'");
    }
  }
  return attrs;
}

struct SlotCounters {
  int trigger = 0;
  int occ = 0;
  int adj = 0;
  int vsubj = 0;
  int vobj = 0;
};

Slot ParseSlot(std::string_view spec, std::size_t line, SlotCounters& counters) {
  const auto parts = SplitWhitespace(spec);
  if (parts.empty()) throw SyntaxAt(line, "empty slot '<>'");
  const std::string_view head = parts[0];
  const auto colon = head.find(':');
  const std::string_view cls = head.substr(0, colon);
  const std::string_view sub =
      colon == std::string_view::npos ? std::string_view{} : head.substr(colon + 1);
  auto attrs = ParseAttrs(parts, 1, line);
  auto take = [&attrs](const std::string& key) -> std::optional<std::string> {
    auto it = attrs.find(key);
    if (it == attrs.end()) return std::nullopt;
    std::string v = it->second;
    attrs.erase(it);
    return v;
  };

  Slot slot;
  std::string default_name;
  if (cls == "TRIGGER") {
    slot.slot_class = SlotClass::kTrigger;
    default_name = "trigger" + std::to_string(++counters.trigger);
    if (sub == "kin" || sub == "kinship") {
      slot.features.trigger_kind = TriggerKind::kKinship;
    } else if (sub == "partner") {
      slot.features.trigger_kind = TriggerKind::kPartner;
    } else if (sub == "pron" || sub == "pronoun") {
      slot.features.trigger_kind = TriggerKind::kPronoun;
      const auto pcase = take("case");
      if (!pcase) throw SyntaxAt(line, "pronoun slot needs case=nom|acc|poss|refl");
      slot.features.pronoun_case = ParsePronounCase(*pcase);
      if (!slot.features.pronoun_case) throw SyntaxAt(line, "bad pronoun case '" + *pcase + "'");
    } else {
      throw SyntaxAt(line, "TRIGGER needs :kin, :partner or :pron, got '" + std::string(head) + "'");
    }
  } else if (!sub.empty()) {
    throw SyntaxAt(line, "unexpected subclass in '" + std::string(head) + "'");
  } else if (cls == "OCC") {
    slot.slot_class = SlotClass::kOcc;
    default_name = ++counters.occ == 1 ? "occ" : "occ" + std::to_string(counters.occ);
  } else if (cls == "ADJ" || cls == "VSUBJ" || cls == "VOBJ") {
    if (cls == "ADJ") {
      slot.slot_class = SlotClass::kAdjCue;
      default_name = "adj" + std::to_string(++counters.adj);
    } else if (cls == "VSUBJ") {
      slot.slot_class = SlotClass::kVSubjCue;
      default_name = "vsubj" + std::to_string(++counters.vsubj);
    } else {
      slot.slot_class = SlotClass::kVObjCue;
      default_name = "vobj" + std::to_string(++counters.vobj);
    }
    const auto attach = take("attach");
    slot.features.cue_attachment = attach ? ParseAttachment(*attach) : Attachment::kTrigger;
    if (!slot.features.cue_attachment) throw SyntaxAt(line, "bad attach '" + *attach + "'");
    if (const auto form = take("form")) {
      if (slot.slot_class == SlotClass::kAdjCue) throw SyntaxAt(line, "form= applies to verbs only");
      if (*form == "past") {
        slot.verb_form = VerbForm::kPast;
      } else if (*form != "base") {
        throw SyntaxAt(line, "bad verb form '" + *form + "'");
      }
    }
  } else {
    throw SyntaxAt(line, "unknown slot class '" + std::string(cls) + "'");
  }
  slot.name = take("name").value_or(default_name);
  if (!attrs.empty()) throw SyntaxAt(line, "unknown slot attribute '" + attrs.begin()->first + "'");
  return slot;
}

struct RawFrame {
  std::string id;
  std::map<std::string, std::string> attrs;
  std::string rhs;
  std::size_t line = 0;
  std::string note;
};

struct RawConstraint {
  std::string frame;
  GenderEquation equation;
  std::size_t line = 0;
};

struct RawRule {
  std::string name;
  std::string rhs;
  std::size_t line = 0;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(std::size_t a, std::size_t b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::string_view SlotOfGenderRef(std::string_view ref, std::size_t line) {
  constexpr std::string_view kSuffix = ".gender";
  if (ref.size() <= kSuffix.size() || ref.substr(ref.size() - kSuffix.size()) != kSuffix) {
    throw SyntaxAt(line, "expected <slot>.gender, got '" + std::string(ref) + "'");
  }
  return ref.substr(0, ref.size() - kSuffix.size());
}

// Resolves each token of a right-hand side to a symbol. Slots are only
// legal when `slots` is non-null (frames).
std::vector<Symbol> ResolveSymbols(const std::vector<std::string>& tokens,
                                   const std::map<std::string, std::vector<RawRule>>& rules,
                                   std::size_t line, std::vector<Slot>* slots) {
  std::vector<Symbol> out;
  SlotCounters counters;
  for (const auto& tok : tokens) {
    Symbol sym;
    if (tok.front() == '<') {
      if (slots == nullptr) throw SyntaxAt(line, "slots are only allowed in frames");
      Slot slot = ParseSlot(std::string_view(tok).substr(1, tok.size() - 2), line, counters);
      for (const auto& s : *slots) {
        if (s.name == slot.name) throw SyntaxAt(line, "duplicate slot name '" + slot.name + "'");
      }
      sym.kind = SymbolKind::kSlot;
      sym.slot = slots->size();
      slots->push_back(std::move(slot));
    } else if (tok == "a/an") {
      sym.kind = SymbolKind::kArticle;
      sym.text = tok;
    } else if (IsNonterminalName(tok)) {
      if (rules.find(tok) == rules.end()) throw SyntaxAt(line, "undefined nonterminal '" + tok + "'");
      sym.kind = SymbolKind::kNonterminal;
      sym.text = tok;
    } else {
      sym.kind = SymbolKind::kLiteral;
      sym.text = tok;
    }
    out.push_back(std::move(sym));
  }
  return out;
}

// Depth of a nonterminal; detects cycles with the usual three-colour DFS.
std::size_t NonterminalDepth(const std::string& name,
                             const std::map<std::string, std::vector<Grammar::Alternative>>& rules,
                             std::map<std::string, int>& colour,
                             std::map<std::string, std::size_t>& depth) {
  auto& c = colour[name];
  if (c == 2) return depth[name];
  if (c == 1) throw Error(ErrorCode::kRecursionDetected, "nonterminal '" + name + "' derives itself");
  c = 1;
  std::size_t best = 1;
  for (const auto& alt : rules.at(name)) {
    for (const auto& sym : alt) {
      const std::size_t d = sym.kind == SymbolKind::kNonterminal
                                ? NonterminalDepth(sym.text, rules, colour, depth)
                                : 1;
      best = std::max(best, d + 1);
    }
  }
  colour[name] = 2;
  depth[name] = best;
  return best;
}

}  // namespace

Grammar ParseGrammarText(std::string_view text) {
  const auto lines = Lines(text);
  std::vector<RawFrame> raw_frames;
  std::vector<RawConstraint> raw_constraints;
  std::map<std::string, std::vector<RawRule>> raw_rules;
  std::map<std::string, std::string> irregular_past;
  std::string last_comment;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const std::string_view line = Trim(lines[i]);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view note = line;
      while (!note.empty() && (note.front() == '#' || note.front() == '-' || note.front() == ' ')) {
        note.remove_prefix(1);
      }
      while (!note.empty() && (note.back() == '-' || note.back() == ' ')) note.remove_suffix(1);
      if (!note.empty()) last_comment = std::string(note);
      continue;
    }
    const auto words = SplitWhitespace(line);
    if (words[0] == "frame") {
      const auto assign = line.find(":=");
      if (assign == std::string_view::npos) throw SyntaxAt(lineno, "frame line needs ':='");
      const auto head = SplitWhitespace(line.substr(0, assign));
      if (head.size() < 2) throw SyntaxAt(lineno, "frame needs an id");
      RawFrame f;
      f.id = std::string(head[1]);
      f.attrs = ParseAttrs(head, 2, lineno);
      f.rhs = std::string(Trim(line.substr(assign + 2)));
      f.line = lineno;
      f.note = last_comment;
      raw_frames.push_back(std::move(f));
    } else if (words[0] == "constraint") {
      if (words.size() != 5 || words[3] != "==") {
        throw SyntaxAt(lineno, "expected: constraint <frame> <a>.gender == <b>.gender");
      }
      RawConstraint c;
      c.frame = std::string(words[1]);
      c.equation.lhs = std::string(SlotOfGenderRef(words[2], lineno));
      c.equation.rhs = std::string(SlotOfGenderRef(words[4], lineno));
      c.line = lineno;
      raw_constraints.push_back(std::move(c));
    } else if (words[0] == "past") {
      if (words.size() != 3) throw SyntaxAt(lineno, "expected: past <verb> <form>");
      irregular_past[std::string(words[1])] = std::string(words[2]);
    } else if (words.size() >= 2 && words[1] == "->") {
      if (!IsNonterminalName(words[0])) {
        throw SyntaxAt(lineno, "bad nonterminal name '" + std::string(words[0]) + "'");
      }
      const auto arrow = line.find("->");
      raw_rules[std::string(words[0])].push_back(
          RawRule{std::string(words[0]), std::string(line.substr(arrow + 2)), lineno});
    } else {
      throw SyntaxAt(lineno, "unrecognised line");
    }
  }

  std::map<std::string, std::vector<Grammar::Alternative>> rules;
  for (const auto& [name, defs] : raw_rules) {
    auto& alts = rules[name];
    std::set<std::vector<std::string>> seen;
    for (const auto& def : defs) {
      for (auto alt_text : internal::Split(def.rhs, '|')) {
        auto tokens = TokenizeRhs(alt_text, def.line);
        if (!seen.insert(tokens).second) {
          throw SyntaxAt(def.line, "duplicate alternative in rule '" + name + "'");
        }
        alts.push_back(ResolveSymbols(tokens, raw_rules, def.line, nullptr));
      }
    }
  }

  std::map<std::string, int> colour;
  std::map<std::string, std::size_t> nt_depth;
  for (const auto& [name, _] : rules) NonterminalDepth(name, rules, colour, nt_depth);

  std::vector<Frame> frames;
  std::size_t depth_bound = 0;
  std::set<std::string> frame_ids;
  for (const auto& raw : raw_frames) {
    if (!frame_ids.insert(raw.id).second) throw SyntaxAt(raw.line, "duplicate frame id '" + raw.id + "'");
    Frame frame;
    frame.id = raw.id;
    frame.unambiguity_note = raw.note;
    frame.rhs = ResolveSymbols(TokenizeRhs(raw.rhs, raw.line), raw_rules, raw.line, &frame.slots);
    if (frame.rhs.empty()) throw SyntaxAt(raw.line, "empty frame '" + raw.id + "'");

    auto attrs = raw.attrs;
    const auto pos_it = attrs.find("position");
    if (pos_it == attrs.end()) throw SyntaxAt(raw.line, "frame '" + raw.id + "' needs position=");
    const auto position = ParseTriggerPosition(pos_it->second);
    if (!position) throw SyntaxAt(raw.line, "bad position '" + pos_it->second + "'");
    frame.trigger_position = *position;
    attrs.erase(pos_it);
    std::optional<std::string> primary_name;
    if (auto it = attrs.find("primary"); it != attrs.end()) {
      primary_name = it->second;
      attrs.erase(it);
    }
    if (!attrs.empty()) throw SyntaxAt(raw.line, "unknown frame attribute '" + attrs.begin()->first + "'");

    std::vector<std::size_t> occ_slots;
    std::vector<std::size_t> trigger_slots;
    for (std::size_t s = 0; s < frame.slots.size(); ++s) {
      if (frame.slots[s].slot_class == SlotClass::kOcc) occ_slots.push_back(s);
      if (frame.slots[s].slot_class == SlotClass::kTrigger) trigger_slots.push_back(s);
    }
    if (occ_slots.size() != 1) {
      throw Error(ErrorCode::kMissingOccSlot, "frame '" + raw.id + "' has " +
                                                  std::to_string(occ_slots.size()) +
                                                  " OCC slots; exactly one is required");
    }
    if (trigger_slots.empty()) {
      throw Error(ErrorCode::kMissingTriggerSlot, "frame '" + raw.id + "' has no TRIGGER slot");
    }
    frame.occ_slot = occ_slots[0];
    frame.primary_trigger = trigger_slots[0];
    if (primary_name) {
      const auto it = std::find_if(trigger_slots.begin(), trigger_slots.end(), [&](std::size_t s) {
        return frame.slots[s].name == *primary_name;
      });
      if (it == trigger_slots.end()) {
        throw SyntaxAt(raw.line, "primary='" + *primary_name + "' is not a trigger slot");
      }
      frame.primary_trigger = *it;
    }

    auto symbol_of_slot = [&frame](std::size_t slot) {
      for (std::size_t i = 0; i < frame.rhs.size(); ++i) {
        if (frame.rhs[i].kind == SymbolKind::kSlot && frame.rhs[i].slot == slot) return i;
      }
      return frame.rhs.size();
    };
    const bool trigger_first = symbol_of_slot(frame.primary_trigger) < symbol_of_slot(frame.occ_slot);
    if (trigger_first != (frame.trigger_position == TriggerPosition::kBefore)) {
      throw Error(ErrorCode::kPositionMismatch,
                  "frame '" + raw.id + "' declares position=" +
                      std::string(ToString(frame.trigger_position)) +
                      " but its primary trigger comes " + (trigger_first ? "before" : "after") +
                      " the OCC slot");
    }

    std::size_t depth = 1;
    for (const auto& sym : frame.rhs) {
      depth = std::max(depth, sym.kind == SymbolKind::kNonterminal ? nt_depth[sym.text] + 1 : 2);
    }
    depth_bound = std::max(depth_bound, depth);
    frames.push_back(std::move(frame));
  }

  for (const auto& c : raw_constraints) {
    auto it = std::find_if(frames.begin(), frames.end(), [&](const Frame& f) { return f.id == c.frame; });
    if (it == frames.end()) throw SyntaxAt(c.line, "constraint on unknown frame '" + c.frame + "'");
    for (const auto* name : {&c.equation.lhs, &c.equation.rhs}) {
      const Slot* slot = it->FindSlot(*name);
      if (slot == nullptr) throw SyntaxAt(c.line, "unknown slot '" + *name + "' in frame '" + c.frame + "'");
      if (slot->slot_class == SlotClass::kOcc) {
        throw SyntaxAt(c.line, "slot '" + *name + "' carries no gender feature");
      }
    }
    it->constraints.push_back(c.equation);
  }

  for (const auto& frame : frames) {
    UnionFind uf(frame.slots.size());
    auto index_of = [&frame](const std::string& name) {
      for (std::size_t s = 0; s < frame.slots.size(); ++s) {
        if (frame.slots[s].name == name) return s;
      }
      return frame.slots.size();
    };
    for (const auto& eq : frame.constraints) uf.Union(index_of(eq.lhs), index_of(eq.rhs));
    for (std::size_t s = 0; s < frame.slots.size(); ++s) {
      if (frame.slots[s].slot_class == SlotClass::kTrigger &&
          uf.Find(s) != uf.Find(frame.primary_trigger)) {
        throw Error(ErrorCode::kUnlinkedTriggers,
                    "frame '" + frame.id + "': trigger '" + frame.slots[s].name +
                        "' has no gender equation linking it to '" +
                        frame.slots[frame.primary_trigger].name + "'");
      }
    }
  }

  return Grammar(std::move(frames), std::move(rules), std::move(irregular_past), depth_bound,
                 Sha256Hex(text));
}

Grammar ParseGrammar(const std::filesystem::path& path) {
  return ParseGrammarText(internal::ReadFile(path));
}

bool FrameSelected(const Frame& frame, const EnumerateOptions& options) {
  if (frame.cue_count() != options.cue_count) return false;
  if (!options.frames) return true;
  return options.frames->count(frame.id) > 0 || options.frames->count(std::string(frame.family())) > 0;
}

namespace {

struct ChoicePoint {
  std::string name;
  std::optional<std::size_t> frame_slot;
  std::vector<std::size_t> entries;
  std::vector<std::string> values;
  std::vector<std::vector<std::string>> surfaces;
  std::vector<FeatureBundle> features;
  // Agreement class of the slot; -1 when the choice carries no gender.
  int agreement_class = -1;
};

struct CompiledFrame {
  const Frame* frame = nullptr;
  std::vector<ChoicePoint> points;
  // Choice point index per rhs symbol, or -1 for literals and articles.
  std::vector<int> point_of_symbol;
  std::size_t class_count = 0;
};

CompiledFrame Compile(const Grammar& grammar, const Lexicon& lexicon, const Frame& frame) {
  CompiledFrame cf;
  cf.frame = &frame;

  UnionFind uf(frame.slots.size());
  for (const auto& eq : frame.constraints) {
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t s = 0; s < frame.slots.size(); ++s) {
      if (frame.slots[s].name == eq.lhs) a = s;
      if (frame.slots[s].name == eq.rhs) b = s;
    }
    uf.Union(a, b);
  }
  std::map<std::size_t, int> class_ids;

  int nonterminal_ordinal = 0;
  for (const auto& sym : frame.rhs) {
    if (sym.kind == SymbolKind::kLiteral || sym.kind == SymbolKind::kArticle) {
      cf.point_of_symbol.push_back(-1);
      continue;
    }
    ChoicePoint cp;
    if (sym.kind == SymbolKind::kNonterminal) {
      cp.name = sym.text + "#" + std::to_string(++nonterminal_ordinal);
      const auto expansions = grammar.Expansions(sym.text);
      for (std::size_t e = 0; e < expansions.size(); ++e) {
        cp.entries.push_back(e);
        cp.values.push_back(internal::Join(expansions[e], " "));
        cp.surfaces.push_back(expansions[e]);
        cp.features.emplace_back();
      }
    } else {
      const Slot& slot = frame.slots[sym.slot];
      cp.name = slot.name;
      cp.frame_slot = sym.slot;
      switch (slot.slot_class) {
        case SlotClass::kTrigger: {
          const auto& triggers = lexicon.triggers();
          for (std::size_t e = 0; e < triggers.size(); ++e) {
            const auto& t = triggers[e];
            FeatureBundle entry{t.gender, t.kind, t.pronoun_case, std::nullopt};
            if (!Unify(slot.features, entry)) continue;
            cp.entries.push_back(e);
            cp.values.push_back(t.lemma);
            cp.surfaces.push_back({t.lemma});
            cp.features.push_back(FeatureBundle{t.gender, {}, {}, {}});
          }
          break;
        }
        case SlotClass::kOcc: {
          const auto& occupations = lexicon.occupations();
          for (std::size_t e = 0; e < occupations.size(); ++e) {
            cp.entries.push_back(e);
            cp.values.push_back(occupations[e].lemma);
            cp.surfaces.push_back({occupations[e].surface});
            cp.features.emplace_back();
          }
          break;
        }
        case SlotClass::kAdjCue:
        case SlotClass::kVSubjCue:
        case SlotClass::kVObjCue: {
          const CueKind wanted = slot.slot_class == SlotClass::kAdjCue    ? CueKind::kAdjective
                                 : slot.slot_class == SlotClass::kVSubjCue ? CueKind::kVerbSubj
                                                                          : CueKind::kVerbObj;
          const auto& cues = lexicon.cues();
          for (std::size_t e = 0; e < cues.size(); ++e) {
            const auto& c = cues[e];
            if (c.kind != wanted) continue;
            cp.entries.push_back(e);
            cp.values.push_back(c.lemma);
            cp.surfaces.push_back(
                {slot.verb_form == VerbForm::kPast ? grammar.PastTense(c.lemma) : c.lemma});
            cp.features.push_back(FeatureBundle{c.indicative_gender, {}, {}, {}});
          }
          break;
        }
      }
      if (slot.slot_class != SlotClass::kOcc) {
        const auto root = uf.Find(sym.slot);
        auto [it, inserted] = class_ids.emplace(root, static_cast<int>(class_ids.size()));
        cp.agreement_class = it->second;
      }
    }
    cf.point_of_symbol.push_back(static_cast<int>(cf.points.size()));
    cf.points.push_back(std::move(cp));
  }
  cf.class_count = class_ids.size();
  return cf;
}

void ResolveArticles(std::vector<std::string>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] != "a/an") continue;
    bool vowel = false;
    if (i + 1 < tokens.size() && !tokens[i + 1].empty()) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(tokens[i + 1][0])));
      vowel = std::string_view("aeiou").find(c) != std::string_view::npos;
    }
    tokens[i] = vowel ? "an" : "a";
  }
}

class Walker {
 public:
  Walker(const CompiledFrame& cf, const std::function<void(const Derivation&)>& sink)
      : cf_(cf), sink_(sink), classes_(cf.class_count), picks_(cf.points.size()) {}

  void Run() { Visit(0); }

 private:
  void Visit(std::size_t k) {
    if (k == cf_.points.size()) {
      Emit();
      return;
    }
    const ChoicePoint& cp = cf_.points[k];
    for (std::size_t c = 0; c < cp.entries.size(); ++c) {
      picks_[k] = c;
      if (cp.agreement_class < 0) {
        Visit(k + 1);
        continue;
      }
      auto& state = classes_[static_cast<std::size_t>(cp.agreement_class)];
      const auto merged = Unify(state, cp.features[c]);
      if (!merged) continue;
      const FeatureBundle saved = state;
      state = *merged;
      Visit(k + 1);
      state = saved;
    }
  }

  void Emit() {
    Derivation d;
    d.frame_id = cf_.frame->id;
    d.bindings.reserve(cf_.points.size());
    for (std::size_t i = 0; i < cf_.frame->rhs.size(); ++i) {
      const Symbol& sym = cf_.frame->rhs[i];
      const int p = cf_.point_of_symbol[i];
      if (p < 0) {
        d.tokens.push_back(sym.text);
        continue;
      }
      const ChoicePoint& cp = cf_.points[static_cast<std::size_t>(p)];
      const std::size_t c = picks_[static_cast<std::size_t>(p)];
      d.bindings.push_back(SlotBinding{cp.name, cp.values[c], d.tokens.size(), cp.entries[c], cp.frame_slot});
      d.tokens.insert(d.tokens.end(), cp.surfaces[c].begin(), cp.surfaces[c].end());
    }
    ResolveArticles(d.tokens);
    sink_(d);
  }

  const CompiledFrame& cf_;
  const std::function<void(const Derivation&)>& sink_;
  std::vector<FeatureBundle> classes_;
  std::vector<std::size_t> picks_;
};

}  // namespace

void Enumerate(const Grammar& grammar, const Lexicon& lexicon, const EnumerateOptions& options,
               const std::function<void(const Derivation&)>& sink) {
  if (options.cue_count < 0 || options.cue_count > 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "cue_count must be 0, 1 or 2, got " + std::to_string(options.cue_count));
  }
  for (const auto& frame : grammar.frames()) {
    if (!FrameSelected(frame, options)) continue;
    const CompiledFrame cf = Compile(grammar, lexicon, frame);
    for (const auto& cp : cf.points) {
      if (cp.entries.empty()) {
        throw Error(ErrorCode::kEmptySlotClass,
                    "frame '" + frame.id + "': no lexicon entry can fill slot '" + cp.name + "'");
      }
    }
    Walker(cf, sink).Run();
  }
}

std::vector<Derivation> EnumerateAll(const Grammar& grammar, const Lexicon& lexicon,
                                     const EnumerateOptions& options) {
  std::vector<Derivation> out;
  Enumerate(grammar, lexicon, options, [&out](const Derivation& d) { out.push_back(d); });
  return out;
}

Derivation Realize(const Grammar& grammar, const Lexicon& lexicon, std::string_view frame_id,
                   const std::vector<std::pair<std::string, std::string>>& bindings) {
  const Frame* frame = grammar.FindFrame(frame_id);
  if (frame == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "unknown frame '" + std::string(frame_id) + "'");
  }
  CompiledFrame cf = Compile(grammar, lexicon, *frame);
  std::vector<bool> bound(cf.points.size(), false);
  for (const auto& [slot, value] : bindings) {
    auto it = std::find_if(cf.points.begin(), cf.points.end(),
                           [&](const ChoicePoint& cp) { return cp.name == slot; });
    if (it == cf.points.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "frame '" + frame->id + "' has no choice point '" + slot + "'");
    }
    const auto c = std::find(it->values.begin(), it->values.end(), value);
    if (c == it->values.end()) {
      throw Error(ErrorCode::kUnknownLemma,
                  "'" + value + "' cannot fill '" + slot + "' in frame '" + frame->id + "'");
    }
    const auto idx = static_cast<std::size_t>(c - it->values.begin());
    ChoicePoint& cp = *it;
    cp.entries = {cp.entries[idx]};
    cp.values = {cp.values[idx]};
    cp.surfaces = {cp.surfaces[idx]};
    cp.features = {cp.features[idx]};
    bound[static_cast<std::size_t>(it - cf.points.begin())] = true;
  }
  for (std::size_t k = 0; k < cf.points.size(); ++k) {
    if (!bound[k]) {
      throw Error(ErrorCode::kInvalidArgument, "choice point '" + cf.points[k].name + "' is unbound");
    }
  }
  std::optional<Derivation> result;
  const std::function<void(const Derivation&)> sink = [&result](const Derivation& d) { result = d; };
  Walker(cf, sink).Run();
  if (!result) {
    throw Error(ErrorCode::kInvalidArgument,
                "bindings violate the gender equations of frame '" + frame->id + "'");
  }
  return *result;
}

}  // namespace genspect
