#include "count_oracle.h"

#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace oracle {
namespace {

std::vector<std::vector<std::string>> Rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("oracle: cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::vector<std::string> Words(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

struct Lex {
  // pool key ("kin", "partner", "pron:poss", "adjective", ...) -> {F count, M count}
  std::map<std::string, std::array<std::uint64_t, 2>> pools;
  std::array<std::uint64_t, 2> occupations{};
};

int G(const std::string& g) { return g == "F" ? 0 : 1; }

Lex ReadLexicon(const std::filesystem::path& dir) {
  Lex lex;
  for (const auto& r : Rows(dir / "triggers.tsv")) {
    const std::string key = r[2] == "pronoun" ? "pron:" + r[3] : r[2] == "kinship" ? "kin" : r[2];
    ++lex.pools[key][G(r[1])];
  }
  for (const auto& r : Rows(dir / "occupations.tsv")) ++lex.occupations[G(r[1])];
  for (const auto& r : Rows(dir / "cues.tsv")) ++lex.pools[r[1]][G(r[2])];
  return lex;
}

struct SlotInfo {
  std::string name;
  std::string pool;
};

}  // namespace

std::map<std::string, FrameCount> CountFrames(const std::filesystem::path& grammar_file,
                                              const std::filesystem::path& lexicon_dir) {
  const Lex lex = ReadLexicon(lexicon_dir);

  std::ifstream in(grammar_file);
  if (!in) throw std::runtime_error("oracle: cannot open " + grammar_file.string());
  std::map<std::string, std::vector<std::vector<std::string>>> rules;
  std::map<std::string, std::string> frames;  // id -> rhs
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> links;
  std::string line;
  while (std::getline(in, line)) {
    const auto w = Words(line);
    if (w.empty() || w[0][0] == '#' || w[0] == "past") continue;
    if (w[0] == "frame") {
      frames[w[1]] = line.substr(line.find(":=") + 2);
    } else if (w[0] == "constraint") {
      links[w[1]].emplace_back(w[2].substr(0, w[2].find('.')), w[4].substr(0, w[4].find('.')));
    } else if (w.size() > 1 && w[1] == "->") {
      std::vector<std::string> alt;
      for (std::size_t i = 2; i < w.size(); ++i) {
        if (w[i] == "|") {
          rules[w[0]].push_back(alt);
          alt.clear();
        } else {
          alt.push_back(w[i]);
        }
      }
      rules[w[0]].push_back(alt);
    }
  }

  std::function<std::uint64_t(const std::string&)> expansions = [&](const std::string& nt) {
    std::uint64_t n = 0;
    for (const auto& alt : rules.at(nt)) {
      std::uint64_t p = 1;
      for (const auto& sym : alt) {
        if (rules.count(sym)) p *= expansions(sym);
      }
      n += p;
    }
    return n;
  };

  std::map<std::string, FrameCount> out;
  for (const auto& [id, rhs] : frames) {
    FrameCount fc;
    std::vector<SlotInfo> slots;
    std::map<std::string, int> seen;
    std::uint64_t free_factor = 1;
    std::size_t pos = 0;
    std::string text = rhs;
    // Tokens are either <...> slots or plain words.
    while (pos < text.size()) {
      if (text[pos] == ' ') {
        ++pos;
        continue;
      }
      if (text[pos] == '<') {
        const auto end = text.find('>', pos);
        const auto parts = Words(text.substr(pos + 1, end - pos - 1));
        pos = end + 1;
        std::string head = parts[0];
        std::string kind = head.substr(0, head.find(':'));
        std::map<std::string, std::string> attrs;
        for (std::size_t i = 1; i < parts.size(); ++i) {
          const auto eq = parts[i].find('=');
          attrs[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
        }
        SlotInfo s;
        std::string base;
        if (kind == "TRIGGER") {
          const std::string sub = head.substr(head.find(':') + 1);
          s.pool = sub == "pron" ? "pron:" + attrs["case"] : sub;
          base = "trigger";
        } else if (kind == "OCC") {
          s.pool = "occ";
          base = "occ";
        } else {
          s.pool = kind == "ADJ" ? "adjective" : kind == "VSUBJ" ? "verb_subj" : "verb_obj";
          base = kind == "ADJ" ? "adj" : kind == "VSUBJ" ? "vsubj" : "vobj";
          ++fc.cue_slots;
        }
        s.name = attrs.count("name") ? attrs["name"]
                 : base == "occ"      ? "occ"
                                      : base + std::to_string(++seen[base]);
        slots.push_back(s);
        continue;
      }
      auto end = text.find(' ', pos);
      if (end == std::string::npos) end = text.size();
      const std::string word = text.substr(pos, end - pos);
      if (rules.count(word)) free_factor *= expansions(word);
      pos = end;
    }

    // Union-find over slot names.
    std::map<std::string, std::string> parent;
    for (const auto& s : slots) parent[s.name] = s.name;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& [a, b] : links[id]) parent[find(a)] = find(b);

    std::string primary_root;
    std::map<std::string, std::vector<const SlotInfo*>> classes;
    for (const auto& s : slots) {
      if (s.pool == "occ") continue;
      classes[find(s.name)].push_back(&s);
      if (s.name.rfind("trigger", 0) == 0) primary_root = find(s.name);
    }
    // Per trigger gender: the class holding the triggers is fixed to it.
    for (int g = 0; g < 2; ++g) {
      std::uint64_t n = free_factor;
      for (const auto& [root, members] : classes) {
        if (root == primary_root) {
          for (const auto* m : members) n *= lex.pools.at(m->pool)[g];
        } else {
          std::uint64_t sum = 0;
          for (int h = 0; h < 2; ++h) {
            std::uint64_t p = 1;
            for (const auto* m : members) p *= lex.pools.at(m->pool)[h];
            sum += p;
          }
          n *= sum;
        }
      }
      // Quadrant index: trigger M -> 0/1, F -> 2/3; occupation M first.
      const std::size_t base = g == 1 ? 0 : 2;
      fc.quadrant[base + 0] = n * lex.occupations[1];
      fc.quadrant[base + 1] = n * lex.occupations[0];
    }
    out[id] = fc;
  }
  return out;
}

}  // namespace oracle
