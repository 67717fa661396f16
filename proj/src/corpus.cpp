// Copyright 2026 discopile contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discopile/corpus.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "discopile/errors.hpp"
#include "discopile/io.hpp"

namespace discopile {

namespace {

// Nouns in first-appearance order per category; drives both categorization
// and the pair enumeration order.
const std::vector<std::pair<std::string, NounCategory>>& noun_table() {
  static const std::vector<std::pair<std::string, NounCategory>> kTable = {
      {"pancakes", NounCategory::Food},
      {"pasta", NounCategory::Food},
      {"women", NounCategory::People},
      {"men", NounCategory::People},
  };
  return kTable;
}

void classify_tokens(Corpus& c) {
  c.categories.clear();
  c.agreement.clear();
  for (const auto& s : c.sentences) {
    if (s.tokens.size() != 3) continue;
    const std::string& noun = s.tokens[0];
    for (const auto& [known, cat] : noun_table()) {
      if (noun == known) {
        c.categories.emplace(noun, cat);
        c.agreement.emplace(noun, s.tokens[1]);
      }
    }
  }
}

}  // namespace

Corpus builtin_corpus() {
  // Rows in source-table reading order; 8 True and 8 False.
  static const std::vector<std::pair<std::string, bool>> kRows = {
      {"pancakes are hungry", false},   {"pancakes are starving", false},
      {"pancakes are tasty", true},     {"pancakes are delicious", true},
      {"pasta is hungry", false},       {"pasta is starving", false},
      {"pasta is tasty", true},         {"pasta is delicious", true},
      {"women are tasty", false},       {"women are delicious", false},
      {"women are starving", true},     {"women are hungry", true},
      {"men are tasty", false},         {"men are delicious", false},
      {"men are starving", true},       {"men are hungry", true},
  };
  Corpus c;
  for (const auto& [text, label] : kRows) {
    LabeledSentence s;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) s.tokens.push_back(tok);
    s.label = label;
    c.sentences.push_back(std::move(s));
  }
  classify_tokens(c);
  return c;
}

Lexicon builtin_lexicon() {
  Lexicon lex;
  const PregroupType noun = parse_type("n");
  const PregroupType verb = parse_type("n.r@s@n.l");
  for (const char* w : {"pancakes", "pasta", "women", "men", "tasty",
                        "delicious", "hungry", "starving", "alice", "guitar",
                        "dog", "vase", "clumsy"}) {
    lex.entries.emplace(w, noun);
  }
  for (const char* w : {"are", "is", "plays", "broke", "was"}) {
    lex.entries.emplace(w, verb);
  }
  return lex;
}

std::vector<CrossPair> cross_category_pairs(const Corpus& c) {
  // First-appearance orders over the actual sentence list, so custom corpora
  // enumerate deterministically too.
  std::vector<std::string> food;
  std::vector<std::string> people;
  std::vector<std::string> adjectives;
  auto seen = [](const std::vector<std::string>& v, const std::string& x) {
    for (const auto& e : v)
      if (e == x) return true;
    return false;
  };
  for (const auto& s : c.sentences) {
    if (s.tokens.size() != 3) continue;
    const std::string& noun = s.tokens[0];
    const std::string& adj = s.tokens[2];
    auto it = c.categories.find(noun);
    if (it != c.categories.end()) {
      auto& bucket = it->second == NounCategory::Food ? food : people;
      if (!seen(bucket, noun)) bucket.push_back(noun);
    }
    if (!seen(adjectives, adj)) adjectives.push_back(adj);
  }

  auto find_sentence = [&](const std::string& noun, const std::string& adj,
                           const LabeledSentence** out) {
    for (const auto& s : c.sentences) {
      if (s.tokens.size() == 3 && s.tokens[0] == noun && s.tokens[2] == adj) {
        *out = &s;
        return true;
      }
    }
    return false;
  };

  std::vector<CrossPair> pairs;
  for (const auto& f : food) {
    for (const auto& p : people) {
      for (const auto& adj : adjectives) {
        const LabeledSentence* sf = nullptr;
        const LabeledSentence* sp = nullptr;
        if (!find_sentence(f, adj, &sf) || !find_sentence(p, adj, &sp))
          continue;
        if (sf->label == sp->label) continue;
        CrossPair pair;
        pair.adjective = adj;
        const LabeledSentence* st = sf->label ? sf : sp;
        const LabeledSentence* sn = sf->label ? sp : sf;
        pair.noun_true = st->tokens[0];
        pair.noun_false = sn->tokens[0];
        pair.sentence_true = *st;
        pair.sentence_false = *sn;
        pairs.push_back(std::move(pair));
      }
    }
  }
  return pairs;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);
  Corpus c;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("missing tab separator", line_no);
    std::string label = line.substr(tab + 1);
    if (label != "True" && label != "False")
      throw ParseError("label must be True or False, got '" + label + "'",
                       line_no);
    LabeledSentence s;
    std::istringstream toks(line.substr(0, tab));
    std::string tok;
    while (toks >> tok) s.tokens.push_back(tok);
    if (s.tokens.empty()) throw ParseError("empty sentence", line_no);
    s.label = (label == "True");
    c.sentences.push_back(std::move(s));
  }
  classify_tokens(c);
  return c;
}

void save_corpus(const std::string& path, const Corpus& c) {
  std::string out;
  for (const auto& s : c.sentences) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (i) out += ' ';
      out += s.tokens[i];
    }
    out += '\t';
    out += s.label ? "True" : "False";
    out += '\n';
  }
  atomic_write_file(path, out);
}

}  // namespace discopile
