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

#include "discopile/pregroup.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "discopile/errors.hpp"

namespace discopile {

namespace {

constexpr int kMaxAdjoint = 2;

void check_adjoint_depth(int adjoint) {
  if (adjoint < -kMaxAdjoint || adjoint > kMaxAdjoint) {
    throw ParseError("adjoint winding deeper than " +
                     std::to_string(kMaxAdjoint) + " is not supported");
  }
}

SimpleType parse_factor(const std::string& text) {
  if (text.empty()) throw ParseError("empty type factor");
  Base base;
  switch (text[0]) {
    case 'n': base = Base::N; break;
    case 's': base = Base::S; break;
    default: throw ParseError("unknown base type '" + text + "'");
  }
  int adjoint = 0;
  std::size_t pos = 1;
  while (pos < text.size()) {
    if (pos + 1 >= text.size() || text[pos] != '.') {
      throw ParseError("malformed type factor '" + text + "'");
    }
    char suffix = text[pos + 1];
    if (suffix == 'l') {
      if (adjoint > 0) throw ParseError("mixed adjoint suffixes in '" + text + "'");
      --adjoint;
    } else if (suffix == 'r') {
      if (adjoint < 0) throw ParseError("mixed adjoint suffixes in '" + text + "'");
      ++adjoint;
    } else {
      throw ParseError("unknown adjoint suffix in '" + text + "'");
    }
    check_adjoint_depth(adjoint);
    pos += 2;
  }
  return SimpleType{base, adjoint};
}

}  // namespace

bool cancels(const SimpleType& left, const SimpleType& right) {
  return left.base == right.base && left.adjoint == right.adjoint - 1;
}

SimpleType make_simple(Base base, int adjoint) {
  check_adjoint_depth(adjoint);
  return SimpleType{base, adjoint};
}

PregroupType parse_type(const std::string& text) {
  PregroupType t;
  if (text.empty() || text == "1") return t;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sep = text.find('@', start);
    std::string factor = text.substr(
        start, sep == std::string::npos ? std::string::npos : sep - start);
    t.factors.push_back(parse_factor(factor));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return t;
}

std::string format_simple(const SimpleType& st) {
  std::string out(1, st.base == Base::N ? 'n' : 's');
  for (int i = 0; i < st.adjoint; ++i) out += ".r";
  for (int i = 0; i > st.adjoint; --i) out += ".l";
  return out;
}

std::string format_type(const PregroupType& t) {
  if (t.factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i) out += '@';
    out += format_simple(t.factors[i]);
  }
  return out;
}

PregroupType type_of_sentence(const std::vector<std::string>& tokens,
                              const Lexicon& lex) {
  PregroupType t;
  for (const auto& token : tokens) {
    auto it = lex.entries.find(token);
    if (it == lex.entries.end()) throw UnknownTokenError(token);
    t.factors.insert(t.factors.end(), it->second.factors.begin(),
                     it->second.factors.end());
  }
  return t;
}

namespace {

// Depth-first maximal-cancellation search. States are sequences of original
// factor indices; every path from the start to a given state cancels the same
// number of pairs, so memoizing fully explored states is sound and the first
// maximal trace found in leftmost-first order is deterministic.
struct ReduceSearch {
  const std::vector<SimpleType>& factors;
  ReductionTrace best;
  bool have_best = false;
  std::set<std::vector<int>> seen;

  explicit ReduceSearch(const std::vector<SimpleType>& f) : factors(f) {}

  void run(std::vector<int>& state, std::vector<std::pair<int, int>>& cups) {
    if (!seen.insert(state).second) return;
    bool cancelled_any = false;
    for (std::size_t i = 0; i + 1 < state.size(); ++i) {
      if (!cancels(factors[state[i]], factors[state[i + 1]])) continue;
      cancelled_any = true;
      cups.emplace_back(state[i], state[i + 1]);
      std::vector<int> next(state);
      next.erase(next.begin() + i, next.begin() + i + 2);
      run(next, cups);
      cups.pop_back();
    }
    if (!cancelled_any) {
      if (!have_best || cups.size() > best.cups.size()) {
        best.cups = cups;
        best.leftovers = state;
        have_best = true;
      }
    }
  }
};

}  // namespace

ReductionTrace reduce(const PregroupType& t) {
  std::vector<int> state(t.factors.size());
  for (std::size_t i = 0; i < state.size(); ++i) state[i] = static_cast<int>(i);
  ReduceSearch search(t.factors);
  std::vector<std::pair<int, int>> cups;
  search.run(state, cups);
  return search.best;
}

bool is_grammatical(const PregroupType& t) {
  ReductionTrace tr = reduce(t);
  return tr.leftovers.size() == 1 &&
         t.factors[tr.leftovers[0]] == SimpleType{Base::S, 0};
}

std::vector<int> replay_trace(const PregroupType& t,
                              const ReductionTrace& tr) {
  std::vector<int> state(t.factors.size());
  for (std::size_t i = 0; i < state.size(); ++i) state[i] = static_cast<int>(i);
  for (const auto& [a, b] : tr.cups) {
    auto ia = std::find(state.begin(), state.end(), a);
    auto ib = std::find(state.begin(), state.end(), b);
    if (ia == state.end() || ib == state.end() || ib != ia + 1 ||
        !cancels(t.factors[a], t.factors[b])) {
      throw Error("trace replay failed: cup (" + std::to_string(a) + "," +
                  std::to_string(b) + ") is not an adjacent cancellation");
    }
    state.erase(ia, ia + 2);
  }
  return state;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file " + path);
  Lexicon lex;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("expected token<TAB>type", line_no);
    }
    std::string token = line.substr(0, tab);
    std::string type_text = line.substr(tab + 1);
    if (token.empty()) throw ParseError("empty token", line_no);
    try {
      lex.entries[token] = parse_type(type_text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return lex;
}

void save_lexicon(const Lexicon& lex, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write lexicon file " + path);
  for (const auto& [token, type] : lex.entries) {
    out << token << '\t' << format_type(type) << '\n';
  }
  if (!out) throw IoError("failed writing lexicon file " + path);
}

}  // namespace discopile
