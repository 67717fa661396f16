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

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace discopile {

enum class Base { N, S };

// One atomic grammar type with its adjoint winding: -1 is the left adjoint,
// +1 the right adjoint, 0 the plain type. Windings beyond |2| are rejected.
struct SimpleType {
  Base base = Base::N;
  int adjoint = 0;

  bool operator==(const SimpleType&) const = default;
};

// Product of simple types; an empty factor list is the monoidal unit.
struct PregroupType {
  std::vector<SimpleType> factors;

  bool operator==(const PregroupType&) const = default;
};

// One type per token; the grammar fragments handled here are unambiguous at
// the type level.
struct Lexicon {
  std::map<std::string, PregroupType> entries;
};

// Result of reducing a type: which adjacent-compatible factor pairs were
// cancelled (indices into the original factor sequence) and which factors
// survive. Cups are recorded in cancellation order.
struct ReductionTrace {
  std::vector<std::pair<int, int>> cups;
  std::vector<int> leftovers;
};

// True when the left factor cancels against the right one: equal base and
// left adjoint one step below the right adjoint.
bool cancels(const SimpleType& left, const SimpleType& right);

SimpleType make_simple(Base base, int adjoint);

// Type-string grammar: factors joined by '@'; each factor is 'n' or 's'
// followed by '.l' / '.r' suffixes ('n.l.l' is winding -2). The unit type
// prints as '1'.
PregroupType parse_type(const std::string& text);
std::string format_type(const PregroupType& t);
std::string format_simple(const SimpleType& st);

PregroupType type_of_sentence(const std::vector<std::string>& tokens,
                              const Lexicon& lex);

// Deterministic search over adjacent-pair cancellations: depth first,
// leftmost pair first, backtracking to maximize the number of cups. The
// first maximal trace in search order is returned.
ReductionTrace reduce(const PregroupType& t);

// True iff the reduced residue is exactly one plain s.
bool is_grammatical(const PregroupType& t);

// Replays the cups of a trace on the factor sequence and returns the
// surviving indices; used to audit traces.
std::vector<int> replay_trace(const PregroupType& t, const ReductionTrace& tr);

// Lexicon file: one entry per line, token<TAB>type-string.
Lexicon load_lexicon(const std::string& path);
void save_lexicon(const Lexicon& lex, const std::string& path);

}  // namespace discopile
