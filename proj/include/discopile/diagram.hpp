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

#include <string>
#include <variant>
#include <vector>

#include "discopile/pregroup.hpp"

namespace discopile {

// A word tensor over one contiguous block of typed wires, one wire per
// simple-type factor.
struct WordBox {
  std::string token;
  PregroupType type;
  std::vector<int> output_wires;
};

// Contracts wires a and b (a < b); endpoints must be adjoint-compatible.
struct Cup {
  int a = 0;
  int b = 0;
};

// Copies noun wire src: the source wire keeps flowing and a fresh wire
// `copy` carries the duplicate (1-to-2 copy shape only).
struct CopySpider {
  int src = 0;
  int copy = 0;
};

// Exchanges the positions of two wires of equal width.
struct Swap {
  int a = 0;
  int b = 0;
};

using Generator = std::variant<Cup, CopySpider, Swap>;

struct OpenWire {
  int wire = 0;
  SimpleType type;
};

struct Wiring {
  std::vector<Generator> generators;
  std::vector<OpenWire> open;
};

// String-diagram IR: word boxes over typed wires plus the wiring that
// contracts, copies, or exposes them. wire_types[w] is the type of wire w;
// wires are numbered word-major, with spider copies appended at the end.
struct Diagram {
  std::vector<WordBox> words;
  std::vector<SimpleType> wire_types;
  Wiring wiring;
};

// Builds the diagram of a grammatical sentence: boxes in token order, cups
// from the type reduction, the single surviving s wire open.
Diagram diagram_from_sentence(const std::vector<std::string>& tokens,
                              const Lexicon& lex);

// Inserts a copy spider on the first plain-n output wire of the given word;
// the duplicate becomes a new open n wire at the end of the wire list.
Diagram copy_noun(const Diagram& d, int word_index);

// A bridge feeds an open plain-n copy wire of d1 into a word slot of d2,
// deleting that word box and rewiring its occurrences. The merged diagram
// keeps both sentence wires open.
struct Bridge {
  int d1_wire = 0;
  int d2_word = 0;
};
Diagram compose_two_sentence(const Diagram& d1, const Diagram& d2,
                             const std::vector<Bridge>& bridges);

// Returns every invariant violation found (empty means the diagram is
// well formed): existing wire indices, single-cup consumption, adjoint
// compatibility, noun-only spiders, non-crossing cups, full wire coverage.
std::vector<std::string> validate(const Diagram& d);

// JSON dump with stable field names: words, cups, spiders, swaps, open.
std::string diagram_to_json(const Diagram& d);

}  // namespace discopile
