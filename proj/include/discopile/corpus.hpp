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
#include <vector>

#include "discopile/pregroup.hpp"

namespace discopile {

struct LabeledSentence {
  std::vector<std::string> tokens;
  bool label = false;
  bool operator==(const LabeledSentence&) const = default;
};

enum class NounCategory { Food, People };

// The 16-sentence dataset plus the noun category and copula agreement
// tables driving cross-category pair generation.
struct Corpus {
  std::vector<LabeledSentence> sentences;
  std::map<std::string, NounCategory> categories;
  std::map<std::string, std::string> agreement;
  bool operator==(const Corpus&) const = default;
};

// One cross-category comparison: same adjective, one True-labeled and one
// False-labeled sentence with nouns from different categories.
struct CrossPair {
  std::string noun_true;
  std::string noun_false;
  std::string adjective;
  LabeledSentence sentence_true;
  LabeledSentence sentence_false;
};

// The bundled 16-row dataset (8 per label) over a 10-word vocabulary.
Corpus builtin_corpus();

// Types for the dataset vocabulary plus the demo words used by the parse
// and pronoun examples; nouns and predicative adjectives are n, verbs and
// copulas n.r@s@n.l.
Lexicon builtin_lexicon();

// For each (food noun, people noun, adjective) triple in first-appearance
// order, the (True, False) sentence pair sharing that adjective. Pairs with
// a missing sentence or matching labels are skipped.
std::vector<CrossPair> cross_category_pairs(const Corpus& c);

// TSV persistence: `token token token<TAB>True|False` per line, LF.
// Loading re-infers categories (builtin noun table) and copula agreement.
Corpus load_corpus(const std::string& path);
void save_corpus(const std::string& path, const Corpus& c);

}  // namespace discopile
