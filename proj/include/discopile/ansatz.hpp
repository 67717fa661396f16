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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "discopile/circuit.hpp"
#include "discopile/diagram.hpp"
#include "discopile/pregroup.hpp"

namespace discopile {

// Widths and depth of the word ansatz; every count must be >= 1.
struct AnsatzConfig {
  int qubits_per_n = 1;
  int qubits_per_s = 1;
  int layers = 1;
  int single_qubit_rotations = 3;
};

// Named angle parameters in radians; names follow `token/index`, so two
// occurrences of a token share weights by construction.
struct ParamStore {
  std::map<std::string, double> values;
};

// Gates of one word box over a local register 0..n_qubits-1; the caller
// offsets them onto the global wire allocation.
struct WordSubcircuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
};

int simple_type_width(const SimpleType& t, const AnsatzConfig& cfg);
int type_width(const PregroupType& t, const AnsatzConfig& cfg);

// One-qubit words get an alternating Rx/Rz Euler chain; wider words get
// `layers` repetitions of an H column followed by a CRz chain on adjacent
// pairs. Pure function of (token, type, cfg).
WordSubcircuit word_subcircuit(const WordBox& w, const AnsatzConfig& cfg);

// Parameter names a token of the given type introduces, index order.
std::vector<std::string> word_param_names(const std::string& token,
                                          const PregroupType& type,
                                          const AnsatzConfig& cfg);

// All parameter names of a vocabulary: tokens in lexicographic order, each
// token's indices ascending.
std::vector<std::string> param_names(const Lexicon& vocab,
                                     const AnsatzConfig& cfg);

// Uniform angles in [0, 2 pi), drawn in param_names order from a seeded
// generator; identical seed gives an identical store.
ParamStore init_params(const Lexicon& vocab, const AnsatzConfig& cfg,
                       std::uint64_t seed);

// JSON persistence, exact round-trip of every double.
std::string params_to_json(const ParamStore& store);
ParamStore params_from_json(const std::string& text);

}  // namespace discopile
