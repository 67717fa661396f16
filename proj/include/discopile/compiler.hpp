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

#include "discopile/ansatz.hpp"
#include "discopile/circuit.hpp"
#include "discopile/diagram.hpp"
#include "discopile/linalg.hpp"

namespace discopile {

// Lowers a diagram: one qubit run per wire (widths from cfg), word boxes
// become ansatz subcircuits, each copy spider a CNOT onto a fresh ancilla,
// each cup the Bell-effect pattern CNOT(a->b); H(a); postselect both.
// Event order is word preparations, then spiders, then cups; swaps are pure
// index bookkeeping resolved before lowering. Open wires label their qubits
// ("sentence" or "noun:<token>", with ":<i>" suffixes when wider than one).
Circuit compile(const Diagram& d, const AnsatzConfig& cfg);

// Yanking harness: prepares a 1-qubit word state, a cap on two fresh
// qubits, then a cup joining the word to the cap's left leg. Running it
// must return the word state on the surviving qubit (labeled "out").
Circuit snake_test_circuit(const Vector& word_state);

// Max deviation between CNOT acting on |x>|0> and the copy map |x> -> |xx>
// over the basis; zero when the spider lowering is exact.
double spider_equivalence_check();

}  // namespace discopile
