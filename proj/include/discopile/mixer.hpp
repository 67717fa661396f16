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

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "discopile/ansatz.hpp"
#include "discopile/circuit.hpp"
#include "discopile/diagram.hpp"
#include "discopile/pregroup.hpp"
#include "discopile/sim.hpp"

namespace discopile {

// One alternative of a classical mixture: gates over the shared target
// register plus its prior probability. Priors across a branch set sum to 1.
struct Branch {
  std::string label;
  std::vector<Gate> operations;
  double prior = 1.0;
};

// What a mixture run produces on the retained qubits. Posterior weights are
// prior * branch success mass, renormalized; they differ from the priors
// whenever branches postselect with unequal mass.
struct MixtureResult {
  DensityMatrix rho;
  std::vector<double> branch_weights;
  double success_probability = 0.0;
};

// A built mixture: the executable controlled circuit plus the branch
// decomposition the oracle replays. Control qubits sit at the top of the
// register; `base` holds the shared events over the target register only,
// and branch operations splice into base.events at splice_index.
struct MixturePlan {
  Circuit circuit;
  Circuit base;
  std::size_t splice_index = 0;
  std::vector<Branch> branches;
  std::vector<int> retained;
};

// Equal two-way mixture, literal layout: H on the control, controlled o1
// (fires on |1>), X on the control, controlled o2, discard the control.
MixturePlan plan_two_way(std::vector<Gate> o1, std::vector<Gate> o2);
Circuit build_two_way(std::vector<Gate> o1, std::vector<Gate> o2);

// General m-way mixture (2 <= m <= 8): ceil(log2 m) controls prepared with
// amplitudes sqrt(prior_i) at |i>, each branch selected by X-conjugating
// its index to all-ones around a multi-controlled block; controls
// discarded.
MixturePlan plan_m_way(std::vector<Branch> branches);
Circuit build_m_way(std::vector<Branch> branches);

// Two sentences sharing one noun ancilla: "subject verb object" and
// "<slot> verb2 adjective", where the slot wire is filled by a controlled
// copy (CNOT) from either the subject or the object noun wire. Both
// sentence qubits are retained (labels "sentence:0", "sentence:1").
MixturePlan plan_pronoun_mixture(const std::string& subject,
                                 const std::string& verb,
                                 const std::string& object,
                                 const std::string& verb2,
                                 const std::string& adjective,
                                 const Lexicon& lex, const AnsatzConfig& cfg);
Circuit build_pronoun_mixture(const std::string& subject,
                              const std::string& verb,
                              const std::string& object,
                              const std::string& verb2,
                              const std::string& adjective, const Lexicon& lex,
                              const AnsatzConfig& cfg);

// Mixture over two same-shape sentences: shared word boxes compile once;
// all differing boxes ride one control (branch 1 = sentence a's boxes on
// control |1>, branch 2 = sentence b's). Identical sentences yield a plain
// single-branch circuit with no control.
MixturePlan plan_prediction_mixture(const std::vector<std::string>& sentence_a,
                                    const std::vector<std::string>& sentence_b,
                                    const Lexicon& lex,
                                    const AnsatzConfig& cfg,
                                    std::pair<double, double> priors = {0.5,
                                                                        0.5});
Circuit build_prediction_mixture(const std::vector<std::string>& sentence_a,
                                 const std::vector<std::string>& sentence_b,
                                 const Lexicon& lex, const AnsatzConfig& cfg,
                                 std::pair<double, double> priors = {0.5,
                                                                     0.5});

// Brute-force referee: runs every branch standalone (operations spliced
// into base.events at splice_index, clamped to the event count), then
// returns sum(p_i q_i rho_i) / sum(p_i q_i) and the posterior weights
// p_i q_i / sum. Branches whose postselection annihilates count as q_i = 0.
MixtureResult mixture_oracle(const std::vector<Branch>& branches,
                             const Circuit& base,
                             std::size_t splice_index = SIZE_MAX,
                             const std::map<std::string, double>& binding = {});

// Executes plan.circuit on the density engine; rho and success come from
// the circuit, posterior weights from the oracle.
MixtureResult run_mixture(const MixturePlan& plan,
                          const std::map<std::string, double>& binding = {});

// JSON with rho as row-major [re, im] pairs, branch_weights, and
// success_probability.
std::string mixture_result_to_json(const MixtureResult& r);

}  // namespace discopile
