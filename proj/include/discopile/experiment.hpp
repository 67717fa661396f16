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
#include <vector>

#include "discopile/ansatz.hpp"
#include "discopile/corpus.hpp"
#include "discopile/linalg.hpp"
#include "discopile/pregroup.hpp"

namespace discopile {

// One cross-category prediction mixture: sentence-qubit density matrix
// entropy (base 2) and squared fidelities against the label references.
struct PairRow {
  std::string noun_true;
  std::string noun_false;
  std::string adjective;
  double entropy = 0.0;
  double fid_true = 0.0;
  double fid_false = 0.0;
  std::vector<double> branch_weights;
};

// Pure per-sentence fidelities averaged by gold label; `x_vs_y` averages
// F_squared(sentence state, reference of label y) over gold-label-x rows.
struct Diagnostics {
  double true_vs_true = 0.0;
  double false_vs_false = 0.0;
  double false_vs_true = 0.0;
  double true_vs_false = 0.0;
};

struct Report {
  double avg_entropy = 0.0;
  double avg_fid_true = 0.0;
  double avg_fid_false = 0.0;
  Diagnostics diagnostics;
  std::vector<PairRow> pairs;
};

// The constant label references (1,0)-projector, (0,1)-projector, and the
// maximally mixed qubit.
struct RhoReferences {
  Matrix rho_true;
  Matrix rho_false;
  Matrix rho_optimal;
};
RhoReferences rho_references();

// Density matrix of the run's single sentence-labeled qubit, tracing out
// any other kept qubits. Throws Error when that qubit is absent or not
// unique.
struct SimResult;
Matrix sentence_density_matrix(const SimResult& r);

// Builds the equal-prior prediction mixture for every cross-category pair,
// runs the density engine, and reduces to the sentence qubit; averages over
// pairs in enumeration order. Pure diagnostics run per corpus sentence.
// Pair evaluation is parallel; DISCOPILE_THREADS caps the worker count.
Report run_experiment(const Corpus& corpus, const ParamStore& params,
                      const AnsatzConfig& cfg, const Lexicon& lex);

std::string report_to_json(const Report& report);

}  // namespace discopile
