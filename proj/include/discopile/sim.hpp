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
#include <utility>
#include <variant>
#include <vector>

#include "discopile/circuit.hpp"
#include "discopile/linalg.hpp"

namespace discopile {

// Statevector with the accumulated postselection probability. The vector is
// kept normalized between events; norm_sq carries the mass.
struct PureState {
  Vector amplitudes;
  double norm_sq = 1.0;
};

// Unnormalized density matrix; trace_pre_norm records the trace before the
// final normalization (the postselection mass).
struct DensityMatrix {
  Matrix matrix;
  double trace_pre_norm = 1.0;
};

// Result of a circuit run. Postselection compacts the register, so the
// final state lives on kept_qubits only; slot_of maps an original circuit
// qubit to its slot in the compacted register.
struct SimResult {
  std::variant<PureState, DensityMatrix> state;
  double success_probability = 1.0;
  std::vector<int> kept_qubits;
  std::vector<std::string> kept_labels;

  bool is_pure() const { return std::holds_alternative<PureState>(state); }
  const PureState& pure() const { return std::get<PureState>(state); }
  const DensityMatrix& density() const { return std::get<DensityMatrix>(state); }
  int slot_of(int original_qubit) const;
};

// Applies a k-qubit unitary (rows ordered per `qubits`) in place to an
// n-qubit statevector.
void apply_unitary(Vector& psi, int n_qubits, const Matrix& u,
                   const std::vector<int>& qubits);

// Exact statevector run from |0...0>. PostselectZero projects, folds the
// outcome mass into norm_sq and success_probability, and drops the qubit.
// Rejects Discard events.
SimResult run_pure(const Circuit& c,
                   const std::map<std::string, double>& binding = {});

// Exact density-matrix run from |0...0><0...0|. PostselectZero keeps the
// matrix unnormalized; Discard is a partial trace. The final matrix is
// normalized by its trace, which becomes success_probability.
SimResult run_density(const Circuit& c,
                      const std::map<std::string, double>& binding = {});

// Standard partial trace onto `keep` (slots of the current register); the
// output register is the kept slots in ascending order.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

// (p0, p1) for one kept qubit, read off the reduced density diagonal.
std::pair<double, double> born_distribution(const SimResult& s, int qubit);

// Deterministic shot sampling of one kept qubit; returns (n0, n1).
std::pair<long, long> sample_shots(const SimResult& s, int qubit, long shots,
                                   std::uint64_t seed);

// Structured text dump: one "index re im" line per amplitude or diagonal.
std::string dump_state(const SimResult& s);

}  // namespace discopile
