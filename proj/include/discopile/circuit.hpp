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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "discopile/linalg.hpp"

namespace discopile {

enum class GateKind {
  H,
  X,
  Y,
  Z,
  Rx,
  Ry,
  Rz,
  CRz,
  CNOT,
  CCNOT,
  ControlledBlock,
  PrepareAmplitudes,
};

// Angle parameter reference, resolved against a parameter store at bind
// time. Names follow the `token/index` convention of the ansatz.
struct ParamRef {
  std::string name;
  bool operator==(const ParamRef&) const = default;
};

using Angle = std::variant<double, ParamRef>;

// One gate instance. Qubit list conventions:
//   1-qubit kinds: {target};  CRz/CNOT: {control, target};
//   CCNOT: {control, control, target};
//   ControlledBlock: {controls...} with targets inside `block`, which fires
//   only on the all-ones control state;
//   PrepareAmplitudes: the prepared register; `amplitudes` has length
//   2^register and unit norm, and maps |0...0> of that register to the
//   stated vector (completed to a deterministic unitary when a matrix is
//   required).
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> qubits;
  std::optional<Angle> angle;
  std::vector<Gate> block;
  Vector amplitudes;
};

Gate make_gate(GateKind kind, std::vector<int> qubits);
Gate make_rotation(GateKind kind, int qubit, Angle angle);
Gate make_crz(int control, int target, Angle angle);
Gate make_controlled_block(std::vector<int> controls, std::vector<Gate> block);
Gate make_prepare(std::vector<int> qubits, Vector amplitudes);

struct PostselectZero {
  int qubit = 0;
};
struct Discard {
  int qubit = 0;
};
struct Unitary {
  Gate gate;
};
using Event = std::variant<Unitary, PostselectZero, Discard>;

// Ordered event list over a fixed register. Construction validates that
// qubit indices are in range and that PostselectZero/Discard are terminal
// for their qubit: no later event may touch a measured-out qubit.
struct Circuit {
  int n_qubits = 0;
  std::vector<Event> events;
  std::map<int, std::string> labels;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  void append(Event e);
  void append_gate(Gate g) { append(Unitary{std::move(g)}); }
};

// Register-size cap for the dense engines.
inline constexpr int kMaxQubits = 12;

// Qubit ordering: qubit 0 is the most significant bit of a basis index.
inline int bit_of(std::size_t index, int qubit, int n_qubits) {
  return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1u);
}

// The set of qubits a gate acts on, in matrix row order: controls first
// (as listed), then block targets ascending for ControlledBlock.
std::vector<int> gate_qubit_order(const Gate& g);

// All qubits referenced by a gate, including nested blocks.
std::vector<int> gate_support(const Gate& g);

double resolve_angle(const Angle& angle,
                     const std::map<std::string, double>& binding);

// Returns the 2^k x 2^k matrix of the gate over gate_qubit_order(g).
// PrepareAmplitudes yields a unitary completion whose first column is the
// amplitude vector.
Matrix gate_matrix(const Gate& g,
                   const std::map<std::string, double>& binding = {});

// Replaces every ParamRef with its bound value.
Circuit bind(const Circuit& c, const std::map<std::string, double>& binding);
Gate bind_gate(const Gate& g, const std::map<std::string, double>& binding);

// max |(U†U - I)_ij| for the gate matrix; parameters must be resolvable.
double unitarity_check(const Gate& g,
                       const std::map<std::string, double>& binding = {});

// JSON dump with stable field names: n_qubits, events[], labels.
std::string circuit_to_json(const Circuit& c);

}  // namespace discopile
