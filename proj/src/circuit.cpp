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

#include "discopile/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "discopile/errors.hpp"

namespace discopile {

namespace {

constexpr Complex kI{0.0, 1.0};

bool is_rotation(GateKind k) {
  return k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz ||
         k == GateKind::CRz;
}

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::Rx: return "Rx";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::CRz: return "CRz";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CCNOT: return "CCNOT";
    case GateKind::ControlledBlock: return "ControlledBlock";
    case GateKind::PrepareAmplitudes: return "PrepareAmplitudes";
  }
  return "?";
}

int fixed_arity(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      return 1;
    case GateKind::CRz:
    case GateKind::CNOT:
      return 2;
    case GateKind::CCNOT:
      return 3;
    default:
      return -1;
  }
}

void validate_gate(const Gate& g) {
  int arity = fixed_arity(g.kind);
  if (arity > 0 && static_cast<int>(g.qubits.size()) != arity) {
    throw InvalidCircuitError(std::string(kind_name(g.kind)) + " takes " +
                              std::to_string(arity) + " qubits");
  }
  if (is_rotation(g.kind) != g.angle.has_value()) {
    throw InvalidCircuitError(std::string(kind_name(g.kind)) +
                              (g.angle ? std::string(" takes no angle")
                                       : std::string(" needs an angle")));
  }
  std::vector<int> support = gate_support(g);
  std::set<int> distinct(support.begin(), support.end());
  if (distinct.size() != support.size()) {
    throw InvalidCircuitError("gate qubits must be distinct");
  }
  if (g.kind == GateKind::ControlledBlock) {
    if (g.qubits.empty() || g.block.empty()) {
      throw InvalidCircuitError("ControlledBlock needs controls and a block");
    }
    for (const Gate& inner : g.block) {
      validate_gate(inner);
      std::vector<int> sub = gate_support(inner);
      for (int q : g.qubits) {
        if (std::find(sub.begin(), sub.end(), q) != sub.end()) {
          throw InvalidCircuitError(
              "ControlledBlock controls cannot appear in the block");
        }
      }
    }
  } else if (!g.block.empty()) {
    throw InvalidCircuitError("only ControlledBlock carries a block");
  }
  if (g.kind == GateKind::PrepareAmplitudes) {
    if (g.qubits.empty()) {
      throw InvalidCircuitError("PrepareAmplitudes needs a register");
    }
    auto dim = static_cast<Eigen::Index>(1)
               << static_cast<Eigen::Index>(g.qubits.size());
    if (g.amplitudes.size() != dim) {
      throw InvalidCircuitError(
          "PrepareAmplitudes vector length must be 2^register");
    }
    if (std::abs(g.amplitudes.norm() - 1.0) > 1e-12) {
      throw InvalidCircuitError("PrepareAmplitudes vector must be unit norm");
    }
  } else if (g.amplitudes.size() != 0) {
    throw InvalidCircuitError("only PrepareAmplitudes carries amplitudes");
  }
}

}  // namespace

Gate make_gate(GateKind kind, std::vector<int> qubits) {
  Gate g;
  g.kind = kind;
  g.qubits = std::move(qubits);
  validate_gate(g);
  return g;
}

Gate make_rotation(GateKind kind, int qubit, Angle angle) {
  Gate g;
  g.kind = kind;
  g.qubits = {qubit};
  g.angle = std::move(angle);
  validate_gate(g);
  return g;
}

Gate make_crz(int control, int target, Angle angle) {
  Gate g;
  g.kind = GateKind::CRz;
  g.qubits = {control, target};
  g.angle = std::move(angle);
  validate_gate(g);
  return g;
}

Gate make_controlled_block(std::vector<int> controls,
                           std::vector<Gate> block) {
  Gate g;
  g.kind = GateKind::ControlledBlock;
  g.qubits = std::move(controls);
  g.block = std::move(block);
  validate_gate(g);
  return g;
}

Gate make_prepare(std::vector<int> qubits, Vector amplitudes) {
  Gate g;
  g.kind = GateKind::PrepareAmplitudes;
  g.qubits = std::move(qubits);
  g.amplitudes = std::move(amplitudes);
  validate_gate(g);
  return g;
}

std::vector<int> gate_support(const Gate& g) {
  std::vector<int> support = g.qubits;
  for (const Gate& inner : g.block) {
    std::vector<int> sub = gate_support(inner);
    support.insert(support.end(), sub.begin(), sub.end());
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (g.kind == GateKind::ControlledBlock) {
    // Keep controls in listed order at the front, targets sorted after.
    std::vector<int> ordered = g.qubits;
    for (int q : support) {
      if (std::find(g.qubits.begin(), g.qubits.end(), q) == g.qubits.end()) {
        ordered.push_back(q);
      }
    }
    return ordered;
  }
  return g.qubits;
}

std::vector<int> gate_qubit_order(const Gate& g) { return gate_support(g); }

double resolve_angle(const Angle& angle,
                     const std::map<std::string, double>& binding) {
  if (const double* literal = std::get_if<double>(&angle)) return *literal;
  const auto& ref = std::get<ParamRef>(angle);
  auto it = binding.find(ref.name);
  if (it == binding.end()) throw UnboundParamError(ref.name);
  return it->second;
}

namespace {

Matrix matrix_h() {
  Matrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Matrix matrix_pauli(GateKind k) {
  Matrix m(2, 2);
  switch (k) {
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Y: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix matrix_rotation(GateKind k, double theta) {
  double c = std::cos(theta / 2.0);
  double s = std::sin(theta / 2.0);
  Matrix m(2, 2);
  switch (k) {
    case GateKind::Rx: m << c, -kI * s, -kI * s, c; break;
    case GateKind::Ry: m << c, -s, s, c; break;
    default:
      m << std::exp(-kI * (theta / 2.0)), 0, 0, std::exp(kI * (theta / 2.0));
      break;
  }
  return m;
}

// Embeds a gate matrix into the space spanned by `space` (an ordered qubit
// list): rows/columns are indexed by bits of the space qubits, most
// significant first.
Matrix embed_into_space(const Matrix& u, const std::vector<int>& gate_order,
                        const std::vector<int>& space) {
  int m = static_cast<int>(space.size());
  int k = static_cast<int>(gate_order.size());
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) {
    auto it = std::find(space.begin(), space.end(), gate_order[i]);
    pos[i] = static_cast<int>(it - space.begin());
  }
  std::size_t dim = std::size_t(1) << m;
  auto sub_index = [&](std::size_t idx) {
    std::size_t sub = 0;
    for (int i = 0; i < k; ++i) {
      sub = (sub << 1) | ((idx >> (m - 1 - pos[i])) & 1u);
    }
    return sub;
  };
  auto rest_index = [&](std::size_t idx) {
    std::size_t rest = 0;
    for (int b = 0; b < m; ++b) {
      bool is_gate_bit =
          std::find(pos.begin(), pos.end(), b) != pos.end();
      if (!is_gate_bit) rest = (rest << 1) | ((idx >> (m - 1 - b)) & 1u);
    }
    return rest;
  };
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (rest_index(i) != rest_index(j)) continue;
      out(i, j) = u(sub_index(i), sub_index(j));
    }
  }
  return out;
}

// Deterministic unitary completion: first column is the target vector, the
// remaining columns come from Gram-Schmidt over the identity basis.
Matrix complete_isometry(const Vector& first_column) {
  Eigen::Index dim = first_column.size();
  Matrix u = Matrix::Zero(dim, dim);
  u.col(0) = first_column;
  Eigen::Index filled = 1;
  for (Eigen::Index cand = 0; cand < dim && filled < dim; ++cand) {
    Vector v = Vector::Zero(dim);
    v(cand) = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < filled; ++c) {
        v -= u.col(c).dot(v) * u.col(c);
      }
    }
    double norm = v.norm();
    if (norm > 1e-8) {
      u.col(filled++) = v / norm;
    }
  }
  if (filled != dim) {
    throw InvalidCircuitError("amplitude completion failed");
  }
  return u;
}

}  // namespace

Matrix gate_matrix(const Gate& g,
                   const std::map<std::string, double>& binding) {
  switch (g.kind) {
    case GateKind::H:
      return matrix_h();
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      return matrix_pauli(g.kind);
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      return matrix_rotation(g.kind, resolve_angle(*g.angle, binding));
    case GateKind::CRz: {
      Matrix m = Matrix::Identity(4, 4);
      m.block<2, 2>(2, 2) =
          matrix_rotation(GateKind::Rz, resolve_angle(*g.angle, binding));
      return m;
    }
    case GateKind::CNOT: {
      Matrix m = Matrix::Identity(4, 4);
      m(2, 2) = 0;
      m(3, 3) = 0;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
    }
    case GateKind::CCNOT: {
      Matrix m = Matrix::Identity(8, 8);
      m(6, 6) = 0;
      m(7, 7) = 0;
      m(6, 7) = 1;
      m(7, 6) = 1;
      return m;
    }
    case GateKind::ControlledBlock: {
      std::vector<int> order = gate_qubit_order(g);
      std::vector<int> targets(order.begin() + g.qubits.size(), order.end());
      std::size_t tdim = std::size_t(1) << targets.size();
      Matrix u_block = Matrix::Identity(tdim, tdim);
      for (const Gate& inner : g.block) {
        Matrix inner_m = embed_into_space(gate_matrix(inner, binding),
                                          gate_qubit_order(inner), targets);
        u_block = inner_m * u_block;
      }
      std::size_t cdim = std::size_t(1) << g.qubits.size();
      std::size_t dim = cdim * tdim;
      Matrix out = Matrix::Identity(dim, dim);
      out.block((cdim - 1) * tdim, (cdim - 1) * tdim, tdim, tdim) = u_block;
      return out;
    }
    case GateKind::PrepareAmplitudes:
      return complete_isometry(g.amplitudes);
  }
  throw InvalidCircuitError("unknown gate kind");
}

Gate bind_gate(const Gate& g, const std::map<std::string, double>& binding) {
  Gate out = g;
  if (out.angle) out.angle = resolve_angle(*out.angle, binding);
  for (Gate& inner : out.block) inner = bind_gate(inner, binding);
  return out;
}

Circuit bind(const Circuit& c, const std::map<std::string, double>& binding) {
  Circuit out(c.n_qubits);
  out.labels = c.labels;
  for (const Event& e : c.events) {
    if (const auto* u = std::get_if<Unitary>(&e)) {
      out.append(Unitary{bind_gate(u->gate, binding)});
    } else {
      out.append(e);
    }
  }
  return out;
}

double unitarity_check(const Gate& g,
                       const std::map<std::string, double>& binding) {
  Matrix u = gate_matrix(g, binding);
  Matrix dev = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return dev.cwiseAbs().maxCoeff();
}

namespace {

std::vector<int> event_qubits(const Event& e) {
  if (const auto* u = std::get_if<Unitary>(&e)) return gate_support(u->gate);
  if (const auto* p = std::get_if<PostselectZero>(&e)) return {p->qubit};
  return {std::get<Discard>(e).qubit};
}

}  // namespace

void Circuit::append(Event e) {
  std::set<int> terminal;
  for (const Event& prev : events) {
    if (const auto* p = std::get_if<PostselectZero>(&prev)) {
      terminal.insert(p->qubit);
    } else if (const auto* d = std::get_if<Discard>(&prev)) {
      terminal.insert(d->qubit);
    }
  }
  if (const auto* u = std::get_if<Unitary>(&e)) validate_gate(u->gate);
  for (int q : event_qubits(e)) {
    if (q < 0 || q >= n_qubits) {
      throw InvalidCircuitError("qubit " + std::to_string(q) +
                                " out of range for register of " +
                                std::to_string(n_qubits));
    }
    if (terminal.count(q)) {
      throw InvalidCircuitError("qubit " + std::to_string(q) +
                                " used after postselect or discard");
    }
  }
  events.push_back(std::move(e));
}

namespace {

nlohmann::ordered_json gate_to_json(const Gate& g) {
  nlohmann::ordered_json j;
  j["op"] = kind_name(g.kind);
  j["qubits"] = g.qubits;
  if (g.angle) {
    if (const double* literal = std::get_if<double>(&*g.angle)) {
      j["angle"] = *literal;
    } else {
      j["param"] = std::get<ParamRef>(*g.angle).name;
    }
  }
  if (!g.block.empty()) {
    j["block"] = nlohmann::ordered_json::array();
    for (const Gate& inner : g.block) j["block"].push_back(gate_to_json(inner));
  }
  if (g.amplitudes.size() != 0) {
    j["amps"] = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < g.amplitudes.size(); ++i) {
      j["amps"].push_back({g.amplitudes(i).real(), g.amplitudes(i).imag()});
    }
  }
  return j;
}

}  // namespace

std::string circuit_to_json(const Circuit& c) {
  nlohmann::ordered_json j;
  j["n_qubits"] = c.n_qubits;
  j["events"] = nlohmann::ordered_json::array();
  for (const Event& e : c.events) {
    if (const auto* u = std::get_if<Unitary>(&e)) {
      j["events"].push_back(gate_to_json(u->gate));
    } else if (const auto* p = std::get_if<PostselectZero>(&e)) {
      j["events"].push_back({{"op", "PostselectZero"}, {"qubit", p->qubit}});
    } else {
      j["events"].push_back(
          {{"op", "Discard"}, {"qubit", std::get<Discard>(e).qubit}});
    }
  }
  j["labels"] = nlohmann::ordered_json::object();
  for (const auto& [q, label] : c.labels) {
    j["labels"][std::to_string(q)] = label;
  }
  return j.dump(2);
}

}  // namespace discopile
