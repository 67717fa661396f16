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

#include "discopile/compiler.hpp"

#include <string>
#include <utility>
#include <vector>

#include "discopile/errors.hpp"
#include "discopile/sim.hpp"

namespace discopile {

namespace {

Gate offset_gate(Gate g, int base) {
  for (int& q : g.qubits) q += base;
  for (Gate& inner : g.block) inner = offset_gate(std::move(inner), base);
  return g;
}

// Token that produced a wire: its word box, or the spider source's token
// for copy wires.
std::string wire_token(const Diagram& d, int wire) {
  for (const WordBox& w : d.words) {
    for (int ow : w.output_wires) {
      if (ow == wire) return w.token;
    }
  }
  for (const Generator& g : d.wiring.generators) {
    if (const auto* sp = std::get_if<CopySpider>(&g)) {
      if (sp->copy == wire) return wire_token(d, sp->src);
    }
  }
  return "";
}

}  // namespace

Circuit compile(const Diagram& d, const AnsatzConfig& cfg) {
  std::vector<std::string> violations = validate(d);
  if (!violations.empty()) {
    std::string msg;
    for (const std::string& v : violations) {
      if (!msg.empty()) msg += "; ";
      msg += v;
    }
    throw InvalidDiagramError(msg);
  }
  int n_wires = static_cast<int>(d.wire_types.size());
  std::vector<int> width(n_wires);
  std::vector<int> start(n_wires);
  int total = 0;
  for (int w = 0; w < n_wires; ++w) {
    width[w] = simple_type_width(d.wire_types[w], cfg);
    start[w] = total;
    total += width[w];
  }
  Circuit c(total);

  for (const WordBox& w : d.words) {
    if (w.output_wires.empty()) continue;
    WordSubcircuit sub = word_subcircuit(w, cfg);
    int base = start[w.output_wires.front()];
    for (const Gate& g : sub.gates) c.append_gate(offset_gate(g, base));
  }

  for (const Generator& g : d.wiring.generators) {
    if (const auto* sw = std::get_if<Swap>(&g)) {
      if (width[sw->a] != width[sw->b]) {
        throw InvalidDiagramError("swap joins wires of unequal width");
      }
      std::swap(start[sw->a], start[sw->b]);
    }
  }
  for (const Generator& g : d.wiring.generators) {
    if (const auto* sp = std::get_if<CopySpider>(&g)) {
      for (int i = 0; i < width[sp->src]; ++i) {
        c.append_gate(make_gate(GateKind::CNOT,
                                {start[sp->src] + i, start[sp->copy] + i}));
      }
    }
  }
  for (const Generator& g : d.wiring.generators) {
    if (const auto* cup = std::get_if<Cup>(&g)) {
      for (int i = 0; i < width[cup->a]; ++i) {
        int qa = start[cup->a] + i;
        int qb = start[cup->b] + i;
        c.append_gate(make_gate(GateKind::CNOT, {qa, qb}));
        c.append_gate(make_gate(GateKind::H, {qa}));
        c.append(PostselectZero{qa});
        c.append(PostselectZero{qb});
      }
    }
  }

  for (const OpenWire& ow : d.wiring.open) {
    std::string label = ow.type.base == Base::S
                            ? std::string("sentence")
                            : "noun:" + wire_token(d, ow.wire);
    for (int i = 0; i < width[ow.wire]; ++i) {
      std::string full = label;
      if (width[ow.wire] > 1) full += ":" + std::to_string(i);
      c.labels[start[ow.wire] + i] = full;
    }
  }
  return c;
}

Circuit snake_test_circuit(const Vector& word_state) {
  if (word_state.size() != 2) {
    throw InvalidCircuitError("snake harness takes a 1-qubit word state");
  }
  Circuit c(3);
  c.append_gate(make_prepare({0}, word_state));
  c.append_gate(make_gate(GateKind::H, {1}));
  c.append_gate(make_gate(GateKind::CNOT, {1, 2}));
  c.append_gate(make_gate(GateKind::CNOT, {0, 1}));
  c.append_gate(make_gate(GateKind::H, {0}));
  c.append(PostselectZero{0});
  c.append(PostselectZero{1});
  c.labels[2] = "out";
  return c;
}

double spider_equivalence_check() {
  Matrix cnot = gate_matrix(make_gate(GateKind::CNOT, {0, 1}));
  double worst = 0.0;
  for (int x = 0; x < 2; ++x) {
    Vector psi = Vector::Zero(4);
    psi(x == 0 ? 0 : 2) = 1.0;
    apply_unitary(psi, 2, cnot, {0, 1});
    Vector want = Vector::Zero(4);
    want(x == 0 ? 0 : 3) = 1.0;
    worst = std::max(worst, max_abs_diff(psi, want));
  }
  return worst;
}

}  // namespace discopile
