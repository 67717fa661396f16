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

#include "discopile/ansatz.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "discopile/errors.hpp"
#include "discopile/rng.hpp"

namespace discopile {

namespace {

void check_config(const AnsatzConfig& cfg) {
  if (cfg.qubits_per_n < 1 || cfg.qubits_per_s < 1 || cfg.layers < 1 ||
      cfg.single_qubit_rotations < 1) {
    throw Error("ansatz counts must be at least 1");
  }
}

std::string param_name(const std::string& token, int index) {
  return token + "/" + std::to_string(index);
}

int word_param_count(int k, const AnsatzConfig& cfg) {
  return k == 1 ? cfg.single_qubit_rotations : cfg.layers * (k - 1);
}

}  // namespace

int simple_type_width(const SimpleType& t, const AnsatzConfig& cfg) {
  check_config(cfg);
  return t.base == Base::N ? cfg.qubits_per_n : cfg.qubits_per_s;
}

int type_width(const PregroupType& t, const AnsatzConfig& cfg) {
  int total = 0;
  for (const SimpleType& f : t.factors) total += simple_type_width(f, cfg);
  return total;
}

WordSubcircuit word_subcircuit(const WordBox& w, const AnsatzConfig& cfg) {
  check_config(cfg);
  WordSubcircuit sub;
  int k = type_width(w.type, cfg);
  sub.n_qubits = k;
  if (k == 0) return sub;
  if (k == 1) {
    for (int r = 0; r < cfg.single_qubit_rotations; ++r) {
      GateKind kind = (r % 2 == 0) ? GateKind::Rx : GateKind::Rz;
      sub.gates.push_back(
          make_rotation(kind, 0, ParamRef{param_name(w.token, r)}));
    }
    return sub;
  }
  for (int layer = 0; layer < cfg.layers; ++layer) {
    for (int q = 0; q < k; ++q) {
      sub.gates.push_back(make_gate(GateKind::H, {q}));
    }
    for (int i = 0; i + 1 < k; ++i) {
      int index = layer * (k - 1) + i;
      sub.gates.push_back(
          make_crz(i, i + 1, ParamRef{param_name(w.token, index)}));
    }
  }
  return sub;
}

std::vector<std::string> word_param_names(const std::string& token,
                                          const PregroupType& type,
                                          const AnsatzConfig& cfg) {
  int count = word_param_count(type_width(type, cfg), cfg);
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 0; i < count; ++i) names.push_back(param_name(token, i));
  return names;
}

std::vector<std::string> param_names(const Lexicon& vocab,
                                     const AnsatzConfig& cfg) {
  std::vector<std::string> names;
  for (const auto& [token, type] : vocab.entries) {
    std::vector<std::string> word = word_param_names(token, type, cfg);
    names.insert(names.end(), word.begin(), word.end());
  }
  return names;
}

ParamStore init_params(const Lexicon& vocab, const AnsatzConfig& cfg,
                       std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  ParamStore store;
  for (const std::string& name : param_names(vocab, cfg)) {
    store.values[name] = 2.0 * std::numbers::pi * uniform01(eng);
  }
  return store;
}

std::string params_to_json(const ParamStore& store) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, value] : store.values) {
    if (!std::isfinite(value)) {
      throw Error("parameter " + name + " is not finite");
    }
    j[name] = value;
  }
  return j.dump(2);
}

ParamStore params_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parameter file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("parameter file must be a JSON object");
  ParamStore store;
  for (const auto& [name, value] : j.items()) {
    if (!value.is_number()) {
      throw ParseError("parameter " + name + " must be a number");
    }
    double v = value.get<double>();
    if (!std::isfinite(v)) throw ParseError("parameter " + name + " not finite");
    store.values[name] = v;
  }
  return store;
}

}  // namespace discopile
