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

#include "discopile/mixer.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include <json.hpp>

#include "discopile/errors.hpp"

namespace discopile {

namespace {

constexpr const char* kSlotToken = "<slot>";

Gate offset_gate(Gate g, int base) {
  for (int& q : g.qubits) q += base;
  for (Gate& inner : g.block) inner = offset_gate(std::move(inner), base);
  return g;
}

// Qubit allocation of a diagram's wires, starting at `offset`.
struct Layout {
  std::vector<int> start;
  std::vector<int> width;
  int total = 0;
};

Layout make_layout(const Diagram& d, const AnsatzConfig& cfg, int offset) {
  Layout out;
  int at = offset;
  for (const SimpleType& wt : d.wire_types) {
    out.width.push_back(simple_type_width(wt, cfg));
    out.start.push_back(at);
    at += out.width.back();
  }
  out.total = at - offset;
  return out;
}

std::vector<Gate> word_gates(const WordBox& w, const AnsatzConfig& cfg,
                             const Layout& layout) {
  std::vector<Gate> out;
  if (w.output_wires.empty()) return out;
  int base = layout.start[w.output_wires.front()];
  for (const Gate& g : word_subcircuit(w, cfg).gates) {
    out.push_back(offset_gate(g, base));
  }
  return out;
}

// Spider and cup lowering in compile's order; swaps resolved first as
// index bookkeeping.
void append_wiring(Circuit& c, const Diagram& d, Layout& layout) {
  for (const Generator& g : d.wiring.generators) {
    if (const auto* sw = std::get_if<Swap>(&g)) {
      if (layout.width[sw->a] != layout.width[sw->b]) {
        throw InvalidDiagramError("swap joins wires of unequal width");
      }
      std::swap(layout.start[sw->a], layout.start[sw->b]);
    }
  }
  for (const Generator& g : d.wiring.generators) {
    if (const auto* sp = std::get_if<CopySpider>(&g)) {
      for (int i = 0; i < layout.width[sp->src]; ++i) {
        c.append_gate(make_gate(
            GateKind::CNOT,
            {layout.start[sp->src] + i, layout.start[sp->copy] + i}));
      }
    }
  }
  for (const Generator& g : d.wiring.generators) {
    if (const auto* cup = std::get_if<Cup>(&g)) {
      for (int i = 0; i < layout.width[cup->a]; ++i) {
        int qa = layout.start[cup->a] + i;
        int qb = layout.start[cup->b] + i;
        c.append_gate(make_gate(GateKind::CNOT, {qa, qb}));
        c.append_gate(make_gate(GateKind::H, {qa}));
        c.append(PostselectZero{qa});
        c.append(PostselectZero{qb});
      }
    }
  }
}

void check_priors(double sum) {
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidDistributionError("branch priors must sum to 1");
  }
}

int target_register_size(const std::vector<Branch>& branches) {
  int n = 1;
  for (const Branch& b : branches) {
    for (const Gate& g : b.operations) {
      for (int q : gate_support(g)) n = std::max(n, q + 1);
    }
  }
  return n;
}

// Literal two-way wrap around a base circuit: control prep, controlled o1
// on |1>, X, controlled o2, base tail, discard. Unequal priors swap the H
// for an amplitude preparation with sqrt(p_b), sqrt(p_a).
Circuit assemble_two_way(const Circuit& base, std::size_t splice,
                         const std::vector<Gate>& o1,
                         const std::vector<Gate>& o2,
                         std::pair<double, double> priors) {
  int control = base.n_qubits;
  Circuit full(base.n_qubits + 1);
  full.labels = base.labels;
  full.labels[control] = "control:0";
  std::size_t cut = std::min(splice, base.events.size());
  for (std::size_t i = 0; i < cut; ++i) full.append(base.events[i]);
  if (std::abs(priors.first - 0.5) <= 1e-12) {
    full.append_gate(make_gate(GateKind::H, {control}));
  } else {
    Vector amps(2);
    amps << std::sqrt(priors.second), std::sqrt(priors.first);
    amps.normalize();
    full.append_gate(make_prepare({control}, amps));
  }
  if (!o1.empty()) full.append_gate(make_controlled_block({control}, o1));
  full.append_gate(make_gate(GateKind::X, {control}));
  if (!o2.empty()) full.append_gate(make_controlled_block({control}, o2));
  for (std::size_t i = cut; i < base.events.size(); ++i) {
    full.append(base.events[i]);
  }
  full.append(Discard{control});
  return full;
}

void require_plain_noun(const WordBox& w, const std::string& role) {
  if (w.type.factors.size() != 1 || w.type.factors[0].base != Base::N ||
      w.type.factors[0].adjoint != 0) {
    throw NotANounError(role + " \"" + w.token + "\" is not a plain noun");
  }
}

}  // namespace

MixturePlan plan_two_way(std::vector<Gate> o1, std::vector<Gate> o2) {
  std::vector<Branch> branches;
  branches.push_back(Branch{"o1", std::move(o1), 0.5});
  branches.push_back(Branch{"o2", std::move(o2), 0.5});
  int n = target_register_size(branches);
  MixturePlan plan;
  plan.base = Circuit(n);
  plan.splice_index = 0;
  plan.circuit = assemble_two_way(plan.base, 0, branches[0].operations,
                                  branches[1].operations, {0.5, 0.5});
  plan.branches = std::move(branches);
  for (int q = 0; q < n; ++q) plan.retained.push_back(q);
  return plan;
}

Circuit build_two_way(std::vector<Gate> o1, std::vector<Gate> o2) {
  return plan_two_way(std::move(o1), std::move(o2)).circuit;
}

MixturePlan plan_m_way(std::vector<Branch> branches) {
  int m = static_cast<int>(branches.size());
  if (m < 2 || m > 8) {
    throw TooManyBranchesError("branch count must be between 2 and 8, got " +
                               std::to_string(m));
  }
  double sum = 0.0;
  for (const Branch& b : branches) {
    if (b.prior < -1e-12) {
      throw InvalidDistributionError("negative branch prior");
    }
    sum += b.prior;
  }
  check_priors(sum);
  int n = target_register_size(branches);
  int r = 1;
  while ((1 << r) < m) ++r;
  std::vector<int> controls;
  for (int j = 0; j < r; ++j) controls.push_back(n + j);
  Vector amps = Vector::Zero(Eigen::Index(1) << r);
  for (int i = 0; i < m; ++i) {
    amps(i) = std::sqrt(std::max(0.0, branches[i].prior));
  }
  amps.normalize();

  Circuit full(n + r);
  for (int j = 0; j < r; ++j) {
    full.labels[controls[j]] = "control:" + std::to_string(j);
  }
  full.append_gate(make_prepare(controls, amps));
  for (int i = 0; i < m; ++i) {
    std::vector<int> flips;
    for (int j = 0; j < r; ++j) {
      if (bit_of(static_cast<std::size_t>(i), j, r) == 0) {
        flips.push_back(controls[j]);
      }
    }
    for (int q : flips) full.append_gate(make_gate(GateKind::X, {q}));
    if (!branches[i].operations.empty()) {
      full.append_gate(make_controlled_block(controls, branches[i].operations));
    }
    for (int q : flips) full.append_gate(make_gate(GateKind::X, {q}));
  }
  for (int q : controls) full.append(Discard{q});

  MixturePlan plan;
  plan.circuit = std::move(full);
  plan.base = Circuit(n);
  plan.splice_index = 0;
  plan.branches = std::move(branches);
  for (int q = 0; q < n; ++q) plan.retained.push_back(q);
  return plan;
}

Circuit build_m_way(std::vector<Branch> branches) {
  return plan_m_way(std::move(branches)).circuit;
}

MixturePlan plan_pronoun_mixture(const std::string& subject,
                                 const std::string& verb,
                                 const std::string& object,
                                 const std::string& verb2,
                                 const std::string& adjective,
                                 const Lexicon& lex, const AnsatzConfig& cfg) {
  Diagram d1 = diagram_from_sentence({subject, verb, object}, lex);
  Lexicon slot_lex = lex;
  slot_lex.entries[kSlotToken] = PregroupType{{SimpleType{Base::N, 0}}};
  Diagram d2 = diagram_from_sentence({kSlotToken, verb2, adjective}, slot_lex);
  require_plain_noun(d1.words[0], "subject");
  require_plain_noun(d1.words[2], "object");

  Layout l1 = make_layout(d1, cfg, 0);
  Layout l2 = make_layout(d2, cfg, l1.total);
  Circuit base(l1.total + l2.total);
  for (const WordBox& w : d1.words) {
    for (const Gate& g : word_gates(w, cfg, l1)) base.append_gate(g);
  }
  for (std::size_t i = 1; i < d2.words.size(); ++i) {
    for (const Gate& g : word_gates(d2.words[i], cfg, l2)) base.append_gate(g);
  }
  std::size_t splice = base.events.size();
  append_wiring(base, d1, l1);
  append_wiring(base, d2, l2);

  MixturePlan plan;
  int sentence_index = 0;
  auto label_open = [&](const Diagram& d, const Layout& layout) {
    for (const OpenWire& ow : d.wiring.open) {
      std::string stem =
          ow.type.base == Base::S
              ? "sentence:" + std::to_string(sentence_index)
              : "noun:" + d.words[0].token;
      for (int i = 0; i < layout.width[ow.wire]; ++i) {
        std::string full = stem;
        if (layout.width[ow.wire] > 1) full += ":" + std::to_string(i);
        base.labels[layout.start[ow.wire] + i] = full;
        plan.retained.push_back(layout.start[ow.wire] + i);
      }
    }
    ++sentence_index;
  };
  label_open(d1, l1);
  label_open(d2, l2);

  int wn = l1.width[d1.words[0].output_wires[0]];
  int subj_q = l1.start[d1.words[0].output_wires[0]];
  int obj_q = l1.start[d1.words[2].output_wires[0]];
  int slot_q = l2.start[d2.words[0].output_wires[0]];
  std::vector<Gate> copy_subject;
  std::vector<Gate> copy_object;
  for (int i = 0; i < wn; ++i) {
    copy_subject.push_back(make_gate(GateKind::CNOT, {subj_q + i, slot_q + i}));
    copy_object.push_back(make_gate(GateKind::CNOT, {obj_q + i, slot_q + i}));
  }
  plan.circuit =
      assemble_two_way(base, splice, copy_subject, copy_object, {0.5, 0.5});
  plan.base = std::move(base);
  plan.splice_index = splice;
  plan.branches.push_back(Branch{subject, std::move(copy_subject), 0.5});
  plan.branches.push_back(Branch{object, std::move(copy_object), 0.5});
  return plan;
}

Circuit build_pronoun_mixture(const std::string& subject,
                              const std::string& verb,
                              const std::string& object,
                              const std::string& verb2,
                              const std::string& adjective, const Lexicon& lex,
                              const AnsatzConfig& cfg) {
  return plan_pronoun_mixture(subject, verb, object, verb2, adjective, lex, cfg)
      .circuit;
}

MixturePlan plan_prediction_mixture(const std::vector<std::string>& sentence_a,
                                    const std::vector<std::string>& sentence_b,
                                    const Lexicon& lex, const AnsatzConfig& cfg,
                                    std::pair<double, double> priors) {
  if (priors.first < -1e-12 || priors.second < -1e-12) {
    throw InvalidDistributionError("negative branch prior");
  }
  check_priors(priors.first + priors.second);
  Diagram da = diagram_from_sentence(sentence_a, lex);
  Diagram db = diagram_from_sentence(sentence_b, lex);
  if (sentence_a.size() != sentence_b.size()) {
    throw IncompatibleShapesError("sentences differ in length");
  }
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < sentence_a.size(); ++i) {
    if (sentence_a[i] != sentence_b[i]) {
      if (!(da.words[i].type == db.words[i].type)) {
        throw IncompatibleShapesError("differing words at position " +
                                      std::to_string(i) +
                                      " have different types");
      }
      diff.push_back(i);
    }
  }
  if (!(da.wire_types == db.wire_types) ||
      da.wiring.open.size() != db.wiring.open.size()) {
    throw IncompatibleShapesError("sentences lower to different shapes");
  }

  Layout layout = make_layout(da, cfg, 0);
  Circuit base(layout.total);
  for (std::size_t i = 0; i < da.words.size(); ++i) {
    if (std::find(diff.begin(), diff.end(), i) != diff.end()) continue;
    for (const Gate& g : word_gates(da.words[i], cfg, layout)) {
      base.append_gate(g);
    }
  }
  std::size_t splice = base.events.size();
  append_wiring(base, da, layout);

  MixturePlan plan;
  for (const OpenWire& ow : da.wiring.open) {
    std::string stem = ow.type.base == Base::S ? std::string("sentence")
                                               : std::string("noun");
    for (int i = 0; i < layout.width[ow.wire]; ++i) {
      std::string full = stem;
      if (layout.width[ow.wire] > 1) full += ":" + std::to_string(i);
      base.labels[layout.start[ow.wire] + i] = full;
      plan.retained.push_back(layout.start[ow.wire] + i);
    }
  }

  auto join_tokens = [](const std::vector<std::string>& tokens,
                        const std::vector<std::size_t>& at) {
    std::string out;
    for (std::size_t i : at) {
      if (!out.empty()) out += " ";
      out += tokens[i];
    }
    return out;
  };

  if (diff.empty()) {
    std::vector<std::size_t> all(sentence_a.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    plan.circuit = base;
    plan.base = std::move(base);
    plan.splice_index = splice;
    plan.branches.push_back(Branch{join_tokens(sentence_a, all), {}, 1.0});
    return plan;
  }

  std::vector<Gate> ops_a;
  std::vector<Gate> ops_b;
  for (std::size_t i : diff) {
    for (const Gate& g : word_gates(da.words[i], cfg, layout)) {
      ops_a.push_back(g);
    }
    for (const Gate& g : word_gates(db.words[i], cfg, layout)) {
      ops_b.push_back(g);
    }
  }
  plan.circuit = assemble_two_way(base, splice, ops_a, ops_b, priors);
  plan.base = std::move(base);
  plan.splice_index = splice;
  plan.branches.push_back(
      Branch{join_tokens(sentence_a, diff), std::move(ops_a), priors.first});
  plan.branches.push_back(
      Branch{join_tokens(sentence_b, diff), std::move(ops_b), priors.second});
  return plan;
}

Circuit build_prediction_mixture(const std::vector<std::string>& sentence_a,
                                 const std::vector<std::string>& sentence_b,
                                 const Lexicon& lex, const AnsatzConfig& cfg,
                                 std::pair<double, double> priors) {
  return plan_prediction_mixture(sentence_a, sentence_b, lex, cfg, priors)
      .circuit;
}

MixtureResult mixture_oracle(const std::vector<Branch>& branches,
                             const Circuit& base, std::size_t splice_index,
                             const std::map<std::string, double>& binding) {
  if (branches.empty()) {
    throw AllBranchesZeroMassError("mixture has no branches");
  }
  double prior_sum = 0.0;
  for (const Branch& b : branches) {
    if (b.prior < -1e-12) {
      throw InvalidDistributionError("negative branch prior");
    }
    prior_sum += b.prior;
  }
  check_priors(prior_sum);
  std::size_t splice = std::min(splice_index, base.events.size());
  bool base_has_discard = false;
  for (const Event& e : base.events) {
    if (std::holds_alternative<Discard>(e)) base_has_discard = true;
  }

  std::size_t m = branches.size();
  std::vector<double> mass(m, 0.0);
  std::vector<Matrix> rhos(m);
  Eigen::Index dim = -1;
  for (std::size_t b = 0; b < m; ++b) {
    Circuit bc(base.n_qubits);
    bc.labels = base.labels;
    for (std::size_t i = 0; i < base.events.size(); ++i) {
      if (i == splice) {
        for (const Gate& g : branches[b].operations) bc.append_gate(g);
      }
      bc.append(base.events[i]);
    }
    if (splice >= base.events.size()) {
      for (const Gate& g : branches[b].operations) bc.append_gate(g);
    }
    try {
      if (base_has_discard) {
        SimResult r = run_density(bc, binding);
        rhos[b] = r.density().matrix;
        mass[b] = r.success_probability;
      } else {
        SimResult r = run_pure(bc, binding);
        rhos[b] = r.pure().amplitudes * r.pure().amplitudes.adjoint();
        mass[b] = r.success_probability;
      }
      dim = rhos[b].rows();
    } catch (const ZeroPostselectMassError&) {
      mass[b] = 0.0;
    }
  }
  double total = 0.0;
  for (std::size_t b = 0; b < m; ++b) total += branches[b].prior * mass[b];
  if (total < 1e-12) {
    throw AllBranchesZeroMassError("every branch has zero success mass");
  }
  Matrix rho = Matrix::Zero(dim, dim);
  std::vector<double> weights(m, 0.0);
  for (std::size_t b = 0; b < m; ++b) {
    double w = branches[b].prior * mass[b];
    weights[b] = w / total;
    if (w > 0.0 && rhos[b].rows() == dim) rho += (w / total) * rhos[b];
  }
  return MixtureResult{DensityMatrix{std::move(rho), total}, std::move(weights),
                       total};
}

MixtureResult run_mixture(const MixturePlan& plan,
                          const std::map<std::string, double>& binding) {
  SimResult run = run_density(plan.circuit, binding);
  MixtureResult oracle =
      mixture_oracle(plan.branches, plan.base, plan.splice_index, binding);
  MixtureResult out;
  out.rho = run.density();
  out.branch_weights = oracle.branch_weights;
  out.success_probability = run.success_probability;
  return out;
}

std::string mixture_result_to_json(const MixtureResult& r) {
  nlohmann::ordered_json j;
  j["rho"] = nlohmann::ordered_json::array();
  const Matrix& rho = r.rho.matrix;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      row.push_back({rho(i, c).real(), rho(i, c).imag()});
    }
    j["rho"].push_back(row);
  }
  j["branch_weights"] = r.branch_weights;
  j["success_probability"] = r.success_probability;
  return j.dump(2);
}

}  // namespace discopile
