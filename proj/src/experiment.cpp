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

#include "discopile/experiment.hpp"

#include <atomic>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "discopile/compiler.hpp"
#include "discopile/diagram.hpp"
#include "discopile/errors.hpp"
#include "discopile/mixer.hpp"
#include "discopile/semantics.hpp"
#include "discopile/sim.hpp"

#include "json.hpp"

namespace discopile {

namespace {

std::size_t worker_count(std::size_t jobs) {
  std::size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("DISCOPILE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) hw = std::min<std::size_t>(hw, v);
  }
  return std::max<std::size_t>(1, std::min(hw, jobs));
}

PairRow eval_pair(const CrossPair& p, const ParamStore& params,
                  const AnsatzConfig& cfg, const Lexicon& lex,
                  const RhoReferences& refs) {
  MixturePlan plan = plan_prediction_mixture(
      p.sentence_true.tokens, p.sentence_false.tokens, lex, cfg, {0.5, 0.5});
  SimResult r = run_density(plan.circuit, params.values);
  Matrix rho = sentence_density_matrix(r);

  PairRow row;
  row.noun_true = p.noun_true;
  row.noun_false = p.noun_false;
  row.adjective = p.adjective;
  row.entropy = von_neumann_entropy(rho, EntropyBase::Two);
  row.fid_true = fidelity(rho, refs.rho_true, FidelityConvention::Squared);
  row.fid_false = fidelity(rho, refs.rho_false, FidelityConvention::Squared);
  row.branch_weights =
      mixture_oracle(plan.branches, plan.base, plan.splice_index,
                     params.values)
          .branch_weights;
  return row;
}

}  // namespace

Matrix sentence_density_matrix(const SimResult& r) {
  std::vector<int> slots;
  for (std::size_t i = 0; i < r.kept_labels.size(); ++i) {
    if (r.kept_labels[i].rfind("sentence", 0) == 0)
      slots.push_back(static_cast<int>(i));
  }
  if (slots.size() != 1)
    throw Error("expected exactly one sentence qubit, found " +
                std::to_string(slots.size()));
  DensityMatrix rho;
  if (r.is_pure()) {
    const Vector& psi = r.pure().amplitudes;
    rho.matrix = psi * psi.adjoint();
  } else {
    rho.matrix = r.density().matrix;
  }
  if (r.kept_qubits.size() == 1) return rho.matrix;
  return partial_trace(rho, slots).matrix;
}

RhoReferences rho_references() {
  RhoReferences refs;
  refs.rho_true = Matrix::Zero(2, 2);
  refs.rho_true(0, 0) = 1.0;
  refs.rho_false = Matrix::Zero(2, 2);
  refs.rho_false(1, 1) = 1.0;
  refs.rho_optimal = 0.5 * Matrix::Identity(2, 2);
  return refs;
}

Report run_experiment(const Corpus& corpus, const ParamStore& params,
                      const AnsatzConfig& cfg, const Lexicon& lex) {
  const RhoReferences refs = rho_references();
  const auto pairs = cross_category_pairs(corpus);

  Report report;
  report.pairs.resize(pairs.size());

  std::size_t workers = worker_count(pairs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      report.pairs[i] = eval_pair(pairs[i], params, cfg, lex, refs);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      futs.push_back(std::async(std::launch::async, [&]() {
        for (std::size_t i = next.fetch_add(1); i < pairs.size();
             i = next.fetch_add(1)) {
          report.pairs[i] = eval_pair(pairs[i], params, cfg, lex, refs);
        }
      }));
    }
    for (auto& f : futs) f.get();
  }

  for (const auto& row : report.pairs) {
    report.avg_entropy += row.entropy;
    report.avg_fid_true += row.fid_true;
    report.avg_fid_false += row.fid_false;
  }
  if (!report.pairs.empty()) {
    double n = static_cast<double>(report.pairs.size());
    report.avg_entropy /= n;
    report.avg_fid_true /= n;
    report.avg_fid_false /= n;
  }

  double sum_tt = 0.0, sum_tf = 0.0, sum_ff = 0.0, sum_ft = 0.0;
  int n_true = 0, n_false = 0;
  for (const auto& s : corpus.sentences) {
    Circuit c = compile(diagram_from_sentence(s.tokens, lex), cfg);
    Matrix rho = sentence_density_matrix(run_pure(c, params.values));
    double ft = fidelity(rho, refs.rho_true, FidelityConvention::Squared);
    double ff = fidelity(rho, refs.rho_false, FidelityConvention::Squared);
    if (s.label) {
      sum_tt += ft;
      sum_tf += ff;
      ++n_true;
    } else {
      sum_ft += ft;
      sum_ff += ff;
      ++n_false;
    }
  }
  if (n_true > 0) {
    report.diagnostics.true_vs_true = sum_tt / n_true;
    report.diagnostics.true_vs_false = sum_tf / n_true;
  }
  if (n_false > 0) {
    report.diagnostics.false_vs_false = sum_ff / n_false;
    report.diagnostics.false_vs_true = sum_ft / n_false;
  }
  return report;
}

std::string report_to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["avg_entropy"] = report.avg_entropy;
  j["avg_fid_true"] = report.avg_fid_true;
  j["avg_fid_false"] = report.avg_fid_false;
  j["diagnostics"] = {{"true_vs_true", report.diagnostics.true_vs_true},
                      {"false_vs_false", report.diagnostics.false_vs_false},
                      {"false_vs_true", report.diagnostics.false_vs_true},
                      {"true_vs_false", report.diagnostics.true_vs_false}};
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& row : report.pairs) {
    nlohmann::ordered_json p;
    p["nouns"] = {row.noun_true, row.noun_false};
    p["adjective"] = row.adjective;
    p["entropy"] = row.entropy;
    p["fid_true"] = row.fid_true;
    p["fid_false"] = row.fid_false;
    p["branch_weights"] = row.branch_weights;
    j["pairs"].push_back(std::move(p));
  }
  return j.dump(2) + "\n";
}

}  // namespace discopile
