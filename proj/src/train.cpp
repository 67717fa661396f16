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

#include "discopile/train.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "discopile/compiler.hpp"
#include "discopile/diagram.hpp"
#include "discopile/errors.hpp"
#include "discopile/rng.hpp"
#include "discopile/sim.hpp"

namespace discopile {

namespace {

constexpr double kProbClamp = 1e-9;

// Distinct deterministic RNG streams per seed; init_params consumes the
// bare seed, so everything else must be decorrelated from it.
constexpr std::uint64_t kPerturbationStream = 1;
constexpr std::uint64_t kShotStreamBase = 2;

int find_sentence_qubit(const SimResult& r) {
  for (std::size_t i = 0; i < r.kept_labels.size(); ++i) {
    if (r.kept_labels[i] == "sentence") return r.kept_qubits[i];
  }
  for (std::size_t i = 0; i < r.kept_labels.size(); ++i) {
    if (r.kept_labels[i].rfind("sentence", 0) == 0) return r.kept_qubits[i];
  }
  throw Error("circuit output has no sentence qubit");
}

double p_true_of(const SimResult& r, long shots, std::uint64_t shot_seed) {
  int q = find_sentence_qubit(r);
  if (shots <= 0) return born_distribution(r, q).first;
  auto [n0, n1] = sample_shots(r, q, shots, shot_seed);
  return static_cast<double>(n0) / static_cast<double>(n0 + n1);
}

struct CompiledSentence {
  Circuit circuit;
  bool label = false;
};

std::vector<CompiledSentence> compile_dataset(
    const std::vector<LabeledSentence>& dataset, const Lexicon& lex,
    const AnsatzConfig& cfg) {
  std::vector<CompiledSentence> out;
  out.reserve(dataset.size());
  for (const auto& s : dataset) {
    out.push_back({compile(diagram_from_sentence(s.tokens, lex), cfg),
                   s.label});
  }
  return out;
}

// Loss and accuracy from one pass over precompiled circuits. Loss terms are
// summed in sorted order so dataset permutation cannot change the value.
std::pair<double, double> eval_loss_acc(
    const std::vector<CompiledSentence>& ctx,
    const std::map<std::string, double>& binding, long shots,
    std::uint64_t shot_seed) {
  std::vector<double> terms;
  terms.reserve(ctx.size());
  int correct = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    SimResult r = run_pure(ctx[i].circuit, binding);
    double pt = p_true_of(r, shots, mix_seed(shot_seed, i));
    bool predicted = pt >= 0.5;
    if (predicted == ctx[i].label) ++correct;
    double p = ctx[i].label ? pt : 1.0 - pt;
    p = std::clamp(p, kProbClamp, 1.0 - kProbClamp);
    terms.push_back(-std::log(p));
  }
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  double n = ctx.empty() ? 1.0 : static_cast<double>(ctx.size());
  return {sum / n, static_cast<double>(correct) / n};
}

Lexicon dataset_vocabulary(const std::vector<LabeledSentence>& dataset,
                           const Lexicon& lex) {
  Lexicon vocab;
  for (const auto& s : dataset) {
    for (const auto& tok : s.tokens) {
      auto it = lex.entries.find(tok);
      if (it == lex.entries.end()) throw UnknownTokenError(tok);
      vocab.entries.emplace(tok, it->second);
    }
  }
  return vocab;
}

}  // namespace

std::pair<double, double> sentence_probability(
    const std::vector<std::string>& tokens, const ParamStore& params,
    const Lexicon& lex, const AnsatzConfig& cfg, long shots,
    std::uint64_t shot_seed) {
  Circuit c = compile(diagram_from_sentence(tokens, lex), cfg);
  SimResult r = run_pure(c, params.values);
  double pt = p_true_of(r, shots, shot_seed);
  return {pt, 1.0 - pt};
}

double bce_loss(const std::vector<LabeledSentence>& dataset,
                const ParamStore& params, const Lexicon& lex,
                const AnsatzConfig& cfg, long shots, std::uint64_t shot_seed) {
  auto ctx = compile_dataset(dataset, lex, cfg);
  return eval_loss_acc(ctx, params.values, shots, shot_seed).first;
}

ParamStore spsa_step(const ParamStore& params, int k,
                     const std::function<double(const ParamStore&)>& loss,
                     const SpsaConfig& cfg, std::mt19937_64& eng) {
  if (!(cfg.a > 0.0) || !(cfg.c > 0.0))
    throw Error("spsa constants a and c must be positive");
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0) ||
      !(cfg.gamma > 0.0 && cfg.gamma <= 1.0))
    throw Error("spsa exponents must lie in (0, 1]");
  double big_a = cfg.A < 0.0 ? 0.01 * cfg.iterations : cfg.A;
  double a_k = cfg.a / std::pow(k + 1 + big_a, cfg.alpha);
  double c_k = cfg.c / std::pow(k + 1, cfg.gamma);

  std::vector<double> delta;
  delta.reserve(params.values.size());
  ParamStore plus = params;
  ParamStore minus = params;
  {
    auto ip = plus.values.begin();
    auto im = minus.values.begin();
    for (; ip != plus.values.end(); ++ip, ++im) {
      double d = rademacher(eng);
      delta.push_back(d);
      ip->second += c_k * d;
      im->second -= c_k * d;
    }
  }
  double lp = loss(plus);
  double lm = loss(minus);

  ParamStore next = params;
  std::size_t i = 0;
  for (auto& [name, value] : next.values) {
    double ghat = (lp - lm) / (2.0 * c_k * delta[i++]);
    value -= a_k * ghat;
  }
  return next;
}

std::pair<ParamStore, TrainLog> train(
    const std::vector<LabeledSentence>& dataset, const Lexicon& lex,
    const AnsatzConfig& cfg, const SpsaConfig& spsa) {
  if (dataset.empty()) throw Error("training dataset is empty");
  if (spsa.iterations < 0) throw Error("iterations must be nonnegative");

  Lexicon vocab = dataset_vocabulary(dataset, lex);
  ParamStore params = init_params(vocab, cfg, spsa.seed);
  auto ctx = compile_dataset(dataset, lex, cfg);

  std::mt19937_64 perturb(mix_seed(spsa.seed, kPerturbationStream));
  std::uint64_t eval_counter = 0;
  auto eval = [&](const std::map<std::string, double>& binding) {
    std::uint64_t s = mix_seed(spsa.seed, kShotStreamBase + eval_counter++);
    return eval_loss_acc(ctx, binding, spsa.shots, s);
  };
  auto loss_fn = [&](const ParamStore& p) { return eval(p.values).first; };

  ParamStore best = params;
  double best_loss = eval(params.values).first;

  TrainLog log;
  log.loss.reserve(spsa.iterations);
  log.accuracy.reserve(spsa.iterations);
  for (int k = 0; k < spsa.iterations; ++k) {
    params = spsa_step(params, k, loss_fn, spsa, perturb);
    auto [l, acc] = eval(params.values);
    log.loss.push_back(l);
    log.accuracy.push_back(acc);
    if (l < best_loss) {
      best_loss = l;
      best = params;
    }
  }

  log.final_metrics = metrics(dataset, best, lex, cfg, spsa.shots,
                              mix_seed(spsa.seed, kShotStreamBase));
  return {std::move(best), std::move(log)};
}

Metrics metrics(const std::vector<LabeledSentence>& dataset,
                const ParamStore& params, const Lexicon& lex,
                const AnsatzConfig& cfg, long shots, std::uint64_t shot_seed) {
  long tp = 0, fp = 0, tn = 0, fn = 0;
  auto ctx = compile_dataset(dataset, lex, cfg);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    SimResult r = run_pure(ctx[i].circuit, params.values);
    double pt = p_true_of(r, shots, mix_seed(shot_seed, i));
    bool predicted = pt >= 0.5;
    if (predicted && ctx[i].label) ++tp;
    if (predicted && !ctx[i].label) ++fp;
    if (!predicted && !ctx[i].label) ++tn;
    if (!predicted && ctx[i].label) ++fn;
  }
  double n = static_cast<double>(tp + fp + tn + fn);
  Metrics m;
  if (n == 0.0) return m;
  double po = static_cast<double>(tp + tn) / n;
  double pred_true = static_cast<double>(tp + fp) / n;
  double gold_true = static_cast<double>(tp + fn) / n;
  double pe = pred_true * gold_true + (1.0 - pred_true) * (1.0 - gold_true);
  m.accuracy = po;
  if (1.0 - pe < 1e-12) {
    m.kappa = po >= 1.0 - 1e-12 ? 1.0 : 0.0;
  } else {
    m.kappa = (po - pe) / (1.0 - pe);
  }
  double prec = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  double rec = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  m.f1 = prec + rec > 0.0 ? 2.0 * prec * rec / (prec + rec) : 0.0;
  return m;
}

std::string train_log_to_csv(const TrainLog& log) {
  std::string out = "iter,loss,accuracy\n";
  char buf[96];
  for (std::size_t k = 0; k < log.loss.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", k, log.loss[k],
                  log.accuracy[k]);
    out += buf;
  }
  return out;
}

}  // namespace discopile
