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
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "discopile/ansatz.hpp"
#include "discopile/corpus.hpp"
#include "discopile/pregroup.hpp"

namespace discopile {

// SPSA schedule: a_k = a/(k+1+A)^alpha, c_k = c/(k+1)^gamma.
// A < 0 means "use 0.01 * iterations".
struct SpsaConfig {
  int iterations = 300;
  double a = 0.05;
  double c = 0.06;
  double A = -1.0;
  double alpha = 0.602;
  double gamma = 0.101;
  std::uint64_t seed = 0;
  long shots = 0;  // 0 = exact probabilities
};

struct Metrics {
  double accuracy = 0.0;
  double kappa = 0.0;
  double f1 = 0.0;
};

// Per-iteration curves (post-update) plus metrics of the returned params.
struct TrainLog {
  std::vector<double> loss;
  std::vector<double> accuracy;
  Metrics final_metrics;
};

// Born probabilities of the sentence qubit; True reads out as |0> so
// p_True = p(0). Shot mode replaces exact probabilities with frequencies
// drawn from mt19937_64(shot_seed).
std::pair<double, double> sentence_probability(
    const std::vector<std::string>& tokens, const ParamStore& params,
    const Lexicon& lex, const AnsatzConfig& cfg, long shots = 0,
    std::uint64_t shot_seed = 0);

// Mean binary cross-entropy, probabilities clamped to [1e-9, 1-1e-9].
// Terms are summed in sorted order so the value is invariant under
// dataset permutation.
double bce_loss(const std::vector<LabeledSentence>& dataset,
                const ParamStore& params, const Lexicon& lex,
                const AnsatzConfig& cfg, long shots = 0,
                std::uint64_t shot_seed = 0);

// One SPSA update; evaluates `loss` exactly twice. `eng` supplies the
// Rademacher perturbation directions in parameter-name order.
ParamStore spsa_step(const ParamStore& params, int k,
                     const std::function<double(const ParamStore&)>& loss,
                     const SpsaConfig& cfg, std::mt19937_64& eng);

// Initializes from the dataset vocabulary, runs `iterations` SPSA steps,
// returns the best-loss parameters seen (including the initial point; ties
// go to the earliest). Compiled circuits are cached per sentence.
std::pair<ParamStore, TrainLog> train(
    const std::vector<LabeledSentence>& dataset, const Lexicon& lex,
    const AnsatzConfig& cfg, const SpsaConfig& spsa);

// Accuracy, Cohen's kappa, and f1 on the True class. Prediction is the
// argmax of (p_True, p_False), True on ties.
Metrics metrics(const std::vector<LabeledSentence>& dataset,
                const ParamStore& params, const Lexicon& lex,
                const AnsatzConfig& cfg, long shots = 0,
                std::uint64_t shot_seed = 0);

// CSV with header `iter,loss,accuracy`, one row per iteration.
std::string train_log_to_csv(const TrainLog& log);

}  // namespace discopile
