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

#include <cctype>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "discopile/ansatz.hpp"
#include "discopile/corpus.hpp"
#include "discopile/errors.hpp"
#include "discopile/experiment.hpp"
#include "discopile/io.hpp"
#include "discopile/mixer.hpp"
#include "discopile/plot.hpp"
#include "discopile/pregroup.hpp"
#include "discopile/semantics.hpp"
#include "discopile/sim.hpp"
#include "discopile/train.hpp"

namespace {

using namespace discopile;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotGrammatical = 2;
constexpr int kExitNanLoss = 3;

// Lowercase fold, strip periods, split on whitespace.
std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      continue;
    }
    if (ch == '.') continue;
    cur += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

Lexicon load_lexicon_or_builtin(const std::string& path) {
  return path.empty() ? builtin_lexicon() : load_lexicon(path);
}

Corpus load_corpus_or_builtin(const std::string& path) {
  return path.empty() ? builtin_corpus() : load_corpus(path);
}

int cmd_parse(const std::vector<std::string>& words,
              const std::string& lexicon_path) {
  Lexicon lex = load_lexicon_or_builtin(lexicon_path);
  std::string joined;
  for (const auto& w : words) joined += w + " ";
  std::vector<std::string> tokens = tokenize(joined);
  if (tokens.empty()) {
    std::cerr << "error: empty sentence\n";
    return kExitError;
  }

  PregroupType sentence = type_of_sentence(tokens, lex);
  ReductionTrace trace = reduce(sentence);

  std::string type_str;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) type_str += ' ';
    type_str += format_type(lex.entries.at(tokens[i]));
  }
  std::cout << "type: " << type_str << "\n";
  std::cout << "cups:";
  for (const auto& [a, b] : trace.cups) {
    std::cout << " (" << a << "," << b << ")";
  }
  std::cout << "\n";

  bool ok = is_grammatical(sentence);
  std::cout << "grammatical: " << (ok ? "yes" : "no") << "\n";
  if (!ok) {
    PregroupType residue;
    for (int idx : trace.leftovers)
      residue.factors.push_back(sentence.factors[idx]);
    std::cout << "residue: " << format_type(residue) << "\n";
    return kExitNotGrammatical;
  }
  return kExitOk;
}

int cmd_train(const std::string& corpus_path, const std::string& lexicon_path,
              const std::string& out_path, const std::string& log_path,
              int iters, std::uint64_t seed, long shots, int layers,
              double spsa_a) {
  Corpus corpus = load_corpus_or_builtin(corpus_path);
  Lexicon lex = load_lexicon_or_builtin(lexicon_path);
  AnsatzConfig cfg;
  cfg.layers = layers;
  SpsaConfig spsa;
  spsa.iterations = iters;
  spsa.seed = seed;
  spsa.shots = shots;
  spsa.a = spsa_a;

  auto [params, log] = train(corpus.sentences, lex, cfg, spsa);
  for (double l : log.loss) {
    if (std::isnan(l)) {
      std::cerr << "error: loss became NaN during training\n";
      return kExitNanLoss;
    }
  }

  atomic_write_file(out_path, params_to_json(params));
  atomic_write_file(log_path, train_log_to_csv(log));

  nlohmann::ordered_json j;
  j["accuracy"] = log.final_metrics.accuracy;
  j["kappa"] = log.final_metrics.kappa;
  j["f1"] = log.final_metrics.f1;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_mix(const std::string& sentence_a, const std::string& sentence_b,
            const std::string& params_path, double p,
            const std::string& lexicon_path, int layers) {
  Lexicon lex = load_lexicon_or_builtin(lexicon_path);
  ParamStore params = params_from_json(read_file(params_path));
  AnsatzConfig cfg;
  cfg.layers = layers;

  MixturePlan plan =
      plan_prediction_mixture(tokenize(sentence_a), tokenize(sentence_b), lex,
                              cfg, {p, 1.0 - p});
  SimResult r = run_density(plan.circuit, params.values);
  Matrix rho = sentence_density_matrix(r);
  RhoReferences refs = rho_references();

  nlohmann::ordered_json j;
  j["entropy"] = von_neumann_entropy(rho, EntropyBase::Two);
  j["fid_true"] = fidelity(rho, refs.rho_true, FidelityConvention::Squared);
  j["fid_false"] = fidelity(rho, refs.rho_false, FidelityConvention::Squared);
  j["branch_weights"] =
      mixture_oracle(plan.branches, plan.base, plan.splice_index,
                     params.values)
          .branch_weights;
  j["success_probability"] = r.success_probability;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_experiment(const std::string& corpus_path,
                   const std::string& lexicon_path,
                   const std::string& params_path,
                   const std::string& out_path, int layers) {
  Corpus corpus = load_corpus_or_builtin(corpus_path);
  Lexicon lex = load_lexicon_or_builtin(lexicon_path);
  ParamStore params = params_from_json(read_file(params_path));
  AnsatzConfig cfg;
  cfg.layers = layers;

  Report report = run_experiment(corpus, params, cfg, lex);
  atomic_write_file(out_path, report_to_json(report));

  nlohmann::ordered_json j;
  j["avg_entropy"] = report.avg_entropy;
  j["avg_fid_true"] = report.avg_fid_true;
  j["avg_fid_false"] = report.avg_fid_false;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_plot(const std::string& log_path, const std::string& out_path) {
  std::vector<double> loss;
  std::vector<double> accuracy;
  parse_loss_csv(read_file(log_path), loss, accuracy);
  atomic_write_file(out_path, render_loss_svg(loss, accuracy));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pregroup sentences to quantum circuits: parse, train, mix, "
               "experiment, plot"};
  app.require_subcommand(1);

  std::vector<std::string> parse_words;
  std::string parse_lexicon;
  auto* parse_cmd = app.add_subcommand("parse", "Parse one sentence");
  parse_cmd->add_option("sentence", parse_words, "Sentence tokens")
      ->required()
      ->expected(-1);
  parse_cmd->add_option("--lexicon", parse_lexicon, "Lexicon TSV file");

  std::string train_corpus, train_lexicon;
  std::string train_out = "params.json";
  std::string train_log = "loss.csv";
  int train_iters = 300;
  std::uint64_t train_seed = 0;
  long train_shots = 0;
  int train_layers = 1;
  double train_spsa_a = 0.05;
  auto* train_cmd = app.add_subcommand("train", "Train on a labeled corpus");
  train_cmd->add_option("--corpus", train_corpus,
                        "Corpus TSV (default: builtin)");
  train_cmd->add_option("--lexicon", train_lexicon, "Lexicon TSV file");
  train_cmd->add_option("--out", train_out, "Output params JSON");
  train_cmd->add_option("--log", train_log, "Output loss CSV");
  train_cmd->add_option("--iters", train_iters, "SPSA iterations");
  train_cmd->add_option("--seed", train_seed, "RNG seed");
  train_cmd->add_option("--shots", train_shots,
                        "Shots per probability (0 = exact)");
  train_cmd->add_option("--layers", train_layers, "Ansatz layers");
  train_cmd->add_option("--spsa-a", train_spsa_a, "SPSA step-size constant");

  std::string mix_a, mix_b, mix_params, mix_lexicon;
  double mix_p = 0.5;
  int mix_layers = 1;
  auto* mix_cmd =
      app.add_subcommand("mix", "Two-sentence prediction mixture");
  mix_cmd->add_option("--sentence-a", mix_a, "First sentence")->required();
  mix_cmd->add_option("--sentence-b", mix_b, "Second sentence")->required();
  mix_cmd->add_option("--params", mix_params, "Params JSON file")->required();
  mix_cmd->add_option("--p", mix_p, "Prior of sentence a");
  mix_cmd->add_option("--lexicon", mix_lexicon, "Lexicon TSV file");
  mix_cmd->add_option("--layers", mix_layers, "Ansatz layers");

  std::string exp_corpus, exp_lexicon, exp_params;
  std::string exp_out = "report.json";
  int exp_layers = 1;
  auto* exp_cmd =
      app.add_subcommand("experiment", "Cross-category mixture report");
  exp_cmd->add_option("--corpus", exp_corpus, "Corpus TSV (default: builtin)");
  exp_cmd->add_option("--lexicon", exp_lexicon, "Lexicon TSV file");
  exp_cmd->add_option("--params", exp_params, "Params JSON file")->required();
  exp_cmd->add_option("--out", exp_out, "Output report JSON");
  exp_cmd->add_option("--layers", exp_layers, "Ansatz layers");

  std::string plot_log, plot_out = "loss.svg";
  auto* plot_cmd = app.add_subcommand("plot", "Render loss/accuracy SVG");
  plot_cmd->add_option("--log", plot_log, "Input loss CSV")->required();
  plot_cmd->add_option("--out", plot_out, "Output SVG");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse_cmd) return cmd_parse(parse_words, parse_lexicon);
    if (*train_cmd)
      return cmd_train(train_corpus, train_lexicon, train_out, train_log,
                       train_iters, train_seed, train_shots, train_layers,
                       train_spsa_a);
    if (*mix_cmd)
      return cmd_mix(mix_a, mix_b, mix_params, mix_p, mix_lexicon, mix_layers);
    if (*exp_cmd)
      return cmd_experiment(exp_corpus, exp_lexicon, exp_params, exp_out,
                            exp_layers);
    if (*plot_cmd) return cmd_plot(plot_log, plot_out);
  } catch (const NotGrammaticalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotGrammatical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
