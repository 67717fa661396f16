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

// Release gate: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Every expected value here is either a hand-derived
// constant or an independent re-computation (never the library calling
// itself twice through the same code path).

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "discopile/ansatz.hpp"
#include "discopile/circuit.hpp"
#include "discopile/compiler.hpp"
#include "discopile/corpus.hpp"
#include "discopile/diagram.hpp"
#include "discopile/errors.hpp"
#include "discopile/experiment.hpp"
#include "discopile/linalg.hpp"
#include "discopile/mixer.hpp"
#include "discopile/plot.hpp"
#include "discopile/pregroup.hpp"
#include "discopile/semantics.hpp"
#include "discopile/sim.hpp"
#include "discopile/train.hpp"
#include "helpers.hpp"

namespace {

using namespace discopile;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e9;
  return (a - b).cwiseAbs().maxCoeff();
}

// Shared state flowing from the training criterion into the study criteria.
struct GateState {
  Corpus corpus;
  Lexicon lex;
  AnsatzConfig study_cfg;  // layers = 2, the configuration the study uses
  ParamStore trained;      // params of the first seed reaching perfect metrics
  bool converged = false;
};

// ---------------------------------------------------------------------------
// Criterion 1: pregroup reduction.

bool crit_reduction(GateState& st, std::string& detail) {
  PregroupType t = type_of_sentence({"alice", "plays", "guitar"}, st.lex);
  ReductionTrace tr = reduce(t);
  std::vector<std::pair<int, int>> want_cups = {{0, 1}, {3, 4}};
  bool ok = tr.cups == want_cups;
  ok = ok && tr.leftovers == std::vector<int>{2};
  ok = ok && t.factors.size() == 5 && t.factors[2] == make_simple(Base::S, 0);
  ok = ok && is_grammatical(t);

  double worst_ms = 0.0;
  int grammatical = 0;
  for (const auto& row : st.corpus.sentences) {
    auto start = Clock::now();
    PregroupType rt = type_of_sentence(row.tokens, st.lex);
    bool g = is_grammatical(rt);
    double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    worst_ms = std::max(worst_ms, ms);
    if (g) ++grammatical;
  }
  ok = ok && grammatical == 16 && worst_ms < 1.0;

  std::ostringstream os;
  os << grammatical << "/16 grammatical, worst parse " << worst_ms << " ms";
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 2: gate matrices against closed forms, unitarity under random
// parameters.

Matrix hand_rx(double th) {
  Matrix m(2, 2);
  std::complex<double> i(0.0, 1.0);
  m << std::cos(th / 2), -i * std::sin(th / 2), -i * std::sin(th / 2),
      std::cos(th / 2);
  return m;
}

Matrix hand_ry(double th) {
  Matrix m(2, 2);
  m << std::cos(th / 2), -std::sin(th / 2), std::sin(th / 2), std::cos(th / 2);
  return m;
}

Matrix hand_rz(double th) {
  Matrix m = Matrix::Zero(2, 2);
  std::complex<double> i(0.0, 1.0);
  m(0, 0) = std::exp(-i * (th / 2));
  m(1, 1) = std::exp(i * (th / 2));
  return m;
}

bool crit_gates(std::string& detail) {
  const double tol = 1e-12;
  bool ok = true;

  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Matrix x(2, 2), y(2, 2), z(2, 2);
  std::complex<double> i(0.0, 1.0);
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  ok = ok && max_abs_diff(gate_matrix(make_gate(GateKind::H, {0})), h) <= tol;
  ok = ok && max_abs_diff(gate_matrix(make_gate(GateKind::X, {0})), x) <= tol;
  ok = ok && max_abs_diff(gate_matrix(make_gate(GateKind::Y, {0})), y) <= tol;
  ok = ok && max_abs_diff(gate_matrix(make_gate(GateKind::Z, {0})), z) <= tol;

  Matrix cnot = Matrix::Identity(4, 4);
  cnot(2, 2) = cnot(3, 3) = 0;
  cnot(2, 3) = cnot(3, 2) = 1;
  ok = ok &&
       max_abs_diff(gate_matrix(make_gate(GateKind::CNOT, {0, 1})), cnot) <=
           tol;
  Matrix ccnot = Matrix::Identity(8, 8);
  ccnot(6, 6) = ccnot(7, 7) = 0;
  ccnot(6, 7) = ccnot(7, 6) = 1;
  ok = ok && max_abs_diff(gate_matrix(make_gate(GateKind::CCNOT, {0, 1, 2})),
                          ccnot) <= tol;

  std::mt19937_64 eng(20260814);
  std::uniform_real_distribution<double> u(-2.0 * M_PI, 2.0 * M_PI);
  double worst_unitarity = 0.0;
  double worst_form = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    double a = u(eng), b = u(eng), c = u(eng), d = u(eng);
    Gate rx = make_rotation(GateKind::Rx, 0, a);
    Gate ry = make_rotation(GateKind::Ry, 0, b);
    Gate rz = make_rotation(GateKind::Rz, 0, c);
    Gate crz = make_crz(0, 1, d);
    worst_form = std::max(worst_form, max_abs_diff(gate_matrix(rx), hand_rx(a)));
    worst_form = std::max(worst_form, max_abs_diff(gate_matrix(ry), hand_ry(b)));
    worst_form = std::max(worst_form, max_abs_diff(gate_matrix(rz), hand_rz(c)));
    Matrix crz_want = Matrix::Identity(4, 4);
    crz_want.block(2, 2, 2, 2) = hand_rz(d);
    worst_form = std::max(worst_form, max_abs_diff(gate_matrix(crz), crz_want));
    for (const Gate& g : {rx, ry, rz, crz})
      worst_unitarity = std::max(worst_unitarity, unitarity_check(g));
    if (trial % 10 == 0) {
      Gate prep = make_prepare({0, 1}, testutil::random_pure(4, eng));
      worst_unitarity = std::max(worst_unitarity, unitarity_check(prep));
      Gate block = make_controlled_block(
          {0}, {make_rotation(GateKind::Rx, 1, u(eng)),
                make_rotation(GateKind::Rz, 1, u(eng))});
      worst_unitarity = std::max(worst_unitarity, unitarity_check(block));
    }
  }
  ok = ok && worst_form <= tol && worst_unitarity <= tol;

  std::ostringstream os;
  os << "worst closed-form diff " << worst_form << ", worst unitarity defect "
     << worst_unitarity;
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 3: copy spider.

bool crit_spider(std::string& detail) {
  bool ok = spider_equivalence_check() == 0.0;

  // Basis copy, checked on the raw simulator: |x>|0> -> |xx> exactly.
  for (int xval : {0, 1}) {
    Circuit c(2);
    if (xval == 1) c.append_gate(make_gate(GateKind::X, {0}));
    c.append_gate(make_gate(GateKind::CNOT, {0, 1}));
    SimResult r = run_pure(c);
    const Vector& psi = r.pure().amplitudes;
    int want_index = xval * 2 + xval;
    for (int k = 0; k < 4; ++k) {
      double want = (k == want_index) ? 1.0 : 0.0;
      ok = ok && std::abs(psi(k) - std::complex<double>(want, 0.0)) == 0.0;
    }
  }

  // |+> through the spider is the Bell state.
  Circuit c(2);
  c.append_gate(make_gate(GateKind::H, {0}));
  c.append_gate(make_gate(GateKind::CNOT, {0, 1}));
  SimResult r = run_pure(c);
  Vector bell(4);
  bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  double diff = (r.pure().amplitudes - bell).cwiseAbs().maxCoeff();
  ok = ok && diff <= 1e-12;

  std::ostringstream os;
  os << "bell deviation " << diff;
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 4: mixture circuits against branch-average densities and the
// replay oracle.

std::vector<Gate> random_branch_ops(int n_qubits, std::mt19937_64& eng) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> pick(0, n_qubits >= 2 ? 4 : 3);
  std::uniform_int_distribution<int> qubit(0, n_qubits - 1);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::vector<Gate> ops;
  int m = count(eng);
  for (int k = 0; k < m; ++k) {
    switch (pick(eng)) {
      case 0:
        ops.push_back(make_rotation(GateKind::Rx, qubit(eng), angle(eng)));
        break;
      case 1:
        ops.push_back(make_rotation(GateKind::Ry, qubit(eng), angle(eng)));
        break;
      case 2:
        ops.push_back(make_rotation(GateKind::Rz, qubit(eng), angle(eng)));
        break;
      case 3:
        ops.push_back(make_gate(GateKind::H, {qubit(eng)}));
        break;
      default:
        ops.push_back(make_gate(GateKind::CNOT, {0, 1}));
        break;
    }
  }
  return ops;
}

Matrix standalone_density(const std::vector<Gate>& ops, int n_qubits) {
  Circuit c(n_qubits);
  for (const Gate& g : ops) c.append_gate(g);
  SimResult r = run_pure(c);
  const Vector& psi = r.pure().amplitudes;
  return psi * psi.adjoint();
}

bool crit_mixtures(std::string& detail) {
  std::mt19937_64 eng(424242);
  double worst_avg = 0.0, worst_oracle = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + (trial % 2);
    std::vector<Gate> o1 = random_branch_ops(n, eng);
    std::vector<Gate> o2 = random_branch_ops(n, eng);
    MixturePlan plan = plan_two_way(o1, o2);
    int width = plan.base.n_qubits;
    Matrix want = 0.5 * standalone_density(o1, width) +
                  0.5 * standalone_density(o2, width);
    SimResult r = run_density(build_two_way(o1, o2));
    worst_avg = std::max(worst_avg, max_abs_diff(r.density().matrix, want));
    MixtureResult ref =
        mixture_oracle(plan.branches, plan.base, plan.splice_index);
    worst_oracle = std::max(
        worst_oracle, max_abs_diff(r.density().matrix, ref.rho.matrix));
  }

  double worst_mway = 0.0;
  for (int m : {3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_real_distribution<double> u(0.1, 1.0);
      std::vector<double> raw(m);
      double sum = 0.0;
      for (double& v : raw) {
        v = u(eng);
        sum += v;
      }
      std::vector<Branch> branches;
      for (int b = 0; b < m; ++b)
        branches.push_back(
            Branch{"b" + std::to_string(b), random_branch_ops(2, eng),
                   raw[b] / sum});
      MixturePlan plan = plan_m_way(branches);
      SimResult r = run_density(plan.circuit);
      MixtureResult ref =
          mixture_oracle(plan.branches, plan.base, plan.splice_index);
      worst_mway = std::max(worst_mway,
                            max_abs_diff(r.density().matrix, ref.rho.matrix));
    }
  }

  bool ok = worst_avg <= 1e-10 && worst_oracle <= 1e-10 && worst_mway <= 1e-10;
  std::ostringstream os;
  os << "two-way vs average " << worst_avg << ", vs oracle " << worst_oracle
     << ", m-way vs oracle " << worst_mway;
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 5: density semantics anchors and channel identities.

bool crit_semantics(std::string& detail) {
  RhoReferences refs = rho_references();
  bool ok = std::abs(von_neumann_entropy(refs.rho_optimal) - 1.0) <= 1e-12;
  ok = ok &&
       std::abs(fidelity(refs.rho_optimal, refs.rho_true) - 0.5) <= 1e-12;
  ok = ok && fidelity(refs.rho_true, refs.rho_false) <= 1e-12;
  ok = ok && fidelity(refs.rho_true, refs.rho_false,
                      FidelityConvention::Sqrt) <= 1e-12;

  // fuzz and phaser agree whenever the two densities commute.
  std::mt19937_64 eng(7170);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  double worst_commuting = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    int dim = (trial % 2 == 0) ? 2 : 4;
    Matrix basis = testutil::random_unitary(dim, eng);
    Matrix da = Matrix::Zero(dim, dim), db = Matrix::Zero(dim, dim);
    double sa = 0.0, sb = 0.0;
    for (int k = 0; k < dim; ++k) {
      da(k, k) = u(eng);
      db(k, k) = u(eng);
      sa += da(k, k).real();
      sb += db(k, k).real();
    }
    da /= sa;
    db /= sb;
    Matrix rho = basis * da * basis.adjoint();
    Matrix sigma = basis * db * basis.adjoint();
    DensityMatrix f = fuzz(rho, sigma);
    DensityMatrix p = phaser(rho, sigma);
    worst_commuting = std::max(worst_commuting, max_abs_diff(f.matrix, p.matrix));
    worst_commuting =
        std::max(worst_commuting, std::abs(f.trace_pre_norm - p.trace_pre_norm));
  }
  ok = ok && worst_commuting <= 1e-9;

  // Diagonal inputs: the unnormalized output is sum_i x_i y_i |i><i|,
  // assembled here by brute force.
  double worst_diag = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    int dim = 4;
    std::vector<double> xs(dim), ys(dim);
    bool separated = false;
    while (!separated) {
      double sx = 0.0, sy = 0.0;
      for (int k = 0; k < dim; ++k) {
        xs[k] = u(eng);
        ys[k] = u(eng);
        sx += xs[k];
        sy += ys[k];
      }
      for (int k = 0; k < dim; ++k) {
        xs[k] /= sx;
        ys[k] /= sy;
      }
      separated = true;
      for (int a = 0; a < dim && separated; ++a)
        for (int b = a + 1; b < dim; ++b)
          if (std::abs(ys[a] - ys[b]) < 1e-3) separated = false;
    }
    Matrix rho = Matrix::Zero(dim, dim), sigma = Matrix::Zero(dim, dim),
           want = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
      rho(k, k) = xs[k];
      sigma(k, k) = ys[k];
      want(k, k) = xs[k] * ys[k];
    }
    DensityMatrix f = fuzz(rho, sigma);
    DensityMatrix p = phaser(rho, sigma);
    worst_diag = std::max(
        worst_diag, max_abs_diff(f.matrix * f.trace_pre_norm, want));
    worst_diag = std::max(
        worst_diag, max_abs_diff(p.matrix * p.trace_pre_norm, want));
  }
  ok = ok && worst_diag <= 1e-12;

  std::ostringstream os;
  os << "commuting disagreement " << worst_commuting << ", diagonal identity "
     << worst_diag;
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 6: variational training over five seeds.

bool crit_training(GateState& st, std::string& detail) {
  auto start = Clock::now();
  std::vector<int> converged_seeds;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SpsaConfig spsa;
    spsa.iterations = 300;
    spsa.a = 1.0;
    spsa.seed = seed;
    auto [params, log] = train(st.corpus.sentences, st.lex, st.study_cfg, spsa);
    const Metrics& m = log.final_metrics;
    bool perfect = m.accuracy > 1.0 - 1e-12 && m.kappa > 1.0 - 1e-12 &&
                   m.f1 > 1.0 - 1e-12;
    if (perfect) {
      converged_seeds.push_back(static_cast<int>(seed));
      if (!st.converged) {
        st.trained = params;
        st.converged = true;
      }
    }
  }
  double secs = seconds_since(start);
  bool ok = !converged_seeds.empty() && secs < 60.0;

  std::ostringstream os;
  os << converged_seeds.size() << "/5 seeds perfect (";
  for (std::size_t k = 0; k < converged_seeds.size(); ++k)
    os << (k ? "," : "") << converged_seeds[k];
  os << ") in " << secs << " s";
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 7: the cross-category mixture study on a trained model.

bool crit_study(GateState& st, std::string& detail) {
  if (!st.converged) {
    detail = "no trained model available (training criterion failed)";
    return false;
  }
  Report rep = run_experiment(st.corpus, st.trained, st.study_cfg, st.lex);

  bool ok = std::abs(rep.avg_fid_true + rep.avg_fid_false - 1.0) <= 1e-9;
  double worst_sum = 0.0;
  for (const PairRow& row : rep.pairs)
    worst_sum = std::max(worst_sum,
                         std::abs(row.fid_true + row.fid_false - 1.0));
  ok = ok && worst_sum <= 1e-9;
  ok = ok && rep.avg_entropy > 0.3 && rep.avg_entropy <= 1.0 + 1e-9;
  ok = ok && rep.diagnostics.true_vs_true > rep.diagnostics.true_vs_false;
  ok = ok && rep.diagnostics.false_vs_false > rep.diagnostics.false_vs_true;

  // Every pair's mixture density must match the brute-force replay oracle.
  double worst_rho = 0.0;
  std::vector<CrossPair> pairs = cross_category_pairs(st.corpus);
  ok = ok && pairs.size() == 16 && rep.pairs.size() == 16;
  for (const CrossPair& pr : pairs) {
    MixturePlan plan =
        plan_prediction_mixture(pr.sentence_true.tokens,
                                pr.sentence_false.tokens, st.lex, st.study_cfg);
    SimResult r = run_density(plan.circuit, st.trained.values);
    MixtureResult ref = mixture_oracle(plan.branches, plan.base,
                                       plan.splice_index, st.trained.values);
    worst_rho =
        std::max(worst_rho, max_abs_diff(r.density().matrix, ref.rho.matrix));
  }
  ok = ok && worst_rho <= 1e-10;

  std::ostringstream os;
  os << "avg entropy " << rep.avg_entropy << ", fid sum defect " << worst_sum
     << ", oracle diff " << worst_rho;
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 8: the snake returns every word state.

bool crit_snake(std::string& detail) {
  std::mt19937_64 eng(990);
  double worst_fid = 0.0, worst_mass = 0.0;
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    Vector psi = testutil::random_pure(2, eng);
    Circuit snake = snake_test_circuit(psi);
    SimResult r = run_pure(snake);
    std::complex<double> ip = psi.dot(r.pure().amplitudes);
    worst_fid = std::max(worst_fid, std::abs(std::norm(ip) - 1.0));

    // Mass of each postselection event, read off prefix replays.
    double prev = 1.0;
    int count = 0;
    for (std::size_t e = 0; e < snake.events.size(); ++e) {
      if (!std::holds_alternative<PostselectZero>(snake.events[e])) continue;
      Circuit prefix(snake.n_qubits);
      for (std::size_t j = 0; j <= e; ++j) prefix.append(snake.events[j]);
      SimResult pr = run_pure(prefix);
      double mass = pr.success_probability / prev;
      prev = pr.success_probability;
      worst_mass = std::max(worst_mass, std::abs(mass - 0.5));
      ++count;
    }
    ok = ok && count == 2;
    worst_mass =
        std::max(worst_mass, std::abs(r.success_probability - 0.25) * 2.0);
  }
  ok = ok && worst_fid <= 1e-9 && worst_mass <= 1e-9;

  std::ostringstream os;
  os << "fidelity defect " << worst_fid << ", mass defect " << worst_mass;
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 9: byte-identical artifacts across identical runs.

bool crit_determinism(GateState& st, std::string& detail) {
  auto pipeline = [&]() -> std::array<std::string, 4> {
    SpsaConfig spsa;
    spsa.iterations = 40;
    spsa.a = 1.0;
    spsa.seed = 3;
    auto [params, log] = train(st.corpus.sentences, st.lex, st.study_cfg, spsa);
    std::string params_json = params_to_json(params);
    std::string csv = train_log_to_csv(log);
    Report rep = run_experiment(st.corpus, params, st.study_cfg, st.lex);
    std::string report_json = report_to_json(rep);
    std::vector<double> loss, acc;
    parse_loss_csv(csv, loss, acc);
    std::string svg = render_loss_svg(loss, acc);
    return {params_json, csv, report_json, svg};
  };
  std::array<std::string, 4> first = pipeline();
  std::array<std::string, 4> second = pipeline();
  bool ok = first == second;
  detail = ok ? "params/csv/report/svg identical across two runs"
              : "artifact mismatch between identical runs";
  return ok;
}

}  // namespace

int main() {
  GateState st;
  st.corpus = builtin_corpus();
  st.lex = builtin_lexicon();
  st.study_cfg.layers = 2;

  int failures = 0;
  auto gate = [&](const char* name, bool (*fn)(std::string&)) {
    std::string detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s | %s | %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    if (!ok) ++failures;
  };
  auto gate_st = [&](const char* name, bool (*fn)(GateState&, std::string&)) {
    std::string detail;
    bool ok = false;
    try {
      ok = fn(st, detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s | %s | %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    if (!ok) ++failures;
  };

  gate_st(
      "sentence reduction: alice-plays-guitar cups (0,1)(3,4); all dataset "
      "rows grammatical under 1 ms each",
      crit_reduction);
  gate(
      "gate matrices: closed forms elementwise; unitarity within 1e-12 over "
      "1000 random parameterizations",
      crit_gates);
  gate("copy spider: exact basis copy; |+> maps to the Bell state",
       crit_spider);
  gate(
      "mixtures: 200 random two-way runs equal branch-average and oracle "
      "densities within 1e-10; 3/4-way match the oracle",
      crit_mixtures);
  gate(
      "density semantics: entropy/fidelity anchors; fuzz-phaser agreement on "
      "commuting inputs; diagonal cross-weight identity",
      crit_semantics);
  gate_st(
      "training: at least one of five seeds reaches accuracy=kappa=f1=1 "
      "within 300 iterations, under 60 s total",
      crit_training);
  gate_st(
      "mixture study: fidelities sum to 1; avg entropy in (0.3, 1]; "
      "diagnostics ordered; 16/16 pairs match the oracle",
      crit_study);
  gate(
      "snake identity: 100 random word states return with fidelity 1; each "
      "postselection passes mass 1/2",
      crit_snake);
  gate_st(
      "reproducibility: params JSON, loss CSV, report JSON, SVG byte-equal "
      "across identical runs",
      crit_determinism);

  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
