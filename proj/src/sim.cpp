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

#include "discopile/sim.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>

#include "discopile/errors.hpp"
#include "discopile/rng.hpp"

namespace discopile {

namespace {

constexpr double kMassFloor = 1e-14;

// Live original qubit ids, ascending; a slot is the compacted position.
struct Register {
  std::vector<int> live;

  explicit Register(int n) {
    live.resize(n);
    for (int i = 0; i < n; ++i) live[i] = i;
  }
  int size() const { return static_cast<int>(live.size()); }
  int slot(int original) const {
    auto it = std::lower_bound(live.begin(), live.end(), original);
    return static_cast<int>(it - live.begin());
  }
  void drop(int original) {
    live.erase(std::lower_bound(live.begin(), live.end(), original));
  }
};

std::vector<int> slots_of(const Register& reg, const std::vector<int>& order) {
  std::vector<int> slots(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) slots[i] = reg.slot(order[i]);
  return slots;
}

// Drops the slot's qubit, keeping only the bit-0 half; returns the kept
// mass and leaves the state unnormalized.
double project_zero_pure(Vector& psi, int n, int slot) {
  int p = n - 1 - slot;
  std::size_t dim_new = std::size_t(1) << (n - 1);
  std::size_t low_mask = (std::size_t(1) << p) - 1;
  Vector out(dim_new);
  for (std::size_t i = 0; i < dim_new; ++i) {
    std::size_t orig = ((i >> p) << (p + 1)) | (i & low_mask);
    out(static_cast<Eigen::Index>(i)) = psi(static_cast<Eigen::Index>(orig));
  }
  psi.swap(out);
  return psi.squaredNorm();
}

void project_zero_density(Matrix& rho, int n, int slot) {
  int p = n - 1 - slot;
  std::size_t dim_new = std::size_t(1) << (n - 1);
  std::size_t low_mask = (std::size_t(1) << p) - 1;
  Matrix out(dim_new, dim_new);
  for (std::size_t i = 0; i < dim_new; ++i) {
    std::size_t oi = ((i >> p) << (p + 1)) | (i & low_mask);
    for (std::size_t j = 0; j < dim_new; ++j) {
      std::size_t oj = ((j >> p) << (p + 1)) | (j & low_mask);
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rho(static_cast<Eigen::Index>(oi), static_cast<Eigen::Index>(oj));
    }
  }
  rho.swap(out);
}

void apply_unitary_density(Matrix& rho, int n, const Matrix& u,
                           const std::vector<int>& qubits) {
  Eigen::Index dim = rho.rows();
  Vector work(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    work = rho.col(j);
    apply_unitary(work, n, u, qubits);
    rho.col(j) = work;
  }
  Matrix uc = u.conjugate();
  for (Eigen::Index i = 0; i < dim; ++i) {
    work = rho.row(i).transpose();
    apply_unitary(work, n, uc, qubits);
    rho.row(i) = work.transpose();
  }
}

#ifndef NDEBUG
void debug_check_density(const Matrix& rho) {
  double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  assert((rho - rho.adjoint()).cwiseAbs().maxCoeff() <= 1e-10 * scale);
  if (rho.rows() <= 64) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((rho + rho.adjoint()) / 2.0);
    assert(es.eigenvalues().minCoeff() >= -1e-9 * scale);
  }
}
#endif

void check_register_size(const Circuit& c) {
  if (c.n_qubits < 1 || c.n_qubits > kMaxQubits) {
    throw InvalidCircuitError("register size " + std::to_string(c.n_qubits) +
                              " outside [1, " + std::to_string(kMaxQubits) +
                              "]");
  }
}

void fill_kept(SimResult& r, const Register& reg, const Circuit& c) {
  r.kept_qubits = reg.live;
  r.kept_labels.clear();
  for (int q : reg.live) {
    auto it = c.labels.find(q);
    r.kept_labels.push_back(it == c.labels.end() ? std::string() : it->second);
  }
}

}  // namespace

int SimResult::slot_of(int original_qubit) const {
  auto it =
      std::lower_bound(kept_qubits.begin(), kept_qubits.end(), original_qubit);
  if (it == kept_qubits.end() || *it != original_qubit) return -1;
  return static_cast<int>(it - kept_qubits.begin());
}

void apply_unitary(Vector& psi, int n_qubits, const Matrix& u,
                   const std::vector<int>& qubits) {
  int k = static_cast<int>(qubits.size());
  std::size_t dim = std::size_t(1) << n_qubits;
  std::size_t sub_dim = std::size_t(1) << k;
  if (psi.size() != static_cast<Eigen::Index>(dim)) {
    throw InvalidCircuitError("state length does not match register");
  }
  if (u.rows() != static_cast<Eigen::Index>(sub_dim) ||
      u.cols() != static_cast<Eigen::Index>(sub_dim)) {
    throw InvalidCircuitError("gate matrix does not match its qubit list");
  }
  std::vector<std::size_t> stride(k);
  for (int i = 0; i < k; ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_qubits) {
      throw InvalidCircuitError("gate qubit out of range");
    }
    stride[i] = std::size_t(1) << (n_qubits - 1 - qubits[i]);
  }
  std::size_t gate_mask = 0;
  for (std::size_t s : stride) gate_mask |= s;
  Vector scratch(sub_dim);
  Vector mixed(sub_dim);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & gate_mask) continue;
    for (std::size_t s = 0; s < sub_dim; ++s) {
      std::size_t idx = base;
      for (int b = 0; b < k; ++b) {
        if ((s >> (k - 1 - b)) & 1u) idx |= stride[b];
      }
      scratch(static_cast<Eigen::Index>(s)) =
          psi(static_cast<Eigen::Index>(idx));
    }
    mixed.noalias() = u * scratch;
    for (std::size_t s = 0; s < sub_dim; ++s) {
      std::size_t idx = base;
      for (int b = 0; b < k; ++b) {
        if ((s >> (k - 1 - b)) & 1u) idx |= stride[b];
      }
      psi(static_cast<Eigen::Index>(idx)) =
          mixed(static_cast<Eigen::Index>(s));
    }
  }
}

SimResult run_pure(const Circuit& c,
                   const std::map<std::string, double>& binding) {
  check_register_size(c);
  Register reg(c.n_qubits);
  Vector psi = Vector::Zero(Eigen::Index(1) << c.n_qubits);
  psi(0) = 1.0;
  double norm_sq = 1.0;
  for (const Event& e : c.events) {
    if (const auto* u = std::get_if<Unitary>(&e)) {
      Matrix m = gate_matrix(u->gate, binding);
      apply_unitary(psi, reg.size(), m, slots_of(reg, gate_qubit_order(u->gate)));
    } else if (const auto* p = std::get_if<PostselectZero>(&e)) {
      double mass = project_zero_pure(psi, reg.size(), reg.slot(p->qubit));
      if (mass < kMassFloor) {
        throw ZeroPostselectMassError("postselect on qubit " +
                                      std::to_string(p->qubit) +
                                      " annihilates the state");
      }
      psi /= std::sqrt(mass);
      norm_sq *= mass;
      reg.drop(p->qubit);
    } else {
      throw InvalidCircuitError("run_pure cannot execute Discard");
    }
  }
  SimResult r;
  r.state = PureState{std::move(psi), norm_sq};
  r.success_probability = norm_sq;
  fill_kept(r, reg, c);
  return r;
}

SimResult run_density(const Circuit& c,
                      const std::map<std::string, double>& binding) {
  check_register_size(c);
  Register reg(c.n_qubits);
  Eigen::Index dim = Eigen::Index(1) << c.n_qubits;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  for (const Event& e : c.events) {
    if (const auto* u = std::get_if<Unitary>(&e)) {
      Matrix m = gate_matrix(u->gate, binding);
      apply_unitary_density(rho, reg.size(), m,
                            slots_of(reg, gate_qubit_order(u->gate)));
    } else if (const auto* p = std::get_if<PostselectZero>(&e)) {
      double tr_old = rho.trace().real();
      project_zero_density(rho, reg.size(), reg.slot(p->qubit));
      double tr_new = rho.trace().real();
      if (tr_old <= 0.0 || tr_new < kMassFloor * tr_old) {
        throw ZeroPostselectMassError("postselect on qubit " +
                                      std::to_string(p->qubit) +
                                      " annihilates the state");
      }
      reg.drop(p->qubit);
    } else {
      int gone = std::get<Discard>(e).qubit;
      int slot = reg.slot(gone);
      std::vector<int> keep;
      for (int s = 0; s < reg.size(); ++s) {
        if (s != slot) keep.push_back(s);
      }
      if (keep.empty()) {
        Matrix scalar(1, 1);
        scalar(0, 0) = rho.trace();
        rho.swap(scalar);
      } else {
        rho = partial_trace(DensityMatrix{rho, 1.0}, keep).matrix;
      }
      reg.drop(gone);
    }
#ifndef NDEBUG
    debug_check_density(rho);
#endif
  }
  double trace = rho.trace().real();
  if (trace < kMassFloor) {
    throw ZeroPostselectMassError("final state has no mass");
  }
  rho /= trace;
  SimResult r;
  r.state = DensityMatrix{std::move(rho), trace};
  r.success_probability = trace;
  fill_kept(r, reg, c);
  return r;
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  Eigen::Index dim = rho.matrix.rows();
  int m = 0;
  while ((Eigen::Index(1) << m) < dim) ++m;
  if ((Eigen::Index(1) << m) != dim || rho.matrix.cols() != dim) {
    throw InvalidCircuitError("density matrix must be square 2^m x 2^m");
  }
  std::vector<int> ks = keep;
  std::sort(ks.begin(), ks.end());
  if (std::adjacent_find(ks.begin(), ks.end()) != ks.end()) {
    throw InvalidCircuitError("duplicate qubit in keep set");
  }
  for (int q : ks) {
    if (q < 0 || q >= m) throw InvalidCircuitError("keep qubit out of range");
  }
  int k = static_cast<int>(ks.size());
  std::vector<int> traced;
  for (int q = 0; q < m; ++q) {
    if (!std::binary_search(ks.begin(), ks.end(), q)) traced.push_back(q);
  }
  std::size_t kdim = std::size_t(1) << k;
  std::size_t tdim = std::size_t(1) << (m - k);
  auto embed = [&](std::size_t kept_bits, std::size_t traced_bits) {
    std::size_t idx = 0;
    for (int a = 0; a < k; ++a) {
      std::size_t bit = (kept_bits >> (k - 1 - a)) & 1u;
      idx |= bit << (m - 1 - ks[a]);
    }
    for (int a = 0; a < m - k; ++a) {
      std::size_t bit = (traced_bits >> (m - k - 1 - a)) & 1u;
      idx |= bit << (m - 1 - traced[a]);
    }
    return idx;
  };
  Matrix out = Matrix::Zero(kdim, kdim);
  for (std::size_t i = 0; i < kdim; ++i) {
    for (std::size_t j = 0; j < kdim; ++j) {
      Complex sum = 0.0;
      for (std::size_t t = 0; t < tdim; ++t) {
        sum += rho.matrix(static_cast<Eigen::Index>(embed(i, t)),
                          static_cast<Eigen::Index>(embed(j, t)));
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum;
    }
  }
  return DensityMatrix{std::move(out), rho.trace_pre_norm};
}

std::pair<double, double> born_distribution(const SimResult& s, int qubit) {
  int slot = s.slot_of(qubit);
  if (slot < 0) {
    throw InvalidCircuitError("qubit " + std::to_string(qubit) +
                              " is not in the kept register");
  }
  int m = static_cast<int>(s.kept_qubits.size());
  double p0 = 0.0;
  double p1 = 0.0;
  if (s.is_pure()) {
    const Vector& psi = s.pure().amplitudes;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      double w = std::norm(psi(i));
      (bit_of(static_cast<std::size_t>(i), slot, m) ? p1 : p0) += w;
    }
  } else {
    const Matrix& rho = s.density().matrix;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
      double w = rho(i, i).real();
      (bit_of(static_cast<std::size_t>(i), slot, m) ? p1 : p0) += w;
    }
  }
  double total = p0 + p1;
  if (total <= 0.0) throw ZeroMassError("state carries no probability mass");
  return {p0 / total, p1 / total};
}

std::pair<long, long> sample_shots(const SimResult& s, int qubit, long shots,
                                   std::uint64_t seed) {
  if (shots < 1) throw Error("shots must be at least 1");
  auto [p0, p1] = born_distribution(s, qubit);
  std::mt19937_64 eng(seed);
  long n1 = 0;
  for (long i = 0; i < shots; ++i) {
    if (uniform01(eng) < p1) ++n1;
  }
  return {shots - n1, n1};
}

std::string dump_state(const SimResult& s) {
  std::string out;
  char line[96];
  auto emit = [&](std::size_t idx, Complex v) {
    std::snprintf(line, sizeof(line), "%zu %.17g %.17g\n", idx, v.real(),
                  v.imag());
    out += line;
  };
  if (s.is_pure()) {
    const Vector& psi = s.pure().amplitudes;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      emit(static_cast<std::size_t>(i), psi(i));
    }
  } else {
    const Matrix& rho = s.density().matrix;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
      emit(static_cast<std::size_t>(i), rho(i, i));
    }
  }
  return out;
}

}  // namespace discopile
