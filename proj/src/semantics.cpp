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

#include "discopile/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "discopile/errors.hpp"

namespace discopile {

namespace {

constexpr double kMassFloor = 1e-12;

void check_square(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw NotHermitianError("matrix must be square and nonempty");
  }
}

void check_hermitian(const Matrix& a) {
  check_square(a);
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw NotHermitianError("matrix is not Hermitian within tolerance");
  }
}

double log_in_base(double x, EntropyBase base) {
  return base == EntropyBase::Two ? std::log2(x) : std::log(x);
}

}  // namespace

EigenSystem hermitian_eigensystem(const Matrix& input) {
  check_hermitian(input);
  Eigen::Index n = input.rows();
  Matrix a = (input + input.adjoint()) / 2.0;
  Matrix v = Matrix::Identity(n, n);
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(off) <= 1e-14 * scale) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        double g = std::abs(a(p, q));
        if (g <= 1e-300) continue;
        // Phase factor turns the (p,q) block into a real symmetric one;
        // the real rotation then zeroes its off-diagonal.
        Complex u = a(p, q) / g;
        double app = a(p, p).real();
        double aqq = a(q, q).real();
        double tau = (aqq - app) / (2.0 * g);
        double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double cr = 1.0 / std::sqrt(1.0 + t * t);
        double sr = t * cr;
        Complex jpq = sr;
        Complex jqp = -std::conj(u) * sr;
        Complex jqq = std::conj(u) * cr;
        for (Eigen::Index r = 0; r < n; ++r) {
          Complex arp = a(r, p);
          Complex arq = a(r, q);
          a(r, p) = cr * arp + jqp * arq;
          a(r, q) = jpq * arp + jqq * arq;
        }
        for (Eigen::Index col = 0; col < n; ++col) {
          Complex apc = a(p, col);
          Complex aqc = a(q, col);
          a(p, col) = cr * apc + std::conj(jqp) * aqc;
          a(q, col) = std::conj(jpq) * apc + std::conj(jqq) * aqc;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          Complex vrp = v(r, p);
          Complex vrq = v(r, q);
          v(r, p) = cr * vrp + jqp * vrq;
          v(r, q) = jpq * vrp + jqq * vrq;
        }
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (Eigen::Index i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return diag[x] > diag[y]; });
  EigenSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[i] = diag[order[i]];
    out.vectors.col(i) = v.col(order[i]);
  }
  return out;
}

SpectralDecomposition spectral(const Matrix& sigma, double merge_tol) {
  EigenSystem es = hermitian_eigensystem(sigma);
  SpectralDecomposition out;
  std::size_t i = 0;
  while (i < es.values.size()) {
    std::size_t j = i + 1;
    double sum = es.values[i];
    while (j < es.values.size() &&
           std::abs(es.values[j] - es.values[j - 1]) <= merge_tol) {
      sum += es.values[j];
      ++j;
    }
    Matrix p = Matrix::Zero(sigma.rows(), sigma.rows());
    for (std::size_t k = i; k < j; ++k) {
      p += es.vectors.col(static_cast<Eigen::Index>(k)) *
           es.vectors.col(static_cast<Eigen::Index>(k)).adjoint();
    }
    out.eigenvalues.push_back(sum / static_cast<double>(j - i));
    out.projectors.push_back(std::move(p));
    i = j;
  }
  return out;
}

namespace {

// Eigenvalues below this relative floor are rounding residue of the
// eigensolver; sqrt amplifies them (sqrt(1e-16) = 1e-8), so zero them.
double spectral_floor(const std::vector<double>& values) {
  double top = 0.0;
  for (double v : values) top = std::max(top, std::abs(v));
  return 1e-13 * std::max(1.0, top);
}

}  // namespace

Matrix sqrt_psd(const Matrix& sigma) {
  EigenSystem es = hermitian_eigensystem(sigma);
  const double floor = spectral_floor(es.values);
  Matrix out = Matrix::Zero(sigma.rows(), sigma.cols());
  for (std::size_t i = 0; i < es.values.size(); ++i) {
    double lambda = es.values[i] <= floor ? 0.0 : es.values[i];
    out += std::sqrt(lambda) *
           es.vectors.col(static_cast<Eigen::Index>(i)) *
           es.vectors.col(static_cast<Eigen::Index>(i)).adjoint();
  }
  return out;
}

double von_neumann_entropy(const Matrix& rho, EntropyBase base) {
  EigenSystem es = hermitian_eigensystem(rho);
  double s = 0.0;
  for (double lambda : es.values) {
    if (lambda > 1e-12) s -= lambda * log_in_base(lambda, base);
  }
  return s;
}

double shannon_entropy(const std::vector<double>& p, EntropyBase base) {
  double total = 0.0;
  for (double x : p) {
    if (x < -1e-9) {
      throw InvalidDistributionError("negative probability");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidDistributionError("probabilities must sum to 1");
  }
  double s = 0.0;
  for (double x : p) {
    if (x > 1e-12) s -= x * log_in_base(x, base);
  }
  return s;
}

double fidelity(const Matrix& rho, const Matrix& sigma,
                FidelityConvention convention) {
  check_hermitian(rho);
  check_hermitian(sigma);
  if (rho.rows() != sigma.rows()) {
    throw NotHermitianError("fidelity operands must share dimensions");
  }
  Matrix root = sqrt_psd(rho);
  Matrix inner = root * sigma * root;
  EigenSystem es = hermitian_eigensystem((inner + inner.adjoint()) / 2.0);
  const double floor = spectral_floor(es.values);
  double f = 0.0;
  for (double lambda : es.values) {
    if (lambda > floor) f += std::sqrt(lambda);
  }
  f = std::clamp(f, 0.0, 1.0);
  return convention == FidelityConvention::Sqrt ? f : f * f;
}

DensityMatrix fuzz(const Matrix& rho, const Matrix& sigma) {
  check_hermitian(rho);
  if (rho.rows() != sigma.rows()) {
    throw NotHermitianError("fuzz operands must share dimensions");
  }
  SpectralDecomposition sd = spectral(sigma);
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
    out += sd.eigenvalues[i] * sd.projectors[i] * rho * sd.projectors[i];
  }
  double mass = out.trace().real();
  if (mass < kMassFloor) throw ZeroMassError("fuzz output has no mass");
  return DensityMatrix{out / mass, mass};
}

DensityMatrix phaser(const Matrix& rho, const Matrix& sigma) {
  check_hermitian(rho);
  if (rho.rows() != sigma.rows()) {
    throw NotHermitianError("phaser operands must share dimensions");
  }
  EigenSystem es = hermitian_eigensystem(sigma);
  if (!es.values.empty() && es.values.back() < -1e-9) {
    throw Error("phaser needs a positive semidefinite second argument");
  }
  Matrix m = sqrt_psd(sigma);
  Matrix out = m * rho * m;
  double mass = out.trace().real();
  if (mass < kMassFloor) throw ZeroMassError("phaser output has no mass");
  return DensityMatrix{out / mass, mass};
}

std::pair<DensityMatrix, double> project_true(const Matrix& rho_sentence) {
  check_hermitian(rho_sentence);
  if (rho_sentence.rows() != 2) {
    throw NotHermitianError("sentence state must be one qubit");
  }
  double w = rho_sentence(0, 0).real();
  if (w < kMassFloor) {
    throw ZeroMassError("no mass on the True outcome");
  }
  Matrix proj = Matrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  return {DensityMatrix{proj, w}, w};
}

}  // namespace discopile
