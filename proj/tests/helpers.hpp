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
#include <random>

#include "discopile/linalg.hpp"

namespace testutil {

inline std::complex<double> random_complex(std::mt19937_64& eng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return {normal(eng), normal(eng)};
}

// Haar-ish random unitary: QR of a Ginibre matrix. Exact distribution does
// not matter for the contracts tested here, only genericity.
inline discopile::Matrix random_unitary(int dim, std::mt19937_64& eng) {
  discopile::Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = random_complex(eng);
  Eigen::HouseholderQR<discopile::Matrix> qr(a);
  discopile::Matrix q = qr.householderQ();
  return q;
}

// Random full-rank density: AA^dag normalized to unit trace.
inline discopile::Matrix random_density(int dim, std::mt19937_64& eng) {
  discopile::Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = random_complex(eng);
  discopile::Matrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

inline discopile::Vector random_pure(int dim, std::mt19937_64& eng) {
  discopile::Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = random_complex(eng);
  return v / v.norm();
}

inline discopile::Matrix kron(const discopile::Matrix& a,
                              const discopile::Matrix& b) {
  discopile::Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace testutil
