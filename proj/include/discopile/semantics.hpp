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

#include <utility>
#include <vector>

#include "discopile/linalg.hpp"
#include "discopile/sim.hpp"

namespace discopile {

enum class EntropyBase { Two, E };
enum class FidelityConvention { Sqrt, Squared };

// Eigendecomposition with degenerate eigenvalues merged into one projector
// per eigenspace; eigenvalues descending.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Matrix> projectors;
};

// Raw eigensystem (no merging): values descending, vectors as columns.
struct EigenSystem {
  std::vector<double> values;
  Matrix vectors;
};

// Cyclic Jacobi diagonalization for Hermitian matrices; exact enough at
// desk scale (<= 16x16 here). Throws NotHermitian on asymmetric input.
EigenSystem hermitian_eigensystem(const Matrix& a);

SpectralDecomposition spectral(const Matrix& sigma, double merge_tol = 1e-9);

// Principal square root of a PSD matrix (small negatives clamped).
Matrix sqrt_psd(const Matrix& sigma);

// -sum lambda log lambda over eigenvalues > 1e-12; base 2 by default so a
// maximally mixed qubit scores exactly 1.
double von_neumann_entropy(const Matrix& rho,
                           EntropyBase base = EntropyBase::Two);

// -sum p log p over a probability vector (validated); base 2 default.
double shannon_entropy(const std::vector<double>& p,
                       EntropyBase base = EntropyBase::Two);

// Uhlmann fidelity. `Sqrt` is Tr sqrt(sqrt(rho) sigma sqrt(rho)); `Squared`
// (default) is its square, the convention under which fidelities against
// orthogonal pure references sum to the trace.
double fidelity(const Matrix& rho, const Matrix& sigma,
                FidelityConvention convention = FidelityConvention::Squared);

// sum_i lambda_i P_i rho P_i over the spectral decomposition of sigma,
// renormalized; trace_pre_norm carries the pre-normalization mass.
DensityMatrix fuzz(const Matrix& rho, const Matrix& sigma);

// M rho M with M = sqrt(sigma), renormalized; mass in trace_pre_norm.
DensityMatrix phaser(const Matrix& rho, const Matrix& sigma);

// Projects a 1-qubit state onto |0><0| (the True reference); returns the
// renormalized projection and its weight <0|rho|0>.
std::pair<DensityMatrix, double> project_true(const Matrix& rho_sentence);

}  // namespace discopile
