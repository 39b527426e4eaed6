// Copyright 2026 The goqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GOQEC_STATES_HPP_
#define GOQEC_STATES_HPP_

#include <cstdint>

#include "goqec/hilbert.hpp"
#include "goqec/linalg.hpp"

namespace goqec {

/// Positive-semidefinite matrix of unit trace. Validated on construction.
class DensityOperator {
 public:
  /// Throws std::invalid_argument unless `matrix` is a density matrix within
  /// `tol`.
  explicit DensityOperator(Matrix matrix, double tol = kDefaultTolerance);

  const Matrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  Matrix matrix_;
};

/// Column-orthonormal basis of a subspace of C^ambient_dim.
struct Subspace {
  int ambient_dim = 0;
  Matrix basis;

  int dim() const { return static_cast<int>(basis.cols()); }
  Matrix projector() const { return basis * basis.adjoint(); }
};

/// Span of the eigenvectors whose eigenvalues exceed `tol`. Throws on a
/// non-square or non-Hermitian input (residual above `tol`).
Subspace support(const Matrix& rho, double tol);
Subspace support(const DensityOperator& rho, double tol);

DensityOperator tensor(const DensityOperator& left, const DensityOperator& right);

/// Traces out A from a code-space (code_dim square) matrix; dim_b result.
Matrix partial_trace_a(const Matrix& rho_c, const SpaceDecomposition& decomp);

/// Traces out B from a code-space matrix; dim_a result.
Matrix partial_trace_b(const Matrix& rho_c, const SpaceDecomposition& decomp);

struct CodeRestriction {
  Matrix block;  // code_dim square
  double leak;   // 1 − tr(block)
};

/// Accepts any total_dim square matrix, not only validated states, so that
/// channel outputs can be inspected directly.
CodeRestriction restrict_to_c(const Matrix& rho, const SpaceDecomposition& decomp);

struct ProductFactorization {
  bool is_product = false;
  Matrix rho_a;
  Matrix sigma_b;
  double residual = 0.0;
};

/// Decides whether a code-space state is ρ^A ⊗ σ^B. The candidate factors are
/// the two partial traces; `residual` is ‖ρ_C − ρ^A ⊗ σ^B‖_F and is filled in
/// whether or not the test passes. Throws std::invalid_argument when `rho_c`
/// is not a density matrix within `tol`.
ProductFactorization factor_product(const Matrix& rho_c,
                                    const SpaceDecomposition& decomp, double tol);

/// Ginibre-ensemble state G·G†/tr(G·G†); deterministic in `seed`.
DensityOperator random_density(int dim, std::uint64_t seed);

/// Normalized complex Gaussian vector; deterministic in `seed`.
Vector random_pure_vector(int dim, std::uint64_t seed);

/// Matrix with i.i.d. standard complex Gaussian entries (E|z|² = 1).
Matrix random_ginibre(int rows, int cols, std::uint64_t seed);

/// Independent sub-seed for stream `stream` of `seed` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace goqec

#endif  // GOQEC_STATES_HPP_
