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

#ifndef GOQEC_RECOVERY_HPP_
#define GOQEC_RECOVERY_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "goqec/channels.hpp"
#include "goqec/conditions.hpp"
#include "goqec/hilbert.hpp"

namespace goqec {

/// Thrown when a construction needs check_correctable to hold and it does not.
class NotCorrectableError : public std::runtime_error {
 public:
  explicit NotCorrectableError(ConditionReport report);
  const ConditionReport& report() const { return report_; }

 private:
  ConditionReport report_;
};

/// Gram matrix of the maps T_(a,k) : |ψ⟩ ↦ E_a(|ψ⟩ ⊗ |β_k⟩), k ≤ r1. Since
/// T_μ† T_ν = Λ_μν · I^A whenever the channel is correctable, Λ is Hermitian
/// PSD with trace r1. Composite index μ = (a, k) ↦ a·r1 + (k − 1).
class GramMatrix {
 public:
  GramMatrix(Matrix matrix, int kraus_count, int dim_b1, double source_tol);

  const Matrix& matrix() const { return matrix_; }
  int kraus_count() const { return kraus_count_; }
  int dim_b1() const { return dim_b1_; }
  double source_tol() const { return source_tol_; }
  int composite_index(int a, int k) const { return a * dim_b1_ + (k - 1); }

 private:
  Matrix matrix_;
  int kraus_count_;
  int dim_b1_;
  double source_tol_;
};

/// Throws NotCorrectableError (carrying the failed report) when
/// check_correctable does not hold at `tol`.
GramMatrix build_gram(const KrausChannel& channel,
                      const SpaceDecomposition& decomp, double tol);

struct RankProfile {
  int rank = 0;
  std::vector<double> eigenvalues;  // descending
};

RankProfile rank_profile(const GramMatrix& gram, double tol);

struct Recovery {
  KrausChannel channel;
  /// Orthonormal-range isometries S_m : H^A → H, one per Gram eigenvalue
  /// above tolerance, in descending eigenvalue order.
  std::vector<Matrix> isometries;
  std::vector<double> eigenvalues;  // kept eigenvalues d_m, descending
  std::vector<std::string> warnings;
};

/// Recovery channel returning every ρ^A ⊗ I^{B1}/r1 input to ρ^A ⊗ |β_1⟩⟨β_1|
/// after the error channel.
///
/// The Gram matrix is diagonalized as Λ = V D V†; each eigenvalue d_m > tol
/// gives an isometry S_m = d_m^{-1/2} Σ_μ V(μ, m) T_μ, and these have mutually
/// orthogonal ranges. The recovery is
///   W_m = J_1 S_m†                  (J_1 : |ψ⟩ ↦ |ψ⟩ ⊗ |β_1⟩)
/// plus a completion on the projector Q onto the complement of ⊕ range(S_m):
///   P_1l Q for l = 1..r, and |φ_0⟩⟨α_m| Q for the C^⊥ states,
/// with |φ_0⟩ the first code basis state. Operators with norm below 1e-14
/// are dropped.
///
/// Eigenvectors are phase fixed so their largest-magnitude entry is real
/// positive. Eigenvalues in (tol/10, tol] are discarded with a warning, as
/// are degenerate spectra whose eigenvector choice is arbitrary.
Recovery synthesize_recovery(const KrausChannel& channel,
                             const SpaceDecomposition& decomp, double tol);

}  // namespace goqec

#endif  // GOQEC_RECOVERY_HPP_
