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

#ifndef GOQEC_HILBERT_HPP_
#define GOQEC_HILBERT_HPP_

#include "goqec/linalg.hpp"

namespace goqec {

/// Decomposition H = (H^A ⊗ H^B) ⊕ C^⊥ with H^B = H^{B1} ⊕ H^{B2}.
///
/// Basis ordering: the code space C = H^A ⊗ H^B comes first, A-major, so the
/// state |e_α⟩ ⊗ |β_k⟩ sits at index α·dim_b + (k − 1). The dim_perp indices
/// spanning C^⊥ trail. H^{B1} is spanned by the first dim_b1 states of H^B.
///
/// B-factor indices (k, l, i, j below) are one-based, following the usual
/// |β_1⟩ … |β_r⟩ labelling; everything else is zero-based.
class SpaceDecomposition {
 public:
  /// Throws std::invalid_argument unless dim_a, dim_b ≥ 1,
  /// 1 ≤ dim_b1 ≤ dim_b and dim_perp ≥ 0.
  SpaceDecomposition(int dim_a, int dim_b, int dim_b1, int dim_perp);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim_b1() const { return dim_b1_; }
  int dim_perp() const { return dim_perp_; }
  int code_dim() const { return dim_a_ * dim_b_; }
  int total_dim() const { return dim_a_ * dim_b_ + dim_perp_; }

  /// Index of |e_alpha⟩ ⊗ |β_k⟩; alpha zero-based, k one-based.
  int index(int alpha, int k) const;

  /// Index of the m-th C^⊥ basis state |α_m⟩, m one-based.
  int perp_index(int m) const;

  friend bool operator==(const SpaceDecomposition&,
                         const SpaceDecomposition&) = default;

 private:
  int dim_a_;
  int dim_b_;
  int dim_b1_;
  int dim_perp_;
};

/// P_kl = I^A ⊗ |β_k⟩⟨β_l| as a total_dim square matrix (zero on C^⊥).
Matrix projector_pkl(const SpaceDecomposition& decomp, int k, int l);

struct BlockProjectors {
  Matrix p_b;       // Σ_{k ≤ r} P_kk, projector onto C
  Matrix p_b1;      // Σ_{k ≤ r1} P_kk, projector onto H^A ⊗ H^{B1}
  Matrix p_b_perp;  // I − P_B
};

BlockProjectors block_projectors(const SpaceDecomposition& decomp);

/// The dim_a square block G with G(α, α') = ⟨e_α, β_l| E |e_α', β_i⟩, so that
/// P_kl · E · P_ij = G ⊗ |β_k⟩⟨β_j|.
Matrix a_block(const Matrix& op, const SpaceDecomposition& decomp, int l,
               int i);

/// Isometry J_k : H^A → H, |e_α⟩ ↦ |e_α⟩ ⊗ |β_k⟩ (total_dim × dim_a).
Matrix a_embedding(const SpaceDecomposition& decomp, int k);

/// Places a code-space matrix (code_dim square) into the top-left block of a
/// zero total_dim matrix.
Matrix embed_code_block(const Matrix& code_block,
                        const SpaceDecomposition& decomp);

/// The same Hilbert space viewed with B replaced by B1: H^A ⊗ H^{B2} is
/// folded into the complement. `permutation` maps original coordinates to
/// the reordered ones (new = permutation · old) so H^A ⊗ H^{B1} becomes the
/// leading A-major block.
struct B1Restriction {
  SpaceDecomposition decomp;
  Matrix permutation;
};

B1Restriction restrict_to_b1(const SpaceDecomposition& decomp);

}  // namespace goqec

#endif  // GOQEC_HILBERT_HPP_
