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

#ifndef GOQEC_CHANNELS_HPP_
#define GOQEC_CHANNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "goqec/hilbert.hpp"
#include "goqec/linalg.hpp"
#include "goqec/states.hpp"

namespace goqec {

/// Completely positive map ρ ↦ Σ_a K_a ρ K_a†, given by its operators.
class CPMap {
 public:
  /// Throws std::invalid_argument unless the list is non-empty and every
  /// operator is square of one common size.
  explicit CPMap(std::vector<Matrix> operators);

  const std::vector<Matrix>& operators() const { return operators_; }
  const Matrix& op(std::size_t a) const { return operators_.at(a); }
  std::size_t size() const { return operators_.size(); }
  int dim() const { return static_cast<int>(operators_.front().rows()); }

 private:
  std::vector<Matrix> operators_;
};

/// A CPMap whose operators satisfy Σ_a E_a† E_a = I.
class KrausChannel : public CPMap {
 public:
  /// Throws std::invalid_argument when ‖Σ E†E − I‖_F exceeds `tol`; the
  /// message carries the residual.
  explicit KrausChannel(std::vector<Matrix> operators,
                        double tol = kDefaultTolerance);

  /// For operator sets that are trace preserving by construction.
  static KrausChannel trusted(std::vector<Matrix> operators);

 private:
  struct TrustedTag {};
  KrausChannel(std::vector<Matrix> operators, TrustedTag);
};

struct CptpCheck {
  bool ok = false;
  double residual = 0.0;
};

CptpCheck validate_cptp(const CPMap& map, double tol);

/// Σ_a K_a ρ K_a†. Throws on a dimension mismatch.
Matrix apply_channel(const CPMap& map, const Matrix& rho);
Matrix apply_channel(const CPMap& map, const DensityOperator& rho);

/// Kraus set {R_c E_a}, outer index major. Products with Frobenius norm below
/// 1e-14 are dropped.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

KrausChannel identity_channel(int dim);

/// Kraus operators U K_a U† for a unitary change of basis U.
KrausChannel change_basis(const KrausChannel& channel, const Matrix& unitary);

/// Largest Frobenius discrepancy between the two maps over all d² matrix
/// units |i⟩⟨j|. Zero exactly when the maps agree as linear maps.
double channel_distance(const CPMap& first, const CPMap& second);

/// Twirl onto the A ⊗ B1 block, operators {P_kl : k ≤ r1, l ≤ r}. The image
/// of any ρ is X ⊗ I^{B1} with X the B-trace of ρ's code block.
CPMap gamma_map(const SpaceDecomposition& decomp);

/// Replaces the B factor with I^B/r and dephases C^⊥:
/// {P_kl/√r : k, l ≤ r} ∪ {|α_m⟩⟨α_m|}.
KrausChannel build_eta1(const SpaceDecomposition& decomp);

/// Resets the B factor to the uniform state on B1 and dephases C^⊥:
/// {P_kl/√r1 : k ≤ r1, l ≤ r} ∪ {|α_m⟩⟨α_m|}.
KrausChannel build_eta2(const SpaceDecomposition& decomp);

struct ChannelInstance {
  KrausChannel channel;
  SpaceDecomposition decomp;
};

/// Two-qubit channel on C⁴ = A ⊗ B (B1 = span|0⟩): with B in |1⟩ the A qubit
/// is amplitude damped with strength gamma and B flips to |0⟩; with B in |0⟩
/// the A qubit passes untouched and B flips to |1⟩.
///   E0 = F0 ⊗ |0⟩⟨1|, E1 = F1 ⊗ |0⟩⟨1|, E2 = I ⊗ |1⟩⟨0|,
///   F0 = diag(1, √(1−γ)), F1 = √γ |0⟩⟨1|.
/// Throws std::invalid_argument unless 0 < gamma < 1.
ChannelInstance damped_flip_channel(double gamma);

/// Haar-random isometry C^dim → C^dim ⊗ C^kraus_count, sliced into Kraus
/// blocks. kraus_count = 1 gives a Haar unitary.
KrausChannel random_channel(int dim, int kraus_count, std::uint64_t seed);

/// Channel acting as I^A ⊗ M_a on H^A ⊗ H^{B1}, where M_a : H^{B1} → H^B and
/// Σ M_a† M_a = I. The remaining input directions are completed by random
/// orthonormal columns of the Stinespring isometry chosen orthogonal to the
/// image of H^A ⊗ H^{B1}, so the result is trace preserving while the action
/// on H^A ⊗ H^{B1} stays exactly as prescribed.
///
/// Throws std::invalid_argument when the blocks are not dim_b × dim_b1 or do
/// not satisfy the isometry condition within `tol`.
KrausChannel ampliate_channel_from_blocks(const SpaceDecomposition& decomp,
                                          const std::vector<Matrix>& blocks,
                                          std::uint64_t seed,
                                          double tol = kDefaultTolerance);

/// ampliate_channel_from_blocks with the blocks M_a sliced from a random
/// isometry H^{B1} → H^B ⊗ C^env_dim.
KrausChannel random_ampliate_channel(const SpaceDecomposition& decomp,
                                     int env_dim, std::uint64_t seed);

/// Column-orthonormal Q of a thin QR, with R's diagonal phases absorbed so the
/// distribution is Haar when `m` is Ginibre.
Matrix orthonormalize_columns(const Matrix& m);

}  // namespace goqec

#endif  // GOQEC_CHANNELS_HPP_
