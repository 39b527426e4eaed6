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

#ifndef GOQEC_CONDITIONS_HPP_
#define GOQEC_CONDITIONS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goqec/channels.hpp"
#include "goqec/hilbert.hpp"
#include "goqec/states.hpp"

namespace goqec {

/// Index tuple of a proportionality coefficient. Kraus indices are zero-based,
/// B indices one-based (see SpaceDecomposition).
using LambdaKey = std::vector<int>;
using LambdaTable = std::map<LambdaKey, Complex>;

/// The first violated constraint, in lexicographic loop order.
struct Witness {
  /// "block": an A-block that is not proportional to I^A; indices are the
  /// coefficient key. "leak": P_B^⊥ E_a P_B1 ≠ 0; indices are {a}.
  std::string kind;
  std::vector<int> indices;
  double residual = 0.0;
};

struct ConditionReport {
  bool holds = false;
  LambdaTable lambda;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::optional<Witness> witness;  // present iff !holds
};

/// Ampliate-noiseless test for A with respect to (E, B1, B): for every Kraus
/// operator E_a, every i ≤ r1 and l ≤ r the block a_block(E_a, l, i) must be
/// λ[a,l,i]·I^A, and P_B^⊥ E_a P_B1 must vanish. λ is the least-squares
/// coefficient tr(G)/dim_A.
ConditionReport check_ampliate_noiseless(const KrausChannel& channel,
                                         const SpaceDecomposition& decomp,
                                         double tol);

/// The ampliate test with B replaced by B1 (see restrict_to_b1). Coefficients
/// and witnesses refer to the original B1 labels, which the restriction keeps.
ConditionReport check_normal_noiseless(const KrausChannel& channel,
                                       const SpaceDecomposition& decomp,
                                       double tol);

/// Correctability of μ = {ρ^A ⊗ ρ^{B1}}: for all Kraus pairs (a, b) and
/// k, l ≤ r1, a_block(E_a† E_b, k, l) = λ[a,b,k,l]·I^A.
ConditionReport check_correctable(const KrausChannel& channel,
                                  const SpaceDecomposition& decomp, double tol);

struct QuadrupleReport {
  bool holds = false;
  std::optional<Matrix> sigma;  // dim_B square, the common B output
  double residual = 0.0;
  double tolerance = 0.0;
  std::string failure;  // empty when holds
  /// Index into hermitian_operator_basis of the first failing input; 0 also
  /// covers an invalid σ. −1 when holds.
  int failing_element = -1;
};

/// Decides whether (R ∘ E)(ρ^A ⊗ I^{B1}/r1) = ρ^A ⊗ σ for one σ on H^B and
/// all ρ^A. σ is fixed by the I^A/dim_A input; the remaining members of a
/// Hermitian operator basis of A are then compared against h ⊗ σ.
QuadrupleReport check_quadruple(const KrausChannel& recovery,
                                const KrausChannel& channel,
                                const SpaceDecomposition& decomp, double tol);

/// check_quadruple with B replaced by B1; σ is then dim_B1 square.
QuadrupleReport check_quadruple_normal(const KrausChannel& recovery,
                                       const KrausChannel& channel,
                                       const SpaceDecomposition& decomp,
                                       double tol);

/// Hermitian operator basis of C^dim: I/dim first, then |p⟩⟨p| for p ≥ 1,
/// then |p⟩⟨q| + |q⟩⟨p| and i(|p⟩⟨q| − |q⟩⟨p|) for p < q. dim² elements.
std::vector<Matrix> hermitian_operator_basis(int dim);

struct OracleReport {
  bool holds = false;
  double worst_residual = 0.0;
  /// σ_{β_k} for k = 1..r1 (dim_B square), taken from the first A sample.
  std::vector<Matrix> per_basis_sigmas;
  /// True when sampling passed and the algebraic checker was consulted.
  bool algebraic_recheck = false;
};

/// Sampling test of "∀ρ^{B1} ∀ρ^A ∃σ^B: E(ρ^A ⊗ ρ^{B1}) = ρ^A ⊗ σ^B": draws
/// `samples` random (ρ^A, ρ^{B1}) pairs, and for each B1 basis state checks
/// that σ_{β_k} does not depend on ρ^A across three random ρ^A. A passing
/// sample run is confirmed with check_ampliate_noiseless before `holds` is
/// reported, since sampling cannot certify a universal statement.
OracleReport bruteforce_noiseless_oracle(const KrausChannel& channel,
                                         const SpaceDecomposition& decomp,
                                         int samples, std::uint64_t seed,
                                         double tol);

enum class SupportCase { kCaseA, kCaseB, kCaseC };

std::string_view to_string(SupportCase c);

/// Classifies a pair (ρ1, ρ2) of B states with E(ρ^A ⊗ ρ1) = ρ^A ⊗ ρ2 in
/// mind: A when sup(ρ1) is all of H^B, B when sup(ρ2) ⊆ sup(ρ1), C otherwise.
/// Containment is ‖(I − Π1)Π2‖₂ ≤ tol.
SupportCase classify_support_case(const DensityOperator& rho1,
                                  const DensityOperator& rho2,
                                  const SpaceDecomposition& decomp, double tol);

}  // namespace goqec

#endif  // GOQEC_CONDITIONS_HPP_
