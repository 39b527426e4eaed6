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

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "goqec/goqec.hpp"
#include "test_support.hpp"

namespace goqec {
namespace {

using testing::ket_bra;

Matrix bell_state() {
  Vector psi = Vector::Zero(4);
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(3) = 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

void expect_valid_density(const Matrix& m, double tol) {
  EXPECT_LE(hermiticity_residual(m), tol);
  EXPECT_GE(hermitian_eigenvalues(m).minCoeff(), -tol);
  EXPECT_NEAR(m.trace().real(), 1.0, tol);
  EXPECT_NEAR(m.trace().imag(), 0.0, tol);
}

TEST(DensityOperator, AcceptsValidStates) {
  EXPECT_NO_THROW(DensityOperator(ket_bra(2, 0)));
  EXPECT_NO_THROW(DensityOperator(0.25 * Matrix::Identity(4, 4)));
}

TEST(DensityOperator, RejectsInvalidStates) {
  EXPECT_THROW(DensityOperator(Matrix::Zero(2, 3)), std::invalid_argument);
  EXPECT_THROW(DensityOperator(matrix_unit(2, 0, 1)), std::invalid_argument);
  EXPECT_THROW(DensityOperator(Matrix::Identity(2, 2)), std::invalid_argument);
  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityOperator{negative}, std::invalid_argument);
}

TEST(Support, RankOneProjector) {
  const Subspace s = support(DensityOperator(ket_bra(2, 0)), 1e-9);
  ASSERT_EQ(s.dim(), 1);
  EXPECT_NEAR(std::abs(s.basis(0, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(s.basis(1, 0)), 0.0, 1e-12);
}

TEST(Support, FullRankMixedState) {
  EXPECT_EQ(support(DensityOperator(0.5 * Matrix::Identity(2, 2)), 1e-9).dim(), 2);
}

TEST(Support, ThresholdDropsSmallEigenvalues) {
  const Matrix rho = 0.999 * ket_bra(2, 0) + 0.001 * ket_bra(2, 1);
  EXPECT_EQ(support(DensityOperator(rho), 0.01).dim(), 1);
  EXPECT_EQ(support(DensityOperator(rho), 1e-9).dim(), 2);
}

TEST(Support, RejectsNonHermitian) {
  EXPECT_THROW(support(matrix_unit(2, 0, 1), 1e-9), std::invalid_argument);
}

TEST(Support, RandomLowRankStatesAreReproduced) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int dim = 2 + static_cast<int>(seed % 5);
    const int rank = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(dim));
    const Matrix g = random_ginibre(dim, rank, seed);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    const Subspace s = support(DensityOperator(rho), 1e-9);
    EXPECT_EQ(s.dim(), rank);
    EXPECT_LE(frobenius_distance(s.basis.adjoint() * s.basis,
                                 Matrix::Identity(rank, rank)),
              1e-12);
    const Matrix reconstructed = s.basis * (s.basis.adjoint() * rho * s.basis) *
                                 s.basis.adjoint();
    EXPECT_LE(frobenius_distance(rho, reconstructed), 1e-9);
  }
}

TEST(Tensor, ScalarFactorIsNeutral) {
  const DensityOperator rho = random_density(3, 5);
  const DensityOperator one(Matrix::Identity(1, 1));
  EXPECT_LE(frobenius_distance(tensor(rho, one).matrix(), rho.matrix()), 1e-15);
}

TEST(Tensor, BasisProductIndex) {
  const Matrix out = tensor(DensityOperator(ket_bra(2, 0)),
                            DensityOperator(ket_bra(2, 1)))
                         .matrix();
  EXPECT_EQ(out, ket_bra(4, 1));
}

TEST(Tensor, TraceIsMultiplicative) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto out = tensor(random_density(2, seed), random_density(3, seed + 100));
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
  }
}

TEST(PartialTrace, ProductInputRecoversFactors) {
  const SpaceDecomposition d(3, 2, 1, 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix rho_a = random_density(3, 2 * seed).matrix();
    const Matrix sigma_b = random_density(2, 2 * seed + 1).matrix();
    const Matrix rho = kron(rho_a, sigma_b);
    EXPECT_LE(frobenius_distance(partial_trace_a(rho, d), sigma_b), 1e-12);
    EXPECT_LE(frobenius_distance(partial_trace_b(rho, d), rho_a), 1e-12);
  }
}

TEST(PartialTrace, BellStateMarginalsAreMaximallyMixed) {
  const SpaceDecomposition d(2, 2, 2, 0);
  const Matrix half = 0.5 * Matrix::Identity(2, 2);
  EXPECT_LE(frobenius_distance(partial_trace_a(bell_state(), d), half), 1e-15);
  EXPECT_LE(frobenius_distance(partial_trace_b(bell_state(), d), half), 1e-15);
}

TEST(PartialTrace, PreservesTraceAndIsLinear) {
  const SpaceDecomposition d(2, 3, 1, 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix x = random_ginibre(6, 6, seed);
    const Matrix y = random_ginibre(6, 6, seed + 1000);
    EXPECT_NEAR(std::abs(partial_trace_a(x, d).trace() - x.trace()), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(partial_trace_b(x, d).trace() - x.trace()), 0.0, 1e-12);
    EXPECT_LE(frobenius_distance(partial_trace_a(x + y, d),
                                 partial_trace_a(x, d) + partial_trace_a(y, d)),
              1e-12);
    EXPECT_LE(frobenius_distance(partial_trace_b(x + y, d),
                                 partial_trace_b(x, d) + partial_trace_b(y, d)),
              1e-12);
  }
}

TEST(PartialTrace, RejectsWrongSize) {
  EXPECT_THROW(partial_trace_a(Matrix::Zero(3, 3), SpaceDecomposition(2, 2, 1, 0)),
               std::invalid_argument);
}

TEST(RestrictToC, NoComplementHasNoLeak) {
  const SpaceDecomposition d(2, 2, 1, 0);
  const auto r = restrict_to_c(random_density(4, 3).matrix(), d);
  EXPECT_NEAR(r.leak, 0.0, 1e-12);
}

TEST(RestrictToC, ComplementStateLeaksFully) {
  const SpaceDecomposition d(2, 2, 1, 2);
  const auto r = restrict_to_c(ket_bra(6, 5), d);
  EXPECT_NEAR(r.leak, 1.0, 1e-15);
  EXPECT_LE(r.block.norm(), 1e-15);
}

TEST(RestrictToC, MixtureLeaksItsComplementWeight) {
  const SpaceDecomposition d(2, 2, 1, 1);
  const Matrix rho = 0.7 * ket_bra(5, 1) + 0.3 * ket_bra(5, 4);
  EXPECT_NEAR(restrict_to_c(rho, d).leak, 0.3, 1e-15);
}

TEST(RestrictToC, LeakBoundsOnRandomStates) {
  const SpaceDecomposition d(2, 2, 1, 3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = restrict_to_c(random_density(d.total_dim(), seed).matrix(), d);
    EXPECT_GE(r.leak, -1e-12);
    EXPECT_LE(r.leak, 1.0 + 1e-12);
    EXPECT_GE(hermitian_eigenvalues(r.block).minCoeff(), -1e-12);
  }
}

TEST(FactorProduct, ExactProduct) {
  const SpaceDecomposition d(2, 3, 1, 0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Matrix rho_a = random_density(2, 3 * seed).matrix();
    const Matrix sigma_b = random_density(3, 3 * seed + 1).matrix();
    const auto f = factor_product(kron(rho_a, sigma_b), d, 1e-10);
    EXPECT_TRUE(f.is_product);
    EXPECT_LE(f.residual, 1e-10);
    EXPECT_LE(frobenius_distance(f.rho_a, rho_a), 1e-12);
    EXPECT_LE(frobenius_distance(f.sigma_b, sigma_b), 1e-12);
  }
}

TEST(FactorProduct, BellStateIsNotAProduct) {
  const auto f = factor_product(bell_state(), SpaceDecomposition(2, 2, 2, 0), 1e-9);
  EXPECT_FALSE(f.is_product);
  EXPECT_GT(f.residual, 0.5);
  EXPECT_NEAR(f.residual, std::sqrt(3.0) / 2.0, 1e-12);
}

TEST(FactorProduct, ExampleChannelOutput) {
  const auto example = damped_flip_channel(0.3);
  const Matrix rho_a = random_density(2, 77).matrix();
  const Matrix out = apply_channel(example.channel, kron(rho_a, ket_bra(2, 0)));
  const auto f = factor_product(out, example.decomp, 1e-12);
  EXPECT_TRUE(f.is_product);
  EXPECT_LE(frobenius_distance(f.sigma_b, ket_bra(2, 1)), 1e-12);
  EXPECT_LE(frobenius_distance(f.rho_a, rho_a), 1e-12);
}

TEST(FactorProduct, RejectsInvalidDensityMatrix) {
  EXPECT_THROW(factor_product(Matrix::Identity(4, 4), SpaceDecomposition(2, 2, 1, 0),
                              1e-9),
               std::invalid_argument);
}

TEST(RandomDensity, DimensionOneIsScalarOne) {
  const Matrix rho = random_density(1, 123).matrix();
  ASSERT_EQ(rho.rows(), 1);
  EXPECT_NEAR(std::abs(rho(0, 0) - Complex(1.0, 0.0)), 0.0, 1e-15);
}

TEST(RandomDensity, DeterministicPerSeed) {
  EXPECT_EQ(random_density(4, 9).matrix(), random_density(4, 9).matrix());
  EXPECT_NE(random_density(4, 9).matrix(), random_density(4, 10).matrix());
}

TEST(RandomDensity, ThousandSamplesAreValid) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Matrix rho = random_density(4, seed).matrix();
    expect_valid_density(rho, 1e-10);
  }
}

TEST(RandomDensity, RejectsZeroDimension) {
  EXPECT_THROW(random_density(0, 1), std::invalid_argument);
}

TEST(RandomPureVector, IsNormalizedAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Vector v = random_pure_vector(5, seed);
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    EXPECT_EQ(v, random_pure_vector(5, seed));
  }
}

TEST(DeriveSeed, StreamsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
}

}  // namespace
}  // namespace goqec
