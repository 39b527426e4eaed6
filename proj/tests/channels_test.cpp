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

using testing::code_product;
using testing::ket_bra;
using testing::random_unitary;
using testing::sample_decompositions;

Matrix damped(const Matrix& rho, double gamma) {
  Matrix f0 = Matrix::Zero(2, 2);
  f0(0, 0) = 1.0;
  f0(1, 1) = std::sqrt(1.0 - gamma);
  Matrix f1 = Matrix::Zero(2, 2);
  f1(0, 1) = std::sqrt(gamma);
  return f0 * rho * f0.adjoint() + f1 * rho * f1.adjoint();
}

TEST(CPMap, RejectsEmptyAndRaggedLists) {
  EXPECT_THROW(CPMap({}), std::invalid_argument);
  EXPECT_THROW(CPMap({Matrix::Identity(2, 2), Matrix::Identity(3, 3)}),
               std::invalid_argument);
  EXPECT_THROW(CPMap({Matrix::Zero(2, 3)}), std::invalid_argument);
}

TEST(KrausChannel, RejectsNonTracePreservingSets) {
  try {
    KrausChannel({0.9 * Matrix::Identity(2, 2)});
    FAIL() << "expected a trace-preservation error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("residual"), std::string::npos);
  }
}

TEST(ValidateCptp, ExampleChannelAcrossGamma) {
  for (double gamma : {0.01, 0.1, 0.36, 0.5, 0.9, 0.99}) {
    const auto check = validate_cptp(damped_flip_channel(gamma).channel, 1e-12);
    EXPECT_TRUE(check.ok) << gamma;
    EXPECT_LE(check.residual, 1e-12);
  }
}

TEST(ValidateCptp, SingleUnitary) {
  EXPECT_TRUE(validate_cptp(CPMap({random_unitary(5, 3)}), 1e-12).ok);
}

TEST(ValidateCptp, ScaledIdentityResidual) {
  for (int dim : {1, 2, 4, 9}) {
    const auto check = validate_cptp(CPMap({0.9 * Matrix::Identity(dim, dim)}), 1e-9);
    EXPECT_FALSE(check.ok);
    EXPECT_NEAR(check.residual, 0.19 * std::sqrt(static_cast<double>(dim)), 1e-12);
  }
}

TEST(Apply, ExampleChannelOnB1Input) {
  const auto example = damped_flip_channel(0.5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Matrix rho_a = random_density(2, seed).matrix();
    const Matrix out = apply_channel(example.channel, kron(rho_a, ket_bra(2, 0)));
    EXPECT_LE(frobenius_distance(out, kron(rho_a, ket_bra(2, 1))), 1e-12);
  }
}

TEST(Apply, ExampleChannelOnFlippedInput) {
  const Matrix out =
      apply_channel(damped_flip_channel(0.5).channel, kron(ket_bra(2, 1), ket_bra(2, 1)));
  const Matrix expected =
      kron(0.5 * ket_bra(2, 1) + 0.5 * ket_bra(2, 0), ket_bra(2, 0));
  EXPECT_LE(frobenius_distance(out, expected), 1e-12);
}

TEST(Apply, ExampleChannelDampsTheAQubit) {
  for (double gamma : {0.2, 0.7}) {
    const auto example = damped_flip_channel(gamma);
    const Matrix rho_a = random_density(2, 31).matrix();
    const Matrix out = apply_channel(example.channel, kron(rho_a, ket_bra(2, 1)));
    EXPECT_LE(frobenius_distance(out, kron(damped(rho_a, gamma), ket_bra(2, 0))), 1e-12);
  }
}

TEST(Apply, IdentityChannelReturnsInput) {
  const Matrix rho = random_density(6, 4).matrix();
  EXPECT_LE(frobenius_distance(apply_channel(identity_channel(6), rho), rho), 1e-15);
}

TEST(Apply, RejectsDimensionMismatch) {
  EXPECT_THROW(apply_channel(identity_channel(3), Matrix::Identity(2, 2)),
               std::invalid_argument);
}

TEST(Apply, PreservesHermiticityTraceAndLinearity) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const KrausChannel ch = random_channel(5, 3, seed);
    const Matrix rho = random_density(5, seed + 100).matrix();
    const Matrix sigma = random_density(5, seed + 200).matrix();
    const Matrix out = apply_channel(ch, rho);
    EXPECT_LE(hermiticity_residual(out), 1e-12);
    EXPECT_NEAR(out.trace().real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(out).minCoeff(), -1e-12);
    const double x = 0.3;
    EXPECT_LE(frobenius_distance(apply_channel(ch, x * rho + (1 - x) * sigma),
                                 x * out + (1 - x) * apply_channel(ch, sigma)),
              1e-12);
  }
}

TEST(Compose, IdentityIsNeutral) {
  const auto example = damped_flip_channel(0.4);
  const KrausChannel composed = compose(identity_channel(4), example.channel);
  EXPECT_EQ(composed.size(), example.channel.size());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Matrix rho = random_density(4, seed).matrix();
    EXPECT_LE(frobenius_distance(apply_channel(composed, rho),
                                 apply_channel(example.channel, rho)),
              1e-12);
  }
}

TEST(Compose, OperatorCountIsProduct) {
  const KrausChannel outer = random_channel(3, 2, 1);
  const KrausChannel inner = random_channel(3, 4, 2);
  const KrausChannel composed = compose(outer, inner);
  EXPECT_EQ(composed.size(), 8u);
  EXPECT_TRUE(validate_cptp(composed, 1e-12).ok);
  const Matrix rho = random_density(3, 5).matrix();
  EXPECT_LE(frobenius_distance(apply_channel(composed, rho),
                               apply_channel(outer, apply_channel(inner, rho))),
            1e-12);
}

TEST(Compose, DropsVanishingProducts) {
  const auto example = damped_flip_channel(0.5);
  const KrausChannel eta = build_eta2(example.decomp);
  const KrausChannel composed = compose(eta, example.channel);
  EXPECT_LT(composed.size(), eta.size() * example.channel.size());
  EXPECT_TRUE(validate_cptp(composed, 1e-12).ok);
}

TEST(Compose, EtaAfterExampleResetsB) {
  const auto example = damped_flip_channel(0.5);
  const KrausChannel composed = compose(build_eta2(example.decomp), example.channel);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Matrix rho_a = random_density(2, seed).matrix();
    EXPECT_LE(frobenius_distance(apply_channel(composed, kron(rho_a, ket_bra(2, 0))),
                                 kron(rho_a, ket_bra(2, 0))),
              1e-12);
  }
}

TEST(Compose, RejectsDimensionMismatch) {
  EXPECT_THROW(compose(identity_channel(2), identity_channel(3)), std::invalid_argument);
}

TEST(ChannelDistance, ZeroForEquivalentKrausSets) {
  // {U E_a} under a unitary mixing of the Kraus index is the same channel.
  const KrausChannel ch = random_channel(3, 2, 8);
  const Matrix mix = random_unitary(2, 9);
  std::vector<Matrix> mixed(2, Matrix::Zero(3, 3));
  for (int b = 0; b < 2; ++b) {
    for (int a = 0; a < 2; ++a) mixed[b] += mix(b, a) * ch.op(a);
  }
  EXPECT_LE(channel_distance(ch, KrausChannel(mixed)), 1e-12);
  EXPECT_GT(channel_distance(ch, identity_channel(3)), 1e-3);
}

TEST(GammaMap, TrivialDecompositionIsConjugationByP11) {
  const SpaceDecomposition d(3, 1, 1, 0);
  const CPMap gamma = gamma_map(d);
  ASSERT_EQ(gamma.size(), 1u);
  const Matrix rho = random_density(3, 1).matrix();
  EXPECT_LE(frobenius_distance(apply_channel(gamma, rho), rho), 1e-15);
}

TEST(GammaMap, TwoQubitExampleDecomposition) {
  const SpaceDecomposition d(2, 2, 1, 0);
  const CPMap gamma = gamma_map(d);
  EXPECT_EQ(gamma.size(), 2u);
  const Matrix rho_a = random_density(2, 2).matrix();
  for (int k = 0; k < 2; ++k) {
    EXPECT_LE(frobenius_distance(apply_channel(gamma, kron(rho_a, ket_bra(2, k))),
                                 kron(rho_a, ket_bra(2, 0))),
              1e-15);
  }
}

TEST(GammaMap, GapFromTracePreservation) {
  // Σ_kl P_kl† P_kl = r1 · P_B, so Γ is trace preserving only when r1 = 1 and
  // C^⊥ is empty.
  for (const auto& d : sample_decompositions()) {
    const CPMap gamma = gamma_map(d);
    Matrix sum = Matrix::Zero(d.total_dim(), d.total_dim());
    for (const auto& op : gamma.operators()) sum += op.adjoint() * op;
    EXPECT_LE(frobenius_distance(sum, d.dim_b1() * block_projectors(d).p_b), 1e-15);
    EXPECT_EQ(validate_cptp(gamma, 1e-9).ok, d.dim_b1() == 1 && d.dim_perp() == 0);
  }
}

TEST(GammaMap, PropertiesOnRandomStates) {
  std::uint64_t seed = 500;
  for (const auto& d : sample_decompositions()) {
    const CPMap gamma = gamma_map(d);
    Matrix uniform_b1 = Matrix::Zero(d.dim_b(), d.dim_b());
    uniform_b1.topLeftCorner(d.dim_b1(), d.dim_b1()) =
        Matrix::Identity(d.dim_b1(), d.dim_b1()) / static_cast<double>(d.dim_b1());
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix rho = random_density(d.total_dim(), ++seed).matrix();
      const Matrix out = apply_channel(gamma, rho);
      // Positivity.
      EXPECT_GE(hermitian_eigenvalues(out).minCoeff(), -1e-12);
      // The image is σ^A ⊗ I^{B1} inside C.
      const auto restricted = restrict_to_c(out, d);
      EXPECT_NEAR(restricted.leak, 1.0 - restricted.block.trace().real(), 1e-15);
      const double weight = restricted.block.trace().real();
      ASSERT_GT(weight, 0.0);
      EXPECT_LE((out - embed_code_block(restricted.block, d)).norm(), 1e-15);
      const auto f = factor_product(restricted.block / weight, d, 1e-10);
      EXPECT_TRUE(f.is_product);
      EXPECT_LE(frobenius_distance(f.sigma_b, uniform_b1), 1e-10);
      // Product inputs map to ρ^A ⊗ I^{B1}/r1 after normalization.
      const Matrix rho_a = random_density(d.dim_a(), ++seed).matrix();
      const Matrix rho_b = random_density(d.dim_b(), ++seed).matrix();
      Matrix image = apply_channel(gamma, code_product(rho_a, rho_b, d));
      image /= image.trace();
      EXPECT_LE(frobenius_distance(image, code_product(rho_a, uniform_b1, d)), 1e-10);
    }
  }
}

TEST(Eta1, TrivialDecompositionIsIdentity) {
  const SpaceDecomposition d(3, 1, 1, 0);
  const KrausChannel eta = build_eta1(d);
  ASSERT_EQ(eta.size(), 1u);
  EXPECT_EQ(eta.op(0), Matrix::Identity(3, 3));
}

TEST(Eta1, ReplacesBWithMaximallyMixed) {
  const SpaceDecomposition d(2, 2, 1, 0);
  const Matrix rho_a = random_density(2, 4).matrix();
  const Matrix sigma_b = random_density(2, 5).matrix();
  EXPECT_LE(frobenius_distance(apply_channel(build_eta1(d), kron(rho_a, sigma_b)),
                               kron(rho_a, 0.5 * Matrix::Identity(2, 2))),
            1e-12);
}

TEST(Eta2, ExampleDecompositionResetsToB1) {
  const SpaceDecomposition d(2, 2, 1, 0);
  const Matrix rho_a = random_density(2, 6).matrix();
  EXPECT_LE(frobenius_distance(apply_channel(build_eta2(d), kron(rho_a, ket_bra(2, 1))),
                               kron(rho_a, ket_bra(2, 0))),
            1e-12);
}

TEST(Eta2, MatchesEta1WhenB1IsB) {
  const SpaceDecomposition d(2, 3, 3, 2);
  EXPECT_LE(channel_distance(build_eta1(d), build_eta2(d)), 1e-12);
}

TEST(Eta, TracePreservingForAllSmallDecompositions) {
  for (int da = 1; da <= 4; ++da) {
    for (int db = 1; db <= 4; ++db) {
      for (int db1 = 1; db1 <= db; ++db1) {
        for (int perp : {0, 1, 3}) {
          const SpaceDecomposition d(da, db, db1, perp);
          if (d.total_dim() > 16) continue;
          EXPECT_TRUE(validate_cptp(build_eta1(d), 1e-12).ok);
          EXPECT_TRUE(validate_cptp(build_eta2(d), 1e-12).ok);
        }
      }
    }
  }
}

TEST(Eta2, OutputLivesOnB1) {
  const SpaceDecomposition d(2, 3, 2, 1);
  const Matrix p_b1 = block_projectors(d).p_b1;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Matrix rho_a = random_density(2, seed).matrix();
    const Matrix sigma_b = random_density(3, seed + 50).matrix();
    const Matrix out = apply_channel(build_eta2(d), code_product(rho_a, sigma_b, d));
    EXPECT_LE(frobenius_distance(p_b1 * out * p_b1, out), 1e-12);
    const auto f = factor_product(restrict_to_c(out, d).block, d, 1e-12);
    EXPECT_TRUE(f.is_product);
    EXPECT_LE(frobenius_distance(f.rho_a, rho_a), 1e-12);
  }
}

TEST(DampedFlipChannel, Structure) {
  const auto example = damped_flip_channel(0.36);
  EXPECT_EQ(example.decomp, SpaceDecomposition(2, 2, 1, 0));
  ASSERT_EQ(example.channel.size(), 3u);
  EXPECT_NEAR(std::abs(example.channel.op(1)(0, 3)), 0.6, 1e-15);
  EXPECT_LE(frobenius_distance(example.channel.op(2),
                               kron(Matrix::Identity(2, 2), matrix_unit(2, 1, 0))),
            1e-15);
}

TEST(DampedFlipChannel, RejectsGammaOutsideOpenInterval) {
  EXPECT_THROW(damped_flip_channel(0.0), std::invalid_argument);
  EXPECT_THROW(damped_flip_channel(1.0), std::invalid_argument);
  EXPECT_THROW(damped_flip_channel(-0.2), std::invalid_argument);
}

TEST(RandomChannel, SingleKrausIsUnitary) {
  const Matrix u = random_channel(4, 1, 17).op(0);
  EXPECT_LE(frobenius_distance(u * u.adjoint(), Matrix::Identity(4, 4)), 1e-12);
}

TEST(RandomChannel, TracePreservingAcrossSeeds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_TRUE(validate_cptp(random_channel(6, 3, seed), 1e-10).ok) << seed;
  }
}

TEST(RandomChannel, DeterministicPerSeed) {
  const KrausChannel a = random_channel(4, 2, 99);
  const KrausChannel b = random_channel(4, 2, 99);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.op(i), b.op(i));
}

TEST(AmpliateFromBlocks, SingleIsometryGivesItsMatrixElements) {
  const SpaceDecomposition d(2, 3, 2, 1);
  const Matrix m = orthonormalize_columns(random_ginibre(3, 2, 41));
  const KrausChannel ch = ampliate_channel_from_blocks(d, {m}, 42);
  EXPECT_TRUE(validate_cptp(ch, 1e-12).ok);
  const ConditionReport report = check_ampliate_noiseless(ch, d, 1e-9);
  EXPECT_TRUE(report.holds);
  for (int l = 1; l <= 3; ++l) {
    for (int i = 1; i <= 2; ++i) {
      EXPECT_LE(std::abs(report.lambda.at({0, l, i}) - m(l - 1, i - 1)), 1e-12);
    }
  }
}

TEST(AmpliateFromBlocks, ReproducesExampleChannelOnB1Inputs) {
  const auto example = damped_flip_channel(0.5);
  Matrix flip = Matrix::Zero(2, 1);
  flip(1, 0) = 1.0;
  const KrausChannel ch = ampliate_channel_from_blocks(example.decomp, {flip}, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Matrix input = kron(random_density(2, seed).matrix(), ket_bra(2, 0));
    EXPECT_LE(frobenius_distance(apply_channel(ch, input),
                                 apply_channel(example.channel, input)),
              1e-12);
  }
}

TEST(AmpliateFromBlocks, RejectsNonIsometricBlocks) {
  const SpaceDecomposition d(2, 2, 1, 0);
  EXPECT_THROW(ampliate_channel_from_blocks(d, {Matrix::Zero(2, 1)}, 1),
               std::invalid_argument);
  EXPECT_THROW(ampliate_channel_from_blocks(d, {Matrix::Identity(2, 2)}, 1),
               std::invalid_argument);
  EXPECT_THROW(ampliate_channel_from_blocks(d, {}, 1), std::invalid_argument);
}

TEST(RandomAmpliate, CheckerHoldsAcrossSeeds) {
  const SpaceDecomposition d(2, 3, 2, 1);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const KrausChannel ch = random_ampliate_channel(d, 1 + static_cast<int>(seed % 3), seed);
    EXPECT_TRUE(validate_cptp(ch, 1e-10).ok) << seed;
    EXPECT_TRUE(check_ampliate_noiseless(ch, d, 1e-9).holds) << seed;
  }
}

TEST(RandomAmpliate, RejectsInfeasibleEnvironment) {
  EXPECT_THROW(random_ampliate_channel(SpaceDecomposition(2, 2, 1, 0), 0, 1),
               std::invalid_argument);
}

TEST(ChangeBasis, ConjugatesEveryOperator) {
  const KrausChannel ch = random_channel(3, 2, 12);
  const Matrix u = random_unitary(3, 13);
  const KrausChannel moved = change_basis(ch, u);
  const Matrix rho = random_density(3, 14).matrix();
  EXPECT_LE(frobenius_distance(apply_channel(moved, u * rho * u.adjoint()),
                               u * apply_channel(ch, rho) * u.adjoint()),
            1e-12);
}

}  // namespace
}  // namespace goqec
