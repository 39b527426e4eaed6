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

#include "goqec/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace goqec {

namespace {

void require_dims(const CPMap& map, const SpaceDecomposition& d,
                  const char* what) {
  if (map.dim() != d.total_dim()) {
    std::ostringstream why;
    why << what << ": channel acts on dimension " << map.dim()
        << " but the decomposition has total_dim " << d.total_dim();
    throw std::invalid_argument(why.str());
  }
}

// Records one proportionality test and keeps the report's running state.
class ReportBuilder {
 public:
  explicit ReportBuilder(double tol) { report_.tolerance = tol; }

  void scalar_block(const Matrix& g, LambdaKey key) {
    const Complex lambda = g.trace() / static_cast<double>(g.rows());
    const double residual =
        (g - lambda * Matrix::Identity(g.rows(), g.cols())).norm();
    report_.lambda.emplace(key, lambda);
    note("block", std::move(key), residual);
  }

  void must_vanish(const Matrix& m, std::vector<int> indices) {
    note("leak", std::move(indices), m.norm());
  }

  ConditionReport finish() && {
    report_.holds = !report_.witness.has_value();
    return std::move(report_);
  }

 private:
  void note(const char* kind, std::vector<int> indices, double residual) {
    report_.max_residual = std::max(report_.max_residual, residual);
    if (!(residual <= report_.tolerance) && !report_.witness) {
      report_.witness = Witness{kind, std::move(indices), residual};
    }
  }

  ConditionReport report_;
};

Matrix uniform_b1(const SpaceDecomposition& d) {
  Matrix b = Matrix::Zero(d.dim_b(), d.dim_b());
  for (int k = 0; k < d.dim_b1(); ++k) b(k, k) = 1.0 / d.dim_b1();
  return b;
}

// max(‖out − embed(C-block)‖, ‖C-block − ρ^A⊗σ‖, ‖tr_B(C-block) − ρ^A‖) with
// σ = tr_A(C-block). Zero exactly when out = ρ^A ⊗ σ inside C.
double product_output_residual(const Matrix& out, const Matrix& rho_a,
                               const SpaceDecomposition& d, Matrix* sigma) {
  const auto restricted = restrict_to_c(out, d);
  const double coupling =
      frobenius_distance(out, embed_code_block(restricted.block, d));
  *sigma = partial_trace_a(restricted.block, d);
  const Matrix out_a = partial_trace_b(restricted.block, d);
  const double product =
      frobenius_distance(restricted.block, kron(out_a, *sigma));
  const double a_mismatch = frobenius_distance(out_a, rho_a);
  return std::max({coupling, product, a_mismatch});
}

}  // namespace

ConditionReport check_ampliate_noiseless(const KrausChannel& channel,
                                         const SpaceDecomposition& decomp,
                                         double tol) {
  require_dims(channel, decomp, "check_ampliate_noiseless");
  const auto proj = block_projectors(decomp);
  ReportBuilder builder(tol);
  for (std::size_t a = 0; a < channel.size(); ++a) {
    const Matrix& op = channel.op(a);
    const int ai = static_cast<int>(a);
    for (int l = 1; l <= decomp.dim_b(); ++l) {
      for (int i = 1; i <= decomp.dim_b1(); ++i) {
        builder.scalar_block(a_block(op, decomp, l, i), {ai, l, i});
      }
    }
    builder.must_vanish(proj.p_b_perp * op * proj.p_b1, {ai});
  }
  return std::move(builder).finish();
}

ConditionReport check_normal_noiseless(const KrausChannel& channel,
                                       const SpaceDecomposition& decomp,
                                       double tol) {
  require_dims(channel, decomp, "check_normal_noiseless");
  const auto view = restrict_to_b1(decomp);
  return check_ampliate_noiseless(change_basis(channel, view.permutation),
                                  view.decomp, tol);
}

ConditionReport check_correctable(const KrausChannel& channel,
                                  const SpaceDecomposition& decomp, double tol) {
  require_dims(channel, decomp, "check_correctable");
  ReportBuilder builder(tol);
  const int count = static_cast<int>(channel.size());
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      const Matrix product = channel.op(a).adjoint() * channel.op(b);
      for (int k = 1; k <= decomp.dim_b1(); ++k) {
        for (int l = 1; l <= decomp.dim_b1(); ++l) {
          builder.scalar_block(a_block(product, decomp, k, l), {a, b, k, l});
        }
      }
    }
  }
  return std::move(builder).finish();
}

std::vector<Matrix> hermitian_operator_basis(int dim) {
  if (dim < 1) throw std::invalid_argument("hermitian_operator_basis: dim < 1");
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(dim) * dim);
  basis.push_back(Matrix::Identity(dim, dim) / static_cast<double>(dim));
  for (int p = 1; p < dim; ++p) basis.push_back(matrix_unit(dim, p, p));
  const Complex i_unit(0.0, 1.0);
  for (int p = 0; p < dim; ++p) {
    for (int q = p + 1; q < dim; ++q) {
      const Matrix up = matrix_unit(dim, p, q);
      const Matrix down = matrix_unit(dim, q, p);
      basis.push_back(up + down);
      basis.push_back(i_unit * (up - down));
    }
  }
  return basis;
}

QuadrupleReport check_quadruple(const KrausChannel& recovery,
                                const KrausChannel& channel,
                                const SpaceDecomposition& decomp, double tol) {
  require_dims(channel, decomp, "check_quadruple");
  require_dims(recovery, decomp, "check_quadruple");
  QuadrupleReport report;
  report.tolerance = tol;
  const Matrix b_input = uniform_b1(decomp);
  const auto basis = hermitian_operator_basis(decomp.dim_a());

  auto run = [&](const Matrix& h) {
    return apply_channel(recovery,
                 apply_channel(channel, embed_code_block(kron(h, b_input), decomp)));
  };
  auto fail = [&](std::string why, double residual, int element) {
    report.residual = std::max(report.residual, residual);
    if (report.failure.empty()) {
      report.failure = std::move(why);
      report.failing_element = element;
    }
  };

  Matrix sigma;
  const double base = product_output_residual(run(basis[0]), basis[0], decomp, &sigma);
  report.residual = base;
  if (!(base <= tol)) {
    fail("output for the maximally mixed A input is not I/dim_A ⊗ σ", base, 0);
  }

  const double herm = hermiticity_residual(sigma);
  const double trace_gap = std::abs(sigma.trace() - Complex(1.0));
  const double min_eig = hermitian_eigenvalues(sigma).minCoeff();
  const double sigma_defect = std::max({herm, trace_gap, std::max(0.0, -min_eig)});
  report.residual = std::max(report.residual, sigma_defect);
  if (!(sigma_defect <= tol)) fail("σ is not a density operator on H^B", sigma_defect, 0);

  for (std::size_t m = 1; m < basis.size(); ++m) {
    const Matrix expected = embed_code_block(kron(basis[m], sigma), decomp);
    const double residual = frobenius_distance(run(basis[m]), expected);
    report.residual = std::max(report.residual, residual);
    if (!(residual <= tol)) {
      fail("output for A basis element " + std::to_string(m) +
               " differs from h ⊗ σ",
           residual, static_cast<int>(m));
    }
  }
  report.holds = report.failure.empty();
  report.sigma = std::move(sigma);
  return report;
}

QuadrupleReport check_quadruple_normal(const KrausChannel& recovery,
                                       const KrausChannel& channel,
                                       const SpaceDecomposition& decomp,
                                       double tol) {
  require_dims(channel, decomp, "check_quadruple_normal");
  require_dims(recovery, decomp, "check_quadruple_normal");
  const auto view = restrict_to_b1(decomp);
  return check_quadruple(change_basis(recovery, view.permutation),
                         change_basis(channel, view.permutation), view.decomp,
                         tol);
}

OracleReport bruteforce_noiseless_oracle(const KrausChannel& channel,
                                         const SpaceDecomposition& decomp,
                                         int samples, std::uint64_t seed,
                                         double tol) {
  require_dims(channel, decomp, "bruteforce_noiseless_oracle");
  if (samples < 1) {
    throw std::invalid_argument("bruteforce_noiseless_oracle: samples must be >= 1");
  }
  const int da = decomp.dim_a();
  const int r = decomp.dim_b();
  const int r1 = decomp.dim_b1();
  OracleReport report;
  std::uint64_t stream = 0;
  Matrix sigma;

  auto output_for = [&](const Matrix& rho_a, const Matrix& rho_b) {
    return apply_channel(channel, embed_code_block(kron(rho_a, rho_b), decomp));
  };

  for (int s = 0; s < samples; ++s) {
    const Matrix rho_a = random_density(da, derive_seed(seed, stream++)).matrix();
    Matrix rho_b = Matrix::Zero(r, r);
    rho_b.topLeftCorner(r1, r1) =
        random_density(r1, derive_seed(seed, stream++)).matrix();
    const double residual =
        product_output_residual(output_for(rho_a, rho_b), rho_a, decomp, &sigma);
    report.worst_residual = std::max(report.worst_residual, residual);
  }

  constexpr int kIndependenceDraws = 3;
  for (int k = 1; k <= r1; ++k) {
    const Matrix beta_k = matrix_unit(r, k - 1, k - 1);
    Matrix first_sigma;
    for (int t = 0; t < kIndependenceDraws; ++t) {
      const Matrix rho_a = random_density(da, derive_seed(seed, stream++)).matrix();
      double residual =
          product_output_residual(output_for(rho_a, beta_k), rho_a, decomp, &sigma);
      if (t == 0) {
        first_sigma = sigma;
      } else {
        residual = std::max(residual, frobenius_distance(sigma, first_sigma));
      }
      report.worst_residual = std::max(report.worst_residual, residual);
    }
    report.per_basis_sigmas.push_back(std::move(first_sigma));
  }

  report.holds = report.worst_residual <= tol;
  if (report.holds) {
    report.algebraic_recheck = true;
    report.holds = check_ampliate_noiseless(channel, decomp, tol).holds;
  }
  return report;
}

std::string_view to_string(SupportCase c) {
  switch (c) {
    case SupportCase::kCaseA:
      return "CaseA";
    case SupportCase::kCaseB:
      return "CaseB";
    case SupportCase::kCaseC:
      return "CaseC";
  }
  return "unknown";
}

SupportCase classify_support_case(const DensityOperator& rho1,
                                  const DensityOperator& rho2,
                                  const SpaceDecomposition& decomp, double tol) {
  if (rho1.dim() != decomp.dim_b() || rho2.dim() != decomp.dim_b()) {
    throw std::invalid_argument(
        "classify_support_case: states must live on H^B (dimension dim_B)");
  }
  const Subspace s1 = support(rho1, tol);
  if (s1.dim() == decomp.dim_b()) return SupportCase::kCaseA;
  const Matrix pi1 = s1.projector();
  const Matrix pi2 = support(rho2, tol).projector();
  const Matrix outside = (Matrix::Identity(pi1.rows(), pi1.cols()) - pi1) * pi2;
  return spectral_norm(outside) <= tol ? SupportCase::kCaseB : SupportCase::kCaseC;
}

}  // namespace goqec
