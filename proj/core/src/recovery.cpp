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

#include "goqec/recovery.hpp"

#include <cmath>
#include <sstream>

namespace goqec {

namespace {

constexpr double kDropNorm = 1e-14;

std::string describe(const ConditionReport& report) {
  std::ostringstream msg;
  msg << "channel is not correctable (max residual " << report.max_residual
      << ", tolerance " << report.tolerance << ")";
  if (report.witness) {
    msg << "; first violation at (";
    for (std::size_t i = 0; i < report.witness->indices.size(); ++i) {
      msg << (i ? "," : "") << report.witness->indices[i];
    }
    msg << ") with residual " << report.witness->residual;
  }
  return msg.str();
}

// Rotates the largest-magnitude entry onto the positive real axis.
Vector fix_phase(Vector v) {
  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  const Complex entry = v(pivot);
  if (std::abs(entry) > 0.0) v *= std::conj(entry) / std::abs(entry);
  return v;
}

}  // namespace

NotCorrectableError::NotCorrectableError(ConditionReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

GramMatrix::GramMatrix(Matrix matrix, int kraus_count, int dim_b1,
                       double source_tol)
    : matrix_(std::move(matrix)),
      kraus_count_(kraus_count),
      dim_b1_(dim_b1),
      source_tol_(source_tol) {
  const auto n = static_cast<Eigen::Index>(kraus_count) * dim_b1;
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument("GramMatrix: size must be kraus_count * dim_B1");
  }
}

GramMatrix build_gram(const KrausChannel& channel,
                      const SpaceDecomposition& decomp, double tol) {
  ConditionReport report = check_correctable(channel, decomp, tol);
  if (!report.holds) throw NotCorrectableError(std::move(report));
  const int count = static_cast<int>(channel.size());
  const int r1 = decomp.dim_b1();
  GramMatrix gram(Matrix::Zero(count * r1, count * r1), count, r1, tol);
  Matrix m = gram.matrix();
  for (const auto& [key, lambda] : report.lambda) {
    m(gram.composite_index(key[0], key[2]), gram.composite_index(key[1], key[3])) =
        lambda;
  }
  return GramMatrix(std::move(m), count, r1, tol);
}

RankProfile rank_profile(const GramMatrix& gram, double tol) {
  const Eigen::VectorXd ascending = hermitian_eigenvalues(gram.matrix());
  RankProfile profile;
  for (Eigen::Index i = ascending.size() - 1; i >= 0; --i) {
    profile.eigenvalues.push_back(ascending(i));
    if (ascending(i) > tol) ++profile.rank;
  }
  return profile;
}

Recovery synthesize_recovery(const KrausChannel& channel,
                             const SpaceDecomposition& decomp, double tol) {
  const GramMatrix gram = build_gram(channel, decomp, tol);
  const int r1 = decomp.dim_b1();
  const int n = decomp.total_dim();

  std::vector<Matrix> maps;  // T_μ in composite order
  for (std::size_t a = 0; a < channel.size(); ++a) {
    for (int k = 1; k <= r1; ++k) {
      maps.push_back(channel.op(a) * a_embedding(decomp, k));
    }
  }

  const Matrix herm = 0.5 * (gram.matrix() + gram.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  const auto& evals = solver.eigenvalues();

  std::vector<Matrix> isometries;
  std::vector<double> kept;
  std::vector<std::string> warnings;
  for (Eigen::Index m = evals.size() - 1; m >= 0; --m) {
    const double d = evals(m);
    if (d <= tol) {
      if (d > tol / 10.0) {
        std::ostringstream msg;
        msg << "Gram eigenvalue " << d << " lies in (tol/10, tol] and was dropped";
        warnings.push_back(msg.str());
      }
      continue;
    }
    if (!kept.empty() && std::abs(kept.back() - d) <= tol) {
      warnings.push_back(
          "degenerate Gram eigenvalues; isometries follow the eigensolver's basis");
    }
    const Vector v = fix_phase(solver.eigenvectors().col(m));
    Matrix s = Matrix::Zero(n, decomp.dim_a());
    for (std::size_t mu = 0; mu < maps.size(); ++mu) s += v(mu) * maps[mu];
    isometries.push_back(s / std::sqrt(d));
    kept.push_back(d);
  }

  const Matrix home = a_embedding(decomp, 1);
  std::vector<Matrix> ops;
  for (const auto& s : isometries) ops.push_back(home * s.adjoint());

  // Orthonormal basis of the complement of ⊕ range(S_m).
  const auto range_cols = static_cast<Eigen::Index>(isometries.size()) * decomp.dim_a();
  if (range_cols > n) {
    throw std::runtime_error("synthesize_recovery: isometry ranges exceed the space");
  }
  Matrix complement;
  if (range_cols == 0) {
    complement = Matrix::Identity(n, n);
  } else {
    Matrix stacked(n, range_cols);
    for (std::size_t m = 0; m < isometries.size(); ++m) {
      stacked.middleCols(static_cast<Eigen::Index>(m) * decomp.dim_a(),
                         decomp.dim_a()) = isometries[m];
    }
    Eigen::HouseholderQR<Matrix> qr(stacked);
    const Matrix full_q = qr.householderQ();
    complement = full_q.rightCols(n - range_cols);
  }
  const Matrix q = complement * complement.adjoint();

  for (int l = 1; l <= decomp.dim_b(); ++l) {
    Matrix op = projector_pkl(decomp, 1, l) * q;
    if (op.norm() >= kDropNorm) ops.push_back(std::move(op));
  }
  for (int m = 1; m <= decomp.dim_perp(); ++m) {
    Matrix op = matrix_unit(n, 0, decomp.perp_index(m)) * q;
    if (op.norm() >= kDropNorm) ops.push_back(std::move(op));
  }

  return Recovery{KrausChannel::trusted(std::move(ops)), std::move(isometries),
                  std::move(kept), std::move(warnings)};
}

}  // namespace goqec
