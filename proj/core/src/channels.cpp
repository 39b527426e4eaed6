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

#include "goqec/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace goqec {

namespace {

constexpr double kDropNorm = 1e-14;

Matrix trace_preservation_gap(const std::vector<Matrix>& ops) {
  const auto n = ops.front().cols();
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& op : ops) sum.noalias() += op.adjoint() * op;
  return sum - Matrix::Identity(n, n);
}

std::vector<Matrix> transformer_ops(const SpaceDecomposition& d, int k_max) {
  std::vector<Matrix> ops;
  const double scale = 1.0 / std::sqrt(static_cast<double>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    for (int l = 1; l <= d.dim_b(); ++l) {
      ops.push_back(scale * projector_pkl(d, k, l));
    }
  }
  for (int m = 1; m <= d.dim_perp(); ++m) {
    const int idx = d.perp_index(m);
    ops.push_back(matrix_unit(d.total_dim(), idx, idx));
  }
  return ops;
}

}  // namespace

CPMap::CPMap(std::vector<Matrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) {
    throw std::invalid_argument("CPMap: at least one operator is required");
  }
  const auto n = operators_.front().rows();
  for (std::size_t a = 0; a < operators_.size(); ++a) {
    const auto& op = operators_[a];
    if (op.rows() != n || op.cols() != n || n == 0) {
      std::ostringstream why;
      why << "CPMap: operator " << a << " is " << op.rows() << "x" << op.cols()
          << ", expected " << n << "x" << n;
      throw std::invalid_argument(why.str());
    }
  }
}

KrausChannel::KrausChannel(std::vector<Matrix> operators, double tol)
    : CPMap(std::move(operators)) {
  const double residual = trace_preservation_gap(this->operators()).norm();
  if (!(residual <= tol)) {
    std::ostringstream why;
    why << "KrausChannel: not trace preserving, residual " << residual
        << " > tolerance " << tol;
    throw std::invalid_argument(why.str());
  }
}

KrausChannel::KrausChannel(std::vector<Matrix> operators, TrustedTag)
    : CPMap(std::move(operators)) {}

KrausChannel KrausChannel::trusted(std::vector<Matrix> operators) {
  return KrausChannel(std::move(operators), TrustedTag{});
}

CptpCheck validate_cptp(const CPMap& map, double tol) {
  const double residual = trace_preservation_gap(map.operators()).norm();
  return {residual <= tol, residual};
}

Matrix apply_channel(const CPMap& map, const Matrix& rho) {
  if (rho.rows() != map.dim() || rho.cols() != map.dim()) {
    std::ostringstream why;
    why << "apply: state is " << rho.rows() << "x" << rho.cols()
        << ", channel acts on dimension " << map.dim();
    throw std::invalid_argument(why.str());
  }
  Matrix out = Matrix::Zero(map.dim(), map.dim());
  for (const auto& op : map.operators()) {
    out.noalias() += op * rho * op.adjoint();
  }
  return out;
}

Matrix apply_channel(const CPMap& map, const DensityOperator& rho) {
  return apply_channel(map, rho.matrix());
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (outer.dim() != inner.dim()) {
    throw std::invalid_argument("compose: channels act on different dimensions");
  }
  std::vector<Matrix> ops;
  ops.reserve(outer.size() * inner.size());
  for (const auto& r : outer.operators()) {
    for (const auto& e : inner.operators()) {
      Matrix product = r * e;
      if (product.norm() >= kDropNorm) ops.push_back(std::move(product));
    }
  }
  return KrausChannel::trusted(std::move(ops));
}

KrausChannel identity_channel(int dim) {
  if (dim < 1) throw std::invalid_argument("identity_channel: dim must be >= 1");
  return KrausChannel::trusted({Matrix::Identity(dim, dim)});
}

KrausChannel change_basis(const KrausChannel& channel, const Matrix& unitary) {
  if (unitary.rows() != channel.dim() || unitary.cols() != channel.dim()) {
    throw std::invalid_argument("change_basis: unitary has the wrong size");
  }
  std::vector<Matrix> ops;
  ops.reserve(channel.size());
  for (const auto& op : channel.operators()) {
    ops.push_back(unitary * op * unitary.adjoint());
  }
  return KrausChannel::trusted(std::move(ops));
}

double channel_distance(const CPMap& first, const CPMap& second) {
  if (first.dim() != second.dim()) {
    throw std::invalid_argument("channel_distance: dimension mismatch");
  }
  const int n = first.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Matrix unit = matrix_unit(n, i, j);
      worst = std::max(worst, frobenius_distance(apply_channel(first, unit),
                                                 apply_channel(second, unit)));
    }
  }
  return worst;
}

CPMap gamma_map(const SpaceDecomposition& decomp) {
  std::vector<Matrix> ops;
  for (int k = 1; k <= decomp.dim_b1(); ++k) {
    for (int l = 1; l <= decomp.dim_b(); ++l) {
      ops.push_back(projector_pkl(decomp, k, l));
    }
  }
  return CPMap(std::move(ops));
}

KrausChannel build_eta1(const SpaceDecomposition& decomp) {
  return KrausChannel::trusted(transformer_ops(decomp, decomp.dim_b()));
}

KrausChannel build_eta2(const SpaceDecomposition& decomp) {
  return KrausChannel::trusted(transformer_ops(decomp, decomp.dim_b1()));
}

ChannelInstance damped_flip_channel(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("damped_flip_channel: gamma must lie in (0, 1)");
  }
  Matrix f0 = Matrix::Zero(2, 2);
  f0(0, 0) = 1.0;
  f0(1, 1) = std::sqrt(1.0 - gamma);
  Matrix f1 = Matrix::Zero(2, 2);
  f1(0, 1) = std::sqrt(gamma);
  const Matrix flip_down = matrix_unit(2, 0, 1);  // |0⟩⟨1|
  const Matrix flip_up = matrix_unit(2, 1, 0);    // |1⟩⟨0|
  std::vector<Matrix> ops{kron(f0, flip_down), kron(f1, flip_down),
                          kron(Matrix::Identity(2, 2), flip_up)};
  return {KrausChannel::trusted(std::move(ops)), SpaceDecomposition(2, 2, 1, 0)};
}

Matrix orthonormalize_columns(const Matrix& m) {
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

KrausChannel random_channel(int dim, int kraus_count, std::uint64_t seed) {
  if (dim < 1 || kraus_count < 1) {
    throw std::invalid_argument("random_channel: dim and kraus_count must be >= 1");
  }
  const Matrix v = orthonormalize_columns(random_ginibre(dim * kraus_count, dim, seed));
  std::vector<Matrix> ops;
  ops.reserve(kraus_count);
  for (int a = 0; a < kraus_count; ++a) {
    ops.push_back(v.middleRows(static_cast<Eigen::Index>(a) * dim, dim));
  }
  return KrausChannel::trusted(std::move(ops));
}

KrausChannel ampliate_channel_from_blocks(const SpaceDecomposition& decomp,
                                          const std::vector<Matrix>& blocks,
                                          std::uint64_t seed, double tol) {
  if (blocks.empty()) {
    throw std::invalid_argument("ampliate_channel_from_blocks: no blocks");
  }
  const int r = decomp.dim_b();
  const int r1 = decomp.dim_b1();
  Matrix gap = -Matrix::Identity(r1, r1);
  for (const auto& m : blocks) {
    if (m.rows() != r || m.cols() != r1) {
      throw std::invalid_argument(
          "ampliate_channel_from_blocks: blocks must be dim_B x dim_B1");
    }
    gap += m.adjoint() * m;
  }
  if (gap.norm() > tol) {
    std::ostringstream why;
    why << "ampliate_channel_from_blocks: blocks are not an isometry, residual "
        << gap.norm();
    throw std::invalid_argument(why.str());
  }

  // Stinespring isometry V = Σ_a E_a ⊗ |a⟩, stored as stacked row blocks.
  const int n = decomp.total_dim();
  const int count = static_cast<int>(blocks.size());
  const Eigen::Index rows = static_cast<Eigen::Index>(n) * count;
  Matrix stinespring = Matrix::Zero(rows, n);

  std::vector<int> fixed_cols;
  std::vector<int> free_cols;
  for (int alpha = 0; alpha < decomp.dim_a(); ++alpha) {
    for (int k = 1; k <= r; ++k) {
      (k <= r1 ? fixed_cols : free_cols).push_back(decomp.index(alpha, k));
    }
  }
  for (int m = 1; m <= decomp.dim_perp(); ++m) {
    free_cols.push_back(decomp.perp_index(m));
  }

  for (int a = 0; a < count; ++a) {
    for (int alpha = 0; alpha < decomp.dim_a(); ++alpha) {
      for (int k = 1; k <= r1; ++k) {
        for (int l = 1; l <= r; ++l) {
          stinespring(static_cast<Eigen::Index>(a) * n + decomp.index(alpha, l),
                      decomp.index(alpha, k)) = blocks[a](l - 1, k - 1);
        }
      }
    }
  }

  if (!free_cols.empty()) {
    Matrix fixed(rows, static_cast<Eigen::Index>(fixed_cols.size()));
    for (std::size_t c = 0; c < fixed_cols.size(); ++c) {
      fixed.col(c) = stinespring.col(fixed_cols[c]);
    }
    Matrix draw = random_ginibre(static_cast<int>(rows),
                                 static_cast<int>(free_cols.size()), seed);
    // Two projection passes keep the completion orthogonal to rounding level.
    for (int pass = 0; pass < 2; ++pass) {
      draw -= fixed * (fixed.adjoint() * draw);
    }
    Matrix completion = orthonormalize_columns(draw);
    for (int pass = 0; pass < 2; ++pass) {
      completion -= fixed * (fixed.adjoint() * completion);
      completion = orthonormalize_columns(completion);
    }
    for (std::size_t c = 0; c < free_cols.size(); ++c) {
      stinespring.col(free_cols[c]) = completion.col(c);
    }
  }

  std::vector<Matrix> ops;
  ops.reserve(count);
  for (int a = 0; a < count; ++a) {
    ops.push_back(stinespring.middleRows(static_cast<Eigen::Index>(a) * n, n));
  }
  return KrausChannel::trusted(std::move(ops));
}

KrausChannel random_ampliate_channel(const SpaceDecomposition& decomp,
                                     int env_dim, std::uint64_t seed) {
  if (env_dim < 1 || env_dim * decomp.dim_b() < decomp.dim_b1()) {
    throw std::invalid_argument(
        "random_ampliate_channel: need env_dim >= 1 and env_dim*dim_B >= dim_B1");
  }
  const int r = decomp.dim_b();
  const Matrix iso = orthonormalize_columns(
      random_ginibre(r * env_dim, decomp.dim_b1(), derive_seed(seed, 0)));
  std::vector<Matrix> blocks;
  blocks.reserve(env_dim);
  for (int a = 0; a < env_dim; ++a) {
    blocks.push_back(iso.middleRows(static_cast<Eigen::Index>(a) * r, r));
  }
  return ampliate_channel_from_blocks(decomp, blocks, derive_seed(seed, 1));
}

}  // namespace goqec
