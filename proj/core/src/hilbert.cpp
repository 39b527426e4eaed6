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

#include "goqec/hilbert.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace goqec {

namespace {

void require_b_index(const SpaceDecomposition& d, int k, const char* what) {
  if (k < 1 || k > d.dim_b()) {
    throw std::out_of_range(std::string(what) + ": B index " +
                            std::to_string(k) + " outside [1, " +
                            std::to_string(d.dim_b()) + "]");
  }
}

}  // namespace

SpaceDecomposition::SpaceDecomposition(int dim_a, int dim_b, int dim_b1,
                                       int dim_perp)
    : dim_a_(dim_a), dim_b_(dim_b), dim_b1_(dim_b1), dim_perp_(dim_perp) {
  if (dim_a < 1 || dim_b < 1) {
    throw std::invalid_argument("SpaceDecomposition: dim_A and dim_B must be >= 1");
  }
  if (dim_b1 < 1 || dim_b1 > dim_b) {
    throw std::invalid_argument("SpaceDecomposition: need 1 <= dim_B1 <= dim_B");
  }
  if (dim_perp < 0) {
    throw std::invalid_argument("SpaceDecomposition: dim_perp must be >= 0");
  }
}

int SpaceDecomposition::index(int alpha, int k) const {
  if (alpha < 0 || alpha >= dim_a_) {
    throw std::out_of_range("SpaceDecomposition::index: A index out of range");
  }
  require_b_index(*this, k, "SpaceDecomposition::index");
  return alpha * dim_b_ + (k - 1);
}

int SpaceDecomposition::perp_index(int m) const {
  if (m < 1 || m > dim_perp_) {
    throw std::out_of_range("SpaceDecomposition::perp_index: out of range");
  }
  return code_dim() + (m - 1);
}

Matrix projector_pkl(const SpaceDecomposition& decomp, int k, int l) {
  require_b_index(decomp, k, "projector_pkl");
  require_b_index(decomp, l, "projector_pkl");
  Matrix p = Matrix::Zero(decomp.total_dim(), decomp.total_dim());
  for (int alpha = 0; alpha < decomp.dim_a(); ++alpha) {
    p(decomp.index(alpha, k), decomp.index(alpha, l)) = 1.0;
  }
  return p;
}

BlockProjectors block_projectors(const SpaceDecomposition& decomp) {
  const int n = decomp.total_dim();
  BlockProjectors out{Matrix::Zero(n, n), Matrix::Zero(n, n), Matrix::Zero(n, n)};
  for (int alpha = 0; alpha < decomp.dim_a(); ++alpha) {
    for (int k = 1; k <= decomp.dim_b(); ++k) {
      const int idx = decomp.index(alpha, k);
      out.p_b(idx, idx) = 1.0;
      if (k <= decomp.dim_b1()) out.p_b1(idx, idx) = 1.0;
    }
  }
  out.p_b_perp = Matrix::Identity(n, n) - out.p_b;
  return out;
}

Matrix a_block(const Matrix& op, const SpaceDecomposition& decomp, int l,
               int i) {
  if (op.rows() != decomp.total_dim() || op.cols() != decomp.total_dim()) {
    throw std::invalid_argument("a_block: operator is not total_dim square");
  }
  require_b_index(decomp, l, "a_block");
  require_b_index(decomp, i, "a_block");
  const int da = decomp.dim_a();
  Matrix g(da, da);
  for (int alpha = 0; alpha < da; ++alpha) {
    for (int beta = 0; beta < da; ++beta) {
      g(alpha, beta) = op(decomp.index(alpha, l), decomp.index(beta, i));
    }
  }
  return g;
}

Matrix a_embedding(const SpaceDecomposition& decomp, int k) {
  require_b_index(decomp, k, "a_embedding");
  Matrix j = Matrix::Zero(decomp.total_dim(), decomp.dim_a());
  for (int alpha = 0; alpha < decomp.dim_a(); ++alpha) {
    j(decomp.index(alpha, k), alpha) = 1.0;
  }
  return j;
}

Matrix embed_code_block(const Matrix& code_block,
                        const SpaceDecomposition& decomp) {
  const int c = decomp.code_dim();
  if (code_block.rows() != c || code_block.cols() != c) {
    throw std::invalid_argument("embed_code_block: block is not code_dim square");
  }
  Matrix out = Matrix::Zero(decomp.total_dim(), decomp.total_dim());
  out.topLeftCorner(c, c) = code_block;
  return out;
}

B1Restriction restrict_to_b1(const SpaceDecomposition& decomp) {
  const int r1 = decomp.dim_b1();
  const int folded = (decomp.dim_b() - r1) * decomp.dim_a();
  SpaceDecomposition reduced(decomp.dim_a(), r1, r1, decomp.dim_perp() + folded);

  // new position -> old position
  std::vector<int> order;
  order.reserve(decomp.total_dim());
  for (int alpha = 0; alpha < decomp.dim_a(); ++alpha) {
    for (int k = 1; k <= r1; ++k) order.push_back(decomp.index(alpha, k));
  }
  for (int alpha = 0; alpha < decomp.dim_a(); ++alpha) {
    for (int k = r1 + 1; k <= decomp.dim_b(); ++k) {
      order.push_back(decomp.index(alpha, k));
    }
  }
  for (int m = 1; m <= decomp.dim_perp(); ++m) {
    order.push_back(decomp.perp_index(m));
  }

  const int n = decomp.total_dim();
  Matrix perm = Matrix::Zero(n, n);
  for (int pos = 0; pos < n; ++pos) perm(pos, order[pos]) = 1.0;
  return {reduced, perm};
}

}  // namespace goqec
