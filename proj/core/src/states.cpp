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

#include "goqec/states.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace goqec {

namespace {

// Empty string when `m` is a density matrix within tol.
std::string density_defect(const Matrix& m, double tol) {
  std::ostringstream why;
  if (m.rows() != m.cols() || m.rows() == 0) {
    why << "matrix is " << m.rows() << "x" << m.cols() << ", not square";
    return why.str();
  }
  if (!m.allFinite()) return "matrix has non-finite entries";
  const double herm = hermiticity_residual(m);
  if (herm > tol) {
    why << "not Hermitian (residual " << herm << ")";
    return why.str();
  }
  const double min_eig = hermitian_eigenvalues(m).minCoeff();
  if (min_eig < -tol) {
    why << "not positive semidefinite (min eigenvalue " << min_eig << ")";
    return why.str();
  }
  const double trace_gap = std::abs(m.trace() - Complex(1.0));
  if (trace_gap > tol) {
    why << "trace differs from 1 by " << trace_gap;
    return why.str();
  }
  return {};
}

void require_code_square(const Matrix& rho_c, const SpaceDecomposition& d,
                         const char* what) {
  if (rho_c.rows() != d.code_dim() || rho_c.cols() != d.code_dim()) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a code_dim square matrix");
  }
}

}  // namespace

DensityOperator::DensityOperator(Matrix matrix, double tol)
    : matrix_(std::move(matrix)) {
  if (auto why = density_defect(matrix_, tol); !why.empty()) {
    throw std::invalid_argument("DensityOperator: " + why);
  }
}

Subspace support(const Matrix& rho, double tol) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("support: matrix is not square");
  }
  const double herm = hermiticity_residual(rho);
  if (herm > tol) {
    std::ostringstream why;
    why << "support: input is not Hermitian (residual " << herm << ")";
    throw std::invalid_argument(why.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (rho + rho.adjoint()));
  const auto& evals = solver.eigenvalues();
  int count = 0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) > tol) ++count;
  }
  Subspace out{static_cast<int>(rho.rows()), Matrix(rho.rows(), count)};
  // Eigenvalues ascend, so the kept columns are the trailing ones.
  out.basis = solver.eigenvectors().rightCols(count);
  return out;
}

Subspace support(const DensityOperator& rho, double tol) {
  return support(rho.matrix(), tol);
}

DensityOperator tensor(const DensityOperator& left,
                       const DensityOperator& right) {
  return DensityOperator(kron(left.matrix(), right.matrix()));
}

Matrix partial_trace_a(const Matrix& rho_c, const SpaceDecomposition& decomp) {
  require_code_square(rho_c, decomp, "partial_trace_a");
  const int da = decomp.dim_a();
  const int db = decomp.dim_b();
  Matrix out = Matrix::Zero(db, db);
  for (int alpha = 0; alpha < da; ++alpha) {
    out += rho_c.block(alpha * db, alpha * db, db, db);
  }
  return out;
}

Matrix partial_trace_b(const Matrix& rho_c, const SpaceDecomposition& decomp) {
  require_code_square(rho_c, decomp, "partial_trace_b");
  const int da = decomp.dim_a();
  const int db = decomp.dim_b();
  Matrix out(da, da);
  for (int alpha = 0; alpha < da; ++alpha) {
    for (int beta = 0; beta < da; ++beta) {
      out(alpha, beta) = rho_c.block(alpha * db, beta * db, db, db).trace();
    }
  }
  return out;
}

CodeRestriction restrict_to_c(const Matrix& rho, const SpaceDecomposition& decomp) {
  if (rho.rows() != decomp.total_dim() || rho.cols() != decomp.total_dim()) {
    throw std::invalid_argument("restrict_to_c: expected a total_dim square matrix");
  }
  const int c = decomp.code_dim();
  Matrix block = rho.topLeftCorner(c, c);
  const double leak = 1.0 - block.trace().real();
  return {std::move(block), leak};
}

ProductFactorization factor_product(const Matrix& rho_c,
                                    const SpaceDecomposition& decomp,
                                    double tol) {
  require_code_square(rho_c, decomp, "factor_product");
  if (auto why = density_defect(rho_c, tol); !why.empty()) {
    throw std::invalid_argument("factor_product: " + why);
  }
  ProductFactorization out;
  out.rho_a = partial_trace_b(rho_c, decomp);
  out.sigma_b = partial_trace_a(rho_c, decomp);
  out.residual = frobenius_distance(rho_c, kron(out.rho_a, out.sigma_b));
  out.is_product = out.residual <= tol;
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Matrix random_ginibre(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("random_ginibre: dimensions must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

DensityOperator random_density(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_density: dim must be >= 1");
  const Matrix g = random_ginibre(dim, dim, seed);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Exact Hermitian symmetrization removes rounding asymmetry.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(std::move(rho));
}

Vector random_pure_vector(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_pure_vector: dim must be >= 1");
  Vector v = random_ginibre(dim, 1, seed).col(0);
  return v / v.norm();
}

}  // namespace goqec
