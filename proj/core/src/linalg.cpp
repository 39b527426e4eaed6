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

#include "goqec/linalg.hpp"

#include <stdexcept>

namespace goqec {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix matrix_unit(int dim, int i, int j) {
  if (i < 0 || j < 0 || i >= dim || j >= dim) {
    throw std::out_of_range("matrix_unit: index outside [0, dim)");
  }
  Matrix m = Matrix::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

Vector basis_ket(int dim, int i) {
  if (i < 0 || i >= dim) {
    throw std::out_of_range("basis_ket: index outside [0, dim)");
  }
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_distance: shape mismatch");
  }
  return (a - b).norm();
}

double hermiticity_residual(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermiticity_residual: matrix is not square");
  }
  return (m - m.adjoint()).norm();
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace goqec
