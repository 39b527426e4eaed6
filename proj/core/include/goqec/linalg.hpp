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

#ifndef GOQEC_LINALG_HPP_
#define GOQEC_LINALG_HPP_

#include <complex>

#include <Eigen/Dense>

namespace goqec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Residual threshold used when a caller does not pass one. All equality
/// checks in the library are Frobenius-norm residuals against a tolerance.
inline constexpr double kDefaultTolerance = 1e-9;

/// Kronecker product, left factor major: (a ⊗ b)(i*rows(b)+k, j*cols(b)+l).
Matrix kron(const Matrix& a, const Matrix& b);

/// |i⟩⟨j| in dimension `dim` (zero-based indices).
Matrix matrix_unit(int dim, int i, int j);

/// Computational basis vector |i⟩ in dimension `dim`.
Vector basis_ket(int dim, int i);

double frobenius_distance(const Matrix& a, const Matrix& b);

/// ‖m − m†‖_F; m must be square.
double hermiticity_residual(const Matrix& m);

/// Largest singular value.
double spectral_norm(const Matrix& m);

/// Eigenvalues of the Hermitian part of `m`, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

}  // namespace goqec

#endif  // GOQEC_LINALG_HPP_
