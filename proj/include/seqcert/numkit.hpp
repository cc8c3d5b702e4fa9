// Copyright 2026 The seqcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

// Dense complex linear algebra for small Hermitian/unitary matrices
// (dimensions up to ~64). Thin validated layer over Eigen; every
// operation is a pure function and safe to call concurrently.
namespace seqcert::numkit {

using Complex = std::complex<double>;
using CMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Eigensystem of a Hermitian matrix: real eigenvalues in ascending order,
/// eigenvectors as orthonormal columns (column k pairs with eigenvalue k).
struct EigenDecomposition {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

CMatrix identity(Eigen::Index dim);
CMatrix zeros(Eigen::Index rows, Eigen::Index cols);
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

bool finite_entries(const CMatrix& a);
double frobenius_norm(const CMatrix& a);

/// Hermiticity test relative to the Frobenius norm, floored at 1 so that
/// near-zero matrices are judged on an absolute scale.
bool is_hermitian(const CMatrix& a, double tol = 1e-10);

/// Standard matrix product. Throws std::invalid_argument on inner-dimension
/// mismatch (Eigen would assert or silently misbehave otherwise).
CMatrix multiply(const CMatrix& a, const CMatrix& b);

CMatrix adjoint(const CMatrix& a);

/// Sum of diagonal entries. Throws on non-square input.
Complex trace(const CMatrix& a);

/// Kronecker product, (a.rows*b.rows) x (a.cols*b.cols), row index
/// ia*b.rows + ib.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// AB + BA for same-dimension square matrices.
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

/// Eigendecomposition of a Hermitian matrix. Rejects inputs that fail
/// is_hermitian at the given tolerance.
EigenDecomposition hermitian_eig(const CMatrix& h, double tol = 1e-10);

/// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) (relative, floored)
/// are clamped to zero; anything more negative is rejected.
CMatrix psd_sqrt(const CMatrix& m);

/// Frobenius distance between two same-shape matrices.
double op_distance(const CMatrix& a, const CMatrix& b);

}  // namespace seqcert::numkit
