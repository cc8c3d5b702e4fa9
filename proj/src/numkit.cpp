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

#include "seqcert/numkit.hpp"

#include <algorithm>
#include <cmath>

namespace seqcert::numkit {

CMatrix identity(Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("identity: dimension must be >= 1");
  return CMatrix::Identity(dim, dim);
}

CMatrix zeros(Eigen::Index rows, Eigen::Index cols) {
  return CMatrix::Zero(rows, cols);
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  return m;
}

bool finite_entries(const CMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        return false;
  return true;
}

double frobenius_norm(const CMatrix& a) { return a.norm(); }

bool is_hermitian(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, a.norm());
  return (a - a.adjoint()).norm() <= tol * scale;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("multiply: inner dimensions do not match");
  return a * b;
}

CMatrix adjoint(const CMatrix& a) { return a.adjoint(); }

Complex trace(const CMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("trace: matrix is not square");
  return a.trace();
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("anticommutator: dimensions do not match");
  return a * b + b * a;
}

EigenDecomposition hermitian_eig(const CMatrix& h, double tol) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("hermitian_eig: matrix is not square");
  if (!is_hermitian(h, tol))
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  // Symmetrize first so the solver sees an exactly Hermitian operator.
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix psd_sqrt(const CMatrix& m) {
  const auto eig = hermitian_eig(m);
  const double floor = -1e-10 * std::max(1.0, m.norm());
  RVector clamped = eig.eigenvalues;
  for (Eigen::Index k = 0; k < clamped.size(); ++k) {
    if (clamped[k] < floor)
      throw std::invalid_argument(
          "psd_sqrt: matrix has an eigenvalue below -1e-10");
    clamped[k] = std::sqrt(std::max(0.0, clamped[k]));
  }
  CMatrix root = eig.eigenvectors * clamped.cast<Complex>().asDiagonal() *
                 eig.eigenvectors.adjoint();
  return 0.5 * (root + root.adjoint());
}

double op_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("op_distance: shapes do not match");
  return (a - b).norm();
}

}  // namespace seqcert::numkit
