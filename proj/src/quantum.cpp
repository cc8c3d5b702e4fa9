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

#include "seqcert/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "seqcert/rng.hpp"

namespace seqcert::quantum {

namespace {

void require_square_finite(const numkit::CMatrix& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty");
  }
  if (!numkit::finite_entries(m)) {
    throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
  }
}

}  // namespace

DensityState::DensityState(numkit::CMatrix matrix) : matrix_(std::move(matrix)) {
  require_square_finite(matrix_, "DensityState");
  if (!numkit::is_hermitian(matrix_, 1e-10)) {
    throw std::invalid_argument("DensityState: matrix is not Hermitian within 1e-10");
  }
  const auto eig = numkit::hermitian_eig(matrix_);
  min_eigenvalue_ = eig.eigenvalues(0);
  if (min_eigenvalue_ < -1e-10) {
    throw std::invalid_argument("DensityState: negative eigenvalue beyond tolerance");
  }
  if (std::abs(numkit::trace(matrix_) - numkit::Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("DensityState: trace differs from 1 beyond 1e-10");
  }
}

DichotomicObservable::DichotomicObservable(const numkit::CMatrix& matrix)
    : matrix_(matrix) {
  require_square_finite(matrix_, "DichotomicObservable");
  if (!numkit::is_hermitian(matrix_, 1e-10)) {
    throw std::invalid_argument("DichotomicObservable: matrix is not Hermitian");
  }
  const numkit::CMatrix id = numkit::identity(matrix_.rows());
  if (numkit::op_distance(matrix_ * matrix_, id) > 1e-9) {
    throw std::invalid_argument("DichotomicObservable: matrix squared differs from identity");
  }
  projectors_[0] = 0.5 * (id + matrix_);
  projectors_[1] = 0.5 * (id - matrix_);
}

DichotomicObservable::DichotomicObservable(const numkit::CMatrix& pi0,
                                           const numkit::CMatrix& pi1) {
  require_square_finite(pi0, "DichotomicObservable");
  require_square_finite(pi1, "DichotomicObservable");
  if (pi0.rows() != pi1.rows()) {
    throw std::invalid_argument("DichotomicObservable: projector dimensions differ");
  }
  for (const auto* p : {&pi0, &pi1}) {
    if (!numkit::is_hermitian(*p, 1e-10)) {
      throw std::invalid_argument("DichotomicObservable: projector is not Hermitian");
    }
    if (numkit::op_distance(*p * *p, *p) > 1e-9) {
      throw std::invalid_argument("DichotomicObservable: projector is not idempotent");
    }
  }
  if (numkit::op_distance(pi0 + pi1, numkit::identity(pi0.rows())) > 1e-10) {
    throw std::invalid_argument("DichotomicObservable: projectors do not sum to identity");
  }
  projectors_[0] = pi0;
  projectors_[1] = pi1;
  matrix_ = pi0 - pi1;
}

const numkit::CMatrix& DichotomicObservable::projector(int a) const {
  if (a != 0 && a != 1) throw std::invalid_argument("projector: outcome must be 0 or 1");
  return projectors_[a];
}

BinaryPovm::BinaryPovm(const numkit::CMatrix& m0, const numkit::CMatrix& m1) {
  require_square_finite(m0, "BinaryPovm");
  require_square_finite(m1, "BinaryPovm");
  if (m0.rows() != m1.rows()) {
    throw std::invalid_argument("BinaryPovm: element dimensions differ");
  }
  for (const auto* m : {&m0, &m1}) {
    if (!numkit::is_hermitian(*m, 1e-10)) {
      throw std::invalid_argument("BinaryPovm: element is not Hermitian");
    }
    const auto eig = numkit::hermitian_eig(*m);
    if (eig.eigenvalues(0) < -1e-10 ||
        eig.eigenvalues(eig.eigenvalues.size() - 1) > 1.0 + 1e-10) {
      throw std::invalid_argument("BinaryPovm: element spectrum outside [0, 1]");
    }
  }
  if (numkit::op_distance(m0 + m1, numkit::identity(m0.rows())) > 1e-10) {
    throw std::invalid_argument("BinaryPovm: elements do not sum to identity");
  }
  elements_[0] = m0;
  elements_[1] = m1;
}

const numkit::CMatrix& BinaryPovm::element(int a) const {
  if (a != 0 && a != 1) throw std::invalid_argument("element: outcome must be 0 or 1");
  return elements_[a];
}

bool BinaryPovm::projective(double tol) const {
  for (const auto& m : elements_) {
    if (numkit::op_distance(m * m, m) > tol) return false;
  }
  return true;
}

BinaryInstrument::BinaryInstrument(const BinaryPovm& povm, const numkit::CMatrix& u0,
                                   const numkit::CMatrix& u1)
    : povm_(povm), unitaries_{u0, u1} {
  const Eigen::Index d = povm_.dim();
  const numkit::CMatrix id = numkit::identity(d);
  for (int a = 0; a < 2; ++a) {
    const auto& u = unitaries_[a];
    require_square_finite(u, "BinaryInstrument");
    if (u.rows() != d) {
      throw std::invalid_argument("BinaryInstrument: unitary dimension differs from POVM");
    }
    if (numkit::op_distance(u * u.adjoint(), id) > 1e-10) {
      throw std::invalid_argument("BinaryInstrument: operator is not unitary within 1e-10");
    }
    // sqrt(M) = M for idempotent M, and the eigendecomposition route would
    // amplify eigenvalue noise near zero from O(eps) to O(sqrt(eps)), so
    // float-level projectors bypass it.
    const numkit::CMatrix& m = povm_.element(a);
    const bool idempotent = numkit::op_distance(m * m, m) <= 1e-12;
    kraus_[a] = u * (idempotent ? m : numkit::psd_sqrt(m));
  }
  const numkit::CMatrix completeness =
      kraus_[0].adjoint() * kraus_[0] + kraus_[1].adjoint() * kraus_[1];
  if (numkit::op_distance(completeness, id) > 1e-9) {
    throw std::invalid_argument("BinaryInstrument: Kraus completeness fails within 1e-9");
  }
}

BinaryInstrument BinaryInstrument::projective(const DichotomicObservable& obs) {
  const numkit::CMatrix id = numkit::identity(obs.dim());
  return BinaryInstrument(BinaryPovm(obs.projector(0), obs.projector(1)), id, id);
}

const numkit::CMatrix& BinaryInstrument::unitary(int a) const {
  if (a != 0 && a != 1) throw std::invalid_argument("unitary: outcome must be 0 or 1");
  return unitaries_[a];
}

const numkit::CMatrix& BinaryInstrument::kraus(int a) const {
  if (a != 0 && a != 1) throw std::invalid_argument("kraus: outcome must be 0 or 1");
  return kraus_[a];
}

DichotomicObservable canonical_observable(int n, int x) {
  if (n < 3) throw std::invalid_argument("canonical_observable: n must be at least 3");
  if (x < 1 || x > n) {
    throw std::invalid_argument("canonical_observable: x must lie in 1..n");
  }
  const double theta = std::numbers::pi * static_cast<double>(x - 1) / n;
  const numkit::CMatrix a =
      std::cos(theta) * numkit::pauli_z() + std::sin(theta) * numkit::pauli_x();
  return DichotomicObservable(a);
}

numkit::CVector eigenstate(const DichotomicObservable& obs, int a) {
  const numkit::CMatrix& pi = obs.projector(a);
  const double rank = numkit::trace(pi).real();
  if (std::abs(rank - 1.0) > 1e-6) {
    throw std::invalid_argument("eigenstate: projector is degenerate (rank differs from 1)");
  }
  Eigen::Index best = 0;
  double best_norm = 0.0;
  for (Eigen::Index j = 0; j < pi.cols(); ++j) {
    const double nj = pi.col(j).norm();
    if (nj > best_norm) {
      best_norm = nj;
      best = j;
    }
  }
  numkit::CVector v = pi.col(best) / best_norm;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-12) {
      v *= std::conj(v(i)) / mag;
      break;
    }
  }
  const double sign = (a == 0) ? 1.0 : -1.0;
  if ((obs.matrix() * v - sign * v).norm() > 1e-8) {
    throw std::runtime_error("eigenstate: extracted vector fails the eigenvalue equation");
  }
  return v;
}

DichotomicObservable observable_from_instrument(const BinaryInstrument& inst) {
  if (!inst.povm().projective(1e-9)) {
    throw std::invalid_argument("observable_from_instrument: POVM is not projective");
  }
  return DichotomicObservable(inst.povm().element(0), inst.povm().element(1));
}

DensityState maximally_mixed(Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("maximally_mixed: dim must be positive");
  return DensityState(numkit::identity(dim) / static_cast<double>(dim));
}

DensityState random_full_rank_state(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_full_rank_state: dim must be positive");
  Prng rng = Prng::stream(seed, "quantum.fullrank");
  const numkit::CMatrix g = random_complex_gaussian(dim, dim, rng);
  const numkit::CMatrix w = g * g.adjoint();
  const double d = static_cast<double>(dim);
  // eps/d bounds the min eigenvalue from below; grow eps with dimension so
  // the > 1e-3 contract survives beyond d ~ 10.
  const double eps = std::max(1e-2, 1.2e-3 * d);
  const numkit::CMatrix rho =
      (1.0 - eps) * w / numkit::trace(w).real() + (eps / d) * numkit::identity(dim);
  return DensityState(0.5 * (rho + rho.adjoint()));
}

DensityState random_pure_state(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_pure_state: dim must be positive");
  Prng rng = Prng::stream(seed, "quantum.pure");
  const numkit::CMatrix g = random_complex_gaussian(dim, 1, rng);
  return pure_state(g.col(0));
}

DensityState pure_state(const numkit::CVector& v) {
  const double norm = v.norm();
  if (!(norm > 1e-12)) {
    throw std::invalid_argument("pure_state: vector norm too small");
  }
  const numkit::CVector u = v / norm;
  return DensityState(u * u.adjoint());
}

}  // namespace seqcert::quantum
