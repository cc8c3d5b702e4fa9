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

#include <array>
#include <cstdint>

#include "seqcert/numkit.hpp"

namespace seqcert::quantum {

/// Density operator: Hermitian, positive semidefinite, unit trace.
/// The minimum eigenvalue is computed once at construction; full_rank()
/// compares it against a fixed 1e-8 threshold.
class DensityState {
 public:
  explicit DensityState(numkit::CMatrix matrix);

  const numkit::CMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  double min_eigenvalue() const { return min_eigenvalue_; }
  bool full_rank() const { return min_eigenvalue_ > 1e-8; }

 private:
  numkit::CMatrix matrix_;
  double min_eigenvalue_;
};

/// Hermitian involution A = P0 - P1 with eigenvalues +/-1. Outcome a in
/// {0, 1} corresponds to eigenvalue (-1)^a, so outcome 0 picks the +1
/// eigenspace projector P0.
class DichotomicObservable {
 public:
  /// From a Hermitian matrix squaring to the identity; projectors are
  /// (I + A)/2 and (I - A)/2.
  explicit DichotomicObservable(const numkit::CMatrix& matrix);

  /// From a pair of orthogonal projectors summing to the identity.
  DichotomicObservable(const numkit::CMatrix& pi0, const numkit::CMatrix& pi1);

  const numkit::CMatrix& matrix() const { return matrix_; }
  const numkit::CMatrix& projector(int a) const;
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  numkit::CMatrix matrix_;
  std::array<numkit::CMatrix, 2> projectors_;
};

/// Two-outcome POVM {M_0, M_1}: Hermitian elements with spectrum in [0, 1]
/// summing to the identity.
class BinaryPovm {
 public:
  BinaryPovm(const numkit::CMatrix& m0, const numkit::CMatrix& m1);

  const numkit::CMatrix& element(int a) const;
  Eigen::Index dim() const { return elements_[0].rows(); }

  /// True iff ||M_a^2 - M_a||_F <= tol for both elements (absolute).
  bool projective(double tol = 1e-9) const;

 private:
  std::array<numkit::CMatrix, 2> elements_;
};

/// Measure-and-transform device: on outcome a the state updates by the
/// Kraus operator K_a = U_a sqrt(M_a).
class BinaryInstrument {
 public:
  BinaryInstrument(const BinaryPovm& povm, const numkit::CMatrix& u0,
                   const numkit::CMatrix& u1);

  /// Ideal projective instrument: POVM = projectors of obs, unitaries = I.
  static BinaryInstrument projective(const DichotomicObservable& obs);

  const BinaryPovm& povm() const { return povm_; }
  const numkit::CMatrix& unitary(int a) const;
  const numkit::CMatrix& kraus(int a) const;
  Eigen::Index dim() const { return povm_.dim(); }

 private:
  BinaryPovm povm_;
  std::array<numkit::CMatrix, 2> unitaries_;
  std::array<numkit::CMatrix, 2> kraus_;
};

/// Observable cos(pi(x-1)/n) sigma_z + sin(pi(x-1)/n) sigma_x for
/// x = 1..n. These lie in the X-Z plane of the Bloch sphere with equally
/// spaced axes, which makes every anticommutator proportional to the
/// identity; that is the engine behind state-independent values downstream.
DichotomicObservable canonical_observable(int n, int x);

/// Unit eigenvector of obs for outcome a (eigenvalue (-1)^a). Requires the
/// corresponding projector to be rank one. The global phase is fixed so the
/// first entry of magnitude above 1e-12 is real and positive.
numkit::CVector eigenstate(const DichotomicObservable& obs, int a);

/// M_0 - M_1 for a projective instrument; throws if the POVM is not
/// projective within 1e-9.
DichotomicObservable observable_from_instrument(const BinaryInstrument& inst);

DensityState maximally_mixed(Eigen::Index dim);

/// rho = (1 - eps) G G^dag / tr + eps I/d for a seeded complex Gaussian G.
/// The mixing weight guarantees min eigenvalue > 1e-3 at every dimension.
DensityState random_full_rank_state(Eigen::Index dim, std::uint64_t seed);

DensityState random_pure_state(Eigen::Index dim, std::uint64_t seed);

/// Rank-one state v v^dag / ||v||^2; throws on a near-zero vector.
DensityState pure_state(const numkit::CVector& v);

}  // namespace seqcert::quantum
