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

#include <utility>
#include <vector>

#include "seqcert/quantum.hpp"

namespace seqcert::lgcert {

struct LgValue {
  int n = 0;
  double value = 0.0;
  double classical_bound = 0.0;
  double quantum_bound = 0.0;
};

/// Largest value reachable by memoryless classical models: n - 2.
double classical_bound(int n);

/// Largest quantum value: n cos(pi/n).
double quantum_bound(int n);

/// Brute-force maximum of the cyclic functional over all 2^n deterministic
/// +/-1 assignments; the independent oracle for classical_bound. 3 <= n <= 24.
long classical_bound_enumerated(int n);

/// Correlation of two sequential outcomes, sum (-1)^(a1+a2) p(a1,a2|x,y).
/// Evaluated operationally from the simulated sequence and cross-checked
/// against the algebraic form tr((A_x A_y + A_y A_x) rho)/2; the two routes
/// must agree within 1e-10 or the call aborts.
double two_time_correlation(const quantum::DensityState& state,
                            const std::vector<quantum::DichotomicObservable>& observables,
                            int x, int y);

/// sum over outcome strings of (-1)^(a_1+...+a_N) p(a | x).
double multi_time_correlation(const quantum::DensityState& state,
                              const std::vector<quantum::DichotomicObservable>& observables,
                              const std::vector<int>& inputs);

/// The cyclic functional sum_{x=1}^{n-1} C_{x,x+1} - C_{n,1} with both
/// bounds attached. Requires n >= 3 observables.
LgValue lg_value(const quantum::DensityState& state,
                 const std::vector<quantum::DichotomicObservable>& observables);

/// Randomness functional R_i = L - |C_i,i+n/2,i,...| for even n, an
/// alternating input sequence of length sequence_length starting at
/// i in 2..n/2.
double randomness_functional(const quantum::DensityState& state,
                             const std::vector<quantum::DichotomicObservable>& observables,
                             int i, int sequence_length);

/// (alpha_i, beta_i) = (sin(pi i/n), sin(pi/n)) / sin(pi(i+1)/n) for
/// i = 1..n-2.
std::vector<std::pair<double, double>> sos_coefficients(int n);

struct SosCertificate {
  int n = 0;
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<numkit::CMatrix> operators;
  // Frobenius distance between sum_i P_i^dag P_i / (2 alpha_i) and
  // beta_Q(n) I - L_hat; an operator identity for any involutions.
  double identity_residual = 0.0;
  // tr(P_i^dag P_i rho) per i; zero exactly at a maximal violation.
  std::vector<double> expectation_residuals;
};

/// Builds P_i = A_i - alpha_i A_{i+1} + beta_i A_n and evaluates both the
/// operator identity and the per-operator expectation residuals on the
/// given state.
SosCertificate sos_certificate(const std::vector<quantum::DichotomicObservable>& observables,
                               const quantum::DensityState& state);

/// |sum_{i=1}^{n-2} (1/alpha_i + alpha_i + beta_i^2/alpha_i) - 2n cos(pi/n)|.
double trig_identity_check(int n);

struct SelfTestResult {
  numkit::CMatrix unitary;
  // max_i || U A_i U^dag - A~_i (x) I ||_F over all n observables.
  double max_deviation = 0.0;
  // max_i |tr A_i|; vanishes at any maximal violation.
  double traceless_check = 0.0;
  // || Z_hat X_hat + X_hat Z_hat ||_F for the reconstructed pair.
  double anticommutator_check = 0.0;
};

/// Constructive self-test: from observables maximally violating the
/// functional (certified by expectation residuals below tol on a full-rank
/// state), builds the unitary carrying every A_i to the canonical qubit
/// observable tensored with an identity on the auxiliary factor.
SelfTestResult extract_certification_unitary(
    const std::vector<quantum::DichotomicObservable>& observables,
    const quantum::DensityState& state, double tol = 1e-7);

}  // namespace seqcert::lgcert
