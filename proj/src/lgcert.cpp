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

#include "seqcert/lgcert.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "seqcert/seqsim.hpp"

namespace seqcert::lgcert {

namespace {

constexpr double kPi = std::numbers::pi;

void require_n(int n, int minimum, const char* who) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(who) + ": needs at least " +
                                std::to_string(minimum) + " observables");
  }
}

void require_uniform_dim(const std::vector<quantum::DichotomicObservable>& observables,
                         const quantum::DensityState& state, const char* who) {
  for (const auto& obs : observables) {
    if (obs.dim() != state.dim()) {
      throw std::invalid_argument(std::string(who) + ": observable dimension differs from state");
    }
  }
}

/// The functional as an operator: sum of symmetrized products
/// (A_x A_{x+1} + A_{x+1} A_x)/2 minus the wrap-around term.
numkit::CMatrix lg_operator(const std::vector<quantum::DichotomicObservable>& observables) {
  const int n = static_cast<int>(observables.size());
  numkit::CMatrix l = numkit::zeros(observables[0].dim(), observables[0].dim());
  for (int x = 1; x < n; ++x) {
    l += 0.5 * numkit::anticommutator(observables[static_cast<std::size_t>(x - 1)].matrix(),
                                      observables[static_cast<std::size_t>(x)].matrix());
  }
  l -= 0.5 * numkit::anticommutator(observables[static_cast<std::size_t>(n - 1)].matrix(),
                                    observables[0].matrix());
  return l;
}

}  // namespace

double classical_bound(int n) {
  require_n(n, 3, "classical_bound");
  return static_cast<double>(n - 2);
}

double quantum_bound(int n) {
  require_n(n, 3, "quantum_bound");
  return static_cast<double>(n) * std::cos(kPi / n);
}

long classical_bound_enumerated(int n) {
  if (n < 3 || n > 24) {
    throw std::invalid_argument("classical_bound_enumerated: n must lie in 3..24");
  }
  long best = -2L * n;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    // Bit x-1 of mask encodes the deterministic value a_x = +/-1.
    long value = 0;
    for (int x = 1; x < n; ++x) {
      const bool same = (((mask >> (x - 1)) ^ (mask >> x)) & 1u) == 0;
      value += same ? 1 : -1;
    }
    const bool wrap_same = (((mask >> (n - 1)) ^ mask) & 1u) == 0;
    value -= wrap_same ? 1 : -1;
    best = std::max(best, value);
  }
  return best;
}

double two_time_correlation(const quantum::DensityState& state,
                            const std::vector<quantum::DichotomicObservable>& observables,
                            int x, int y) {
  const int n = static_cast<int>(observables.size());
  if (x < 1 || x > n || y < 1 || y > n) {
    throw std::invalid_argument("two_time_correlation: label out of range");
  }
  require_uniform_dim(observables, state, "two_time_correlation");

  const auto dist = seqsim::simulate_projective(state, observables, {x, y});
  double operational = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double sign = ((a + b) % 2 == 0) ? 1.0 : -1.0;
      operational += sign * dist.probability({a, b});
    }
  }

  const numkit::CMatrix sym =
      0.5 * numkit::anticommutator(observables[static_cast<std::size_t>(x - 1)].matrix(),
                                   observables[static_cast<std::size_t>(y - 1)].matrix());
  const double algebraic = numkit::trace(sym * state.matrix()).real();
  if (std::abs(operational - algebraic) > 1e-10) {
    throw std::logic_error("two_time_correlation: sequence route and operator route disagree");
  }
  return operational;
}

double multi_time_correlation(const quantum::DensityState& state,
                              const std::vector<quantum::DichotomicObservable>& observables,
                              const std::vector<int>& inputs) {
  const auto dist = seqsim::simulate_projective(state, observables, inputs);
  double value = 0.0;
  for (std::size_t idx = 0; idx < dist.probabilities().size(); ++idx) {
    const double sign = (std::popcount(idx) % 2 == 0) ? 1.0 : -1.0;
    value += sign * dist.probabilities()[idx];
  }
  return value;
}

LgValue lg_value(const quantum::DensityState& state,
                 const std::vector<quantum::DichotomicObservable>& observables) {
  const int n = static_cast<int>(observables.size());
  require_n(n, 3, "lg_value");
  LgValue result;
  result.n = n;
  result.classical_bound = classical_bound(n);
  result.quantum_bound = quantum_bound(n);
  for (int x = 1; x < n; ++x) {
    result.value += two_time_correlation(state, observables, x, x + 1);
  }
  result.value -= two_time_correlation(state, observables, n, 1);
  return result;
}

double randomness_functional(const quantum::DensityState& state,
                             const std::vector<quantum::DichotomicObservable>& observables,
                             int i, int sequence_length) {
  const int n = static_cast<int>(observables.size());
  require_n(n, 3, "randomness_functional");
  if (n % 2 != 0) {
    throw std::invalid_argument("randomness_functional: n must be even");
  }
  if (i < 2 || i > n / 2) {
    throw std::invalid_argument("randomness_functional: i must lie in 2..n/2");
  }
  if (sequence_length < 1) {
    throw std::invalid_argument("randomness_functional: sequence length must be positive");
  }
  std::vector<int> inputs(static_cast<std::size_t>(sequence_length));
  for (int k = 0; k < sequence_length; ++k) {
    inputs[static_cast<std::size_t>(k)] = (k % 2 == 0) ? i : i + n / 2;
  }
  const double correlator = multi_time_correlation(state, observables, inputs);
  return lg_value(state, observables).value - std::abs(correlator);
}

std::vector<std::pair<double, double>> sos_coefficients(int n) {
  require_n(n, 3, "sos_coefficients");
  std::vector<std::pair<double, double>> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n - 2));
  for (int i = 1; i <= n - 2; ++i) {
    const double denom = std::sin(kPi * (i + 1) / n);
    coeffs.emplace_back(std::sin(kPi * i / n) / denom, std::sin(kPi / n) / denom);
  }
  return coeffs;
}

SosCertificate sos_certificate(const std::vector<quantum::DichotomicObservable>& observables,
                               const quantum::DensityState& state) {
  const int n = static_cast<int>(observables.size());
  require_n(n, 3, "sos_certificate");
  require_uniform_dim(observables, state, "sos_certificate");

  SosCertificate cert;
  cert.n = n;
  const auto coeffs = sos_coefficients(n);
  const Eigen::Index d = state.dim();
  numkit::CMatrix sos_sum = numkit::zeros(d, d);
  for (int i = 1; i <= n - 2; ++i) {
    const auto [alpha, beta] = coeffs[static_cast<std::size_t>(i - 1)];
    cert.alphas.push_back(alpha);
    cert.betas.push_back(beta);
    const numkit::CMatrix p = observables[static_cast<std::size_t>(i - 1)].matrix() -
                              alpha * observables[static_cast<std::size_t>(i)].matrix() +
                              beta * observables[static_cast<std::size_t>(n - 1)].matrix();
    const numkit::CMatrix gram = p.adjoint() * p;
    sos_sum += gram / (2.0 * alpha);
    cert.expectation_residuals.push_back(numkit::trace(gram * state.matrix()).real());
    cert.operators.push_back(p);
  }
  const numkit::CMatrix target =
      quantum_bound(n) * numkit::identity(d) - lg_operator(observables);
  cert.identity_residual = numkit::op_distance(sos_sum, target);
  return cert;
}

double trig_identity_check(int n) {
  require_n(n, 3, "trig_identity_check");
  const auto coeffs = sos_coefficients(n);
  double sum = 0.0;
  for (const auto& [alpha, beta] : coeffs) {
    sum += 1.0 / alpha + alpha + beta * beta / alpha;
  }
  return std::abs(sum - 2.0 * static_cast<double>(n) * std::cos(kPi / n));
}

SelfTestResult extract_certification_unitary(
    const std::vector<quantum::DichotomicObservable>& observables,
    const quantum::DensityState& state, double tol) {
  const int n = static_cast<int>(observables.size());
  require_n(n, 3, "extract_certification_unitary");
  require_uniform_dim(observables, state, "extract_certification_unitary");
  const Eigen::Index d = state.dim();
  if (d % 2 != 0) {
    throw std::invalid_argument("extract_certification_unitary: dimension must be even");
  }
  if (!state.full_rank()) {
    throw std::invalid_argument("extract_certification_unitary: reference state must be full-rank");
  }

  const auto cert = sos_certificate(observables, state);
  for (double r : cert.expectation_residuals) {
    if (!(r < tol)) {
      throw std::invalid_argument(
          "extract_certification_unitary: expectation residuals exceed the maximizer tolerance");
    }
  }

  // Vanishing residuals against a full-rank state force the recursion that
  // pins A_2 and A_n; the rotated pair below is then a Hermitian
  // involution pair with vanishing anticommutator.
  const numkit::CMatrix& a2 = observables[1].matrix();
  const numkit::CMatrix& an = observables[static_cast<std::size_t>(n - 1)].matrix();
  const numkit::CMatrix z_hat = (a2 - an) / (2.0 * std::cos(kPi / n));
  const numkit::CMatrix x_hat = (a2 + an) / (2.0 * std::sin(kPi / n));

  const numkit::CMatrix id = numkit::identity(d);
  SelfTestResult result;
  result.anticommutator_check =
      numkit::frobenius_norm(numkit::anticommutator(z_hat, x_hat));
  const double involution_defect =
      std::max(numkit::op_distance(z_hat * z_hat, id),
               numkit::op_distance(x_hat * x_hat, id));
  if (!(involution_defect < tol) || !(result.anticommutator_check < tol)) {
    throw std::invalid_argument(
        "extract_certification_unitary: reconstructed pair fails involution or anticommutation");
  }
  for (const auto& obs : observables) {
    result.traceless_check =
        std::max(result.traceless_check, std::abs(numkit::trace(obs.matrix())));
  }

  // Orthonormal basis of the +1 eigenspace of Z_hat: ordered Gram-Schmidt
  // over the columns of the spectral projector, with a second
  // orthogonalization pass for numerical orthonormality.
  const numkit::CMatrix plus_projector = 0.5 * (id + z_hat);
  const Eigen::Index m = d / 2;
  std::vector<numkit::CVector> basis;
  for (Eigen::Index j = 0; j < d; ++j) {
    numkit::CVector v = plus_projector.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : basis) v -= u.dot(v) * u;
    }
    const double norm = v.norm();
    if (norm > 1e-6) basis.push_back(v / norm);
  }
  if (static_cast<Eigen::Index>(basis.size()) != m) {
    throw std::runtime_error(
        "extract_certification_unitary: +1 eigenspace dimension differs from half the space");
  }

  // Row k of U is u_k^dag and row m+k is (X_hat u_k)^dag, so U carries
  // Z_hat to sigma_z (x) I and X_hat to sigma_x (x) I.
  numkit::CMatrix unitary(d, d);
  for (Eigen::Index k = 0; k < m; ++k) {
    const numkit::CVector w = x_hat * basis[static_cast<std::size_t>(k)];
    unitary.row(k) = basis[static_cast<std::size_t>(k)].adjoint();
    unitary.row(m + k) = w.adjoint();
  }
  if (numkit::op_distance(unitary * unitary.adjoint(), id) > 1e-10) {
    throw std::runtime_error("extract_certification_unitary: constructed map is not unitary");
  }

  const numkit::CMatrix id_aux = numkit::identity(m);
  for (int i = 1; i <= n; ++i) {
    const numkit::CMatrix mapped =
        unitary * observables[static_cast<std::size_t>(i - 1)].matrix() * unitary.adjoint();
    const numkit::CMatrix reference =
        numkit::tensor(quantum::canonical_observable(n, i).matrix(), id_aux);
    result.max_deviation =
        std::max(result.max_deviation, numkit::op_distance(mapped, reference));
  }
  result.unitary = unitary;
  return result;
}

}  // namespace seqcert::lgcert
