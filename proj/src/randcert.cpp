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

#include "seqcert/randcert.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace seqcert::randcert {

namespace {

void validate_alternating(int n, const std::vector<int>& inputs, const char* who) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument(std::string(who) + ": n must be even and at least 4");
  }
  if (inputs.empty()) {
    throw std::invalid_argument(std::string(who) + ": input sequence must be nonempty");
  }
  const int i = inputs.front();
  if (i < 2 || i > n / 2) {
    throw std::invalid_argument(std::string(who) + ": first input must lie in 2..n/2");
  }
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const int expected = (k % 2 == 0) ? i : i + n / 2;
    if (inputs[k] != expected) {
      throw std::invalid_argument(std::string(who) +
                                  ": inputs must alternate between i and i+n/2");
    }
  }
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const numkit::CMatrix& h) {
  const auto eig = numkit::hermitian_eig(h);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    sum += std::abs(eig.eigenvalues(k));
  }
  return sum;
}

}  // namespace

std::string method_name(Method method) {
  return method == Method::closed_form ? "closed_form" : "oracle";
}

double min_entropy(double p_guess) {
  if (!(p_guess > 0.0) || p_guess > 1.0) {
    throw std::invalid_argument("min_entropy: p_guess must lie in (0, 1]");
  }
  return -std::log2(p_guess);
}

double overlap_factor(int n, const std::vector<int>& inputs,
                      const std::vector<int>& outcomes) {
  if (inputs.empty()) throw std::invalid_argument("overlap_factor: empty sequence");
  if (inputs.size() != outcomes.size()) {
    throw std::invalid_argument("overlap_factor: inputs and outcomes differ in length");
  }
  std::vector<numkit::CVector> states;
  states.reserve(inputs.size());
  for (std::size_t l = 0; l < inputs.size(); ++l) {
    states.push_back(
        quantum::eigenstate(quantum::canonical_observable(n, inputs[l]), outcomes[l]));
  }
  double product = 1.0;
  for (std::size_t l = 0; l + 1 < states.size(); ++l) {
    const double overlap = std::abs(states[l].dot(states[l + 1]));
    product *= overlap * overlap;
  }
  return product;
}

std::vector<int> alternating_inputs(int n, int i, int sequence_length) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("alternating_inputs: n must be even and at least 4");
  }
  if (i < 2 || i > n / 2) {
    throw std::invalid_argument("alternating_inputs: i must lie in 2..n/2");
  }
  if (sequence_length < 1) {
    throw std::invalid_argument("alternating_inputs: length must be positive");
  }
  std::vector<int> inputs(static_cast<std::size_t>(sequence_length));
  for (int k = 0; k < sequence_length; ++k) {
    inputs[static_cast<std::size_t>(k)] = (k % 2 == 0) ? i : i + n / 2;
  }
  return inputs;
}

RandomnessReport guessing_probability_certified(int n, int sequence_length) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument(
        "guessing_probability_certified: closed form requires even n >= 4");
  }
  if (sequence_length < 1 || sequence_length > 1000) {
    throw std::invalid_argument("guessing_probability_certified: length must lie in 1..1000");
  }
  RandomnessReport report;
  report.sequence_length = sequence_length;
  report.method = Method::closed_form;
  report.p_guess = std::ldexp(1.0, -(sequence_length - 1));
  report.min_entropy_bits = min_entropy(report.p_guess);
  return report;
}

AdversaryScenario::AdversaryScenario(numkit::CVector joint_state, Eigen::Index dim_a,
                                     Eigen::Index dim_e, int n, std::vector<int> inputs)
    : joint_state_(std::move(joint_state)),
      dim_a_(dim_a),
      dim_e_(dim_e),
      n_(n),
      inputs_(std::move(inputs)) {
  if (dim_a_ < 2 || dim_a_ % 2 != 0) {
    throw std::invalid_argument("AdversaryScenario: dim_a must be even (certified qubit x aux)");
  }
  if (dim_e_ < 1) throw std::invalid_argument("AdversaryScenario: dim_e must be positive");
  if (joint_state_.size() != dim_a_ * dim_e_) {
    throw std::invalid_argument("AdversaryScenario: state length differs from dim_a * dim_e");
  }
  if (!joint_state_.allFinite()) {
    throw std::invalid_argument("AdversaryScenario: state has non-finite entries");
  }
  if (std::abs(joint_state_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("AdversaryScenario: state must be normalized within 1e-12");
  }
  validate_alternating(n_, inputs_, "AdversaryScenario");
}

numkit::CMatrix AdversaryScenario::reduced_state_a() const {
  // psi indexed as i_A * dim_e + j_E; rows of the reshape live on A.
  numkit::CMatrix m(dim_a_, dim_e_);
  for (Eigen::Index i = 0; i < dim_a_; ++i) {
    for (Eigen::Index j = 0; j < dim_e_; ++j) {
      m(i, j) = joint_state_(i * dim_e_ + j);
    }
  }
  return m * m.adjoint();
}

bool AdversaryScenario::reduced_full_rank() const {
  const auto eig = numkit::hermitian_eig(reduced_state_a());
  return eig.eigenvalues(0) > 1e-8;
}

RandomnessReport eve_oracle(const AdversaryScenario& scenario) {
  const int length = scenario.sequence_length();
  if (length > 8 || scenario.dim_e() > 8) {
    throw std::invalid_argument("eve_oracle: dimension cap exceeded (length <= 8, dim_e <= 8)");
  }
  const Eigen::Index dim_a = scenario.dim_a();
  const Eigen::Index dim_e = scenario.dim_e();
  const Eigen::Index aux = dim_a / 2;
  const numkit::CMatrix id_aux = numkit::identity(aux);

  // Certified projectors: canonical qubit projectors tensored with the
  // auxiliary identity (the post-self-test picture).
  std::array<std::vector<numkit::CMatrix>, 2> projectors;
  for (int a = 0; a < 2; ++a) {
    projectors[static_cast<std::size_t>(a)].reserve(static_cast<std::size_t>(length));
    for (int k = 0; k < length; ++k) {
      const auto obs = quantum::canonical_observable(
          scenario.n(), scenario.inputs()[static_cast<std::size_t>(k)]);
      projectors[static_cast<std::size_t>(a)].push_back(
          numkit::tensor(obs.projector(a), id_aux));
    }
  }

  // Reshape psi to a dim_a x dim_e matrix so that (B (x) I_E) psi = B M.
  numkit::CMatrix m(dim_a, dim_e);
  for (Eigen::Index i = 0; i < dim_a; ++i) {
    for (Eigen::Index j = 0; j < dim_e; ++j) {
      m(i, j) = scenario.joint_state()(i * dim_e + j);
    }
  }

  // Eve's unnormalized conditional states, pooled by the first outcome.
  // For alternating anticommuting measurements the conditional state is
  // the same matrix for every string in a pool; that constancy is exactly
  // what makes pooling optimal, so it is asserted rather than assumed.
  std::array<numkit::CMatrix, 2> pooled = {numkit::zeros(dim_e, dim_e),
                                           numkit::zeros(dim_e, dim_e)};
  std::array<numkit::CMatrix, 2> first_in_class;
  std::array<bool, 2> seen = {false, false};
  double total_probability = 0.0;
  double class_deviation = 0.0;
  const std::uint32_t count = std::uint32_t{1} << length;
  for (std::uint32_t string_index = 0; string_index < count; ++string_index) {
    numkit::CMatrix chain = m;
    for (int k = 0; k < length; ++k) {
      const int a = static_cast<int>((string_index >> (length - 1 - k)) & 1u);
      chain = projectors[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] * chain;
    }
    // sigma_j j' = sum_i chain_ij conj(chain_ij'), the E-side partial trace.
    const numkit::CMatrix sigma = (chain.adjoint() * chain).transpose();
    total_probability += numkit::trace(sigma).real();
    const std::size_t first = (string_index >> (length - 1)) & 1u;
    if (!seen[first]) {
      first_in_class[first] = sigma;
      seen[first] = true;
    } else {
      class_deviation =
          std::max(class_deviation, numkit::op_distance(sigma, first_in_class[first]));
    }
    pooled[first] += sigma;
  }
  if (std::abs(total_probability - 1.0) > 1e-10) {
    throw std::logic_error("eve_oracle: conditional states do not sum to a normalized ensemble");
  }
  if (class_deviation > 1e-9) {
    throw std::logic_error(
        "eve_oracle: conditional states vary within a first-outcome class; "
        "the Helstrom reduction does not apply");
  }

  // Optimal guess: Eve picks one string per class, so her success is a
  // binary discrimination of the class representatives. In pooled form
  // p_guess = (tr(s0 + s1) + ||s0 - s1||_1) / 2^length with tr(s0+s1) = 1.
  const double helstrom =
      0.5 * (total_probability + trace_norm(pooled[0] - pooled[1]));
  RandomnessReport report;
  report.sequence_length = length;
  report.method = Method::oracle;
  // The Helstrom probability is mathematically <= 1 but floating-point
  // rounding can spill a few ulps above it; clamp so min_entropy stays legal.
  report.p_guess =
      std::min(helstrom * std::ldexp(1.0, -(length - 1)), 1.0);
  report.min_entropy_bits = min_entropy(report.p_guess);
  return report;
}

AdversaryScenario purified_scenario(const quantum::DensityState& rho,
                                    Eigen::Index dim_e, int n,
                                    std::vector<int> inputs) {
  const Eigen::Index dim_a = rho.dim();
  const auto eig = numkit::hermitian_eig(rho.matrix());
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < dim_a; ++k) {
    if (eig.eigenvalues(k) > 1e-14) ++rank;
  }
  if (dim_e < rank) {
    throw std::invalid_argument("purified_scenario: dim_e too small to purify the state");
  }
  numkit::CVector psi = numkit::CVector::Zero(dim_a * dim_e);
  Eigen::Index slot = 0;
  for (Eigen::Index k = 0; k < dim_a; ++k) {
    const double lambda = eig.eigenvalues(k);
    if (lambda <= 1e-14) continue;
    const double weight = std::sqrt(lambda);
    for (Eigen::Index i = 0; i < dim_a; ++i) {
      psi(i * dim_e + slot) += weight * eig.eigenvectors(i, k);
    }
    ++slot;
  }
  psi /= psi.norm();
  return AdversaryScenario(std::move(psi), dim_a, dim_e, n, std::move(inputs));
}

}  // namespace seqcert::randcert
