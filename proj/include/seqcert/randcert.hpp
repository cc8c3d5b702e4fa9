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

#include <string>
#include <vector>

#include "seqcert/quantum.hpp"

namespace seqcert::randcert {

enum class Method { closed_form, oracle };

std::string method_name(Method method);

struct RandomnessReport {
  double p_guess = 1.0;
  double min_entropy_bits = 0.0;
  int sequence_length = 0;
  Method method = Method::closed_form;
};

/// -log2(p_guess); requires 0 < p_guess <= 1.
double min_entropy(double p_guess);

/// Product of squared eigenstate overlaps along a measurement sequence of
/// canonical observables: prod_l |<e_{x_l,a_l}|e_{x_{l+1},a_{l+1}}>|^2.
/// An empty product (single measurement) is 1.
double overlap_factor(int n, const std::vector<int>& inputs,
                      const std::vector<int>& outcomes);

/// Alternating input sequence (i, i+n/2, i, ...) of the given length.
std::vector<int> alternating_inputs(int n, int i, int sequence_length);

/// Closed-form certified guessing probability 1/2^(N-1) for even n >= 4.
/// Odd n is rejected: no closed form is established for it.
RandomnessReport guessing_probability_certified(int n, int sequence_length);

/// Eavesdropper's side of the protocol: a pure joint state on A x E, an
/// even-dimensional certified system A = C^2 (x) aux, and an alternating
/// input sequence (i, i+n/2) on canonical observables.
class AdversaryScenario {
 public:
  AdversaryScenario(numkit::CVector joint_state, Eigen::Index dim_a,
                    Eigen::Index dim_e, int n, std::vector<int> inputs);

  const numkit::CVector& joint_state() const { return joint_state_; }
  Eigen::Index dim_a() const { return dim_a_; }
  Eigen::Index dim_e() const { return dim_e_; }
  int n() const { return n_; }
  const std::vector<int>& inputs() const { return inputs_; }
  int sequence_length() const { return static_cast<int>(inputs_.size()); }

  /// Partial trace of the joint state over E.
  numkit::CMatrix reduced_state_a() const;
  bool reduced_full_rank() const;

 private:
  numkit::CVector joint_state_;
  Eigen::Index dim_a_;
  Eigen::Index dim_e_;
  int n_;
  std::vector<int> inputs_;
};

/// Brute-force adversary: enumerates Eve's unnormalized conditional states
/// over all 2^N outcome strings and evaluates her optimal guess exactly.
/// For alternating sequences her states depend only on the first outcome,
/// which reduces the optimization to a two-state Helstrom discrimination;
/// the reduction's premise is verified numerically on every call.
/// Caps: dim_e <= 8, sequence length <= 8.
RandomnessReport eve_oracle(const AdversaryScenario& scenario);

/// Canonical purification of rho held by Eve: psi = sum_k sqrt(l_k) v_k (x) k
/// over the eigenpairs of rho. Requires dim_e >= the number of eigenvalues
/// above 1e-14.
AdversaryScenario purified_scenario(const quantum::DensityState& rho,
                                    Eigen::Index dim_e, int n,
                                    std::vector<int> inputs);

}  // namespace seqcert::randcert
