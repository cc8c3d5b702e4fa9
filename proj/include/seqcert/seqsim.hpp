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
#include <map>
#include <vector>

#include "seqcert/quantum.hpp"

namespace seqcert::seqsim {

/// Joint outcome distribution of an N-step measurement sequence, stored
/// densely over all 2^N binary outcome strings. The string (a_1, ..., a_N)
/// maps to index sum_k a_k 2^(N-k), i.e. a_1 is the most significant bit.
class SequenceDistribution {
 public:
  static constexpr int kMaxLength = 20;

  SequenceDistribution(std::vector<int> inputs, std::vector<double> probabilities);

  int length() const { return static_cast<int>(inputs_.size()); }
  const std::vector<int>& inputs() const { return inputs_; }
  const std::vector<double>& probabilities() const { return probabilities_; }

  double probability(std::uint32_t index) const;
  double probability(const std::vector<int>& outcomes) const;

  /// Probability that the measurement at 1-based position k gave outcome a,
  /// summed over all other positions.
  double marginal(int position, int outcome) const;

  static std::uint32_t index_of(const std::vector<int>& outcomes);

 private:
  std::vector<int> inputs_;
  std::vector<double> probabilities_;
};

/// Sequential statistics under the projective update rho -> P rho P. Input
/// labels are 1-based indices into the observable list.
SequenceDistribution simulate_projective(
    const quantum::DensityState& state,
    const std::vector<quantum::DichotomicObservable>& observables,
    const std::vector<int>& inputs);

/// Sequential statistics under the general update rho -> K_a rho K_a^dag
/// with K_a = U_a sqrt(M_a).
SequenceDistribution simulate_instrument(
    const quantum::DensityState& state,
    const std::vector<quantum::BinaryInstrument>& instruments,
    const std::vector<int>& inputs);

struct ZenoReport {
  double max_violation = 0.0;
  bool passes = false;
  // Repeatability only forces projectivity when the probe state is
  // full-rank; callers should treat a false here as weakening the verdict.
  bool state_full_rank = false;
};

/// Repeatability check: measuring the same instrument twice must reproduce
/// the first outcome with certainty. Reports the larger of the two
/// equivalent deviations max_{a != b} p(a,b) and max_a |p(a,a) - p(a)|;
/// passes iff it does not exceed 1e-9.
ZenoReport check_zeno(const quantum::DensityState& state,
                      const quantum::BinaryInstrument& instrument);

/// True iff ||M_a^2 - M_a||_F <= tol for both POVM elements.
bool is_projective(const quantum::BinaryPovm& povm, double tol = 1e-9);

/// Single-measurement outcome distributions keyed by input label.
using SingleShotMarginals = std::map<int, std::array<double, 2>>;

SingleShotMarginals single_shot_marginals(
    const quantum::DensityState& state,
    const std::vector<quantum::DichotomicObservable>& observables,
    const std::vector<int>& labels);

struct NsitReport {
  double max_deviation = 0.0;
  // One entry per sequence position (1-based position k at index k-1).
  std::vector<double> position_deviation;
};

/// No-signalling-in-time diagnostic: compares each position's marginal in
/// the sequence against the single-shot distribution of the same input.
/// Quantum sequences violate this in general, so the result is reported,
/// never gated on.
NsitReport check_nsit(const SequenceDistribution& dist,
                      const SingleShotMarginals& marginals);

}  // namespace seqcert::seqsim
