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

#include "seqcert/seqsim.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace seqcert::seqsim {

namespace {

void validate_inputs(const std::vector<int>& inputs, std::size_t n_choices) {
  if (inputs.empty()) throw std::invalid_argument("simulate: empty input sequence");
  if (inputs.size() > static_cast<std::size_t>(SequenceDistribution::kMaxLength)) {
    throw std::invalid_argument("simulate: sequence longer than the supported cap of 20");
  }
  for (int x : inputs) {
    if (x < 1 || static_cast<std::size_t>(x) > n_choices) {
      throw std::invalid_argument("simulate: input label out of range");
    }
  }
}

// Depth-first branch evaluation: shared prefixes of the outcome tree are
// propagated once, so the total work is O(2^N) matrix products instead of
// O(N 2^N). apply(x, a, rho) returns the unnormalized post-measurement
// state; the leaf probability is its trace.
std::vector<double> branch_probabilities(
    const numkit::CMatrix& rho0, const std::vector<int>& inputs,
    const std::function<numkit::CMatrix(int, int, const numkit::CMatrix&)>& apply) {
  const int n_steps = static_cast<int>(inputs.size());
  std::vector<double> probs(std::size_t{1} << n_steps, 0.0);
  std::function<void(int, std::uint32_t, const numkit::CMatrix&)> descend =
      [&](int depth, std::uint32_t prefix, const numkit::CMatrix& rho) {
        if (depth == n_steps) {
          probs[prefix] = numkit::trace(rho).real();
          return;
        }
        for (int a = 0; a < 2; ++a) {
          descend(depth + 1, (prefix << 1) | static_cast<std::uint32_t>(a),
                  apply(inputs[static_cast<std::size_t>(depth)], a, rho));
        }
      };
  descend(0, 0, rho0);
  return probs;
}

}  // namespace

SequenceDistribution::SequenceDistribution(std::vector<int> inputs,
                                           std::vector<double> probabilities)
    : inputs_(std::move(inputs)), probabilities_(std::move(probabilities)) {
  if (inputs_.empty()) {
    throw std::invalid_argument("SequenceDistribution: empty input sequence");
  }
  if (inputs_.size() > static_cast<std::size_t>(kMaxLength)) {
    throw std::invalid_argument("SequenceDistribution: sequence longer than cap of 20");
  }
  if (probabilities_.size() != (std::size_t{1} << inputs_.size())) {
    throw std::invalid_argument("SequenceDistribution: need one probability per outcome string");
  }
  double sum = 0.0;
  for (double p : probabilities_) {
    if (!std::isfinite(p) || p < -1e-12 || p > 1.0 + 1e-12) {
      throw std::invalid_argument("SequenceDistribution: probability outside [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::invalid_argument("SequenceDistribution: probabilities do not sum to 1");
  }
}

double SequenceDistribution::probability(std::uint32_t index) const {
  if (index >= probabilities_.size()) {
    throw std::invalid_argument("probability: index out of range");
  }
  return probabilities_[index];
}

std::uint32_t SequenceDistribution::index_of(const std::vector<int>& outcomes) {
  if (outcomes.empty() || outcomes.size() > static_cast<std::size_t>(kMaxLength)) {
    throw std::invalid_argument("index_of: invalid outcome string length");
  }
  std::uint32_t index = 0;
  for (int a : outcomes) {
    if (a != 0 && a != 1) throw std::invalid_argument("index_of: outcomes must be 0 or 1");
    index = (index << 1) | static_cast<std::uint32_t>(a);
  }
  return index;
}

double SequenceDistribution::probability(const std::vector<int>& outcomes) const {
  if (outcomes.size() != inputs_.size()) {
    throw std::invalid_argument("probability: outcome string length differs from sequence");
  }
  return probabilities_[index_of(outcomes)];
}

double SequenceDistribution::marginal(int position, int outcome) const {
  const int n_steps = length();
  if (position < 1 || position > n_steps) {
    throw std::invalid_argument("marginal: position out of range");
  }
  if (outcome != 0 && outcome != 1) {
    throw std::invalid_argument("marginal: outcome must be 0 or 1");
  }
  const int bit = n_steps - position;
  double sum = 0.0;
  for (std::size_t idx = 0; idx < probabilities_.size(); ++idx) {
    if (static_cast<int>((idx >> bit) & 1u) == outcome) sum += probabilities_[idx];
  }
  return sum;
}

SequenceDistribution simulate_projective(
    const quantum::DensityState& state,
    const std::vector<quantum::DichotomicObservable>& observables,
    const std::vector<int>& inputs) {
  validate_inputs(inputs, observables.size());
  for (const auto& obs : observables) {
    if (obs.dim() != state.dim()) {
      throw std::invalid_argument("simulate_projective: observable dimension differs from state");
    }
  }
  auto probs = branch_probabilities(
      state.matrix(), inputs, [&](int x, int a, const numkit::CMatrix& rho) {
        const numkit::CMatrix& pi = observables[static_cast<std::size_t>(x - 1)].projector(a);
        return numkit::CMatrix(pi * rho * pi);
      });
  return SequenceDistribution(inputs, std::move(probs));
}

SequenceDistribution simulate_instrument(
    const quantum::DensityState& state,
    const std::vector<quantum::BinaryInstrument>& instruments,
    const std::vector<int>& inputs) {
  validate_inputs(inputs, instruments.size());
  for (const auto& inst : instruments) {
    if (inst.dim() != state.dim()) {
      throw std::invalid_argument("simulate_instrument: instrument dimension differs from state");
    }
  }
  auto probs = branch_probabilities(
      state.matrix(), inputs, [&](int x, int a, const numkit::CMatrix& rho) {
        const numkit::CMatrix& k = instruments[static_cast<std::size_t>(x - 1)].kraus(a);
        return numkit::CMatrix(k * rho * k.adjoint());
      });
  return SequenceDistribution(inputs, std::move(probs));
}

ZenoReport check_zeno(const quantum::DensityState& state,
                      const quantum::BinaryInstrument& instrument) {
  const auto dist = simulate_instrument(state, {instrument}, {1, 1});
  ZenoReport report;
  report.state_full_rank = state.full_rank();
  double repeat_flip = 0.0;
  double repeat_drift = 0.0;
  for (int a = 0; a < 2; ++a) {
    const double p_single =
        numkit::trace(instrument.povm().element(a) * state.matrix()).real();
    repeat_flip = std::max(repeat_flip, dist.probability({a, 1 - a}));
    repeat_drift = std::max(repeat_drift, std::abs(dist.probability({a, a}) - p_single));
  }
  // The two deviations coincide analytically (the second measurement's
  // outcomes sum to the first-step probability); keeping both and taking
  // the max guards against implementation drift between the two routes.
  report.max_violation = std::max(repeat_flip, repeat_drift);
  report.passes = report.max_violation <= 1e-9;
  return report;
}

bool is_projective(const quantum::BinaryPovm& povm, double tol) {
  return povm.projective(tol);
}

SingleShotMarginals single_shot_marginals(
    const quantum::DensityState& state,
    const std::vector<quantum::DichotomicObservable>& observables,
    const std::vector<int>& labels) {
  SingleShotMarginals marginals;
  for (int x : labels) {
    if (x < 1 || static_cast<std::size_t>(x) > observables.size()) {
      throw std::invalid_argument("single_shot_marginals: label out of range");
    }
    const auto& obs = observables[static_cast<std::size_t>(x - 1)];
    if (obs.dim() != state.dim()) {
      throw std::invalid_argument("single_shot_marginals: dimension mismatch");
    }
    std::array<double, 2> p{};
    for (int a = 0; a < 2; ++a) {
      p[static_cast<std::size_t>(a)] =
          numkit::trace(obs.projector(a) * state.matrix()).real();
    }
    marginals[x] = p;
  }
  return marginals;
}

NsitReport check_nsit(const SequenceDistribution& dist,
                      const SingleShotMarginals& marginals) {
  NsitReport report;
  report.position_deviation.reserve(static_cast<std::size_t>(dist.length()));
  for (int k = 1; k <= dist.length(); ++k) {
    const int x = dist.inputs()[static_cast<std::size_t>(k - 1)];
    const auto it = marginals.find(x);
    if (it == marginals.end()) {
      throw std::invalid_argument("check_nsit: no single-shot marginal for an input label");
    }
    double dev = 0.0;
    for (int a = 0; a < 2; ++a) {
      dev = std::max(dev, std::abs(dist.marginal(k, a) -
                                   it->second[static_cast<std::size_t>(a)]));
    }
    report.position_deviation.push_back(dev);
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  return report;
}

}  // namespace seqcert::seqsim
