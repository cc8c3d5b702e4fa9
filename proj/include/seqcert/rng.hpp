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

#include <cstdint>
#include <random>
#include <string_view>

#include "seqcert/numkit.hpp"

namespace seqcert {

// Deterministic PRNG. Gaussian samples come from an explicit Box-Muller
// transform rather than std::normal_distribution, whose output sequence is
// implementation-defined; reports must reproduce bit-for-bit from a seed.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : gen_(seed) {}

  /// Stream seeded from a base seed and a stream name, so independent
  /// modules never share a generator state.
  static Prng stream(std::uint64_t base_seed, std::string_view name);

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal via Box-Muller.
  double gaussian();

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Matrix with i.i.d. standard complex Gaussian entries.
numkit::CMatrix random_complex_gaussian(Eigen::Index rows, Eigen::Index cols,
                                        Prng& rng);

/// Haar-distributed unitary (QR of a complex Gaussian with the phase of the
/// R diagonal absorbed, which makes the draw basis-invariant).
numkit::CMatrix haar_unitary(Eigen::Index dim, Prng& rng);

}  // namespace seqcert
