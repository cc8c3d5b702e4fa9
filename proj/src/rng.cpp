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

#include "seqcert/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seqcert {

namespace {

// FNV-1a, used only to fold stream names into seeds.
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Prng Prng::stream(std::uint64_t base_seed, std::string_view name) {
  return Prng(base_seed ^ fnv1a(name));
}

double Prng::uniform() {
  // 53 random bits mapped to [0, 1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Prng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

std::int64_t Prng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = gen_();
  while (x >= limit) x = gen_();
  return lo + static_cast<std::int64_t>(x % span);
}

numkit::CMatrix random_complex_gaussian(Eigen::Index rows, Eigen::Index cols,
                                        Prng& rng) {
  if (rows <= 0 || cols <= 0) {
    throw std::invalid_argument("random_complex_gaussian: dimensions must be positive");
  }
  numkit::CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = numkit::Complex(rng.gaussian(), rng.gaussian());
    }
  }
  return m;
}

numkit::CMatrix haar_unitary(Eigen::Index dim, Prng& rng) {
  if (dim <= 0) throw std::invalid_argument("haar_unitary: dim must be positive");
  const numkit::CMatrix g = random_complex_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<numkit::CMatrix> qr(g);
  numkit::CMatrix q = qr.householderQ();
  const numkit::CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so the distribution is exactly Haar.
  for (Eigen::Index k = 0; k < dim; ++k) {
    const numkit::Complex d = r(k, k);
    const double a = std::abs(d);
    if (a > 0.0) q.col(k) *= d / a;
  }
  return q;
}

}  // namespace seqcert
