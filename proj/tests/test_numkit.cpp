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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "seqcert/numkit.hpp"
#include "seqcert/rng.hpp"

using namespace seqcert;
using numkit::CMatrix;
using numkit::Complex;

namespace {

CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Prng& rng) {
  return random_complex_gaussian(rows, cols, rng);
}

CMatrix random_hermitian(Eigen::Index dim, Prng& rng) {
  const CMatrix g = random_matrix(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("pauli matrix algebra") {
  const CMatrix i2 = numkit::identity(2);
  CHECK(numkit::op_distance(numkit::multiply(numkit::pauli_z(), numkit::pauli_z()), i2) ==
        0.0);

  const CMatrix zx = numkit::multiply(numkit::pauli_z(), numkit::pauli_x());
  const CMatrix iy = Complex(0.0, 1.0) * numkit::pauli_y();
  CHECK(numkit::op_distance(zx, iy) < 1e-15);

  Prng rng(7);
  const CMatrix a = random_matrix(3, 3, rng);
  CHECK(numkit::op_distance(numkit::multiply(a, numkit::identity(3)), a) == 0.0);
}

TEST_CASE("multiply rejects mismatched shapes") {
  Prng rng(11);
  const CMatrix a = random_matrix(2, 3, rng);
  const CMatrix b = random_matrix(2, 3, rng);
  CHECK_THROWS_AS(numkit::multiply(a, b), std::invalid_argument);
}

TEST_CASE("adjoint") {
  CHECK(numkit::op_distance(numkit::adjoint(numkit::pauli_x()), numkit::pauli_x()) == 0.0);

  CMatrix upper(2, 2);
  upper << Complex(0, 0), Complex(0, 1), Complex(0, 0), Complex(0, 0);
  CMatrix lower(2, 2);
  lower << Complex(0, 0), Complex(0, 0), Complex(0, -1), Complex(0, 0);
  CHECK(numkit::op_distance(numkit::adjoint(upper), lower) == 0.0);

  Prng rng(13);
  const CMatrix a = random_matrix(4, 3, rng);
  CHECK(numkit::op_distance(numkit::adjoint(numkit::adjoint(a)), a) == 0.0);
}

TEST_CASE("trace basics and cyclicity") {
  CHECK(numkit::trace(numkit::identity(4)).real() == doctest::Approx(4.0));
  CHECK(std::abs(numkit::trace(numkit::pauli_z())) < 1e-15);

  Prng rng(17);
  const CMatrix a = random_matrix(3, 3, rng);
  const CMatrix b = random_matrix(3, 3, rng);
  const Complex ab = numkit::trace(numkit::multiply(a, b));
  const Complex ba = numkit::trace(numkit::multiply(b, a));
  CHECK(std::abs(ab - ba) < 1e-12);

  CHECK_THROWS_AS(numkit::trace(random_matrix(2, 3, rng)), std::invalid_argument);
}

TEST_CASE("tensor products") {
  const CMatrix zi = numkit::tensor(numkit::pauli_z(), numkit::identity(2));
  CMatrix expected = numkit::zeros(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(numkit::op_distance(zi, expected) == 0.0);

  CHECK(numkit::op_distance(numkit::tensor(numkit::identity(2), numkit::identity(2)),
                            numkit::identity(4)) == 0.0);

  Prng rng(19);
  const CMatrix a = random_matrix(2, 2, rng);
  const CMatrix b = random_matrix(3, 3, rng);
  const Complex lhs = numkit::trace(numkit::tensor(a, b));
  CHECK(std::abs(lhs - numkit::trace(a) * numkit::trace(b)) < 1e-12);
}

TEST_CASE("tensor associativity is exact on integer-entry matrices") {
  // Small integers multiply exactly in binary floating point, so the two
  // association orders must agree bit for bit.
  CMatrix a(2, 2), b(2, 2), c(2, 2);
  a << Complex(1, 2), Complex(-3, 0), Complex(0, 5), Complex(7, -1);
  b << Complex(2, 0), Complex(0, -4), Complex(6, 3), Complex(-5, 0);
  c << Complex(3, -2), Complex(1, 1), Complex(0, -7), Complex(4, 0);
  const CMatrix left = numkit::tensor(numkit::tensor(a, b), c);
  const CMatrix right = numkit::tensor(a, numkit::tensor(b, c));
  REQUIRE(left.rows() == right.rows());
  CHECK((left - right).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hermitian_eig on the Pauli basis") {
  const auto z = numkit::hermitian_eig(numkit::pauli_z());
  CHECK(z.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(z.eigenvalues(1) == doctest::Approx(1.0));
  // Ascending order puts |1> first; compare up to phase.
  CHECK(std::abs(z.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(z.eigenvectors(0, 1)) == doctest::Approx(1.0));

  const auto x = numkit::hermitian_eig(numkit::pauli_x());
  CHECK(x.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(x.eigenvalues(1) == doctest::Approx(1.0));
  for (int k = 0; k < 2; ++k) {
    CHECK(std::abs(x.eigenvectors(0, k)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(x.eigenvectors(1, k)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  }
}

TEST_CASE("hermitian_eig reconstruction over 1000 random matrices") {
  Prng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.uniform_int(0, 14));
    const CMatrix h = random_hermitian(dim, rng);
    const auto eig = numkit::hermitian_eig(h);

    CMatrix rebuilt = numkit::zeros(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
      rebuilt += eig.eigenvalues(k) * (eig.eigenvectors.col(k) * eig.eigenvectors.col(k).adjoint());
    }
    const double scale = std::max(1.0, numkit::frobenius_norm(h));
    REQUIRE(numkit::op_distance(rebuilt, h) <= 1e-10 * scale);

    const CMatrix gram = eig.eigenvectors.adjoint() * eig.eigenvectors;
    REQUIRE(numkit::op_distance(gram, numkit::identity(dim)) < 1e-10);

    for (Eigen::Index k = 1; k < dim; ++k) {
      REQUIRE(eig.eigenvalues(k - 1) <= eig.eigenvalues(k));
    }
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  CMatrix m(2, 2);
  m << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
  CHECK_THROWS_AS(numkit::hermitian_eig(m), std::invalid_argument);
}

TEST_CASE("psd_sqrt") {
  CHECK(numkit::op_distance(numkit::psd_sqrt(numkit::identity(2)), numkit::identity(2)) <
        1e-12);

  CMatrix d(2, 2);
  d << Complex(4, 0), Complex(0, 0), Complex(0, 0), Complex(9, 0);
  CMatrix expected(2, 2);
  expected << Complex(2, 0), Complex(0, 0), Complex(0, 0), Complex(3, 0);
  CHECK(numkit::op_distance(numkit::psd_sqrt(d), expected) < 1e-12);

  // A projector is its own square root.
  CMatrix p(2, 2);
  p << Complex(0.5, 0), Complex(0.5, 0), Complex(0.5, 0), Complex(0.5, 0);
  CHECK(numkit::op_distance(numkit::psd_sqrt(p), p) < 1e-12);

  Prng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.uniform_int(0, 6));
    const CMatrix g = random_matrix(dim, dim, rng);
    const CMatrix psd = g * g.adjoint();
    const CMatrix root = numkit::psd_sqrt(psd);
    REQUIRE(numkit::is_hermitian(root, 1e-10));
    REQUIRE(numkit::op_distance(root * root, psd) <= 1e-9 * std::max(1.0, psd.norm()));
  }

  CHECK_THROWS_AS(numkit::psd_sqrt(-1.0 * numkit::identity(2)), std::invalid_argument);
}

TEST_CASE("op_distance") {
  Prng rng(31);
  const CMatrix a = random_matrix(3, 3, rng);
  CHECK(numkit::op_distance(a, a) == 0.0);

  CHECK(numkit::op_distance(numkit::pauli_z(), numkit::pauli_x()) == doctest::Approx(2.0));

  const CMatrix b = random_matrix(3, 3, rng);
  const CMatrix c = random_matrix(3, 3, rng);
  CHECK(numkit::op_distance(a, c) <=
        numkit::op_distance(a, b) + numkit::op_distance(b, c) + 1e-12);

  CHECK_THROWS_AS(numkit::op_distance(a, random_matrix(2, 2, rng)), std::invalid_argument);
}

TEST_CASE("is_hermitian uses a relative tolerance with floor one") {
  CMatrix tiny(2, 2);
  tiny << Complex(0, 0), Complex(1e-13, 1e-13), Complex(0, 0), Complex(0, 0);
  CHECK(numkit::is_hermitian(tiny, 1e-10));

  CMatrix off(2, 2);
  off << Complex(0, 0), Complex(1e-6, 0), Complex(0, 0), Complex(0, 0);
  CHECK_FALSE(numkit::is_hermitian(off, 1e-10));
}

TEST_CASE("finite_entries flags NaN and infinity") {
  CMatrix m = numkit::identity(2);
  CHECK(numkit::finite_entries(m));
  m(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_FALSE(numkit::finite_entries(m));
  m(0, 1) = Complex(0.0, std::numeric_limits<double>::infinity());
  CHECK_FALSE(numkit::finite_entries(m));
}

TEST_CASE("prng determinism and distribution sanity") {
  Prng a(42), b(42);
  for (int k = 0; k < 100; ++k) {
    CHECK(a.next_u64() == b.next_u64());
  }

  Prng u(5);
  double mean = 0.0;
  for (int k = 0; k < 20000; ++k) {
    const double x = u.uniform();
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
    mean += x;
  }
  CHECK(mean / 20000 == doctest::Approx(0.5).epsilon(0.02));

  Prng g(6);
  double m1 = 0.0, m2 = 0.0;
  const int samples = 50000;
  for (int k = 0; k < samples; ++k) {
    const double x = g.gaussian();
    m1 += x;
    m2 += x * x;
  }
  CHECK(std::abs(m1 / samples) < 0.02);
  CHECK(m2 / samples == doctest::Approx(1.0).epsilon(0.05));

  // Named streams decouple modules that share a base seed.
  Prng s1 = Prng::stream(9, "alpha");
  Prng s2 = Prng::stream(9, "beta");
  CHECK(s1.next_u64() != s2.next_u64());
}

TEST_CASE("haar_unitary is unitary and seed-stable") {
  Prng rng(77);
  for (Eigen::Index dim : {2, 3, 4, 8}) {
    const CMatrix u = haar_unitary(dim, rng);
    CHECK(numkit::op_distance(u * u.adjoint(), numkit::identity(dim)) < 1e-12);
  }
  Prng r1(123), r2(123);
  const CMatrix u1 = haar_unitary(4, r1);
  const CMatrix u2 = haar_unitary(4, r2);
  CHECK(numkit::op_distance(u1, u2) == 0.0);
}
