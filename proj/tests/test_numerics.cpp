// Copyright 2026 The lincoh Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "lincoh/errors.hpp"
#include "lincoh/numerics.hpp"
#include "test_support.hpp"

namespace lincoh {
namespace {

using Catch::Approx;

ComplexMatrix comparison3(double c) {
  ComplexMatrix k(3, 3);
  k << 0, 0, 0,
       1, -1, 0,
       1, 0, -1;
  return c * k;
}

TEST_CASE("is_unitary on simple cases") {
  CHECK(is_unitary(ComplexMatrix::Identity(4, 4), 1e-12));

  ComplexMatrix contraction = ComplexMatrix::Zero(2, 2);
  contraction(0, 0) = 1.0;
  contraction(1, 1) = 0.5;
  CHECK_FALSE(is_unitary(contraction, 1e-10));
  CHECK(unitarity_residual(contraction) == Approx(0.75));

  CHECK_THROWS_AS(is_unitary(ComplexMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("product of two unitaries is unitary") {
  Rng rng(7);
  for (int n = 1; n <= 10; ++n) {
    const ComplexMatrix a = test::random_unitary(rng, n);
    const ComplexMatrix b = test::random_unitary(rng, n);
    CHECK(is_unitary(a * b));
  }
}

TEST_CASE("svd examples") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  const Svd s = svd(d);
  CHECK(s.D(0) == Approx(3.0));
  CHECK(s.D(1) == Approx(1.0));

  // Gram matrix of rows (1,-1,0), (1,0,-1) is [[2,1],[1,2]] with eigenvalues
  // 3 and 1; the zero row adds a zero singular value.
  const Svd c1 = svd(comparison3(1.0));
  REQUIRE(c1.D.size() == 3);
  CHECK(c1.D(0) == Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(c1.D(1) == Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(c1.D(2)) < 1e-14);

  ComplexMatrix scalar(1, 1);
  scalar(0, 0) = Complex(0.0, -2.0);
  CHECK(svd(scalar).D(0) == Approx(2.0));
}

TEST_CASE("svd reconstructs random matrices with unitary factors") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rows = 1 + static_cast<Eigen::Index>(uniform01(rng) * 9);
    const auto cols = 1 + static_cast<Eigen::Index>(uniform01(rng) * 9);
    const ComplexMatrix m = test::random_matrix(rng, rows, cols);
    const Svd s = svd(m);
    CHECK(max_abs(s.reconstruct() - m) <= 1e-10);
    CHECK(is_unitary(s.V));
    CHECK(is_unitary(s.U));
    for (Eigen::Index i = 1; i < s.D.size(); ++i) CHECK(s.D(i - 1) >= s.D(i));
    CHECK(spectral_norm(m) == s.D(0));
  }
}

TEST_CASE("svd rejects non-finite input") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(svd(m), NonFiniteError);
}

TEST_CASE("spectral_norm examples") {
  CHECK(spectral_norm(ComplexMatrix::Identity(5, 5)) == Approx(1.0));
  CHECK(spectral_norm(comparison3(1.0 / std::sqrt(3.0))) == Approx(1.0).epsilon(1e-14));

  // K·K† = [[2,2],[2,2]] has eigenvalue 4.
  ComplexMatrix k(2, 2);
  k << -1, 1, -1, 1;
  CHECK(spectral_norm(k) == Approx(2.0).epsilon(1e-14));
}

TEST_CASE("psd_sqrt examples") {
  const ComplexMatrix zero = ComplexMatrix::Zero(3, 3);
  CHECK(max_abs(psd_sqrt(zero)) == 0.0);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 1.0;
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 2.0;
  expected(1, 1) = 1.0;
  CHECK(max_abs(psd_sqrt(d) - expected) < 1e-14);

  const ComplexMatrix k = comparison3(1.0 / std::sqrt(3.0));
  const ComplexMatrix defect = ComplexMatrix::Identity(3, 3) - k * k.adjoint();
  const ComplexMatrix root = psd_sqrt(defect);
  CHECK(max_abs(root * root - defect) <= 1e-11);
  CHECK(hermiticity_residual(root) < 1e-15);
}

TEST_CASE("psd_sqrt recovers random PSD roots") {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = 1 + static_cast<Eigen::Index>(uniform01(rng) * 8);
    const ComplexMatrix a = test::random_matrix(rng, n, n);
    const ComplexMatrix s = a * a.adjoint();
    CHECK(max_abs(psd_sqrt(s * s, 1e-9) - s) <= 1e-8);
  }
}

TEST_CASE("psd_sqrt clips tiny negative eigenvalues and rejects real ones") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -5e-13;
  const ComplexMatrix root = psd_sqrt(m);
  CHECK(std::abs(root(1, 1)) == 0.0);

  m(1, 1) = -1e-6;
  CHECK_THROWS_AS(psd_sqrt(m), NotPsdError);

  ComplexMatrix skew = ComplexMatrix::Identity(2, 2);
  skew(0, 1) = 0.5;
  CHECK_THROWS_AS(psd_sqrt(skew), NotPsdError);
  CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::Identity(2, 3)), DimensionError);
}

}  // namespace
}  // namespace lincoh
