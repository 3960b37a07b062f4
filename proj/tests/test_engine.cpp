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
#include <numbers>
#include <vector>

#include "lincoh/engine.hpp"
#include "lincoh/errors.hpp"
#include "test_support.hpp"

namespace lincoh {
namespace {

using Catch::Approx;
constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

AmplitudeVector random_amplitudes(Rng &rng, std::size_t width, double scale = 2.0) {
  return AmplitudeVector(
      ComplexVector(scale * test::random_matrix(rng, static_cast<Eigen::Index>(width), 1)));
}

TEST_CASE("apply_matrix examples") {
  const Complex a{1.2, -0.4};
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> in{a, 0.0};
  const AmplitudeVector out =
      apply_matrix(beamsplitter_matrix(kPi / 4, 0.0), AmplitudeVector::from_starred(in));
  CHECK(std::abs(out.starred(0) - a * h) < 1e-15);
  CHECK(std::abs(out.starred(1) - kI * a * h) < 1e-15);

  const AmplitudeVector v = AmplitudeVector::from_starred(std::vector<Complex>{a, -a, kI});
  CHECK(apply_matrix(ComplexMatrix::Identity(3, 3), v).starred() == v.starred());

  // Equal inputs on a 50/50 splitter: both outputs (1+i)α*/√2.
  const AmplitudeVector same = AmplitudeVector::from_starred(std::vector<Complex>{a, a});
  const AmplitudeVector mixed = apply_matrix(beamsplitter_matrix(kPi / 4, 0.0), same);
  CHECK(std::abs(mixed.starred(0) - (1.0 + kI) * a * h) < 1e-15);
  CHECK(std::abs(mixed.starred(1) - (1.0 + kI) * a * h) < 1e-15);
  CHECK(mean_photon_number(mixed) == Approx(mean_photon_number(same)));

  CHECK_THROWS_AS(apply_matrix(ComplexMatrix::Identity(2, 2), v), DimensionError);
}

TEST_CASE("apply_circuit examples") {
  Rng rng(1);
  const AmplitudeVector v = random_amplitudes(rng, 4);
  CHECK(apply_circuit(Circuit(4), v).starred() == v.starred());

  const ComplexMatrix u = test::random_unitary(rng, 4);
  const AmplitudeVector via_circuit = apply_circuit(reck_decompose(u), v);
  CHECK(max_abs(via_circuit.starred() - apply_matrix(u, v).starred()) <= 1e-9);

  Circuit ps(4);
  ps.append(PhaseShifter{0, 0.9});
  const AmplitudeVector shifted = apply_circuit(ps, v);
  CHECK(std::abs(shifted.starred(0) - std::polar(1.0, -0.9) * v.starred(0)) < 1e-15);
  CHECK(shifted.starred(1) == v.starred(1));

  CHECK_THROWS_AS(apply_circuit(Circuit(3), v), DimensionError);
}

TEST_CASE("mean_photon_number examples") {
  CHECK(mean_photon_number(AmplitudeVector(5)) == 0.0);
  const Complex a{1.0, 1.0};  // |α|² = 2
  CHECK(mean_photon_number(AmplitudeVector::from_starred(std::vector<Complex>{a, a})) ==
        Approx(4.0));
}

TEST_CASE("pad_vacuum examples") {
  const Complex a{0.5, 2.0};
  const AmplitudeVector one = AmplitudeVector::from_starred(std::vector<Complex>{a});
  const AmplitudeVector two = pad_vacuum(one, 2);
  REQUIRE(two.width() == 2);
  CHECK(two.starred(0) == a);
  CHECK(two.starred(1) == Complex{});
  CHECK(pad_vacuum(two, 2).starred() == two.starred());
  CHECK_THROWS_AS(pad_vacuum(two, 1), DimensionError);
}

TEST_CASE("padding then the dilated unitary realizes the contraction") {
  Rng rng(2);
  for (auto [rows, cols] : {std::pair{3, 3}, std::pair{2, 4}, std::pair{4, 2}}) {
    ComplexMatrix k = test::random_matrix(rng, rows, cols);
    k *= 0.95 / spectral_norm(k);
    const Dilation d = dilate(k);
    const AmplitudeVector in = random_amplitudes(rng, static_cast<std::size_t>(cols));
    const AmplitudeVector out = apply_matrix(
        d.unitary, pad_vacuum(in, static_cast<std::size_t>(d.unitary.cols())));
    const ComplexVector expected = k * in.starred();
    CHECK(max_abs(out.starred().head(rows) - expected) <= 1e-12);
  }
}

TEST_CASE("photon number is conserved by unitary circuits") {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const std::size_t width = 2 + static_cast<std::size_t>(uniform01(rng) * 11);
    const Circuit c = test::random_circuit(rng, width, 30);
    const AmplitudeVector in = random_amplitudes(rng, width, 5.0);
    const double before = mean_photon_number(in);
    const double after = mean_photon_number(apply_circuit(c, in));
    REQUIRE(std::abs(after - before) <= 1e-10 * (1.0 + before));
  }
}

TEST_CASE("contractions never add photons") {
  Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    const auto n = 1 + static_cast<Eigen::Index>(uniform01(rng) * 8);
    ComplexMatrix m = test::random_matrix(rng, n, n);
    m *= uniform01(rng) / spectral_norm(m);
    const AmplitudeVector in = random_amplitudes(rng, static_cast<std::size_t>(n));
    REQUIRE(mean_photon_number(apply_matrix(m, in)) <= mean_photon_number(in) + 1e-10);
  }
}

TEST_CASE("application is linear") {
  Rng rng(5);
  const ComplexMatrix m = test::random_matrix(rng, 6, 6);
  for (int k = 0; k < 20; ++k) {
    const AmplitudeVector a = random_amplitudes(rng, 6);
    const AmplitudeVector b = random_amplitudes(rng, 6);
    const ComplexVector lhs = apply_matrix(m, a + b).starred();
    const ComplexVector rhs = apply_matrix(m, a).starred() + apply_matrix(m, b).starred();
    REQUIRE(max_abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("element-wise and compiled application agree") {
  Rng rng(6);
  for (int k = 0; k < 50; ++k) {
    const Circuit c = test::random_circuit(rng, 8, 20);
    const AmplitudeVector in = random_amplitudes(rng, 8);
    REQUIRE(max_abs(apply_circuit(c, in).starred() - apply_matrix(compile(c), in).starred()) <=
            1e-10);
  }
}

TEST_CASE("starred and physical views are conjugates") {
  const std::vector<Complex> physical{{1.0, 2.0}, {-0.5, 0.25}};
  const AmplitudeVector v = AmplitudeVector::from_physical(physical);
  CHECK(v.starred(0) == Complex(1.0, -2.0));
  CHECK(v.physical(1) == physical[1]);
  CHECK(v.physical() == v.starred().conjugate());

  ComplexMatrix m(1, 1);
  m(0, 0) = Complex(0.0, 1.0);
  // β = i·α on physical amplitudes is β* = −i·α* on starred ones.
  const AmplitudeVector out = apply_matrix(
      to_starred_map(m), AmplitudeVector::from_physical(std::vector<Complex>{physical[0]}));
  CHECK(std::abs(out.physical(0) - kI * physical[0]) < 1e-15);
}

}  // namespace
}  // namespace lincoh
