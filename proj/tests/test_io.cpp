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

#include <sstream>

#include "lincoh/errors.hpp"
#include "lincoh/io.hpp"
#include "test_support.hpp"

namespace lincoh {
namespace {

TEST_CASE("matrix files accept scientific notation") {
  std::istringstream in("2 2\n1e0 0  0 -2.5E-1\n\n+3.0 1e+1  -0 0\n");
  const ComplexMatrix m = read_matrix(in);
  CHECK(m(0, 0) == Complex(1.0, 0.0));
  CHECK(m(0, 1) == Complex(0.0, -0.25));
  CHECK(m(1, 0) == Complex(3.0, 10.0));
}

TEST_CASE("malformed matrix files are rejected") {
  for (const char *text : {"", "2", "2 2\n1 0 0 0 1 0", "2 2\n1 0 0 0 0 0 1 x",
                           "0 3\n", "1 1\n1 0 7", "1 1\nnan 0", "1.5 1\n0 0"}) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_matrix(in), ParseError);
  }
}

TEST_CASE("circuit files") {
  std::istringstream in(
      "width=3\n"
      "BS 0 2 7.8539816339744828e-01 0\n"
      "\n"
      "PS 1 -1.5\n");
  const Circuit c = read_circuit(in);
  CHECK(c.width() == 3);
  REQUIRE(c.size() == 2);
  CHECK(std::get<Beamsplitter>(c.elements()[0]) == Beamsplitter{0, 2, 0.78539816339744828, 0.0});
  CHECK(std::get<PhaseShifter>(c.elements()[1]) == PhaseShifter{1, -1.5});

  std::ostringstream out;
  write_circuit(out, c);
  CHECK(out.str() == "width=3\nBS 0 2 0.78539816339744828 0\nPS 1 -1.5\n");

  for (const char *bad : {"", "BS 0 1 0 0", "width=0\n", "width=2\nBS 0 2 0 0",
                          "width=2\nBS 0 1 0", "width=2\nXX 0", "width=2\nPS 0 zz",
                          "width=2\nBS 1 1 0 0"}) {
    std::istringstream bin(bad);
    CHECK_THROWS_AS(read_circuit(bin), ParseError);
  }
}

TEST_CASE("amplitude files") {
  std::istringstream in("n=2\n1.5 -2\n0 1e-3\n");
  const AmplitudeVector a = read_amplitudes(in);
  REQUIRE(a.width() == 2);
  CHECK(a.starred(0) == Complex(1.5, -2.0));
  CHECK(a.starred(1) == Complex(0.0, 1e-3));

  for (const char *bad : {"n=2\n1 0\n", "n=1\n1 0 2 0", "n=0\n", "m=1\n0 0"}) {
    std::istringstream bin(bad);
    CHECK_THROWS_AS(read_amplitudes(bin), ParseError);
  }
}

TEST_CASE("written files read back bit-exactly") {
  Rng rng(42);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix m = test::random_matrix(rng, 1 + k % 4, 1 + k % 3);
    std::stringstream ms;
    write_matrix(ms, m);
    REQUIRE(read_matrix(ms) == m);

    const Circuit c = test::random_circuit(rng, 2 + k % 5, 10);
    std::stringstream cs;
    write_circuit(cs, c);
    REQUIRE(read_circuit(cs) == c);

    const AmplitudeVector a(ComplexVector(test::random_matrix(rng, 3, 1)));
    std::stringstream as;
    write_amplitudes(as, a);
    REQUIRE(read_amplitudes(as).starred() == a.starred());
  }
}

TEST_CASE("complex flag values") {
  CHECK(parse_complex("0.6,0") == Complex(0.6, 0.0));
  CHECK(parse_complex(" -1e-1 , 2 ") == Complex(-0.1, 2.0));
  CHECK(parse_complex("3") == Complex(3.0, 0.0));
  CHECK_THROWS_AS(parse_complex("1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_complex("a,b"), ParseError);

  const auto list = parse_complex_list("1,0,0,0,0,0,1,0");
  REQUIRE(list.size() == 4);
  CHECK(list[3] == Complex(1.0, 0.0));
  CHECK_THROWS_AS(parse_complex_list("1,0,2"), ParseError);
  CHECK_THROWS_AS(parse_complex_list("1,,2,0"), ParseError);
}

}  // namespace
}  // namespace lincoh
