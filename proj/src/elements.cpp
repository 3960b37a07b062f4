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

#include "lincoh/elements.hpp"

#include <cmath>
#include <sstream>

#include "lincoh/errors.hpp"

namespace lincoh {

namespace {

constexpr Complex kI{0.0, 1.0};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ComplexMatrix beamsplitter_matrix(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  ComplexMatrix t(2, 2);
  t << c, kI * std::polar(1.0, -phi) * s,
       kI * std::polar(1.0, phi) * s, c;
  return t;
}

Complex phaseshifter_factor(double phi) { return std::polar(1.0, -phi); }

void validate(const OpticalElement &e, std::size_t width) {
  std::visit(
      overloaded{
          [width](const Beamsplitter &bs) {
            if (bs.first >= width || bs.second >= width) {
              std::ostringstream msg;
              msg << "beamsplitter on modes (" << bs.first << ", " << bs.second
                  << ") does not fit width " << width;
              throw DimensionError(msg.str());
            }
            if (bs.first == bs.second) {
              throw DimensionError("beamsplitter modes must be distinct");
            }
            if (!std::isfinite(bs.theta) || !std::isfinite(bs.phi)) {
              throw NonFiniteError("beamsplitter angles must be finite");
            }
          },
          [width](const PhaseShifter &ps) {
            if (ps.mode >= width) {
              std::ostringstream msg;
              msg << "phase shifter on mode " << ps.mode
                  << " does not fit width " << width;
              throw DimensionError(msg.str());
            }
            if (!std::isfinite(ps.phi)) {
              throw NonFiniteError("phase shifter angle must be finite");
            }
          },
      },
      e);
}

ComplexMatrix element_embedding(const OpticalElement &e, std::size_t width) {
  validate(e, width);
  const auto n = static_cast<Eigen::Index>(width);
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  std::visit(overloaded{
                 [&m](const Beamsplitter &bs) {
                   const ComplexMatrix t = beamsplitter_matrix(bs.theta, bs.phi);
                   const auto i = static_cast<Eigen::Index>(bs.first);
                   const auto j = static_cast<Eigen::Index>(bs.second);
                   m(i, i) = t(0, 0);
                   m(i, j) = t(0, 1);
                   m(j, i) = t(1, 0);
                   m(j, j) = t(1, 1);
                 },
                 [&m](const PhaseShifter &ps) {
                   const auto i = static_cast<Eigen::Index>(ps.mode);
                   m(i, i) = phaseshifter_factor(ps.phi);
                 },
             },
             e);
  return m;
}

void apply_element(const OpticalElement &e, ComplexVector &starred) {
  std::visit(overloaded{
                 [&starred](const Beamsplitter &bs) {
                   const double c = std::cos(bs.theta);
                   const double s = std::sin(bs.theta);
                   const auto i = static_cast<Eigen::Index>(bs.first);
                   const auto j = static_cast<Eigen::Index>(bs.second);
                   const Complex a = starred(i);
                   const Complex b = starred(j);
                   starred(i) = c * a + kI * std::polar(1.0, -bs.phi) * s * b;
                   starred(j) = kI * std::polar(1.0, bs.phi) * s * a + c * b;
                 },
                 [&starred](const PhaseShifter &ps) {
                   const auto i = static_cast<Eigen::Index>(ps.mode);
                   starred(i) *= phaseshifter_factor(ps.phi);
                 },
             },
             e);
}

OpticalElement inverse(const OpticalElement &e) {
  return std::visit(overloaded{
                        [](const Beamsplitter &bs) -> OpticalElement {
                          return Beamsplitter{bs.first, bs.second, -bs.theta, bs.phi};
                        },
                        [](const PhaseShifter &ps) -> OpticalElement {
                          return PhaseShifter{ps.mode, -ps.phi};
                        },
                    },
                    e);
}

}  // namespace lincoh
