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

#pragma once

#include <cstddef>
#include <variant>

#include "lincoh/numerics.hpp"

namespace lincoh {

/// Zero-based mode (port) index.
using Mode = std::size_t;

/// Two-mode beamsplitter with reflectivity sin²θ and relative phase φ.
struct Beamsplitter {
  Mode first;
  Mode second;
  double theta;
  double phi;

  bool operator==(const Beamsplitter &) const = default;
};

/// Single-mode phase shifter; multiplies the starred amplitude by e^{-iφ}.
struct PhaseShifter {
  Mode mode;
  double phi;

  bool operator==(const PhaseShifter &) const = default;
};

using OpticalElement = std::variant<Beamsplitter, PhaseShifter>;

/// [[cosθ, i·e^{-iφ}·sinθ], [i·e^{iφ}·sinθ, cosθ]]
///
/// The same matrix maps input creation operators to output ones and input
/// starred amplitudes to output starred amplitudes.
ComplexMatrix beamsplitter_matrix(double theta, double phi);

/// e^{-iφ}, the factor a phase shifter applies to a starred amplitude. The
/// mode operator itself picks up e^{+iφ}.
Complex phaseshifter_factor(double phi);

/// Throws DimensionError if the element does not fit in `width` modes (or a
/// beamsplitter names the same mode twice), NonFiniteError on NaN/Inf angles.
void validate(const OpticalElement &e, std::size_t width);

/// width×width identity with the element's block written on its modes.
ComplexMatrix element_embedding(const OpticalElement &e, std::size_t width);

/// Applies the element in place to a starred amplitude vector, touching only
/// the one or two affected entries. The element must already be valid for
/// the vector width.
void apply_element(const OpticalElement &e, ComplexVector &starred);

/// The element realizing the adjoint map: θ → −θ for beamsplitters (same φ),
/// φ → −φ for phase shifters.
OpticalElement inverse(const OpticalElement &e);

}  // namespace lincoh
