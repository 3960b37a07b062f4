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
#include <span>

#include "lincoh/numerics.hpp"
#include "lincoh/synthesis.hpp"

namespace lincoh {

/// Coherent amplitudes of a product state, stored starred: (α₁*, …, α_N*).
///
/// Circuit matrices act on this vector directly. Physical amplitudes α are
/// only produced on request. Vectors are never normalized.
class AmplitudeVector {
 public:
  AmplitudeVector() = default;
  explicit AmplitudeVector(std::size_t width);
  explicit AmplitudeVector(ComplexVector starred);

  static AmplitudeVector from_starred(std::span<const Complex> starred);
  static AmplitudeVector from_physical(std::span<const Complex> physical);

  std::size_t width() const { return static_cast<std::size_t>(starred_.size()); }

  const ComplexVector &starred() const { return starred_; }
  ComplexVector &starred() { return starred_; }
  ComplexVector physical() const { return starred_.conjugate(); }

  Complex starred(std::size_t i) const { return starred_(static_cast<Eigen::Index>(i)); }
  Complex physical(std::size_t i) const { return std::conj(starred(i)); }

  AmplitudeVector operator+(const AmplitudeVector &rhs) const;

 private:
  ComplexVector starred_;
};

/// β* = M·α*. Throws DimensionError when M.cols() != a.width().
AmplitudeVector apply_matrix(const ComplexMatrix &m, const AmplitudeVector &a);

/// Element-by-element propagation through the circuit.
AmplitudeVector apply_circuit(const Circuit &c, const AmplitudeVector &a);

/// Σ|α_i|².
double mean_photon_number(const AmplitudeVector &a);

/// Appends dark ports. Throws DimensionError when asked to shrink.
AmplitudeVector pad_vacuum(const AmplitudeVector &a, std::size_t new_width);

/// Entrywise conjugate: turns a map written on physical amplitudes
/// (β = M·α) into the equivalent map on starred ones (β* = M*·α*).
ComplexMatrix to_starred_map(const ComplexMatrix &physical_map);

}  // namespace lincoh
