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
#include <vector>

#include "lincoh/elements.hpp"
#include "lincoh/numerics.hpp"

namespace lincoh {

/// An ordered list of optical elements on a fixed number of modes.
/// Elements are stored in physical order: the first one is applied first.
class Circuit {
 public:
  explicit Circuit(std::size_t width);
  Circuit(std::size_t width, std::vector<OpticalElement> elements);

  /// Validates the element against the circuit width before appending.
  void append(const OpticalElement &e);

  /// Appends every element of `next`; widths must match.
  void extend(const Circuit &next);

  std::size_t width() const { return width_; }
  const std::vector<OpticalElement> &elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  std::size_t beamsplitter_count() const;
  std::size_t phaseshifter_count() const;

  bool operator==(const Circuit &) const = default;

 private:
  std::size_t width_;
  std::vector<OpticalElement> elements_;
};

/// E_k···E_2·E_1, where E_j embeds the j-th element.
ComplexMatrix compile(const Circuit &c);

/// Reversed order with every element replaced by its inverse, so that
/// compile(invert(c)) == compile(c)†.
Circuit invert(const Circuit &c);

enum class MeshFill {
  /// Skip mesh positions whose entry is already below tolerance.
  compact,
  /// Emit every position of the triangular mesh, using θ = 0 where nothing
  /// needs mixing. Yields exactly n(n−1)/2 beamsplitters.
  full,
};

struct ReckOptions {
  double tol = kUnitaryTol;
  MeshFill fill = MeshFill::compact;
};

/// Factors a unitary into a triangular mesh of beamsplitters followed by a
/// layer of phase shifters.
///
/// Rows are cleared bottom-up: for row r the beamsplitters act on mode pairs
/// (j, r) for j = r−1 down to 0, each one zeroing U(r, j) by mixing columns j
/// and r from the right. What remains is a diagonal of unit-modulus phases,
/// realized as trailing phase shifters (zero phases omitted). The returned
/// circuit compiles back to U itself, global phase included.
///
/// Throws SynthesisError if U is not unitary within `tol`.
Circuit reck_decompose(const ComplexMatrix &u, const ReckOptions &options = {});

/// Unitary dilation of a contraction.
///
/// `unitary` is [[K, −(I−KK†)^½], [(I−K†K)^½, K†]] with K zero-padded to a
/// square n×n, n = max(rows, cols). Inputs go to ports 0..cols−1 (the rest
/// dark); the image K·α* comes out of ports 0..rows−1.
struct Dilation {
  ComplexMatrix unitary;
  std::size_t padded_size = 0;
  std::vector<Mode> input_ports;
  std::vector<Mode> output_ports;
};

/// Throws NotContractionError if spectral_norm(K) > 1 + tol.
Dilation dilate(const ComplexMatrix &k, double tol = kUnitaryTol);

}  // namespace lincoh
