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

#include "lincoh/engine.hpp"

#include <sstream>

#include "lincoh/errors.hpp"

namespace lincoh {

AmplitudeVector::AmplitudeVector(std::size_t width)
    : starred_(ComplexVector::Zero(static_cast<Eigen::Index>(width))) {}

AmplitudeVector::AmplitudeVector(ComplexVector starred)
    : starred_(std::move(starred)) {
  require_finite(starred_, "AmplitudeVector");
}

AmplitudeVector AmplitudeVector::from_starred(std::span<const Complex> starred) {
  ComplexVector v(static_cast<Eigen::Index>(starred.size()));
  for (std::size_t i = 0; i < starred.size(); ++i) v(static_cast<Eigen::Index>(i)) = starred[i];
  return AmplitudeVector(std::move(v));
}

AmplitudeVector AmplitudeVector::from_physical(std::span<const Complex> physical) {
  ComplexVector v(static_cast<Eigen::Index>(physical.size()));
  for (std::size_t i = 0; i < physical.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = std::conj(physical[i]);
  }
  return AmplitudeVector(std::move(v));
}

AmplitudeVector AmplitudeVector::operator+(const AmplitudeVector &rhs) const {
  if (rhs.width() != width()) throw DimensionError("amplitude widths differ");
  return AmplitudeVector(ComplexVector(starred_ + rhs.starred_));
}

AmplitudeVector apply_matrix(const ComplexMatrix &m, const AmplitudeVector &a) {
  if (static_cast<std::size_t>(m.cols()) != a.width()) {
    std::ostringstream msg;
    msg << "apply_matrix: " << m.rows() << "x" << m.cols()
        << " matrix cannot act on width " << a.width();
    throw DimensionError(msg.str());
  }
  return AmplitudeVector(ComplexVector(m * a.starred()));
}

AmplitudeVector apply_circuit(const Circuit &c, const AmplitudeVector &a) {
  if (c.width() != a.width()) {
    std::ostringstream msg;
    msg << "apply_circuit: circuit width " << c.width()
        << " does not match amplitude width " << a.width();
    throw DimensionError(msg.str());
  }
  ComplexVector v = a.starred();
  for (const auto &e : c.elements()) apply_element(e, v);
  return AmplitudeVector(std::move(v));
}

double mean_photon_number(const AmplitudeVector &a) {
  return a.starred().squaredNorm();
}

AmplitudeVector pad_vacuum(const AmplitudeVector &a, std::size_t new_width) {
  if (new_width < a.width()) {
    std::ostringstream msg;
    msg << "pad_vacuum: cannot shrink width " << a.width() << " to " << new_width;
    throw DimensionError(msg.str());
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(new_width));
  v.head(a.starred().size()) = a.starred();
  return AmplitudeVector(std::move(v));
}

ComplexMatrix to_starred_map(const ComplexMatrix &physical_map) {
  return physical_map.conjugate();
}

}  // namespace lincoh
