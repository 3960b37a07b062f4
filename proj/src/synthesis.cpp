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

#include "lincoh/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lincoh/errors.hpp"

namespace lincoh {

Circuit::Circuit(std::size_t width) : width_(width) {
  if (width_ == 0) throw DimensionError("circuit width must be at least 1");
}

Circuit::Circuit(std::size_t width, std::vector<OpticalElement> elements)
    : Circuit(width) {
  for (const auto &e : elements) validate(e, width_);
  elements_ = std::move(elements);
}

void Circuit::append(const OpticalElement &e) {
  validate(e, width_);
  elements_.push_back(e);
}

void Circuit::extend(const Circuit &next) {
  if (next.width() != width_) {
    throw DimensionError("cannot join circuits of different widths");
  }
  elements_.insert(elements_.end(), next.elements_.begin(), next.elements_.end());
}

std::size_t Circuit::beamsplitter_count() const {
  return static_cast<std::size_t>(std::count_if(
      elements_.begin(), elements_.end(),
      [](const OpticalElement &e) { return std::holds_alternative<Beamsplitter>(e); }));
}

std::size_t Circuit::phaseshifter_count() const {
  return elements_.size() - beamsplitter_count();
}

ComplexMatrix compile(const Circuit &c) {
  const auto n = static_cast<Eigen::Index>(c.width());
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  // Left-multiplying by an element only mixes one or two rows.
  for (const auto &e : c.elements()) {
    if (const auto *bs = std::get_if<Beamsplitter>(&e)) {
      const ComplexMatrix t = beamsplitter_matrix(bs->theta, bs->phi);
      const auto i = static_cast<Eigen::Index>(bs->first);
      const auto j = static_cast<Eigen::Index>(bs->second);
      const Eigen::RowVectorXcd ri = m.row(i);
      const Eigen::RowVectorXcd rj = m.row(j);
      m.row(i) = t(0, 0) * ri + t(0, 1) * rj;
      m.row(j) = t(1, 0) * ri + t(1, 1) * rj;
    } else {
      const auto &ps = std::get<PhaseShifter>(e);
      m.row(static_cast<Eigen::Index>(ps.mode)) *= phaseshifter_factor(ps.phi);
    }
  }
  return m;
}

Circuit invert(const Circuit &c) {
  std::vector<OpticalElement> reversed;
  reversed.reserve(c.size());
  for (auto it = c.elements().rbegin(); it != c.elements().rend(); ++it) {
    reversed.push_back(inverse(*it));
  }
  return Circuit(c.width(), std::move(reversed));
}

Circuit reck_decompose(const ComplexMatrix &u, const ReckOptions &options) {
  require_finite(u, "reck_decompose");
  if (u.rows() != u.cols()) {
    std::ostringstream msg;
    msg << "reck_decompose: expected a square matrix, got " << u.rows() << "x"
        << u.cols();
    throw SynthesisError(msg.str());
  }
  const double residual = unitarity_residual(u);
  if (residual > options.tol) {
    std::ostringstream msg;
    msg << "reck_decompose: matrix is not unitary, |U U^dagger - I|_max = "
        << residual << " > " << options.tol;
    throw SynthesisError(msg.str());
  }

  const Eigen::Index n = u.rows();
  ComplexMatrix w = u;
  // Right factors T in the order they were applied: U·T_1·T_2···T_k = D.
  std::vector<Beamsplitter> right_factors;
  right_factors.reserve(static_cast<std::size_t>(n * (n - 1) / 2));

  for (Eigen::Index r = n - 1; r >= 1; --r) {
    for (Eigen::Index j = r - 1; j >= 0; --j) {
      const Complex a = w(r, j);
      const Complex b = w(r, r);
      if (std::abs(a) <= options.tol) {
        if (options.fill == MeshFill::full) {
          right_factors.push_back({static_cast<Mode>(j), static_cast<Mode>(r), 0.0, 0.0});
        }
        continue;
      }
      // Pick T so that (W·T)(r, j) = cosθ·a + i·e^{iφ}·sinθ·b vanishes.
      const double theta = std::atan2(std::abs(a), std::abs(b));
      const double arg_b = std::abs(b) > 0.0 ? std::arg(b) : 0.0;
      const double phi = std::arg(a) - arg_b + std::numbers::pi / 2;
      const ComplexMatrix t = beamsplitter_matrix(theta, phi);
      const ComplexVector cj = w.col(j);
      const ComplexVector cr = w.col(r);
      w.col(j) = t(0, 0) * cj + t(1, 0) * cr;
      w.col(r) = t(0, 1) * cj + t(1, 1) * cr;
      w(r, j) = 0.0;
      right_factors.push_back({static_cast<Mode>(j), static_cast<Mode>(r), theta, phi});
    }
  }

  // U = D·T_k†···T_1†, so the circuit runs T_1† first and the phases last.
  Circuit circuit(static_cast<std::size_t>(n));
  for (const auto &t : right_factors) {
    circuit.append(t.theta == 0.0 ? OpticalElement{t} : inverse(t));
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = w(k, k);
    const Complex unit = std::abs(d) > 0.0 ? d / std::abs(d) : Complex{1.0, 0.0};
    if (std::abs(unit - 1.0) <= options.tol) continue;
    circuit.append(PhaseShifter{static_cast<Mode>(k), -std::arg(unit)});
  }
  return circuit;
}

Dilation dilate(const ComplexMatrix &k, double tol) {
  require_finite(k, "dilate");
  const double norm = spectral_norm(k);
  if (norm > 1.0 + tol) {
    std::ostringstream msg;
    msg << "dilate: spectral norm " << norm << " exceeds 1 + " << tol
        << "; the map is not a contraction";
    throw NotContractionError(msg.str());
  }
  const Eigen::Index n = std::max(k.rows(), k.cols());
  ComplexMatrix padded = ComplexMatrix::Zero(n, n);
  padded.topLeftCorner(k.rows(), k.cols()) = k;

  // With padded = V S U the defect operators share the singular vectors of K:
  // (I - KK^dagger)^1/2 = V C V^dagger and (I - K^dagger K)^1/2 = U^dagger C U
  // with C = sqrt(1 - S^2). Building the blocks from one SVD keeps the result
  // unitary to rounding, whereas independent square roots lose half the digits
  // near singular values of 1.
  const Svd f = svd(padded);
  RealVector c(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double s = std::min(f.D(i), 1.0);
    c(i) = std::sqrt((1.0 - s) * (1.0 + s));
  }
  const ComplexMatrix left_defect = f.V * c.cast<Complex>().asDiagonal() * f.V.adjoint();
  const ComplexMatrix right_defect = f.U.adjoint() * c.cast<Complex>().asDiagonal() * f.U;

  Dilation d;
  d.padded_size = static_cast<std::size_t>(n);
  d.unitary.resize(2 * n, 2 * n);
  d.unitary << padded, -left_defect, right_defect, padded.adjoint();
  for (Eigen::Index i = 0; i < k.cols(); ++i) d.input_ports.push_back(static_cast<Mode>(i));
  for (Eigen::Index i = 0; i < k.rows(); ++i) d.output_ports.push_back(static_cast<Mode>(i));
  return d;
}

}  // namespace lincoh
