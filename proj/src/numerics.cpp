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

#include "lincoh/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lincoh/errors.hpp"

namespace lincoh {

namespace {

void require_square(const ComplexMatrix &m, const char *what) {
  if (m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << what << ": expected a square matrix, got " << m.rows() << "x"
        << m.cols();
    throw DimensionError(msg.str());
  }
}

}  // namespace

double max_abs(const ComplexMatrix &m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix &m) { return m.allFinite(); }

void require_finite(const ComplexMatrix &m, const char *what) {
  if (!all_finite(m)) {
    throw NonFiniteError(std::string(what) + ": matrix has non-finite entries");
  }
}

double unitarity_residual(const ComplexMatrix &m) {
  require_square(m, "unitarity_residual");
  const auto n = m.rows();
  return max_abs(m * m.adjoint() - ComplexMatrix::Identity(n, n));
}

bool is_unitary(const ComplexMatrix &m, double tol) {
  return unitarity_residual(m) <= tol;
}

double hermiticity_residual(const ComplexMatrix &m) {
  require_square(m, "hermiticity_residual");
  return max_abs(m - m.adjoint());
}

ComplexMatrix Svd::reconstruct() const {
  ComplexMatrix sigma = ComplexMatrix::Zero(V.cols(), U.rows());
  for (Eigen::Index i = 0; i < D.size(); ++i) sigma(i, i) = D(i);
  return V * sigma * U;
}

Svd svd(const ComplexMatrix &m) {
  require_finite(m, "svd");
  Eigen::JacobiSVD<ComplexMatrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // Eigen returns M = U_e·S·V_e† with S already sorted descending.
  return Svd{dec.matrixU(), dec.singularValues(), dec.matrixV().adjoint()};
}

double spectral_norm(const ComplexMatrix &m) {
  const Svd s = svd(m);
  return s.D.size() == 0 ? 0.0 : s.D(0);
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m, double tol) {
  require_square(m, "psd_sqrt");
  require_finite(m, "psd_sqrt");
  const double scale = 1.0 + max_abs(m);
  const double herm = hermiticity_residual(m);
  if (herm > tol * scale) {
    std::ostringstream msg;
    msg << "psd_sqrt: matrix is not Hermitian (residual " << herm << ")";
    throw NotPsdError(msg.str());
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  RealVector values = eig.eigenvalues();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) < -tol) {
      std::ostringstream msg;
      msg << "psd_sqrt: eigenvalue " << values(i) << " is below -" << tol;
      throw NotPsdError(msg.str());
    }
    values(i) = std::sqrt(std::max(values(i), 0.0));
  }
  const ComplexMatrix &q = eig.eigenvectors();
  ComplexMatrix root = q * values.cast<Complex>().asDiagonal() * q.adjoint();
  return 0.5 * (root + root.adjoint());
}

}  // namespace lincoh
