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

#include <complex>

#include <Eigen/Dense>

namespace lincoh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kPsdTol = 1e-12;

/// Largest entry modulus, the norm used for every residual in the library.
double max_abs(const ComplexMatrix &m);

bool all_finite(const ComplexMatrix &m);

/// Throws NonFiniteError if any entry is NaN or Inf.
void require_finite(const ComplexMatrix &m, const char *what);

/// ‖M·M† − I‖_max. Throws DimensionError for non-square input.
double unitarity_residual(const ComplexMatrix &m);

bool is_unitary(const ComplexMatrix &m, double tol = kUnitaryTol);

/// ‖M − M†‖_max. Throws DimensionError for non-square input.
double hermiticity_residual(const ComplexMatrix &m);

/// Full singular value decomposition M = V·diag(D)·U.
///
/// For an r×c input, V is r×r, U is c×c and D has min(r, c) entries sorted
/// descending. `diag(D)` is the r×c rectangular diagonal.
struct Svd {
  ComplexMatrix V;
  RealVector D;
  ComplexMatrix U;

  ComplexMatrix reconstruct() const;
};

Svd svd(const ComplexMatrix &m);

/// Largest singular value.
double spectral_norm(const ComplexMatrix &m);

/// Hermitian square root of a positive semi-definite matrix.
///
/// Eigenvalues in [-tol, 0) are clipped to zero; anything below -tol raises
/// NotPsdError. Input must be Hermitian to within tol (scaled by the matrix
/// magnitude), otherwise NotPsdError as well.
ComplexMatrix psd_sqrt(const ComplexMatrix &m, double tol = kPsdTol);

}  // namespace lincoh
