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

#include <stdexcept>
#include <string>

namespace lincoh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes that do not fit together, or an index outside a width.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// NaN or Inf where finite numbers are required.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

/// Singular values exceed one, so no passive circuit can realize the map.
class NotContractionError : public Error {
 public:
  using Error::Error;
};

/// A decomposition precondition failed; the message carries the residual.
class SynthesisError : public Error {
 public:
  using Error::Error;
};

/// Protocol parameters outside their valid range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (matrix, circuit or amplitude files, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lincoh
