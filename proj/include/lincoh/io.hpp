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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lincoh/engine.hpp"
#include "lincoh/numerics.hpp"
#include "lincoh/synthesis.hpp"

namespace lincoh {

// Matrix files: `rows cols`, then rows·cols `re im` pairs in row-major order.
ComplexMatrix read_matrix(std::istream &in);
void write_matrix(std::ostream &out, const ComplexMatrix &m);

// Circuit files: `width=<n>`, then one element per line, in application
// order: `BS <i> <j> <theta> <phi>` or `PS <i> <phi>`.
Circuit read_circuit(std::istream &in);
void write_circuit(std::ostream &out, const Circuit &c);

// Amplitude files: `n=<width>`, then one `re im` line per starred amplitude.
AmplitudeVector read_amplitudes(std::istream &in);
void write_amplitudes(std::ostream &out, const AmplitudeVector &a);

ComplexMatrix read_matrix_file(const std::filesystem::path &path);
Circuit read_circuit_file(const std::filesystem::path &path);
AmplitudeVector read_amplitudes_file(const std::filesystem::path &path);
void write_matrix_file(const std::filesystem::path &path, const ComplexMatrix &m);
void write_circuit_file(const std::filesystem::path &path, const Circuit &c);
void write_amplitudes_file(const std::filesystem::path &path,
                           const AmplitudeVector &a);

/// "re,im" → complex. A bare "re" is accepted as a real number.
Complex parse_complex(std::string_view text);

/// "re,im,re,im,…" → list of complex numbers; needs an even count.
std::vector<Complex> parse_complex_list(std::string_view text);

/// Shortest round-trippable decimal for a double (17 significant digits).
std::string format_real(double x);

}  // namespace lincoh
