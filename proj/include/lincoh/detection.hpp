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
#include <cstdint>
#include <random>
#include <vector>

#include "lincoh/elements.hpp"
#include "lincoh/engine.hpp"

namespace lincoh {

/// Threshold photodiode. Defaults describe an ideal detector.
struct DetectorModel {
  double efficiency = 1.0;
  double dark_count = 0.0;
};

/// Probability that a threshold detector fires on the coherent state |β⟩:
/// 1 − (1 − dark)·e^{−η|β|²}, which is 1 − e^{−|β|²} for the ideal detector.
double click_probability(Complex beta, const DetectorModel &model = {});

struct ClickRecord {
  Mode port;
  bool clicked;
  double probability;

  bool operator==(const ClickRecord &) const = default;
};

/// Generator used for every random draw in the library. mt19937_64 is fully
/// specified by the standard, so sequences agree across platforms.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw. Standard
/// distributions are avoided because their output is implementation-defined.
double uniform01(Rng &rng);

/// splitmix64 finalizer; decorrelates derived seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// One independent Bernoulli draw per listed port, in list order, from an
/// Rng seeded with `seed`. Throws DimensionError for ports outside the width.
std::vector<ClickRecord> sample_clicks(const AmplitudeVector &amps,
                                       const std::vector<Mode> &ports,
                                       std::uint64_t seed,
                                       const DetectorModel &model = {});

}  // namespace lincoh
