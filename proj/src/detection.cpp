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

#include "lincoh/detection.hpp"

#include <cmath>
#include <sstream>

#include "lincoh/errors.hpp"

namespace lincoh {

double click_probability(Complex beta, const DetectorModel &model) {
  // -expm1 keeps precision for tiny |β|².
  const double mean = model.efficiency * std::norm(beta);
  if (model.dark_count == 0.0) return -std::expm1(-mean);
  return 1.0 - (1.0 - model.dark_count) * std::exp(-mean);
}

double uniform01(Rng &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<ClickRecord> sample_clicks(const AmplitudeVector &amps,
                                       const std::vector<Mode> &ports,
                                       std::uint64_t seed,
                                       const DetectorModel &model) {
  for (Mode p : ports) {
    if (p >= amps.width()) {
      std::ostringstream msg;
      msg << "sample_clicks: port " << p << " outside width " << amps.width();
      throw DimensionError(msg.str());
    }
  }
  Rng rng(seed);
  std::vector<ClickRecord> records;
  records.reserve(ports.size());
  for (Mode p : ports) {
    const double prob = click_probability(amps.starred(p), model);
    records.push_back({p, uniform01(rng) < prob, prob});
  }
  return records;
}

}  // namespace lincoh
