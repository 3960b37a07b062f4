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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lincoh/detection.hpp"
#include "lincoh/engine.hpp"
#include "lincoh/numerics.hpp"
#include "lincoh/synthesis.hpp"

namespace lincoh {

// ---------------------------------------------------------------------------
// Phase states and attenuation
// ---------------------------------------------------------------------------

/// F_{jk} = ω^{jk}/√n with ω = e^{2πi/n}, 0-based indices. Acts on physical
/// amplitudes.
ComplexMatrix dft_matrix(std::size_t n);

/// Sends √n·α into `input_port` of the DFT circuit (all other ports dark) and
/// returns the output. With the default port 1 the physical outputs are
/// α·ω^k; with port 0 they are n copies of α.
AmplitudeVector generate_phase_states(std::size_t n, Complex alpha,
                                      Mode input_port = 1);

/// Runs n copies of α through the dilation of diag(1, 1/√2, …, 1/√n) and
/// returns the n signal outputs α/√(k+1).
AmplitudeVector attenuation_ladder(std::size_t n, Complex alpha);

// ---------------------------------------------------------------------------
// Restorable database search
// ---------------------------------------------------------------------------

/// (n+1)×(n+1): row 0 zero, row j has c at column 0 and −c at column j.
/// Acting on (α₀*, α₁*, …, α_n*) it yields (0, c(α₀*−α₁*), …).
ComplexMatrix comparison_map(std::size_t n, double c);

/// Largest c keeping comparison_map a contraction: 1/√(n+1).
double comparison_c_max(std::size_t n);

/// The explicit 6×6 two-reference search unitary, whose lower three rows
/// carry the retained (delay-line) outputs.
///
/// The commonly quoted form of this matrix has the ±1/√6 entries of rows 2
/// and 3 with the opposite sign, which breaks unitarity (‖UU†−I‖ = √2/3).
/// Here those four signs are flipped. Columns 5 and 6 only see dark ports, so
/// the search outputs are the same either way.
ComplexMatrix search_unitary_paper();

/// The quoted form with the sign error kept, for comparison only.
ComplexMatrix search_unitary_as_printed();

enum class SearchMode {
  /// The explicit 6×6 constant; two references only.
  paper_exact,
  /// Canonical dilation of comparison_map(N, c); any N ≥ 2.
  dilation,
};

struct SearchSpec {
  std::vector<Complex> references;
  Complex data{};
  /// Comparison scale; comparison_c_max(N) when unset.
  std::optional<double> c;
};

struct SearchOutcome {
  /// Index into the references, or empty when inconclusive.
  std::optional<std::size_t> identified;
  std::vector<ClickRecord> clicks;
  /// Group-B outputs, kept in delay lines for restoration.
  AmplitudeVector retained;
  /// Group-A output ports, destroyed by detection.
  std::vector<Mode> consumed_ports;
  std::vector<std::string> warnings;
};

/// Pairs (i, j), i < j, of references closer than `tol`; such pairs cannot be
/// told apart.
std::vector<std::pair<std::size_t, std::size_t>> degenerate_reference_pairs(
    const std::vector<Complex> &references, double tol = 1e-12);

/// A synthesized search interferometer on 2(N+1) modes.
///
/// Output ports 0..N form group A (port 0 is always dark, ports 1..N are the
/// comparison ports that get detected), ports N+1..2N+1 form group B. Inputs
/// are (α₀, α₁, …, α_N) on ports 0..N with the remaining ports dark.
class SearchCircuit {
 public:
  SearchCircuit(std::vector<Complex> references, SearchMode mode,
                std::optional<double> c = std::nullopt,
                DetectorModel detector = {});

  std::size_t reference_count() const { return references_.size(); }
  std::size_t width() const { return 2 * (references_.size() + 1); }
  const std::vector<Complex> &references() const { return references_; }
  SearchMode mode() const { return mode_; }
  double scale() const { return c_; }

  const ComplexMatrix &unitary() const { return unitary_; }
  const Circuit &circuit() const { return circuit_; }

  std::vector<Mode> group_a_ports() const;
  std::vector<Mode> group_b_ports() const;
  std::vector<Mode> comparison_ports() const;

  /// Starred input vector for the given data amplitude, dark ports included.
  AmplitudeVector input(Complex data) const;

  /// Full output of the circuit for the given data amplitude.
  AmplitudeVector forward(Complex data) const;

  SearchOutcome run(Complex data, std::uint64_t seed) const;

  /// Rebuilds the full output (retained group B plus freshly prepared group A
  /// states) and sends it back through the inverted circuit. Group A is
  /// replenished from a forward pass of the identified reference, or of
  /// `spare_data` for inconclusive outcomes.
  AmplitudeVector restore(const SearchOutcome &outcome,
                          Complex spare_data) const;

  /// Decision from a click pattern on the comparison ports: reference k when
  /// every comparison port except k's clicked and k's stayed dark.
  std::optional<std::size_t> identify(
      const std::vector<ClickRecord> &clicks) const;

 private:
  std::vector<Complex> references_;
  SearchMode mode_;
  double c_;
  DetectorModel detector_;
  ComplexMatrix unitary_;
  Circuit circuit_;
  Circuit inverse_;
};

SearchOutcome run_search(const SearchSpec &spec, std::uint64_t seed,
                         SearchMode mode = SearchMode::dilation);

AmplitudeVector restore(const SearchOutcome &outcome, const SearchSpec &spec,
                        SearchMode mode = SearchMode::dilation);

/// Two-reference success probability with equal priors:
/// 1 − e^{−|α₁−α₂|²/3}.
double success_probability(Complex alpha1, Complex alpha2);

/// Equal-prior success probability for any reference set and scale:
/// the mean over k of Π_{j≠k} (1 − e^{−c²|α_k−α_j|²}).
double search_success_probability(const std::vector<Complex> &references,
                                  double c);

struct SearchTrial {
  std::size_t trial;
  /// Which reference the data was drawn as; empty for fixed non-reference data.
  std::optional<std::size_t> truth;
  SearchOutcome outcome;
};

/// Runs `trials` independent searches. Trial t samples clicks with seed
/// `seed + t`. Without fixed data each trial draws α₀ uniformly among the
/// references from a separate stream keyed on mix_seed(seed + t).
std::vector<SearchTrial> run_search_trials(const SearchCircuit &circuit,
                                           std::optional<Complex> data,
                                           std::size_t trials,
                                           std::uint64_t seed);

// ---------------------------------------------------------------------------
// Bell-cat feasibility
// ---------------------------------------------------------------------------

enum class BellTarget { B00, B10, B01, B11 };

using ComplexPair = std::array<Complex, 2>;

struct BellcatQuery {
  ComplexPair v1;
  ComplexPair v2;
  Complex alpha;
  BellTarget target = BellTarget::B00;
};

/// The two amplitude pairs (t1, t2) the contraction must produce from v1 and
/// v2. B00/B10 need (−α,−α), (α,α); B01/B11 need (−α,α), (α,−α).
std::pair<ComplexPair, ComplexPair> bell_target_pairs(BellTarget target,
                                                      Complex alpha);

struct BellcatResult {
  bool feasible = false;
  bool dependent = false;
  /// The candidate map (unique when v1, v2 are independent, minimum-norm
  /// rank one otherwise). Empty when no linear map hits both targets.
  std::optional<ComplexMatrix> k;
  double sigma_max = 0.0;
  /// Largest |α| for which the query stays feasible.
  double max_alpha = 0.0;
  /// ‖K·(v1+v2)‖, zero whenever a solution exists.
  double kernel_residual = 0.0;
  /// Whether some unitary W gives (Wv1)_1 = −(Wv2)_1 or (Wv1)_2 = −(Wv2)_2.
  bool unitary_condition = false;
  std::string reason;
};

BellcatResult bellcat_feasibility(const BellcatQuery &q, double tol = 1e-12);

}  // namespace lincoh
