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

#include "lincoh/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lincoh/errors.hpp"

namespace lincoh {

namespace {

constexpr double kSynthesisTol = 1e-10;

Circuit synthesize(const ComplexMatrix &u) {
  return reck_decompose(u, {kSynthesisTol, MeshFill::full});
}

void require_at_least(std::size_t n, std::size_t min, const char *what) {
  if (n < min) {
    std::ostringstream msg;
    msg << what << ": N must be at least " << min << ", got " << n;
    throw DomainError(msg.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Phase states and attenuation
// ---------------------------------------------------------------------------

ComplexMatrix dft_matrix(std::size_t n) {
  require_at_least(n, 1, "dft_matrix");
  const auto size = static_cast<Eigen::Index>(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix f(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index k = 0; k < size; ++k) {
      // Reduce jk mod n before scaling so large exponents keep full accuracy.
      const auto e = static_cast<double>((j * k) % size);
      f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * e / static_cast<double>(n));
    }
  }
  return f;
}

AmplitudeVector generate_phase_states(std::size_t n, Complex alpha, Mode input_port) {
  require_at_least(n, 1, "generate_phase_states");
  if (input_port >= n) {
    std::ostringstream msg;
    msg << "generate_phase_states: input port " << input_port << " outside width " << n;
    throw DimensionError(msg.str());
  }
  // The DFT is written on physical amplitudes; the engine wants starred ones.
  const Circuit circuit = synthesize(to_starred_map(dft_matrix(n)));
  AmplitudeVector in(n);
  in.starred()(static_cast<Eigen::Index>(input_port)) =
      std::sqrt(static_cast<double>(n)) * std::conj(alpha);
  return apply_circuit(circuit, in);
}

AmplitudeVector attenuation_ladder(std::size_t n, Complex alpha) {
  require_at_least(n, 1, "attenuation_ladder");
  const auto size = static_cast<Eigen::Index>(n);
  ComplexMatrix k = ComplexMatrix::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) k(i, i) = 1.0 / std::sqrt(static_cast<double>(i + 1));

  const Dilation d = dilate(k);
  const Circuit circuit = synthesize(d.unitary);
  ComplexVector copies = ComplexVector::Constant(size, std::conj(alpha));
  const AmplitudeVector out =
      apply_circuit(circuit, pad_vacuum(AmplitudeVector(copies), circuit.width()));
  return AmplitudeVector(ComplexVector(out.starred().head(size)));
}

// ---------------------------------------------------------------------------
// Restorable database search
// ---------------------------------------------------------------------------

ComplexMatrix comparison_map(std::size_t n, double c) {
  require_at_least(n, 2, "comparison_map");
  if (!std::isfinite(c)) throw NonFiniteError("comparison_map: scale must be finite");
  const auto size = static_cast<Eigen::Index>(n + 1);
  ComplexMatrix k = ComplexMatrix::Zero(size, size);
  for (Eigen::Index j = 1; j < size; ++j) {
    k(j, 0) = c;
    k(j, j) = -c;
  }
  return k;
}

double comparison_c_max(std::size_t n) {
  return 1.0 / std::sqrt(static_cast<double>(n + 1));
}

namespace {

ComplexMatrix two_reference_search_matrix(double ancilla_sign) {
  const double r3 = std::sqrt(1.0 / 3.0);
  const double r6 = ancilla_sign * std::sqrt(1.0 / 6.0);
  const double third = 1.0 / 3.0;
  const double plus = (2.0 + std::sqrt(6.0)) / 6.0;
  const double minus = (2.0 - std::sqrt(6.0)) / 6.0;
  ComplexMatrix u(6, 6);
  u << 0.0,   0.0,   0.0,   1.0, 0.0,  0.0,
       r3,    -r3,   0.0,   0.0, -r6,  r6,
       r3,    0.0,   -r3,   0.0, r6,   -r6,
       third, third, third, 0.0, r3,   r3,
       third, plus,  minus, 0.0, -r3,  0.0,
       third, minus, plus,  0.0, 0.0,  -r3;
  return u;
}

}  // namespace

ComplexMatrix search_unitary_paper() { return two_reference_search_matrix(1.0); }

ComplexMatrix search_unitary_as_printed() { return two_reference_search_matrix(-1.0); }

std::vector<std::pair<std::size_t, std::size_t>> degenerate_reference_pairs(
    const std::vector<Complex> &references, double tol) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < references.size(); ++i) {
    for (std::size_t j = i + 1; j < references.size(); ++j) {
      if (std::abs(references[i] - references[j]) <= tol) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

SearchCircuit::SearchCircuit(std::vector<Complex> references, SearchMode mode,
                             std::optional<double> c, DetectorModel detector)
    : references_(std::move(references)),
      mode_(mode),
      c_(0.0),
      detector_(detector),
      circuit_(1),
      inverse_(1) {
  const std::size_t n = references_.size();
  require_at_least(n, 2, "SearchCircuit");
  for (const Complex &r : references_) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
      throw NonFiniteError("SearchCircuit: reference amplitudes must be finite");
    }
  }
  c_ = c.value_or(comparison_c_max(n));
  if (mode_ == SearchMode::paper_exact) {
    if (n != 2) {
      throw DomainError("paper-exact search is defined for two references only");
    }
    if (std::abs(c_ - comparison_c_max(2)) > 1e-12) {
      throw DomainError("paper-exact search fixes the comparison scale to 1/sqrt(3)");
    }
    unitary_ = search_unitary_paper();
  } else {
    unitary_ = dilate(comparison_map(n, c_), 1e-12).unitary;
  }
  circuit_ = synthesize(unitary_);
  inverse_ = invert(circuit_);
}

std::vector<Mode> SearchCircuit::group_a_ports() const {
  std::vector<Mode> ports;
  for (Mode p = 0; p <= references_.size(); ++p) ports.push_back(p);
  return ports;
}

std::vector<Mode> SearchCircuit::group_b_ports() const {
  std::vector<Mode> ports;
  for (Mode p = references_.size() + 1; p < width(); ++p) ports.push_back(p);
  return ports;
}

std::vector<Mode> SearchCircuit::comparison_ports() const {
  std::vector<Mode> ports;
  for (Mode p = 1; p <= references_.size(); ++p) ports.push_back(p);
  return ports;
}

AmplitudeVector SearchCircuit::input(Complex data) const {
  AmplitudeVector in(width());
  in.starred()(0) = std::conj(data);
  for (std::size_t j = 0; j < references_.size(); ++j) {
    in.starred()(static_cast<Eigen::Index>(j + 1)) = std::conj(references_[j]);
  }
  return in;
}

AmplitudeVector SearchCircuit::forward(Complex data) const {
  return apply_circuit(circuit_, input(data));
}

std::optional<std::size_t> SearchCircuit::identify(
    const std::vector<ClickRecord> &clicks) const {
  std::optional<std::size_t> silent;
  std::size_t silent_count = 0;
  for (const auto &r : clicks) {
    if (r.clicked) continue;
    if (r.port == 0 || r.port > references_.size()) continue;
    ++silent_count;
    silent = r.port - 1;
  }
  if (clicks.size() != references_.size() || silent_count != 1) return std::nullopt;
  return silent;
}

SearchOutcome SearchCircuit::run(Complex data, std::uint64_t seed) const {
  const AmplitudeVector out = forward(data);
  SearchOutcome outcome;
  outcome.clicks = sample_clicks(out, comparison_ports(), seed, detector_);
  outcome.identified = identify(outcome.clicks);
  const auto n = static_cast<Eigen::Index>(references_.size() + 1);
  outcome.retained = AmplitudeVector(ComplexVector(out.starred().tail(n)));
  outcome.consumed_ports = group_a_ports();
  for (const auto &[i, j] : degenerate_reference_pairs(references_)) {
    std::ostringstream msg;
    msg << "references " << i + 1 << " and " << j + 1
        << " coincide; the search cannot tell them apart";
    outcome.warnings.push_back(msg.str());
  }
  return outcome;
}

AmplitudeVector SearchCircuit::restore(const SearchOutcome &outcome,
                                       Complex spare_data) const {
  const std::size_t half = references_.size() + 1;
  if (outcome.retained.width() != half) {
    std::ostringstream msg;
    msg << "restore: retained width " << outcome.retained.width() << " does not match "
        << half << " delay-line ports";
    throw DimensionError(msg.str());
  }
  if (outcome.identified && *outcome.identified >= references_.size()) {
    throw DimensionError("restore: identified index outside the reference set");
  }
  const Complex source =
      outcome.identified ? references_[*outcome.identified] : spare_data;
  // A fresh copy through the same circuit recreates what detection consumed.
  AmplitudeVector full = forward(source);
  const auto h = static_cast<Eigen::Index>(half);
  full.starred().tail(h) = outcome.retained.starred();
  return apply_circuit(inverse_, full);
}

SearchOutcome run_search(const SearchSpec &spec, std::uint64_t seed, SearchMode mode) {
  return SearchCircuit(spec.references, mode, spec.c).run(spec.data, seed);
}

AmplitudeVector restore(const SearchOutcome &outcome, const SearchSpec &spec,
                        SearchMode mode) {
  return SearchCircuit(spec.references, mode, spec.c).restore(outcome, spec.data);
}

double success_probability(Complex alpha1, Complex alpha2) {
  return -std::expm1(-std::norm(alpha1 - alpha2) / 3.0);
}

double search_success_probability(const std::vector<Complex> &references, double c) {
  if (references.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < references.size(); ++k) {
    double p = 1.0;
    for (std::size_t j = 0; j < references.size(); ++j) {
      if (j == k) continue;
      p *= -std::expm1(-c * c * std::norm(references[k] - references[j]));
    }
    total += p;
  }
  return total / static_cast<double>(references.size());
}

std::vector<SearchTrial> run_search_trials(const SearchCircuit &circuit,
                                           std::optional<Complex> data,
                                           std::size_t trials, std::uint64_t seed) {
  const auto &refs = circuit.references();
  std::optional<std::size_t> fixed_truth;
  if (data) {
    const auto it = std::find(refs.begin(), refs.end(), *data);
    if (it != refs.end()) fixed_truth = static_cast<std::size_t>(it - refs.begin());
  }
  std::vector<SearchTrial> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + t;
    SearchTrial trial{t, fixed_truth, {}};
    Complex d{};
    if (data) {
      d = *data;
    } else {
      Rng prior(mix_seed(trial_seed));
      const auto k = std::min(
          static_cast<std::size_t>(uniform01(prior) * static_cast<double>(refs.size())),
          refs.size() - 1);
      trial.truth = k;
      d = refs[k];
    }
    trial.outcome = circuit.run(d, trial_seed);
    out.push_back(std::move(trial));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bell-cat feasibility
// ---------------------------------------------------------------------------

std::pair<ComplexPair, ComplexPair> bell_target_pairs(BellTarget target, Complex alpha) {
  switch (target) {
    case BellTarget::B00:
    case BellTarget::B10:
      return {{-alpha, -alpha}, {alpha, alpha}};
    case BellTarget::B01:
    case BellTarget::B11:
      return {{-alpha, alpha}, {alpha, -alpha}};
  }
  throw DomainError("unknown Bell-cat target");
}

namespace {

Eigen::Vector2cd as_vector(const ComplexPair &p) { return {p[0], p[1]}; }

bool pair_finite(const ComplexPair &p) {
  return std::isfinite(p[0].real()) && std::isfinite(p[0].imag()) &&
         std::isfinite(p[1].real()) && std::isfinite(p[1].imag());
}

/// Builds a unitary W whose first row is orthogonal to s, so that
/// (W·v1)_1 = −(W·v2)_1 when s = v1 + v2, and reports whether it works.
bool unitary_sign_condition(const Eigen::Vector2cd &v1, const Eigen::Vector2cd &v2,
                            double tol) {
  const Eigen::Vector2cd s = v1 + v2;
  Eigen::Matrix2cd w = Eigen::Matrix2cd::Identity();
  const double ns = s.norm();
  if (ns > 0.0) {
    const Complex a = s(1) / ns;
    const Complex b = -s(0) / ns;
    w << a, b, -std::conj(b), std::conj(a);
  }
  const Eigen::Vector2cd w1 = w * v1;
  const Eigen::Vector2cd w2 = w * v2;
  const double scale = 1.0 + std::max(v1.norm(), v2.norm());
  return std::abs(w1(0) + w2(0)) <= tol * scale * 10.0 ||
         std::abs(w1(1) + w2(1)) <= tol * scale * 10.0;
}

}  // namespace

BellcatResult bellcat_feasibility(const BellcatQuery &q, double tol) {
  if (!pair_finite(q.v1) || !pair_finite(q.v2) || !std::isfinite(q.alpha.real()) ||
      !std::isfinite(q.alpha.imag())) {
    throw NonFiniteError("bellcat_feasibility: query entries must be finite");
  }
  const auto [t1p, t2p] = bell_target_pairs(q.target, q.alpha);
  const Eigen::Vector2cd v1 = as_vector(q.v1);
  const Eigen::Vector2cd v2 = as_vector(q.v2);
  const Eigen::Vector2cd t1 = as_vector(t1p);
  const Eigen::Vector2cd t2 = as_vector(t2p);
  const double n1 = v1.norm();
  const double n2 = v2.norm();
  const Complex det = v1(0) * v2(1) - v1(1) * v2(0);

  BellcatResult r;
  r.dependent = n1 == 0.0 || n2 == 0.0 || std::abs(det) <= tol * n1 * n2;
  const bool opposite = n1 > 0.0 && (v1 + v2).norm() <= tol * std::max(n1, n2);

  if (r.dependent) {
    r.unitary_condition = opposite;
    r.max_alpha = opposite ? n1 / std::numbers::sqrt2 : 0.0;
    if (q.alpha == Complex{}) {
      r.feasible = true;
      r.k = ComplexMatrix::Zero(2, 2);
      r.reason = "zero target amplitude: the zero map works";
    } else if (n1 == 0.0 || n2 == 0.0) {
      r.reason = "a zero input vector cannot produce a non-zero target";
    } else if (!opposite) {
      r.reason = "input vectors are linearly dependent but v1 != -v2";
    } else {
      // Minimum-norm rank-one map sending v1 to t1 (and hence v2 = −v1 to t2).
      const ComplexMatrix k = t1 * v1.adjoint() / (n1 * n1);
      r.k = k;
      r.sigma_max = t1.norm() / n1;
      r.feasible = r.sigma_max <= 1.0 + tol;
      r.reason = r.feasible ? "v1 = -v2 and sqrt(2)|alpha| <= |v1|"
                            : "v1 = -v2 but sqrt(2)|alpha| exceeds |v1|";
    }
  } else {
    Eigen::Matrix2cd inputs;
    inputs << v1, v2;
    Eigen::Matrix2cd targets;
    targets << t1, t2;
    const Eigen::Matrix2cd inv = inputs.inverse();
    const ComplexMatrix k = targets * inv;
    r.k = k;
    r.sigma_max = spectral_norm(k);
    r.feasible = r.sigma_max <= 1.0 + tol;
    r.unitary_condition = unitary_sign_condition(v1, v2, tol);
    // K scales linearly with α, so the feasible region is |α| ≤ 1/σ_max(K at α=1).
    const auto [u1, u2] = bell_target_pairs(q.target, Complex{1.0, 0.0});
    Eigen::Matrix2cd unit_targets;
    unit_targets << as_vector(u1), as_vector(u2);
    r.max_alpha = 1.0 / spectral_norm(ComplexMatrix(unit_targets * inv));
    r.reason = r.feasible ? "unique map is a contraction"
                          : "unique map has spectral norm above 1";
  }
  if (r.k) r.kernel_residual = (*r.k * (v1 + v2)).norm();
  return r;
}

}  // namespace lincoh
