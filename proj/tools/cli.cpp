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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "lincoh/detection.hpp"
#include "lincoh/engine.hpp"
#include "lincoh/errors.hpp"
#include "lincoh/io.hpp"
#include "lincoh/numerics.hpp"
#include "lincoh/protocols.hpp"
#include "lincoh/synthesis.hpp"

namespace lincoh::cli {

namespace {

struct SynthArgs {
  std::string in;
  std::string out;
  double tol = kUnitaryTol;
  std::string mesh = "compact";
};

struct RunArgs {
  std::string circuit;
  std::string amps;
};

struct SearchArgs {
  std::size_t n = 2;
  std::string refs;
  std::string data;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string mode = "dilation";
  std::optional<double> c;
  std::string csv = "-";
  std::string clicks_csv;
  double efficiency = 1.0;
  double dark_count = 0.0;
};

struct QkdArgs {
  std::size_t n = 4;
  std::string alpha = "1,0";
  std::size_t port = 2;
};

struct BellcatArgs {
  std::string v1;
  std::string v2;
  std::string alpha;
  std::string target = "B00";
};

/// Prints a real with tiny round-off residue shown as zero.
std::string show(double x) {
  if (std::abs(x) < 1e-14) x = 0.0;
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string show(Complex z) {
  return show(z.real()) + " " + show(z.imag());
}

ComplexPair parse_pair(const std::string &text, const char *flag) {
  const auto values = parse_complex_list(text);
  if (values.size() != 2) {
    throw ParseError(std::string(flag) + " expects re,im,re,im (two complex entries)");
  }
  return {values[0], values[1]};
}

// ---------------------------------------------------------------------------

int cmd_synth(const SynthArgs &a, std::ostream &out) {
  const ComplexMatrix m = read_matrix_file(a.in);
  const MeshFill fill = a.mesh == "full" ? MeshFill::full : MeshFill::compact;

  ComplexMatrix target;
  std::optional<Dilation> dilation;
  if (m.rows() == m.cols() && is_unitary(m, a.tol)) {
    target = m;
  } else {
    dilation = dilate(m, a.tol);
    target = dilation->unitary;
  }
  const Circuit c = reck_decompose(target, {a.tol, fill});
  write_circuit_file(a.out, c);

  out << "path: " << (dilation ? "dilation" : "unitary") << '\n';
  out << "width: " << c.width() << '\n';
  out << "beamsplitters: " << c.beamsplitter_count() << '\n';
  out << "phase_shifters: " << c.phaseshifter_count() << '\n';
  out << "residual: " << max_abs(compile(c) - target) << '\n';
  if (dilation) {
    out << "inputs: ports 1'.." << dilation->input_ports.size() << "', others dark\n";
    out << "outputs: ports 1'.." << dilation->output_ports.size() << "'\n";
  }
  return kSuccess;
}

int cmd_run(const RunArgs &a, std::ostream &out) {
  const Circuit c = read_circuit_file(a.circuit);
  const AmplitudeVector in = read_amplitudes_file(a.amps);
  const AmplitudeVector result = apply_circuit(c, in);
  out << "port starred_re starred_im physical_re physical_im\n";
  for (std::size_t i = 0; i < result.width(); ++i) {
    out << i + 1 << "' " << show(result.starred(i)) << ' ' << show(result.physical(i))
        << '\n';
  }
  out << "photons_in: " << format_real(mean_photon_number(in)) << '\n';
  out << "photons_out: " << format_real(mean_photon_number(result)) << '\n';
  return kSuccess;
}

int cmd_search(const SearchArgs &a, std::ostream &out, std::ostream &err) {
  const std::vector<Complex> refs = parse_complex_list(a.refs);
  if (refs.size() != a.n) {
    std::ostringstream msg;
    msg << "--refs has " << refs.size() << " amplitudes but --n is " << a.n;
    throw DomainError(msg.str());
  }
  std::optional<Complex> data;
  if (!a.data.empty()) data = parse_complex(a.data);
  const SearchMode mode =
      a.mode == "paper-exact" ? SearchMode::paper_exact : SearchMode::dilation;

  const SearchCircuit circuit(refs, mode, a.c, DetectorModel{a.efficiency, a.dark_count});
  for (const auto &[i, j] : degenerate_reference_pairs(refs)) {
    err << "warning: references " << i + 1 << " and " << j + 1
        << " coincide; they cannot be told apart\n";
  }
  const double analytic = search_success_probability(refs, circuit.scale());
  const auto trials = run_search_trials(circuit, data, a.trials, a.seed);

  std::ofstream csv_file;
  std::ostream *csv = &out;
  if (a.csv != "-") {
    csv_file.open(a.csv);
    if (!csv_file) throw ParseError("cannot write '" + a.csv + "'");
    csv = &csv_file;
  }
  std::ofstream clicks_file;
  if (!a.clicks_csv.empty()) {
    clicks_file.open(a.clicks_csv);
    if (!clicks_file) throw ParseError("cannot write '" + a.clicks_csv + "'");
    clicks_file << "trial,port,clicked\n";
  }

  *csv << "trial,identified,clicked_ports,p_succ_analytic\n";
  std::size_t identified = 0;
  std::size_t correct = 0;
  std::size_t wrong = 0;
  for (const auto &t : trials) {
    const auto &o = t.outcome;
    *csv << t.trial << ',';
    if (o.identified) {
      *csv << *o.identified + 1;
    } else {
      *csv << "inconclusive";
    }
    *csv << ',';
    bool first = true;
    for (const auto &r : o.clicks) {
      if (!r.clicked) continue;
      *csv << (first ? "" : ";") << r.port + 1;
      first = false;
    }
    *csv << ',' << format_real(analytic) << '\n';
    if (clicks_file.is_open()) {
      for (const auto &r : o.clicks) {
        clicks_file << t.trial << ',' << r.port + 1 << ',' << (r.clicked ? 1 : 0) << '\n';
      }
    }
    if (o.identified) {
      ++identified;
      if (t.truth && *t.truth == *o.identified) {
        ++correct;
      } else if (t.truth) {
        ++wrong;
      }
    }
  }

  const double n_trials = static_cast<double>(std::max<std::size_t>(a.trials, 1));
  err << std::setprecision(6) << std::fixed;
  err << "references: " << refs.size() << ", mode: " << a.mode
      << ", c: " << circuit.scale() << ", circuit beamsplitters: "
      << circuit.circuit().beamsplitter_count() << '\n';
  err << "trials: " << a.trials << ", identified: " << identified
      << ", misidentified: " << wrong << '\n';
  err << "empirical success rate: " << static_cast<double>(correct) / n_trials << '\n';
  err << "analytic P_succ: " << analytic << '\n';
  err.unsetf(std::ios::floatfield);
  return kSuccess;
}

int cmd_qkd(const QkdArgs &a, std::ostream &out) {
  if (a.port < 1 || a.port > a.n) {
    throw DomainError("--port must lie in 1..n");
  }
  const Complex alpha = parse_complex(a.alpha);
  const AmplitudeVector states = generate_phase_states(a.n, alpha, a.port - 1);
  out << "port physical_re physical_im\n";
  for (std::size_t k = 0; k < states.width(); ++k) {
    out << k + 1 << "' " << show(states.physical(k)) << '\n';
  }
  out << "photons: " << format_real(mean_photon_number(states)) << '\n';
  return kSuccess;
}

int cmd_bellcat(const BellcatArgs &a, std::ostream &out) {
  static const std::map<std::string, BellTarget> targets{
      {"B00", BellTarget::B00}, {"B10", BellTarget::B10},
      {"B01", BellTarget::B01}, {"B11", BellTarget::B11}};
  BellcatQuery q{parse_pair(a.v1, "--v1"), parse_pair(a.v2, "--v2"),
                 parse_complex(a.alpha), targets.at(a.target)};
  const BellcatResult r = bellcat_feasibility(q);
  out << (r.feasible ? "feasible" : "infeasible") << '\n';
  out << "reason: " << r.reason << '\n';
  out << "inputs: " << (r.dependent ? "dependent" : "independent") << '\n';
  out << "sigma_max: " << format_real(r.sigma_max) << '\n';
  out << "max_alpha: " << format_real(r.max_alpha) << '\n';
  out << "necessary_condition: " << (r.unitary_condition ? "holds" : "fails") << '\n';
  if (r.k) {
    out << "kernel_residual: " << format_real(r.kernel_residual) << '\n';
    out << "K:\n";
    write_matrix(out, *r.k);
  } else {
    out << "K: none\n";
  }
  return r.feasible ? kSuccess : kDomainError;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Linear-optical circuits for coherent states", "lincoh"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto *synth_cmd = app.add_subcommand("synth", "Synthesize a circuit from a unitary or contraction");
  synth_cmd->add_option("--in", synth.in, "Matrix file")->required();
  synth_cmd->add_option("--out", synth.out, "Circuit file to write")->required();
  synth_cmd->add_option("--tol", synth.tol, "Unitarity / contraction tolerance")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--mesh", synth.mesh, "compact skips idle mesh positions")
      ->check(CLI::IsMember({"compact", "full"}));

  RunArgs run_args;
  auto *run_cmd = app.add_subcommand("run", "Propagate coherent amplitudes through a circuit");
  run_cmd->add_option("--circuit", run_args.circuit, "Circuit file")->required();
  run_cmd->add_option("--amps", run_args.amps, "Starred amplitude file")->required();

  SearchArgs search;
  auto *search_cmd = app.add_subcommand("search", "Restorable coherent-state database search");
  search_cmd->add_option("--n", search.n, "Number of references")->check(CLI::Range(2, 64));
  search_cmd->add_option("--refs", search.refs, "Reference amplitudes re,im,re,im,...")
      ->required();
  search_cmd->add_option("--data", search.data,
                         "Fixed data amplitude re,im (default: drawn among references)");
  search_cmd->add_option("--trials", search.trials, "Number of trials");
  search_cmd->add_option("--seed", search.seed, "Base seed; trial t uses seed + t");
  search_cmd->add_option("--mode", search.mode, "Search unitary")
      ->check(CLI::IsMember({"paper-exact", "dilation"}));
  search_cmd->add_option("--c", search.c, "Comparison scale (default 1/sqrt(N+1))")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--csv", search.csv, "Trial CSV path, '-' for stdout");
  search_cmd->add_option("--clicks-csv", search.clicks_csv, "Per-port click CSV path");
  search_cmd->add_option("--efficiency", search.efficiency, "Detector efficiency")
      ->check(CLI::Range(0.0, 1.0));
  search_cmd->add_option("--dark-count", search.dark_count, "Dark-count probability")
      ->check(CLI::Range(0.0, 1.0));

  QkdArgs qkd;
  auto *qkd_cmd = app.add_subcommand("qkd", "Generate the N phase-rotated coherent states");
  qkd_cmd->add_option("--n", qkd.n, "Number of states")->check(CLI::Range(1, 1024));
  qkd_cmd->add_option("--alpha", qkd.alpha, "Amplitude re,im");
  qkd_cmd->add_option("--port", qkd.port, "1-based input port (1 gives identical copies)");

  BellcatArgs bell;
  auto *bell_cmd = app.add_subcommand("bellcat", "Check Bell-cat preparation feasibility");
  bell_cmd->add_option("--v1", bell.v1, "First branch amplitudes re,im,re,im")->required();
  bell_cmd->add_option("--v2", bell.v2, "Second branch amplitudes re,im,re,im")->required();
  bell_cmd->add_option("--alpha", bell.alpha, "Target amplitude re,im")->required();
  bell_cmd->add_option("--target", bell.target, "Bell-cat target")
      ->check(CLI::IsMember({"B00", "B10", "B01", "B11"}));

  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (synth_cmd->parsed()) return cmd_synth(synth, out);
    if (run_cmd->parsed()) return cmd_run(run_args, out);
    if (search_cmd->parsed()) return cmd_search(search, out, err);
    if (qkd_cmd->parsed()) return cmd_qkd(qkd, out);
    if (bell_cmd->parsed()) return cmd_bellcat(bell, out);
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kParseError;
}

}  // namespace lincoh::cli
