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

#include "lincoh/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "lincoh/errors.hpp"

namespace lincoh {

namespace {

double parse_real(std::string_view text, std::string_view what) {
  // from_chars rejects a leading '+', which users do type.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto *first = text.data();
  const auto *last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "invalid " << what << ": '" << text << "'";
    throw ParseError(msg.str());
  }
  return value;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// Next line that is not blank; false at end of stream.
bool next_content_line(std::istream &in, std::string &line) {
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) return true;
  }
  return false;
}

double read_token(std::istream &in, std::string_view what) {
  std::string token;
  if (!(in >> token)) {
    throw ParseError("unexpected end of input while reading " + std::string(what));
  }
  return parse_real(token, what);
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto *last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    std::ostringstream msg;
    msg << "invalid " << what << ": '" << text << "'";
    throw ParseError(msg.str());
  }
  return value;
}

/// Parses a `key=<count>` header line.
std::size_t parse_header(std::istream &in, std::string_view key) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw ParseError("missing '" + std::string(key) + "=' header");
  }
  const std::string prefix = std::string(key) + "=";
  if (line.rfind(prefix, 0) != 0) {
    throw ParseError("expected '" + prefix + "<n>' header, got '" + line + "'");
  }
  return parse_count(trim(std::string_view(line).substr(prefix.size())), key);
}

void expect_exhausted(std::istream &in, std::string_view what) {
  std::string rest;
  if (in >> rest) {
    throw ParseError("trailing content after " + std::string(what) + ": '" + rest + "'");
  }
}

template <class T, class Reader>
T read_path(const std::filesystem::path &path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return reader(in);
}

template <class T, class Writer>
void write_path(const std::filesystem::path &path, const T &value, Writer writer) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  writer(out, value);
  if (!out) throw ParseError("write to '" + path.string() + "' failed");
}

}  // namespace

std::string format_real(double x) {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return s.str();
}

ComplexMatrix read_matrix(std::istream &in) {
  const double rows = read_token(in, "row count");
  const double cols = read_token(in, "column count");
  if (rows < 1 || cols < 1 || rows != std::floor(rows) || cols != std::floor(cols)) {
    throw ParseError("matrix dimensions must be positive integers");
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double re = read_token(in, "matrix entry");
      const double im = read_token(in, "matrix entry");
      m(i, j) = {re, im};
    }
  }
  expect_exhausted(in, "matrix");
  return m;
}

void write_matrix(std::ostream &out, const ComplexMatrix &m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << "  ";
      out << format_real(m(i, j).real()) << ' ' << format_real(m(i, j).imag());
    }
    out << '\n';
  }
}

Circuit read_circuit(std::istream &in) {
  const std::size_t width = parse_header(in, "width");
  if (width == 0) throw ParseError("circuit width must be at least 1");
  Circuit circuit(width);
  std::string line;
  std::size_t line_no = 1;
  while (next_content_line(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    std::vector<std::string> args;
    for (std::string a; fields >> a;) args.push_back(a);
    auto fail = [&](const std::string &why) {
      std::ostringstream msg;
      msg << "circuit element " << line_no - 1 << " ('" << line << "'): " << why;
      throw ParseError(msg.str());
    };
    try {
      if (kind == "BS") {
        if (args.size() != 4) fail("expected BS <i> <j> <theta> <phi>");
        circuit.append(Beamsplitter{parse_count(args[0], "mode"), parse_count(args[1], "mode"),
                                    parse_real(args[2], "theta"), parse_real(args[3], "phi")});
      } else if (kind == "PS") {
        if (args.size() != 2) fail("expected PS <i> <phi>");
        circuit.append(PhaseShifter{parse_count(args[0], "mode"), parse_real(args[1], "phi")});
      } else {
        fail("unknown element kind '" + kind + "'");
      }
    } catch (const DimensionError &e) {
      fail(e.what());
    }
  }
  return circuit;
}

void write_circuit(std::ostream &out, const Circuit &c) {
  out << "width=" << c.width() << '\n';
  for (const auto &e : c.elements()) {
    if (const auto *bs = std::get_if<Beamsplitter>(&e)) {
      out << "BS " << bs->first << ' ' << bs->second << ' ' << format_real(bs->theta)
          << ' ' << format_real(bs->phi) << '\n';
    } else {
      const auto &ps = std::get<PhaseShifter>(e);
      out << "PS " << ps.mode << ' ' << format_real(ps.phi) << '\n';
    }
  }
}

AmplitudeVector read_amplitudes(std::istream &in) {
  const std::size_t n = parse_header(in, "n");
  if (n == 0) throw ParseError("amplitude vector width must be at least 1");
  ComplexVector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double re = read_token(in, "amplitude");
    const double im = read_token(in, "amplitude");
    v(static_cast<Eigen::Index>(i)) = {re, im};
  }
  expect_exhausted(in, "amplitudes");
  return AmplitudeVector(std::move(v));
}

void write_amplitudes(std::ostream &out, const AmplitudeVector &a) {
  out << "n=" << a.width() << '\n';
  for (std::size_t i = 0; i < a.width(); ++i) {
    out << format_real(a.starred(i).real()) << ' ' << format_real(a.starred(i).imag())
        << '\n';
  }
}

ComplexMatrix read_matrix_file(const std::filesystem::path &path) {
  return read_path<ComplexMatrix>(path, [](std::istream &in) { return read_matrix(in); });
}

Circuit read_circuit_file(const std::filesystem::path &path) {
  return read_path<Circuit>(path, [](std::istream &in) { return read_circuit(in); });
}

AmplitudeVector read_amplitudes_file(const std::filesystem::path &path) {
  return read_path<AmplitudeVector>(path,
                                    [](std::istream &in) { return read_amplitudes(in); });
}

void write_matrix_file(const std::filesystem::path &path, const ComplexMatrix &m) {
  write_path(path, m, [](std::ostream &o, const ComplexMatrix &v) { write_matrix(o, v); });
}

void write_circuit_file(const std::filesystem::path &path, const Circuit &c) {
  write_path(path, c, [](std::ostream &o, const Circuit &v) { write_circuit(o, v); });
}

void write_amplitudes_file(const std::filesystem::path &path, const AmplitudeVector &a) {
  write_path(path, a,
             [](std::ostream &o, const AmplitudeVector &v) { write_amplitudes(o, v); });
}

Complex parse_complex(std::string_view text) {
  const std::string t = trim(text);
  const auto comma = t.find(',');
  if (comma == std::string::npos) return {parse_real(t, "complex value"), 0.0};
  if (t.find(',', comma + 1) != std::string::npos) {
    throw ParseError("invalid complex value '" + t + "': expected re,im");
  }
  return {parse_real(trim(std::string_view(t).substr(0, comma)), "real part"),
          parse_real(trim(std::string_view(t).substr(comma + 1)), "imaginary part")};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<double> reals;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    reals.push_back(parse_real(trim(rest.substr(0, comma)), "list entry"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (reals.size() % 2 != 0) {
    throw ParseError("complex list '" + std::string(text) +
                     "' needs an even number of values (re,im pairs)");
  }
  std::vector<Complex> out;
  for (std::size_t i = 0; i < reals.size(); i += 2) out.emplace_back(reals[i], reals[i + 1]);
  return out;
}

}  // namespace lincoh
