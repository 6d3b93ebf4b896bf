#include "zbargmann/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "zbargmann/errors.hpp"

namespace zbargmann::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_real(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

// Coefficient of i: "", "+", "-" mean +-1.
bool parse_imag_coefficient(std::string_view s, double& out) {
  if (s.empty() || s == "+") {
    out = 1.0;
    return true;
  }
  if (s == "-") {
    out = -1.0;
    return true;
  }
  return parse_real(s, out);
}

std::size_t parse_count(const std::string& token, const char* what) {
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), n);
  if (ec != std::errc{} || ptr != token.data() + token.size() || n == 0) {
    throw InputError(std::string("bad ") + what + ": '" + token + "'");
  }
  return n;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

cplx parse_complex(std::string_view token) {
  const std::string_view s = trim(token);
  if (s.empty()) throw InputError("empty complex number");
  const char last = s.back();
  if (last != 'i' && last != 'j') {
    double re = 0.0;
    if (!parse_real(s, re)) throw InputError("bad complex number: '" + std::string(s) + "'");
    return {re, 0.0};
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not leading and not an exponent sign
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  double re = 0.0, im = 0.0;
  bool ok = false;
  if (split == std::string_view::npos) {
    ok = parse_imag_coefficient(body, im);
  } else {
    ok = parse_real(body.substr(0, split), re) && parse_imag_coefficient(body.substr(split), im);
  }
  if (!ok) throw InputError("bad complex number: '" + std::string(s) + "'");
  return {re, im};
}

std::string format_complex(cplx value) {
  std::string out = format_double(value.real());
  if (value.imag() != 0.0 || std::signbit(value.imag())) {
    const std::string im = format_double(value.imag());
    if (im.front() != '-') out += '+';
    out += im;
    out += 'i';
  }
  return out;
}

MatrixOrKet parse_object(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  if (tokens.empty()) throw InputError("empty matrix file");
  std::size_t rows = 0, cols = 0, next = 0;
  bool square = false;
  if (tokens[0] == "dim" && tokens.size() >= 2) {
    rows = cols = parse_count(tokens[1], "dimension");
    square = true;
    next = 2;
  } else if (tokens[0] == "dims" && tokens.size() >= 3) {
    rows = parse_count(tokens[1], "row count");
    cols = parse_count(tokens[2], "column count");
    next = 3;
  } else {
    throw InputError("matrix file must start with 'dim n' or 'dims r c'");
  }
  std::vector<cplx> entries;
  entries.reserve(tokens.size() - next);
  for (std::size_t k = next; k < tokens.size(); ++k) entries.push_back(parse_complex(tokens[k]));
  if (square && entries.size() == rows) {
    Ket v(rows);
    for (std::size_t k = 0; k < rows; ++k) v[k] = entries[k];
    return v;
  }
  if (entries.size() != rows * cols) {
    throw InputError("expected " + std::to_string(rows * cols) + " entries" +
                     (square ? " (or " + std::to_string(rows) + " for a ket)" : std::string()) + ", found " +
                     std::to_string(entries.size()));
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

MatrixOrKet read_object(const std::filesystem::path& path) { return parse_object(slurp(path)); }

ComplexMatrix parse_matrix(std::string_view text) {
  MatrixOrKet obj = parse_object(text);
  if (auto* m = std::get_if<ComplexMatrix>(&obj)) return std::move(*m);
  throw InputError("expected a matrix, found a ket");
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
  try {
    return parse_matrix(slurp(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Ket read_ket(const std::filesystem::path& path) {
  MatrixOrKet obj = parse_object(slurp(path));
  if (auto* v = std::get_if<Ket>(&obj)) return std::move(*v);
  throw InputError(path.string() + ": expected a ket, found a matrix");
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out = m.is_square() ? "dim " + std::to_string(m.rows())
                                  : "dims " + std::to_string(m.rows()) + " " + std::to_string(m.cols());
  out += '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += format_complex(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string format_ket(const Ket& v) {
  std::string out = "dim " + std::to_string(v.dim()) + "\n";
  for (std::size_t k = 0; k < v.dim(); ++k) {
    if (k) out += ' ';
    out += format_complex(v[k]);
  }
  out += '\n';
  return out;
}

UnitCirclePoint parse_angle(std::string_view text) {
  const std::string s(trim(text));
  static const std::regex pi_form(R"(^([+-]?)(\d*)\s*\*?\s*pi\s*(?:/\s*(\d+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    std::int64_t num = m[2].length() ? std::stoll(m[2].str()) : 1;
    const std::int64_t den = m[3].length() ? std::stoll(m[3].str()) : 1;
    if (den == 0) throw InputError("angle denominator is zero: '" + s + "'");
    if (m[1].str() == "-") num = -num;
    return UnitCirclePoint::from_pi_fraction(num, den);
  }
  double radians = 0.0;
  if (!parse_real(s, radians)) throw InputError("bad angle: '" + s + "' (use e.g. pi/4, 2pi/3 or radians)");
  return UnitCirclePoint::from_angle(radians);
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) { row(header); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw InputError("csv row has the wrong number of cells");
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) out_ += ',';
    out_ += cells[k];
  }
  out_ += '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  row(cells);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path.string());
  out << text;
  if (!out) throw InputError("write failed: " + path.string());
}

}  // namespace zbargmann::io
