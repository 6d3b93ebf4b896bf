#pragma once

// Plain-text matrix/ket files, angle strings and CSV output.
//
// File format:
//   dim n          followed by n entries (a ket) or n*n entries (a matrix, row-major)
//   dims r c       followed by r*c entries
// Entries are whitespace separated complex numbers such as 1, -2.5, i, -3i,
// 1+2i, 0.5-1e-3i. Lines starting with '#' are ignored.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zbargmann/hilbert.hpp"

namespace zbargmann::io {

cplx parse_complex(std::string_view token);
std::string format_complex(cplx value);

using MatrixOrKet = std::variant<Ket, ComplexMatrix>;

MatrixOrKet parse_object(std::string_view text);
MatrixOrKet read_object(const std::filesystem::path& path);

ComplexMatrix parse_matrix(std::string_view text);
ComplexMatrix read_matrix(const std::filesystem::path& path);
Ket read_ket(const std::filesystem::path& path);

std::string format_matrix(const ComplexMatrix& m);
std::string format_ket(const Ket& v);

// "pi/4", "2pi/3", "-pi/2", "3*pi/5", "pi", or decimal radians.
UnitCirclePoint parse_angle(std::string_view text);

// %.17g, so values round-trip exactly.
std::string format_double(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void row(const std::vector<std::string>& cells);
  void row(std::initializer_list<double> values);

  const std::string& str() const noexcept { return out_; }

 private:
  std::size_t columns_;
  std::string out_;
};

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace zbargmann::io
