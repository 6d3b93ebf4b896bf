#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace zbargmann {

using cplx = std::complex<double>;

// Complex column vector: pure states, Bargmann coordinates, dequantisation
// scalars. Unit norm is checked by the operations that need it.
class Ket {
 public:
  Ket() = default;
  explicit Ket(std::size_t dim) : entries_(dim) {}
  explicit Ket(std::vector<cplx> entries) : entries_(std::move(entries)) {}
  Ket(std::initializer_list<cplx> entries) : entries_(entries) {}

  std::size_t dim() const noexcept { return entries_.size(); }

  cplx& operator[](std::size_t i) { return entries_[i]; }
  const cplx& operator[](std::size_t i) const { return entries_[i]; }

  std::span<cplx> data() noexcept { return entries_; }
  std::span<const cplx> data() const noexcept { return entries_; }
  const std::vector<cplx>& entries() const noexcept { return entries_; }

  double norm() const;
  bool all_finite() const;

  Ket& operator+=(const Ket& other);
  Ket& operator-=(const Ket& other);
  Ket& operator*=(cplx s);

 private:
  std::vector<cplx> entries_;
};

Ket operator+(Ket a, const Ket& b);
Ket operator-(Ket a, const Ket& b);
Ket operator*(cplx s, Ket a);

// <u|v>
cplx inner(const Ket& u, const Ket& v);
double max_abs_diff(const Ket& a, const Ket& b);

// Dense row-major complex matrix. Operators, density matrices and projectors
// are square; the semi-unitary d x 2d matrices are the one rectangular use.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  explicit ComplexMatrix(std::size_t n) : ComplexMatrix(n, n) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  // Dimension of a square matrix; throws InputError otherwise.
  std::size_t dim() const;

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<cplx> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const cplx> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<const cplx> data() const noexcept { return entries_; }
  std::span<cplx> data() noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const;
  bool all_finite() const;
  Ket column(std::size_t c) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
Ket operator*(const ComplexMatrix& a, const Ket& v);

// Row vector times matrix: (x^T A)_s = sum_r x_r A_rs.
Ket left_multiply(const Ket& x, const ComplexMatrix& a);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(AB) without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// |u><v|
ComplexMatrix outer(const Ket& u, const Ket& v);

ComplexMatrix matrix_power(const ComplexMatrix& a, unsigned exponent);

// Max-entry norm of A - B.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);

}  // namespace zbargmann
