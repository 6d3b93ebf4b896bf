#include "zbargmann/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zbargmann/errors.hpp"
#include "zbargmann/kernels.hpp"

namespace zbargmann {
namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

void require_same_dim(const Ket& a, const Ket& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw InputError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
  }
}

}  // namespace

double Ket::norm() const { return std::sqrt(kernels::norm_sq(entries_)); }

bool Ket::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

Ket& Ket::operator+=(const Ket& other) {
  require_same_dim(*this, other, "ket +");
  kernels::axpy(1.0, other.entries_, entries_);
  return *this;
}

Ket& Ket::operator-=(const Ket& other) {
  require_same_dim(*this, other, "ket -");
  kernels::axpy(-1.0, other.entries_, entries_);
  return *this;
}

Ket& Ket::operator*=(cplx s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

Ket operator+(Ket a, const Ket& b) { return a += b; }
Ket operator-(Ket a, const Ket& b) { return a -= b; }
Ket operator*(cplx s, Ket a) { return a *= s; }

cplx inner(const Ket& u, const Ket& v) {
  require_same_dim(u, v, "inner");
  return kernels::dotc(u.data(), v.data());
}

double max_abs_diff(const Ket& a, const Ket& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("matrix: expected " + std::to_string(rows_ * cols_) + " entries, got " +
                     std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<cplx> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

std::size_t ComplexMatrix::dim() const {
  if (!is_square()) {
    throw InputError("expected a square matrix, got " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return rows_;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

cplx ComplexMatrix::trace() const {
  const std::size_t n = dim();
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

Ket ComplexMatrix::column(std::size_t c) const {
  Ket k(rows_);
  for (std::size_t r = 0; r < rows_; ++r) k[r] = (*this)(r, c);
  return k;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix +");
  kernels::axpy(1.0, other.entries_, entries_);
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix -");
  kernels::axpy(-1.0, other.entries_, entries_);
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InputError("matrix product: inner dimensions " + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + " differ");
  }
  const auto& k = kernels::active();
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx s = a(i, j);
      if (s == cplx{}) continue;
      k.axpy(b.cols(), s, b.row(j).data(), dst.data());
    }
  }
  return out;
}

Ket operator*(const ComplexMatrix& a, const Ket& v) {
  if (a.cols() != v.dim()) {
    throw InputError("matrix-vector product: " + std::to_string(a.cols()) + " columns vs vector of dimension " +
                     std::to_string(v.dim()));
  }
  const auto& k = kernels::active();
  Ket out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = k.dotu(a.cols(), a.row(i).data(), v.data().data());
  return out;
}

Ket left_multiply(const Ket& x, const ComplexMatrix& a) {
  if (a.rows() != x.dim()) {
    throw InputError("row-vector product: vector of dimension " + std::to_string(x.dim()) + " vs " +
                     std::to_string(a.rows()) + " rows");
  }
  const auto& k = kernels::active();
  Ket out(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) k.axpy(a.cols(), x[r], a.row(r).data(), out.data().data());
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw InputError("trace_product: shape mismatch");
  // Tr(AB) = sum_ij A_ij B_ji = <conj(A), B^T> over all entries.
  const ComplexMatrix bt = b.transpose();
  return kernels::dotu(a.data(), bt.data());
}

ComplexMatrix outer(const Ket& u, const Ket& v) {
  ComplexMatrix m(u.dim(), v.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, unsigned exponent) {
  ComplexMatrix result = ComplexMatrix::identity(a.dim());
  ComplexMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) m = std::max(m, std::abs(da[i] - db[i]));
  return m;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace zbargmann
