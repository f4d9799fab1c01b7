#include "dunkl_forge/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "dunkl_forge/errors.hpp"

namespace dforge {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("matrix data does not match its shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::conj() const {
  Matrix r = *this;
  for (auto& s : r.data_) s = s.conj();
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<Scalar> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
  }
  return r;
}

std::size_t Matrix::rank() const {
  Matrix a = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    // Largest pivot keeps the float mode stable; exact mode only needs nonzero.
    std::size_t piv = rows_;
    double best = 0.0;
    for (std::size_t r = rank; r < rows_; ++r) {
      if (a(r, col).is_zero()) continue;
      const double mag = a(r, col).abs();
      if (piv == rows_ || mag > best) {
        piv = r;
        best = mag;
      }
    }
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(rank, j));
    const Scalar inv = a(rank, col).inverse();
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar f = a(r, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

Matrix Matrix::in_field(const Field& field) const {
  Matrix r = *this;
  for (auto& s : r.data_) s = s.in_field(field);
  return r;
}

std::string Matrix::key() const {
  std::string k;
  char buf[64];
  for (const auto& s : data_) {
    if (s.is_float()) {
      // Float entries are bucketed well above round-off so closure dedupes.
      const auto z = s.to_complex();
      const double re = std::round(z.real() * 1e8) / 1e8 + 0.0;
      const double im = std::round(z.imag() * 1e8) / 1e8 + 0.0;
      std::snprintf(buf, sizeof buf, "%.8f,%.8f", re == 0.0 ? 0.0 : re, im == 0.0 ? 0.0 : im);
      k += buf;
    } else {
      k += s.to_string();
    }
    k += ';';
  }
  return k;
}

std::size_t vector_rank(const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return 0;
  Matrix m(vectors.front().size(), vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != m.rows()) throw DimensionMismatch("vectors of different length");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = vectors[j][i];
  }
  return m.rank();
}

}  // namespace dforge
