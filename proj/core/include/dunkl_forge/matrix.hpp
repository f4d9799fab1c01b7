#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dunkl_forge/scalar.hpp"

namespace dforge {

/// Dense row-major matrix over Scalar. Sizes here are tiny (n <= 8).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Entrywise complex conjugate.
  Matrix conj() const;
  Matrix transpose() const;
  Matrix adjoint() const { return conj().transpose(); }

  std::vector<Scalar> column(std::size_t c) const;
  /// M v for a column vector v.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  /// Rank by Gaussian elimination; exact, or with Scalar's float tolerance.
  std::size_t rank() const;
  bool is_unitary() const { return rows_ == cols_ && adjoint() * *this == identity(rows_); }
  Matrix in_field(const Field& field) const;

  /// Canonical text of all entries, usable as a hash key.
  std::string key() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank of a family of column vectors.
std::size_t vector_rank(const std::vector<std::vector<Scalar>>& vectors);

}  // namespace dforge
