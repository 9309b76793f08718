#pragma once

#include <cstddef>
#include <vector>

#include "orebc/scalar.hpp"

namespace orebc {

/// Dense row-major matrix over k.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldSpec field, std::size_t n);
  /// Rows given as nested vectors of small integers; for tests and examples.
  static Matrix from_ints(FieldSpec field, const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot search takes the first nonzero entry in each column.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : M v = 0}, one vector per free column in column order, each scaled so
/// that its first nonzero entry is 1.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

}  // namespace orebc
