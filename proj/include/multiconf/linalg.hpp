#pragma once

#include <cstddef>
#include <vector>

#include "multiconf/field.hpp"

namespace multiconf {

/// Dense row-major matrix over a Field, just enough for exact ranks and
/// reduced row-echelon forms of small systems.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Coeff(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Coeff& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row-echelon form with zero rows removed.
  Matrix rref() const;
  std::size_t rank() const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  /// Gauss-Jordan in place; returns the rank.
  std::size_t eliminate();

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> data_;
};

}  // namespace multiconf
