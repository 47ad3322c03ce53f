#include "multiconf/linalg.hpp"

namespace multiconf {

std::size_t Matrix::eliminate() {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    std::size_t r = pivot_row;
    while (r < rows_ && Field::is_zero((*this)(r, c))) ++r;
    if (r == rows_) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(r, k), (*this)(pivot_row, k));
    const Coeff inv = field_.inv((*this)(pivot_row, c));
    for (std::size_t k = c; k < cols_; ++k) (*this)(pivot_row, k) = field_.mul((*this)(pivot_row, k), inv);
    for (std::size_t other = 0; other < rows_; ++other) {
      if (other == pivot_row || Field::is_zero((*this)(other, c))) continue;
      const Coeff factor = (*this)(other, c);
      for (std::size_t k = c; k < cols_; ++k)
        (*this)(other, k) = field_.sub((*this)(other, k), field_.mul(factor, (*this)(pivot_row, k)));
    }
    ++pivot_row;
  }
  return pivot_row;
}

Matrix Matrix::rref() const {
  Matrix work(*this);
  const std::size_t rank = work.eliminate();
  Matrix out(field_, rank, cols_);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = work(r, c);
  return out;
}

std::size_t Matrix::rank() const {
  Matrix work(*this);
  return work.eliminate();
}

}  // namespace multiconf
