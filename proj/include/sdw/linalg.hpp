#pragma once

#include <vector>

#include "sdw/field.hpp"

namespace sdw {

/// Dense row-major matrix over a prime field.
class DenseMatrix {
 public:
  DenseMatrix(const PrimeField& F, int rows, int cols)
      : F_(F), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  const PrimeField& field() const { return F_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  PrimeField::Elem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  PrimeField::Elem at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<int> row_reduce();
  int rank() const;
  /// Basis of {v : A v = 0}, one vector per free column.
  std::vector<std::vector<PrimeField::Elem>> kernel() const;
  DenseMatrix operator*(const DenseMatrix& o) const;
  bool is_zero() const;

 private:
  PrimeField F_;
  int rows_, cols_;
  std::vector<PrimeField::Elem> a_;
};

}  // namespace sdw
