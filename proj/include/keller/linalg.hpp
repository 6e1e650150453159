#pragma once

#include <vector>

#include "keller/rational.hpp"

namespace keller {

// Dense exact rational matrix, just big enough for the linear systems the
// harnesses solve (coefficient spaces of bounded-degree polynomials).
class QMatrix {
 public:
  QMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  // In-place reduced row echelon form; returns the pivot column of each
  // nonzero row, in order.
  std::vector<int> rref();

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

// Basis of {x : M x = 0}, one vector per free column, in free-column order.
// Entries are scaled to coprime integers for readability and determinism.
std::vector<std::vector<Rational>> nullspace_basis(QMatrix m);

}  // namespace keller
