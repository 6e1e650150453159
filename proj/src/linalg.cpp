#include "keller/linalg.hpp"

#include <algorithm>

namespace keller {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols <= 0) throw error("matrix dimensions must be positive");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

std::vector<int> QMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int r = row; r < rows_; ++r) {
      if (!at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(row, c));
    }
    Rational inv = at(row, col).inverse();
    for (int c = col; c < cols_; ++c) at(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      Rational factor = at(r, col);
      for (int c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> nullspace_basis(QMatrix m) {
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m.at(static_cast<int>(r), free);
    }
    // Clear denominators and divide by the content so entries are coprime
    // integers with a deterministic sign (first nonzero entry positive).
    BigInt den(1);
    for (const Rational& x : v) {
      if (!x.is_zero()) den = lcm(den, x.denominator());
    }
    BigInt num(0);
    for (Rational& x : v) {
      x *= Rational(den, BigInt(1));
      num = gcd(num, x.numerator());
    }
    if (!num.is_zero()) {
      for (Rational& x : v) x /= Rational(num, BigInt(1));
    }
    for (const Rational& x : v) {
      if (x.is_zero()) continue;
      if (x.sign() < 0) {
        for (Rational& y : v) y = -y;
      }
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace keller
