#include "keller/jacobian.hpp"

#include <functional>

#include "keller/factor.hpp"

namespace keller {

std::vector<std::vector<Polynomial>> jacobian_matrix(const PolyMap& f) {
  const int n = f.target_ring()->arity();
  std::vector<std::vector<Polynomial>> m;
  m.reserve(f.arity());
  for (const Polynomial& fi : f.images()) {
    std::vector<Polynomial> row;
    row.reserve(n);
    for (int j = 0; j < n; ++j) row.push_back(fi.derivative(j));
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

Polynomial det_small(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  // n == 3
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

void enumerate_subsets(int n, int r, std::vector<int>& current,
                       const std::function<void(const std::vector<int>&)>& emit, int start = 0) {
  if (static_cast<int>(current.size()) == r) {
    emit(current);
    return;
  }
  for (int v = start; v <= n - (r - static_cast<int>(current.size())); ++v) {
    current.push_back(v);
    enumerate_subsets(n, r, current, emit, v + 1);
    current.pop_back();
  }
}

}  // namespace

Polynomial poly_determinant(std::vector<std::vector<Polynomial>> m, const RingPtr& ring) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n <= 3) return det_small(m, ring);

  // One-step fraction-free Bareiss; divisions are exact.
  int sign = 1;
  Polynomial prev = Polynomial::constant(ring, 1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int l = k + 1; l < n; ++l) {
        if (!m[l][k].is_zero()) {
          swap_row = l;
          break;
        }
      }
      if (swap_row < 0) return Polynomial(ring);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = exact_quotient(num, prev);
        if (!q) throw error("internal: Bareiss division not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial(ring);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

JacobianMinors jacobian_minors(const PolyMap& f) {
  const int n = f.target_ring()->arity();
  const int r = f.arity();
  auto matrix = jacobian_matrix(f);
  JacobianMinors out;
  std::vector<int> current;
  enumerate_subsets(n, r, current, [&](const std::vector<int>& subset) {
    std::vector<std::vector<Polynomial>> sub;
    sub.reserve(r);
    for (int i = 0; i < r; ++i) {
      std::vector<Polynomial> row;
      row.reserve(r);
      for (int j : subset) row.push_back(matrix[i][j]);
      sub.push_back(std::move(row));
    }
    out.minors.emplace(subset, poly_determinant(std::move(sub), f.target_ring()));
  });
  return out;
}

DgcdResult dgcd(const PolyMap& f) {
  JacobianMinors minors = jacobian_minors(f);
  Polynomial acc(f.target_ring());
  bool any = false;
  for (const auto& [subset, det] : minors.minors) {
    if (det.is_zero()) continue;
    acc = any ? gcd(acc, det) : normalize_primitive(det);
    any = true;
    if (acc.is_constant()) break;
  }
  if (!any) {
    throw error("differential gcd undefined: every Jacobian minor vanishes "
                "(algebraically dependent tuple)");
  }
  DgcdResult out{acc, acc.total_degree() == 0};
  return out;
}

bool is_keller(const PolyMap& f) {
  if (f.arity() != f.target_ring()->arity()) {
    throw error("Jacobian condition requires an endomorphism (r = n)");
  }
  Polynomial det = poly_determinant(jacobian_matrix(f), f.target_ring());
  return !det.is_zero() && det.total_degree() == 0;
}

bool is_algebraically_independent(const PolyMap& f) {
  JacobianMinors minors = jacobian_minors(f);
  for (const auto& [subset, det] : minors.minors) {
    if (!det.is_zero()) return true;
  }
  return false;
}

}  // namespace keller
