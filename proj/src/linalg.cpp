#include "sametype/linalg.hpp"

#include <cassert>

#include "sametype/errors.hpp"

namespace sametype {

namespace {

// Scales each row by the lcm of its denominators; returns the integer matrix
// and the accumulated (positive) scale factor.
std::pair<std::vector<std::vector<Integer>>, Integer> clear_denominators(const Matrix& m) {
  std::vector<std::vector<Integer>> im(m.size());
  Integer scale = 1;
  for (size_t r = 0; r < m.size(); ++r) {
    Integer l = 1;
    for (const auto& x : m[r]) l = lcm(l, Integer(denominator(x)));
    im[r].reserve(m[r].size());
    for (const auto& x : m[r]) im[r].push_back(Integer(numerator(x)) * (l / Integer(denominator(x))));
    scale *= l;
  }
  return {std::move(im), scale};
}

// Bareiss fraction-free elimination; exact integer determinant.
Integer det_int(std::vector<std::vector<Integer>> a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace

Rational det(const Matrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw DimensionMismatch("det: matrix not square");
  }
  auto [im, scale] = clear_denominators(m);
  return Rational(det_int(std::move(im)), scale);
}

int det_sign(const Matrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw DimensionMismatch("det_sign: matrix not square");
  }
  auto [im, scale] = clear_denominators(m);
  (void)scale;  // positive, does not affect the sign
  return det_int(std::move(im)).sign();
}

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot column per row.
std::vector<int> rref(Matrix& a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    Rational inv = a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const Matrix& a_in) {
  Matrix a = a_in;
  const size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -a[r][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> solve(const Matrix& a_in, const std::vector<Rational>& b) {
  const size_t n = a_in.size();
  if (b.size() != n) throw DimensionMismatch("solve: size mismatch");
  Matrix a = a_in;
  for (size_t r = 0; r < n; ++r) {
    if (a[r].size() != n) throw DimensionMismatch("solve: matrix not square");
    a[r].push_back(b[r]);
  }
  std::vector<int> pivots = rref(a);
  if (pivots.size() != n || (n > 0 && pivots.back() >= static_cast<int>(n)))
    throw AffinelyDependent("solve: singular system");
  std::vector<Rational> x(n);
  for (size_t r = 0; r < n; ++r) x[pivots[r]] = a[r][n];
  return x;
}

int rank(Matrix a) {
  return static_cast<int>(rref(a).size());
}

}  // namespace sametype
