#include <doctest.h>

#include "sametype/errors.hpp"
#include "sametype/linalg.hpp"
#include "sametype/rng.hpp"

using namespace sametype;

namespace {

// Independent oracle: cofactor expansion along the first row.
Rational det_minors(const Matrix& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational acc = 0;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Matrix minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Rational term = m[0][c] * det_minors(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

Matrix random_matrix(Rng& rng, int n) {
  Matrix m(n, std::vector<Rational>(n));
  for (auto& row : m)
    for (auto& x : row) x = rng.rational(9, 1 + rng.int_range(0, 7));
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("det agrees with cofactor expansion") {
  Rng rng(2024);
  for (int n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      Matrix m = random_matrix(rng, n);
      CHECK(det(m) == det_minors(m));
    }
  }
}

TEST_CASE("det of a singular matrix is zero") {
  Matrix m = {{Rational(1), Rational(2), Rational(3)},
              {Rational(2), Rational(4), Rational(6)},
              {Rational(0), Rational(1), Rational(5)}};
  CHECK(det(m) == 0);
  CHECK(det_sign(m) == 0);
  CHECK(rank(m) == 2);
}

TEST_CASE("solve returns the unique solution") {
  Rng rng(7);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(3));
    Matrix a = random_matrix(rng, n);
    if (det_sign(a) == 0) continue;
    std::vector<Rational> b(n);
    for (auto& x : b) x = rng.rational(9, 3);
    auto x = solve(a, b);
    for (int r = 0; r < n; ++r) {
      Rational acc = 0;
      for (int c = 0; c < n; ++c) acc += a[r][c] * x[c];
      CHECK(acc == b[r]);
    }
  }
}

TEST_CASE("solve rejects singular systems") {
  Matrix a = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK_THROWS_AS(solve(a, {Rational(1), Rational(1)}), AffinelyDependent);
}

TEST_CASE("nullspace vectors annihilate the matrix") {
  Rng rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    const int rows = 2 + static_cast<int>(rng.below(3));
    const int cols = rows + 1 + static_cast<int>(rng.below(2));
    Matrix a(rows, std::vector<Rational>(cols));
    for (auto& row : a)
      for (auto& x : row) x = rng.rational(5, 2);
    auto basis = nullspace(a);
    CHECK(static_cast<int>(basis.size()) == cols - rank(a));
    for (const auto& v : basis) {
      for (int r = 0; r < rows; ++r) {
        Rational acc = 0;
        for (int c = 0; c < cols; ++c) acc += a[r][c] * v[c];
        CHECK(acc == 0);
      }
    }
  }
}

}  // TEST_SUITE
