#pragma once

#include <map>
#include <vector>

#include "sametype/geometry.hpp"

namespace sametype {

// Multivariate polynomial with rational coefficients, sparse exponent-vector
// representation. Zero coefficients are never stored.
struct MultiPoly {
  int dim = 0;
  std::map<std::vector<int>, Rational> terms;

  static MultiPoly constant(int dim, const Rational& c);
  static MultiPoly variable(int dim, int i);

  int degree() const;  // max total degree, -1 for the zero polynomial
  bool is_zero() const { return terms.empty(); }

  Rational eval(const Point& p) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator*=(const Rational& c);

  void prune();  // drop zero coefficients
};

// Monomial exponent vectors of total degree 1..D in graded-lex order: degree
// ascending, exponent vectors lexicographically descending within a degree.
// d=2, D=2 gives x, y, x^2, xy, y^2.
std::vector<std::vector<int>> monomial_basis(int d, int D);

// Coordinates of p under every monomial of degree 1..D; output dimension
// C(D+d,d) - 1.
Point veronese_lift(const Point& p, int D);

// C(D+d,d) - 1.
long veronese_dim(int d, int D);

}  // namespace sametype
