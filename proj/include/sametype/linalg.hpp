#pragma once

#include <vector>

#include "sametype/rational.hpp"

namespace sametype {

using Matrix = std::vector<std::vector<Rational>>;

// Exact determinant. Rows are scaled to integers and eliminated with
// fraction-free (Bareiss) pivoting to bound intermediate growth.
Rational det(const Matrix& m);

int det_sign(const Matrix& m);

// Basis of {x : A x = 0}. Plain rational Gauss-Jordan; A is small here.
std::vector<std::vector<Rational>> nullspace(const Matrix& a);

// Solves A x = b for square nonsingular A. Throws AffinelyDependent if singular.
std::vector<Rational> solve(const Matrix& a, const std::vector<Rational>& b);

// Rank of A over the rationals.
int rank(Matrix a);

}  // namespace sametype
