#include "sametype/poly.hpp"

#include <algorithm>
#include <numeric>

#include "sametype/errors.hpp"

namespace sametype {

MultiPoly MultiPoly::constant(int dim, const Rational& c) {
  MultiPoly p;
  p.dim = dim;
  if (c != 0) p.terms[std::vector<int>(dim, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int dim, int i) {
  MultiPoly p;
  p.dim = dim;
  std::vector<int> e(dim, 0);
  e[i] = 1;
  p.terms[std::move(e)] = 1;
  return p;
}

int MultiPoly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

Rational MultiPoly::eval(const Point& p) const {
  if (p.dim() != dim) throw DimensionMismatch("MultiPoly::eval: dimension mismatch");
  Rational acc{0};
  for (const auto& [e, c] : terms) {
    Rational t = c;
    for (int i = 0; i < dim; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= p[i];
    }
    acc += t;
  }
  return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms) terms[e] += c;
  prune();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms) terms[e] -= c;
  prune();
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  r.dim = dim;
  for (const auto& [e1, c1] : terms) {
    for (const auto& [e2, c2] : o.terms) {
      std::vector<int> e(dim);
      for (int i = 0; i < dim; ++i) e[i] = e1[i] + e2[i];
      r.terms[std::move(e)] += c1 * c2;
    }
  }
  r.prune();
  return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms) coeff *= c;
  return *this;
}

void MultiPoly::prune() {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
}

namespace {

void gen_exponents(int d, int remaining, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  // Descending lex within a degree: largest exponent first.
  for (int e = remaining; e >= 0; --e) {
    cur.push_back(e);
    gen_exponents(d, remaining - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> monomial_basis(int d, int D) {
  std::vector<std::vector<int>> out;
  for (int deg = 1; deg <= D; ++deg) {
    std::vector<int> cur;
    gen_exponents(d, deg, cur, out);
  }
  return out;
}

Point veronese_lift(const Point& p, int D) {
  const int d = p.dim();
  std::vector<Rational> coords;
  for (const auto& e : monomial_basis(d, D)) {
    Rational t{1};
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < e[i]; ++k) t *= p[i];
    coords.push_back(std::move(t));
  }
  return Point(std::move(coords));
}

long veronese_dim(int d, int D) {
  return binomial(D + d, d).convert_to<long>() - 1;
}

}  // namespace sametype
