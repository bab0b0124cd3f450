#include "sametype/geometry.hpp"

#include <algorithm>
#include <array>

#include "sametype/errors.hpp"
#include "sametype/linalg.hpp"

namespace sametype {

std::vector<Point> Family::union_points() const {
  std::vector<Point> u;
  for (const auto& s : sets) u.insert(u.end(), s.points.begin(), s.points.end());
  return u;
}

void Hyperplane::normalize() {
  for (auto& c : normal) {
    if (c == 0) continue;
    Rational pivot = abs(c);
    for (auto& x : normal) x /= pivot;
    offset /= pivot;
    if (c < 0) {
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    return;
  }
  throw DimensionMismatch("hyperplane with zero normal");
}

int orient(const std::vector<Point>& pts) {
  if (pts.empty()) throw DimensionMismatch("orient: no points");
  const int d = pts[0].dim();
  if (static_cast<int>(pts.size()) != d + 1)
    throw DimensionMismatch("orient: expected d+1 points");
  for (const auto& p : pts)
    if (p.dim() != d) throw DimensionMismatch("orient: mixed dimensions");
  // Subtract the first row: det of the d x d differences equals the
  // (d+1) x (d+1) determinant with rows (1, p_i).
  Matrix m(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i][j] = pts[i + 1][j] - pts[0][j];
  return det_sign(m);
}

int side(const Hyperplane& h, const Point& p) {
  if (h.dim() != p.dim()) throw DimensionMismatch("side: dimension mismatch");
  Rational v = -h.offset;
  for (int i = 0; i < p.dim(); ++i) v += h.normal[i] * p[i];
  return sign_of(v);
}

Hyperplane span_hyperplane(const std::vector<Point>& pts) {
  if (pts.empty()) throw DimensionMismatch("span_hyperplane: no points");
  const int d = pts[0].dim();
  if (static_cast<int>(pts.size()) != d)
    throw DimensionMismatch("span_hyperplane: expected d points");
  for (const auto& p : pts)
    if (p.dim() != d) throw DimensionMismatch("span_hyperplane: mixed dimensions");
  // Generalized cross product of the d-1 difference vectors: cofactor
  // expansion along a phantom row.
  Matrix diffs(d - 1, std::vector<Rational>(d));
  for (int i = 0; i + 1 < d; ++i)
    for (int j = 0; j < d; ++j) diffs[i][j] = pts[i + 1][j] - pts[0][j];
  Hyperplane h;
  h.normal.resize(d);
  bool nonzero = false;
  for (int k = 0; k < d; ++k) {
    Matrix minor(d - 1, std::vector<Rational>(d - 1));
    for (int i = 0; i + 1 < d; ++i) {
      int cc = 0;
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        minor[i][cc++] = diffs[i][j];
      }
    }
    Rational c = det(minor);
    if (k % 2 == 1) c = -c;
    if (c != 0) nonzero = true;
    h.normal[k] = std::move(c);
  }
  if (!nonzero) throw AffinelyDependent("span_hyperplane: affinely dependent points");
  h.offset = 0;
  for (int j = 0; j < d; ++j) h.offset += h.normal[j] * pts[0][j];
  h.normalize();
  return h;
}

bool hull_meets_hyperplane(const PointSet& s, const Hyperplane& h) {
  if (s.points.empty()) throw DimensionMismatch("hull_meets_hyperplane: empty set");
  int seen = 0;
  for (const auto& p : s.points) {
    int sg = side(h, p);
    if (sg == 0) return true;
    if (seen == 0) seen = sg;
    else if (seen != sg) return true;
  }
  return false;
}

namespace {

// Canonical direction of q - p: reduced by the gcd of numerators after
// clearing denominators, sign-normalized. Two pairs through a common base
// point are collinear with it iff their directions coincide.
std::vector<Integer> canonical_direction(const Point& p, const Point& q) {
  const int d = p.dim();
  std::vector<Rational> delta(d);
  for (int i = 0; i < d; ++i) delta[i] = q[i] - p[i];
  Integer l = 1;
  for (const auto& x : delta) l = lcm(l, Integer(denominator(x)));
  std::vector<Integer> v(d);
  Integer g = 0;
  for (int i = 0; i < d; ++i) {
    v[i] = Integer(numerator(delta[i])) * (l / Integer(denominator(delta[i])));
    g = gcd(g, v[i]);
  }
  if (g != 0)
    for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

std::optional<std::array<int, 3>> collinear_triple_2d(const std::vector<Point>& u) {
  const int n = static_cast<int>(u.size());
  for (int b = 0; b < n; ++b) {
    std::vector<std::pair<std::vector<Integer>, int>> dirs;
    dirs.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
      if (i == b) continue;
      dirs.emplace_back(canonical_direction(u[b], u[i]), i);
    }
    std::sort(dirs.begin(), dirs.end());
    for (size_t k = 0; k + 1 < dirs.size(); ++k) {
      if (dirs[k].first == dirs[k + 1].first)
        return std::array<int, 3>{b, dirs[k].second, dirs[k + 1].second};
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 4>> coplanar_tuple_3d(const std::vector<Point>& u) {
  const int n = static_cast<int>(u.size());
  for (int b = 0; b < n; ++b) {
    // Key: normalized normal of the plane through u[b], u[i], u[j].
    std::vector<std::pair<std::vector<Integer>, std::pair<int, int>>> normals;
    for (int i = 0; i < n; ++i) {
      if (i == b) continue;
      for (int j = i + 1; j < n; ++j) {
        if (j == b) continue;
        std::vector<Point> tri = {u[b], u[i], u[j]};
        Hyperplane h;
        try {
          h = span_hyperplane(tri);
        } catch (const AffinelyDependent&) {
          // Three collinear points: degenerate with any fourth point.
          for (int k = 0; k < n; ++k)
            if (k != b && k != i && k != j) return std::array<int, 4>{b, i, j, k};
          continue;
        }
        // Encode the normalized hyperplane exactly.
        std::vector<Rational> key = h.normal;
        key.push_back(h.offset);
        Integer l = 1;
        for (const auto& x : key) l = lcm(l, Integer(denominator(x)));
        std::vector<Integer> ikey(key.size());
        for (size_t t = 0; t < key.size(); ++t)
          ikey[t] = Integer(numerator(key[t])) * (l / Integer(denominator(key[t])));
        normals.emplace_back(std::move(ikey), std::make_pair(i, j));
      }
    }
    std::sort(normals.begin(), normals.end());
    for (size_t k = 0; k + 1 < normals.size(); ++k) {
      if (normals[k].first == normals[k + 1].first) {
        auto [i1, j1] = normals[k].second;
        auto [i2, j2] = normals[k + 1].second;
        int extra = (i2 != i1 && i2 != j1) ? i2 : j2;
        return std::array<int, 4>{b, i1, j1, extra};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GpReport verify_general_position(const Family& f) {
  GpReport rep;
  std::vector<Point> u = f.union_points();
  // Disjointness / distinctness.
  {
    std::vector<Point> sorted = u;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
      if (sorted[i] == sorted[i + 1]) {
        rep.verdict = GeneralPosition::Violated;
        rep.duplicate = sorted[i];
        return rep;
      }
    }
  }
  const int d = f.dim;
  const int n = static_cast<int>(u.size());
  if (n < d + 1) return rep;

  if (d == 2) {
    if (auto t = collinear_triple_2d(u)) {
      rep.verdict = GeneralPosition::Violated;
      rep.dependent_tuple = {u[(*t)[0]], u[(*t)[1]], u[(*t)[2]]};
    }
    return rep;
  }
  if (d == 3) {
    if (auto t = coplanar_tuple_3d(u)) {
      rep.verdict = GeneralPosition::Violated;
      rep.dependent_tuple = {u[(*t)[0]], u[(*t)[1]], u[(*t)[2]], u[(*t)[3]]};
    }
    return rep;
  }

  // Generic exhaustive O(N^{d+1}) scan.
  std::vector<int> idx(d + 1);
  for (int i = 0; i <= d; ++i) idx[i] = i;
  while (true) {
    std::vector<Point> tuple;
    tuple.reserve(d + 1);
    for (int i : idx) tuple.push_back(u[i]);
    if (orient(tuple) == 0) {
      rep.verdict = GeneralPosition::Violated;
      rep.dependent_tuple = std::move(tuple);
      return rep;
    }
    int k = d;
    while (k >= 0 && idx[k] == n - (d + 1) + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i <= d; ++i) idx[i] = idx[i - 1] + 1;
  }
  return rep;
}

}  // namespace sametype
