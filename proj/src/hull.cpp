#include "sametype/hull.hpp"

#include <algorithm>
#include <set>

#include "sametype/errors.hpp"
#include "sametype/linalg.hpp"

namespace sametype {

int affine_rank(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  const int d = points[0].dim();
  Matrix m;
  for (size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(d);
    for (int j = 0; j < d; ++j) row[j] = points[i][j] - points[0][j];
    m.push_back(std::move(row));
  }
  if (m.empty()) return 0;
  return rank(std::move(m));
}

std::vector<Hyperplane> hull_facets(const std::vector<Point>& points, int d) {
  if (points.empty()) throw DegenerateBody("hull_facets: no points");
  if (d == 1) {
    // Two endpoint "facets".
    Rational lo = points[0][0], hi = points[0][0];
    for (const auto& p : points) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    if (lo == hi) throw DegenerateBody("hull_facets: 1-d body is a point");
    Hyperplane a{{Rational(1)}, hi};   // x <= hi
    Hyperplane b{{Rational(-1)}, -lo}; // -x <= -lo
    return {a, b};
  }
  if (affine_rank(points) < d)
    throw DegenerateBody("hull_facets: affine span below ambient dimension");

  std::set<Hyperplane> facets;
  const int n = static_cast<int>(points.size());
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    std::vector<Point> sub;
    sub.reserve(d);
    for (int i : idx) sub.push_back(points[i]);
    try {
      Hyperplane h = span_hyperplane(sub);
      int lo = 0, hi = 0;
      for (const auto& p : points) {
        int sg = side(h, p);
        if (sg > 0) hi = 1;
        if (sg < 0) lo = 1;
        if (lo && hi) break;
      }
      if (!(lo && hi)) {
        // Supporting; orient so all points are on side <= 0.
        if (hi) {
          for (auto& c : h.normal) c = -c;
          h.offset = -h.offset;
        }
        facets.insert(h);
      }
    } catch (const AffinelyDependent&) {
      // Not a spanning subset; skip.
    }
    int k = d - 1;
    while (k >= 0 && idx[k] == n - d + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
  }
  return {facets.begin(), facets.end()};
}

HullPosition classify_against_hull(const std::vector<Hyperplane>& facets, const Point& p) {
  bool on_facet = false;
  for (const auto& h : facets) {
    int sg = side(h, p);
    if (sg > 0) return HullPosition::Outside;
    if (sg == 0) on_facet = true;
  }
  return on_facet ? HullPosition::Boundary : HullPosition::Interior;
}

std::vector<Point> hull_vertices_2d(const std::vector<Point>& points) {
  std::vector<Point> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return sign_of((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
  };
  std::vector<Point> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Point> extreme_points(const std::vector<Point>& points, int d) {
  if (d == 2 && points.size() > 4) return hull_vertices_2d(points);
  std::vector<Hyperplane> facets;
  try {
    facets = hull_facets(points, d);
  } catch (const DegenerateBody&) {
    return points;
  }
  std::vector<Point> out;
  for (const auto& p : points)
    if (classify_against_hull(facets, p) != HullPosition::Interior) out.push_back(p);
  return out;
}

}  // namespace sametype
