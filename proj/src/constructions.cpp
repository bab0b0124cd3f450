#include "sametype/constructions.hpp"

#include <algorithm>

#include "sametype/errors.hpp"
#include "sametype/hull.hpp"
#include "sametype/linalg.hpp"
#include "sametype/rng.hpp"
#include "sametype/same_type.hpp"

namespace sametype {

namespace {

Rational rabs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
bool next_subset(std::vector<int>& s, int n) {
  const int k = static_cast<int>(s.size());
  int t = k - 1;
  while (t >= 0 && s[t] == n - k + t) --t;
  if (t < 0) return false;
  ++s[t];
  for (int i = t + 1; i < k; ++i) s[i] = s[i - 1] + 1;
  return true;
}

// Unique solution of the (possibly overdetermined) system A x = b, if the
// system is consistent with full column rank; nullopt otherwise.
std::optional<std::vector<Rational>> solve_full_rank(Matrix a,
                                                     std::vector<Rational> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) return std::nullopt;  // rank-deficient column
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;
  for (int i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;  // inconsistent
  std::vector<Rational> x(cols);
  for (int i = 0; i < cols; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return x;
}

// Exact convex-hull membership valid for degenerate hulls: by Caratheodory,
// q is in conv(s) iff q is a convex combination of some (r+1)-subset, r being
// the affine rank of s.
bool in_convex_hull(const Point& q, const std::vector<Point>& s, int d) {
  if (s.empty()) return false;
  const int r = affine_rank(s);
  std::vector<int> sub(r + 1);
  for (int i = 0; i <= r; ++i) sub[i] = i;
  do {
    Matrix a(d + 1, std::vector<Rational>(r + 1));
    std::vector<Rational> b(d + 1);
    for (int j = 0; j <= r; ++j) {
      for (int c = 0; c < d; ++c) a[c][j] = s[sub[j]][c];
      a[d][j] = 1;
    }
    for (int c = 0; c < d; ++c) b[c] = q[c];
    b[d] = 1;
    if (auto lambda = solve_full_rank(std::move(a), std::move(b))) {
      bool nonneg = true;
      for (const auto& l : *lambda) nonneg &= (l >= 0);
      if (nonneg) return true;
    }
  } while (next_subset(sub, static_cast<int>(s.size())));
  return false;
}

// Grid points on the boundary of conv(s). When s spans all of R^d this uses
// facet classification; a lower-dimensional hull has empty interior, so every
// contained point counts as boundary.
int boundary_points(const GridSet& g, const std::vector<Point>& s) {
  if (affine_rank(s) == g.d) {
    const auto facets = hull_facets(s, g.d);
    int count = 0;
    for (const auto& p : g.points.points)
      if (classify_against_hull(facets, p) == HullPosition::Boundary) ++count;
    return count;
  }
  int count = 0;
  for (const auto& p : g.points.points)
    if (in_convex_hull(p, s, g.d)) ++count;
  return count;
}

}  // namespace

GridSet grid_set(int n, int d, std::uint64_t seed) {
  if (n < d || d < 1) throw std::invalid_argument("grid_set: need n >= d >= 1");
  Rng rng(seed);
  constexpr int kAttempts = 200;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    GridSet g;
    g.n = n;
    g.d = d;
    for (int i = 0; i < n; ++i) {
      Hyperplane h;
      h.normal.resize(d);
      bool nonzero = false;
      for (int c = 0; c < d; ++c) {
        h.normal[c] = Rational(Integer(rng.int_range(-9, 9)), 1);
        nonzero |= (h.normal[c] != 0);
      }
      if (!nonzero) h.normal[0] = 1;
      h.offset = Rational(Integer(rng.int_range(-9, 9)), 1);
      h.normalize();
      g.hyperplanes.push_back(std::move(h));
    }

    bool ok = true;
    std::vector<int> sub(d);
    for (int i = 0; i < d; ++i) sub[i] = i;
    do {
      Matrix a(d, std::vector<Rational>(d));
      std::vector<Rational> b(d);
      for (int r = 0; r < d; ++r) {
        a[r] = g.hyperplanes[sub[r]].normal;
        b[r] = g.hyperplanes[sub[r]].offset;
      }
      if (det_sign(a) == 0) { ok = false; break; }
      Point p(solve(a, b));
      g.index[sub] = g.points.size();
      g.points.points.push_back(std::move(p));
    } while (next_subset(sub, n));

    if (ok) {
      // No intersection point may lie on a hyperplane outside its d-subset.
      for (const auto& [key, idx] : g.index) {
        for (int j = 0; j < n && ok; ++j) {
          const bool generating = std::binary_search(key.begin(), key.end(), j);
          const int sg = side(g.hyperplanes[j], g.points.points[idx]);
          if (generating ? sg != 0 : sg == 0) ok = false;
        }
        if (!ok) break;
      }
    }
    if (ok) {
      g.points.label = "grid";
      return g;
    }
  }
  throw RetryExhausted("grid_set: hyperplane draws kept violating general position");
}

int boundary_count(const GridSet& g, const PointSet& body) {
  if (body.points.empty() || body.points[0].dim() != g.d)
    throw DimensionMismatch("boundary_count: dimension mismatch");
  const auto facets = hull_facets(body.points, g.d);  // DegenerateBody if flat
  int count = 0;
  for (const auto& p : g.points.points)
    if (classify_against_hull(facets, p) == HullPosition::Boundary) ++count;
  return count;
}

Family blow_up(const Family& f, int i, int n_cloud, const Rational& radius,
               std::uint64_t seed) {
  if (i < 0 || i >= f.m()) throw std::invalid_argument("blow_up: set index out of range");
  if (n_cloud < 1) throw std::invalid_argument("blow_up: n_cloud must be >= 1");
  if (radius <= 0) throw std::invalid_argument("blow_up: radius must be > 0");

  const auto u = f.union_points();
  for (size_t a = 0; a < u.size(); ++a) {
    for (size_t b = a + 1; b < u.size(); ++b) {
      Rational dist = 0;
      for (int c = 0; c < f.dim; ++c)
        dist = std::max(dist, rabs(u[a][c] - u[b][c]));
      if (!(2 * radius < dist))
        throw std::invalid_argument("blow_up: radius too large for cloud separation");
    }
  }

  constexpr long long kDen = 1024;
  constexpr int kAttempts = 32;
  Rng rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Family out = f;
    PointSet cloud;
    cloud.label = f.sets[i].label;
    for (const auto& p : f.sets[i].points) {
      for (int t = 0; t < n_cloud; ++t) {
        Point q = p;
        for (int c = 0; c < f.dim; ++c)
          q[c] += radius * Rational(Integer(rng.int_range(-kDen, kDen)), Integer(kDen));
        cloud.points.push_back(std::move(q));
      }
    }
    out.sets[i] = std::move(cloud);
    if (verify_general_position(out).verdict == GeneralPosition::Verified) {
      out.general_position = GeneralPosition::Verified;
      return out;
    }
  }
  throw RetryExhausted("blow_up: could not restore general position within the radius");
}

PerturbedFamily perturbed_grid_family(int n, int d, int m,
                                      const Rational& magnitude,
                                      std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("perturbed_grid_family: need m >= 1");
  if (magnitude <= 0)
    throw std::invalid_argument("perturbed_grid_family: magnitude must be > 0");

  PerturbedFamily pf;
  pf.grid = grid_set(n, d, Rng::derive(seed, 0x67726964ULL));

  // Cap the magnitude at half the minimum distance from a grid point to a
  // non-incident grid hyperplane (L-inf distance is at least the residual over
  // the L1 norm of the normal).
  Rational cap = magnitude;
  for (const auto& p : pf.grid.points.points) {
    for (const auto& h : pf.grid.hyperplanes) {
      Rational resid = -h.offset;
      Rational l1 = 0;
      for (int c = 0; c < d; ++c) {
        resid += h.normal[c] * p[c];
        l1 += rabs(h.normal[c]);
      }
      if (resid == 0) continue;
      cap = std::min(cap, rabs(resid) / (2 * l1));
    }
  }
  pf.magnitude = cap;

  constexpr long long kDen = 1024;
  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(Rng::derive(seed, 0x70657274ULL + attempt));
    Family fam;
    fam.dim = d;
    for (int i = 0; i < m; ++i) {
      PointSet s;
      s.label = "X" + std::to_string(i + 1);
      for (const auto& p : pf.grid.points.points) {
        Point q = p;
        for (int c = 0; c < d; ++c)
          q[c] += cap * Rational(Integer(rng.int_range(-kDen, kDen)), Integer(kDen));
        s.points.push_back(std::move(q));
      }
      fam.sets.push_back(std::move(s));
    }
    if (verify_general_position(fam).verdict == GeneralPosition::Verified) {
      fam.general_position = GeneralPosition::Verified;
      pf.family = std::move(fam);
      pf.predecessor.assign(m, {});
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < pf.grid.points.size(); ++j)
          pf.predecessor[i].push_back(j);
      return pf;
    }
  }
  throw RetryExhausted("perturbed_grid_family: perturbations kept violating general position");
}

UpperBoundReport upper_bound_audit(const PerturbedFamily& pf,
                                   const std::vector<PointSet>& y) {
  const int d = pf.grid.d;
  const int n = pf.grid.n;
  const int m = pf.family.m();
  if (static_cast<int>(y.size()) != m)
    throw std::invalid_argument("upper_bound_audit: need one subset per set");

  // Match each y point back to its family index (and hence predecessor).
  std::vector<std::vector<int>> y_idx(m);
  for (int i = 0; i < m; ++i) {
    for (const auto& q : y[i].points) {
      const auto& pts = pf.family.sets[i].points;
      auto it = std::find(pts.begin(), pts.end(), q);
      if (it == pts.end())
        throw std::invalid_argument("upper_bound_audit: subset point not in its family set");
      y_idx[i].push_back(static_cast<int>(it - pts.begin()));
    }
    if (y_idx[i].empty())
      throw std::invalid_argument("upper_bound_audit: empty subset");
  }

  Family yf;
  yf.dim = d;
  yf.sets = y;
  yf.general_position = pf.family.general_position;
  if (!same_type_family(yf).holds)
    throw std::invalid_argument("upper_bound_audit: Y fails the same-type check");

  UpperBoundReport rep;

  // Z_i = grid points strictly inside conv(Y_i).
  std::vector<std::vector<int>> z(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(y[i].points.size()) > d &&
        affine_rank(y[i].points) == d) {
      const auto facets = hull_facets(y[i].points, d);
      for (int p = 0; p < pf.grid.points.size(); ++p)
        if (classify_against_hull(facets, pf.grid.points.points[p]) ==
            HullPosition::Interior)
          z[i].push_back(p);
    }
    rep.z_sizes.push_back(static_cast<long long>(z[i].size()));
  }

  // Which grid hyperplanes meet which Z_i. A grid point lies on exactly its
  // generating hyperplanes, so membership is an exact side() == 0 test.
  std::vector<std::vector<bool>> meets(n, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int p : z[i])
      for (int j = 0; j < n; ++j)
        if (side(pf.grid.hyperplanes[j], pf.grid.points.points[p]) == 0)
          meets[j][i] = true;

  for (int j = 0; j < n; ++j) {
    long long hit = 0;
    for (int i = 0; i < m; ++i) hit += meets[j][i];
    rep.checks.push_back({"piercing[" + std::to_string(j) + "]",
                          Rational(Integer(hit), 1), Rational(Integer(d), 1),
                          hit <= d});
  }

  for (int i = 0; i < m; ++i) {
    long long met = 0;
    for (int j = 0; j < n; ++j) met += meets[j][i];
    rep.hyperplanes_met.push_back(met);
    if (rep.pigeonhole_index < 0 || met < rep.hyperplanes_met[rep.pigeonhole_index])
      rep.pigeonhole_index = i;
  }
  rep.pigeonhole_cap = static_cast<long long>(d) * n / m;
  rep.checks.push_back({"pigeonhole",
                        Rational(Integer(rep.hyperplanes_met[rep.pigeonhole_index]), 1),
                        Rational(Integer(rep.pigeonhole_cap), 1),
                        rep.hyperplanes_met[rep.pigeonhole_index] <= rep.pigeonhole_cap});

  const Integer z_cap = binomial(rep.pigeonhole_cap, d);
  rep.checks.push_back({"z_size",
                        Rational(Integer(rep.z_sizes[rep.pigeonhole_index]), 1),
                        Rational(z_cap, 1),
                        Integer(rep.z_sizes[rep.pigeonhole_index]) <= z_cap});

  // Eq: |Y_i| <= |Z_i| + |X on the boundary of conv(P(Y_i))|, every i.
  for (int i = 0; i < m; ++i) {
    std::vector<Point> pred;
    for (int j : y_idx[i])
      pred.push_back(pf.grid.points.points[pf.predecessor[i][j]]);
    const int bd = boundary_points(pf.grid, pred);
    const long long lhs = static_cast<long long>(y[i].points.size());
    const long long rhs = rep.z_sizes[i] + bd;
    rep.checks.push_back({"hull_split[" + std::to_string(i) + "]",
                          Rational(Integer(lhs), 1), Rational(Integer(rhs), 1),
                          lhs <= rhs});
  }

  const Rational total(binomial(n, d), 1);
  rep.ratio_bound_floor = Rational(binomial(rep.pigeonhole_cap, d), 1) / total;
  Rational falling = 1;
  Integer fact = 1;
  const Rational dn_m(Integer(d) * n, Integer(m));
  for (int t = 0; t < d; ++t) {
    falling *= dn_m - t;
    fact *= t + 1;
  }
  rep.ratio_bound_real = falling / Rational(fact, 1) / total;
  Rational lim = 1;
  for (int t = 0; t < d; ++t) lim *= Rational(Integer(d), Integer(m));
  rep.limit_ratio = lim;

  for (const auto& c : rep.checks)
    if (!c.ok)
      throw TheoremViolation("upper_bound_audit: inequality " + c.name +
                             " violated (" + to_string(c.lhs) + " > " +
                             to_string(c.rhs) + ")");
  return rep;
}

}  // namespace sametype
