#include "sametype/hamsandwich.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "sametype/errors.hpp"
#include "sametype/linalg.hpp"
#include "sametype/rng.hpp"

namespace sametype {

SignCounts count_signs(const MultiPoly& f, const PointSet& s) {
  SignCounts c;
  for (const auto& p : s.points) {
    int sg = sign_of(f.eval(p));
    if (sg > 0)
      ++c.pos;
    else if (sg < 0)
      ++c.neg;
    else
      ++c.zero;
  }
  return c;
}

bool bisects(const MultiPoly& f, const PointSet& s) {
  SignCounts c = count_signs(f, s);
  const int n = s.size();
  return 2 * c.pos <= n && 2 * c.neg <= n;
}

namespace {

bool bisects_all(const MultiPoly& f, const std::vector<PointSet>& sets) {
  if (f.is_zero()) return false;
  for (const auto& s : sets)
    if (!bisects(f, s)) return false;
  return true;
}

int common_dim(const std::vector<PointSet>& sets) {
  for (const auto& s : sets)
    for (const auto& p : s.points) return p.dim();
  throw DimensionMismatch("ham_sandwich_poly: no points");
}

// ---- pool 1: hyperplanes in lifted space through lifted input points ----

MultiPoly poly_from_coeffs(int d, const std::vector<std::vector<int>>& basis,
                           const std::vector<Rational>& v) {
  MultiPoly f;
  f.dim = d;
  for (size_t j = 0; j < basis.size(); ++j)
    if (v[j] != 0) f.terms[basis[j]] = v[j];
  if (v.back() != 0) f.terms[std::vector<int>(d, 0)] = -v.back();
  f.prune();
  return f;
}

std::optional<MultiPoly> lifted_span_pool(const std::vector<PointSet>& sets, int D,
                                          long long enum_limit) {
  const int d = common_dim(sets);
  const long M = veronese_dim(d, D);
  std::vector<Point> u;
  for (const auto& s : sets) u.insert(u.end(), s.points.begin(), s.points.end());
  const int n = static_cast<int>(u.size());
  const int k = static_cast<int>(std::min<long>(M, n));
  if (binomial(n, k) > enum_limit) return std::nullopt;

  const auto basis = monomial_basis(d, D);
  std::vector<std::vector<Rational>> lifts;
  lifts.reserve(n);
  for (const auto& p : u) {
    std::vector<Rational> row = veronese_lift(p, D).coords;
    row.push_back(Rational(-1));  // offset column
    lifts.push_back(std::move(row));
  }

  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Matrix m;
    m.reserve(k);
    for (int i : idx) m.push_back(lifts[i]);
    for (const auto& v : nullspace(m)) {
      MultiPoly f = poly_from_coeffs(d, basis, v);
      if (bisects_all(f, sets)) return f;
    }
    int t = k - 1;
    while (t >= 0 && idx[t] == n - k + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int i = t + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return std::nullopt;
}

// ---- pool 2: composite q(g(x)) with a complete 1-d root-placement search ----

struct RootSearch {
  // position -> set ids of the points projecting there (values descending)
  std::vector<std::vector<int>> occupants;
  std::vector<Rational> values;  // descending
  std::vector<int> half;         // per set, floor(n_i / 2)
  std::vector<std::array<int, 2>> counts;  // per set {pos, neg}
  long long nodes = 0;
  long long budget = 0;

  struct Root {
    int position;
    bool at_value;  // else in the gap below `position`
    int mult;
  };
  std::vector<Root> roots;

  bool exhausted = false;

  bool batch_tail_ok(size_t idx, int sign) {
    std::vector<int> extra(half.size(), 0);
    for (size_t i = idx; i < occupants.size(); ++i)
      for (int s : occupants[i]) ++extra[s];
    for (size_t s = 0; s < half.size(); ++s) {
      int c = counts[s][sign > 0 ? 0 : 1] + extra[s];
      if (c > half[s]) return false;
    }
    return true;
  }

  bool rec(size_t idx, int sign, int rem) {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    if (idx == occupants.size()) return true;
    if (rem == 0) return batch_tail_ok(idx, sign);

    // Option: keep the value off the zero set.
    {
      bool ok = true;
      int applied = 0;
      for (int s : occupants[idx]) {
        ++counts[s][sign > 0 ? 0 : 1];
        ++applied;
        if (counts[s][sign > 0 ? 0 : 1] > half[s]) {
          ok = false;
          break;
        }
      }
      if (ok && after_value(idx, sign, rem)) return true;
      int undo = 0;
      for (int s : occupants[idx]) {
        if (undo++ == applied) break;
        --counts[s][sign > 0 ? 0 : 1];
      }
      if (exhausted) return false;
    }
    // Option: simple root at the value (points here on the surface, sign flips).
    if (rem >= 1) {
      roots.push_back({static_cast<int>(idx), true, 1});
      if (after_value(idx, -sign, rem - 1)) return true;
      roots.pop_back();
      if (exhausted) return false;
    }
    // Option: double root at the value (on the surface, no flip).
    if (rem >= 2) {
      roots.push_back({static_cast<int>(idx), true, 2});
      if (after_value(idx, sign, rem - 2)) return true;
      roots.pop_back();
    }
    return false;
  }

  bool after_value(size_t idx, int sign, int rem) {
    if (rec(idx + 1, sign, rem)) return true;
    if (exhausted) return false;
    if (rem >= 1 && idx + 1 < occupants.size()) {
      roots.push_back({static_cast<int>(idx), false, 1});
      if (rec(idx + 1, -sign, rem - 1)) return true;
      roots.pop_back();
    }
    return false;
  }
};

std::optional<MultiPoly> projection_attempt(const std::vector<PointSet>& sets,
                                            const MultiPoly& g, int max_roots,
                                            long long node_budget) {
  // Project every point; group by exact value.
  std::map<Rational, std::vector<int>, std::greater<Rational>> by_value;
  for (size_t s = 0; s < sets.size(); ++s)
    for (const auto& p : sets[s].points)
      by_value[g.eval(p)].push_back(static_cast<int>(s));

  RootSearch rs;
  rs.budget = node_budget;
  rs.half.resize(sets.size());
  for (size_t s = 0; s < sets.size(); ++s) rs.half[s] = sets[s].size() / 2;
  rs.counts.assign(sets.size(), {0, 0});
  for (auto& [v, occ] : by_value) {
    rs.values.push_back(v);
    rs.occupants.push_back(occ);
  }
  if (!rs.rec(0, +1, max_roots)) return std::nullopt;

  MultiPoly f = MultiPoly::constant(g.dim, Rational(1));
  for (const auto& r : rs.roots) {
    Rational root_value =
        r.at_value ? rs.values[r.position]
                   : (rs.values[r.position] + rs.values[r.position + 1]) / 2;
    MultiPoly factor = g;
    factor -= MultiPoly::constant(g.dim, root_value);
    for (int k = 0; k < r.mult; ++k) f = f * factor;
  }
  return f;
}

// ---- pool 3 (d = 2): product of lines, one per group of sets ----

void gen_pairings(int s, std::vector<bool>& used, std::vector<std::vector<int>>& cur,
                  int max_groups, long long& left,
                  std::vector<std::vector<std::vector<int>>>& out) {
  if (left <= 0) return;
  int first = -1;
  for (int i = 0; i < s; ++i)
    if (!used[i]) {
      first = i;
      break;
    }
  if (first < 0) {
    out.push_back(cur);
    --left;
    return;
  }
  if (static_cast<int>(cur.size()) >= max_groups) return;
  used[first] = true;
  for (int j = first + 1; j < s; ++j) {
    if (used[j]) continue;
    used[j] = true;
    cur.push_back({first, j});
    gen_pairings(s, used, cur, max_groups, left, out);
    cur.pop_back();
    used[j] = false;
  }
  cur.push_back({first});
  gen_pairings(s, used, cur, max_groups, left, out);
  cur.pop_back();
  used[first] = false;
}

std::optional<MultiPoly> line_product_pool(const std::vector<PointSet>& sets, int D,
                                           long long pairing_limit) {
  const int s = static_cast<int>(sets.size());
  std::vector<Point> u;
  for (const auto& set : sets) u.insert(u.end(), set.points.begin(), set.points.end());

  auto line_poly = [](const Hyperplane& h) {
    MultiPoly f;
    f.dim = 2;
    if (h.normal[0] != 0) f.terms[{1, 0}] = h.normal[0];
    if (h.normal[1] != 0) f.terms[{0, 1}] = h.normal[1];
    if (h.offset != 0) f.terms[{0, 0}] = -h.offset;
    return f;
  };

  // A line works for a group iff it bisects each member set and never takes
  // both strict signs on any non-member set (zeros are harmless: they only
  // move points onto the surface).
  auto find_factor = [&](const std::vector<int>& group) -> std::optional<MultiPoly> {
    std::vector<Point> pool;
    for (int gi : group)
      pool.insert(pool.end(), sets[gi].points.begin(), sets[gi].points.end());
    if (pool.size() < 2) pool = u;
    for (size_t a = 0; a < pool.size(); ++a) {
      for (size_t b = a + 1; b < pool.size(); ++b) {
        Hyperplane h;
        try {
          h = span_hyperplane({pool[a], pool[b]});
        } catch (const AffinelyDependent&) {
          continue;
        }
        MultiPoly f = line_poly(h);
        bool ok = true;
        for (int gi : group)
          if (!bisects(f, sets[gi])) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (int other = 0; other < s && ok; ++other) {
          if (std::find(group.begin(), group.end(), other) != group.end()) continue;
          SignCounts c = count_signs(f, sets[other]);
          if (c.pos > 0 && c.neg > 0) ok = false;
        }
        if (ok) return f;
      }
    }
    return std::nullopt;
  };

  std::vector<std::vector<std::vector<int>>> pairings;
  std::vector<bool> used(s, false);
  std::vector<std::vector<int>> cur;
  long long left = pairing_limit;
  gen_pairings(s, used, cur, std::min(s, D), left, pairings);

  std::map<std::vector<int>, std::optional<MultiPoly>> factor_cache;
  for (const auto& pairing : pairings) {
    MultiPoly f = MultiPoly::constant(2, Rational(1));
    bool ok = true;
    for (const auto& group : pairing) {
      auto it = factor_cache.find(group);
      if (it == factor_cache.end())
        it = factor_cache.emplace(group, find_factor(group)).first;
      if (!it->second) {
        ok = false;
        break;
      }
      f = f * *it->second;
    }
    if (ok && f.degree() <= D && bisects_all(f, sets)) return f;
  }
  return std::nullopt;
}

}  // namespace

MultiPoly ham_sandwich_poly(const std::vector<PointSet>& sets, int D,
                            const HamSandwichOptions& opt) {
  if (D < 1) throw std::invalid_argument("ham_sandwich_poly: D must be >= 1");
  std::vector<PointSet> nonempty;
  for (const auto& s : sets)
    if (!s.points.empty()) nonempty.push_back(s);
  if (nonempty.empty()) throw std::invalid_argument("ham_sandwich_poly: all sets empty");
  const int d = common_dim(nonempty);
  if (static_cast<long>(nonempty.size()) > veronese_dim(d, D))
    throw std::invalid_argument("ham_sandwich_poly: more sets than lifted dimension");

  if (auto f = lifted_span_pool(nonempty, D, opt.enum_limit))
    if (bisects_all(*f, nonempty)) return *f;

  // Structured projection directions. A linear projection needs one root per
  // projected median, so when the sets outnumber the degree cap the only hope
  // is two sets sharing a root. Directions orthogonal to a pair's centroid
  // difference stack that pair on top of each other in projection.
  {
    std::vector<Point> centroids;
    for (const auto& s : nonempty) {
      std::vector<Rational> c(d, Rational(0));
      for (const auto& p : s.points)
        for (int k = 0; k < d; ++k) c[k] += p[k];
      for (int k = 0; k < d; ++k) c[k] /= s.size();
      centroids.push_back(Point(std::move(c)));
    }
    std::vector<std::vector<Rational>> directions;
    for (size_t i = 0; i < nonempty.size(); ++i) {
      for (size_t j = i + 1; j < nonempty.size(); ++j) {
        std::vector<Rational> v(d);
        Rational vv = 0;
        for (int k = 0; k < d; ++k) {
          v[k] = centroids[i][k] - centroids[j][k];
          vv += v[k] * v[k];
        }
        if (vv == 0) continue;
        directions.push_back(v);
        // Projections of the coordinate axes onto the orthogonal complement.
        for (int axis = 0; axis < d; ++axis) {
          std::vector<Rational> w(d, Rational(0));
          w[axis] = 1;
          for (int k = 0; k < d; ++k) w[k] -= v[axis] * v[k] / vv;
          bool nz = false;
          for (int k = 0; k < d; ++k) nz |= (w[k] != 0);
          if (nz) directions.push_back(std::move(w));
        }
      }
    }
    for (const auto& w : directions) {
      MultiPoly g;
      g.dim = d;
      for (int k = 0; k < d; ++k) {
        if (w[k] == 0) continue;
        std::vector<int> e(d, 0);
        e[k] = 1;
        g.terms[std::move(e)] = w[k];
      }
      if (g.is_zero()) continue;
      if (auto f = projection_attempt(nonempty, g, D, opt.dp_node_budget))
        if (bisects_all(*f, nonempty)) return *f;
    }
  }

  // d=2 median-crossing pool. In the plane, every pair of sets admits a
  // direction where their projected median intervals intersect (the median
  // difference is continuous in the direction and negates over a half-turn),
  // letting the pair share one root. Search directions w(t) = (1-t^2, 2t)
  // by sign bisection on the interval-midpoint difference.
  if (d == 2 && nonempty.size() >= 2) {
    // Root interval for one set in direction w: [v_(n/2), v_(n/2+1)] for even
    // n, the single median value for odd n (1-indexed ascending order).
    auto root_interval = [](const PointSet& s, const Rational& wx,
                            const Rational& wy) {
      std::vector<Rational> v;
      v.reserve(s.size());
      for (const auto& p : s.points) v.push_back(wx * p[0] + wy * p[1]);
      std::sort(v.begin(), v.end());
      const int n = s.size();
      return std::pair<Rational, Rational>(v[(n - 1) / 2], v[n / 2]);
    };
    auto try_direction = [&](const Rational& t) -> std::optional<MultiPoly> {
      const Rational wx = 1 - t * t, wy = 2 * t;
      MultiPoly g;
      g.dim = 2;
      if (wx != 0) g.terms[{1, 0}] = wx;
      if (wy != 0) g.terms[{0, 1}] = wy;
      if (g.is_zero()) return std::nullopt;
      if (auto f = projection_attempt(nonempty, g, D, opt.dp_node_budget))
        if (bisects_all(*f, nonempty)) return f;
      return std::nullopt;
    };
    for (size_t i = 0; i < nonempty.size(); ++i) {
      for (size_t j = i + 1; j < nonempty.size(); ++j) {
        auto gap = [&](const Rational& t) {
          const Rational wx = 1 - t * t, wy = 2 * t;
          auto a = root_interval(nonempty[i], wx, wy);
          auto b = root_interval(nonempty[j], wx, wy);
          // 0 when the intervals overlap, else the signed midpoint difference.
          if (!(a.second < b.first) && !(b.second < a.first)) return Rational(0);
          return Rational((a.first + a.second) - (b.first + b.second));
        };
        constexpr int kGrid = 16;
        Rational prev_t(-8), prev_g = gap(prev_t);
        for (int step = 1; step <= kGrid && prev_g != 0; ++step) {
          Rational t = Rational(Integer(-8 + step), 1);
          Rational gv = gap(t);
          if (gv == 0) {
            prev_t = t;
            prev_g = 0;
            break;
          }
          if (sign_of(gv) != sign_of(prev_g)) {
            // Bisect until the intervals meet.
            Rational lo = prev_t, hi = t, glo = prev_g;
            for (int it = 0; it < 80; ++it) {
              Rational mid = (lo + hi) / 2;
              Rational gm = gap(mid);
              if (gm == 0) {
                prev_t = mid;
                prev_g = 0;
                break;
              }
              if (sign_of(gm) == sign_of(glo)) {
                lo = mid;
                glo = gm;
              } else {
                hi = mid;
              }
            }
            if (prev_g != 0) {
              prev_t = t;
              prev_g = gv;
            }
          } else {
            prev_t = t;
            prev_g = gv;
          }
        }
        if (prev_g == 0)
          if (auto f = try_direction(prev_t)) return *f;
      }
    }
  }

  Rng rng(Rng::derive(opt.seed, 0x68736477ULL));
  for (int attempt = 0; attempt < opt.direction_attempts; ++attempt) {
    MultiPoly g;
    g.dim = d;
    const bool quadratic = (attempt % 3 == 2) && D >= 2;
    if (!quadratic) {
      bool nz = false;
      for (int i = 0; i < d; ++i) {
        long long c = rng.int_range(-999, 999);
        if (c == 0) continue;
        std::vector<int> e(d, 0);
        e[i] = 1;
        g.terms[std::move(e)] = Rational(c);
        nz = true;
      }
      if (!nz) continue;
    } else {
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
          long long c = rng.int_range(-99, 99);
          if (c == 0) continue;
          std::vector<int> e(d, 0);
          ++e[i];
          ++e[j];
          g.terms[e] = Rational(c);
        }
      for (int i = 0; i < d; ++i) {
        long long c = rng.int_range(-999, 999);
        if (c == 0) continue;
        std::vector<int> e(d, 0);
        e[i] = 1;
        g.terms[e] += Rational(c);
      }
      g.prune();
      if (g.is_zero() || g.degree() < 1) continue;
    }
    const int max_roots = D / std::max(1, g.degree());
    if (max_roots < 1) continue;
    if (auto f = projection_attempt(nonempty, g, max_roots, opt.dp_node_budget)) {
      if (bisects_all(*f, nonempty)) return *f;
    }
  }

  if (d == 2) {
    if (auto f = line_product_pool(nonempty, D, opt.pairing_limit))
      return *f;
  }
  throw SearchExhausted("ham_sandwich_poly: no verified bisector found in any pool");
}

}  // namespace sametype
