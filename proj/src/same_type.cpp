#include "sametype/same_type.hpp"

#include <algorithm>
#include <functional>

#include "sametype/errors.hpp"

namespace sametype {

namespace {

int common_dim(const std::vector<PointSet>& sets) {
  int d = -1;
  for (const auto& s : sets) {
    if (s.points.empty()) throw DimensionMismatch("same_type: empty set");
    for (const auto& p : s.points) {
      if (d < 0) d = p.dim();
      if (p.dim() != d) throw DimensionMismatch("same_type: mixed dimensions");
    }
  }
  return d;
}

// Visits all transversal tuples (one point per set) in odometer order.
template <typename F>
void for_each_tuple(const std::vector<PointSet>& sets, F&& fn) {
  std::vector<int> pos(sets.size(), 0);
  while (true) {
    std::vector<Point> tuple;
    tuple.reserve(sets.size());
    for (size_t i = 0; i < sets.size(); ++i) tuple.push_back(sets[i].points[pos[i]]);
    if (!fn(tuple)) return;
    int k = static_cast<int>(sets.size()) - 1;
    while (k >= 0 && pos[k] + 1 == sets[k].size()) pos[k--] = 0;
    if (k < 0) return;
    ++pos[k];
  }
}

std::vector<std::vector<int>> subsets_of_size(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int t = k - 1;
    while (t >= 0 && idx[t] == m - k + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int i = t + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

}  // namespace

SameTypeVerdict same_type_tuple(const std::vector<PointSet>& sets,
                                GeneralPosition gp,
                                const std::vector<int>& indices) {
  const int d = common_dim(sets);
  if (static_cast<int>(sets.size()) != d + 1)
    throw DimensionMismatch("same_type_tuple: expected d+1 sets");
  std::vector<int> idx = indices;
  if (idx.empty())
    for (int i = 0; i <= d; ++i) idx.push_back(i);

  SameTypeVerdict v;
  int common = 0;
  std::vector<Point> first_tuple;
  bool conflict = false;
  std::vector<Point> conflict_tuple;
  for_each_tuple(sets, [&](const std::vector<Point>& tuple) {
    int sg = orient(tuple);
    if (sg == 0) {
      if (gp == GeneralPosition::Verified)
        throw TheoremViolation("degenerate tuple inside a verified-general-position family");
      throw DegenerateTuple("transversal tuple with orientation 0");
    }
    if (common == 0) {
      common = sg;
      first_tuple = tuple;
      return true;
    }
    if (sg != common) {
      conflict = true;
      conflict_tuple = tuple;
      return false;
    }
    return true;
  });
  if (!conflict) {
    v.holds = true;
    v.signs[idx] = common;
    return v;
  }
  SameTypeWitness w;
  w.kind = SameTypeWitness::Kind::OppositePair;
  w.subfamily = idx;
  if (common > 0) {
    w.tuple_pos = first_tuple;
    w.tuple_neg = conflict_tuple;
  } else {
    w.tuple_pos = conflict_tuple;
    w.tuple_neg = first_tuple;
  }
  v.holds = false;
  v.witness = std::move(w);
  return v;
}

SameTypeVerdict same_type_family(const Family& f) {
  const int d = f.dim;
  SameTypeVerdict v;
  if (f.m() <= d) {
    v.holds = true;  // no (d+1)-subfamily exists
    return v;
  }
  v.holds = true;
  for (const auto& sub : subsets_of_size(f.m(), d + 1)) {
    std::vector<PointSet> sets;
    sets.reserve(sub.size());
    for (int i : sub) sets.push_back(f.sets[i]);
    SameTypeVerdict part = same_type_tuple(sets, f.general_position, sub);
    if (!part.holds) return part;
    v.signs.insert(part.signs.begin(), part.signs.end());
  }
  return v;
}

std::optional<Hyperplane> transversal_hyperplane(const std::vector<PointSet>& sets) {
  const int d = common_dim(sets);
  std::vector<Point> u;
  for (const auto& s : sets) u.insert(u.end(), s.points.begin(), s.points.end());
  const int n = static_cast<int>(u.size());
  if (n < d) return std::nullopt;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    std::vector<Point> sub;
    sub.reserve(d);
    for (int i : idx) sub.push_back(u[i]);
    try {
      Hyperplane h = span_hyperplane(sub);
      bool all = true;
      for (const auto& s : sets) {
        if (!hull_meets_hyperplane(s, h)) {
          all = false;
          break;
        }
      }
      if (all) return h;
    } catch (const AffinelyDependent&) {
    }
    int k = d - 1;
    while (k >= 0 && idx[k] == n - d + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
  }
  return std::nullopt;
}

bool same_type_via_transversal(const std::vector<PointSet>& sets) {
  return !transversal_hyperplane(sets).has_value();
}

namespace {

struct BnbState {
  const Family* fam = nullptr;
  int d = 0;
  int m = 0;
  std::vector<std::vector<int>> tuple_subsets;   // all (d+1)-subsets of [m]
  std::vector<std::vector<int>> subsets_of_set;  // set -> subset ids containing it
  std::vector<int> sign_state;                   // subset id -> common sign (0 unset)
  std::vector<std::vector<int>> inc;             // per set, included point indices
  std::vector<int> remaining;                    // per set, undecided points left
  Rational best_value{-1};
  std::vector<std::vector<int>> best_inc;
  long long nodes = 0;
  long long budget = 0;

  bool try_include(int set_i, int point_i, std::vector<int>& journal) {
    for (int sid : subsets_of_set[set_i]) {
      const auto& sub = tuple_subsets[sid];
      bool ready = true;
      for (int s : sub)
        if (s != set_i && inc[s].empty()) {
          ready = false;
          break;
        }
      if (!ready) continue;
      // Odometer over the other sets' included points.
      std::vector<int> pos(sub.size(), 0);
      while (true) {
        std::vector<Point> tuple;
        tuple.reserve(sub.size());
        for (size_t t = 0; t < sub.size(); ++t) {
          int s = sub[t];
          tuple.push_back(s == set_i ? fam->sets[s].points[point_i]
                                     : fam->sets[s].points[inc[s][pos[t]]]);
        }
        int sg = orient(tuple);
        if (sg == 0)
          throw TheoremViolation("c_exact: zero orientation under verified general position");
        if (sign_state[sid] == 0) {
          sign_state[sid] = sg;
          journal.push_back(sid);
        } else if (sign_state[sid] != sg) {
          return false;
        }
        int k = static_cast<int>(sub.size()) - 1;
        while (k >= 0 && (sub[k] == set_i || pos[k] + 1 == static_cast<int>(inc[sub[k]].size())))
          pos[k--] = 0;
        if (k < 0) break;
        ++pos[k];
      }
    }
    return true;
  }

  void search(int set_i, int point_i) {
    if (++nodes > budget) {
      CResult best = snapshot();
      throw ::sametype::BudgetExceeded(std::move(best));
    }
    if (set_i == m) {
      Rational value{1};
      for (int s = 0; s < m; ++s) {
        if (inc[s].empty()) return;
        value = std::min(value, Rational(Integer(inc[s].size()), Integer(fam->sets[s].size())));
      }
      if (value > best_value) {
        best_value = value;
        best_inc = inc;
      }
      return;
    }
    if (point_i == fam->sets[set_i].size()) {
      search(set_i + 1, 0);
      return;
    }
    // Bound: even including every undecided point cannot beat the incumbent.
    Rational potential{1};
    for (int s = 0; s < m; ++s) {
      potential = std::min(
          potential, Rational(Integer(inc[s].size() + remaining[s]), Integer(fam->sets[s].size())));
    }
    if (best_value >= 0 && potential <= best_value) return;

    --remaining[set_i];
    // Include first: first optimum found is the lexicographically smallest
    // selection, and strict-improvement updates keep it.
    std::vector<int> journal;
    if (try_include(set_i, point_i, journal)) {
      inc[set_i].push_back(point_i);
      search(set_i, point_i + 1);
      inc[set_i].pop_back();
    }
    for (int sid : journal) sign_state[sid] = 0;
    // Exclude, unless that empties the set for good.
    if (!(inc[set_i].empty() && remaining[set_i] == 0)) search(set_i, point_i + 1);
    ++remaining[set_i];
  }

  CResult snapshot() const {
    CResult r;
    r.method = "exhaustive";
    r.value = best_value < 0 ? Rational(0) : best_value;
    for (int s = 0; s < m; ++s) {
      PointSet ps;
      ps.label = fam->sets[s].label;
      for (int i : best_inc.empty() ? std::vector<int>{} : best_inc[s])
        ps.points.push_back(fam->sets[s].points[i]);
      r.optimal_subsets.push_back(std::move(ps));
    }
    return r;
  }
};

}  // namespace

CResult c_exact(const Family& f, const CExactConfig& cfg) {
  if (f.general_position != GeneralPosition::Verified)
    throw std::invalid_argument("c_exact requires verified general position");
  if (f.m() > cfg.max_m) throw std::invalid_argument("c_exact: too many sets for the budget");
  for (const auto& s : f.sets)
    if (s.size() > cfg.max_set_size)
      throw std::invalid_argument("c_exact: set size exceeds the configured budget");

  BnbState st;
  st.fam = &f;
  st.d = f.dim;
  st.m = f.m();
  st.budget = cfg.node_budget;
  st.tuple_subsets = subsets_of_size(st.m, std::min(st.m, st.d + 1));
  if (st.m <= st.d) st.tuple_subsets.clear();  // vacuously same-type
  st.subsets_of_set.resize(st.m);
  for (size_t sid = 0; sid < st.tuple_subsets.size(); ++sid)
    for (int s : st.tuple_subsets[sid]) st.subsets_of_set[s].push_back(static_cast<int>(sid));
  st.sign_state.assign(st.tuple_subsets.size(), 0);
  st.inc.resize(st.m);
  st.remaining.resize(st.m);
  for (int s = 0; s < st.m; ++s) st.remaining[s] = f.sets[s].size();

  st.search(0, 0);
  CResult r = st.snapshot();
  if (st.best_value < 0)
    throw TheoremViolation("c_exact: no feasible selection (singletons must be same-type)");
  return r;
}

CResult c_cell_heuristic(const Family& f, long long hyperplane_budget) {
  if (f.general_position != GeneralPosition::Verified)
    throw std::invalid_argument("c_cell_heuristic requires verified general position");
  const int d = f.dim;
  const int m = f.m();

  auto evaluate = [&](const std::vector<std::vector<int>>& selection) -> std::optional<Rational> {
    Family cand;
    cand.dim = d;
    cand.general_position = GeneralPosition::Verified;
    Rational value{1};
    for (int s = 0; s < m; ++s) {
      if (selection[s].empty()) return std::nullopt;
      PointSet ps;
      ps.label = f.sets[s].label;
      for (int i : selection[s]) ps.points.push_back(f.sets[s].points[i]);
      value = std::min(value, Rational(Integer(ps.points.size()), Integer(f.sets[s].size())));
      cand.sets.push_back(std::move(ps));
    }
    if (!same_type_family(cand).holds) return std::nullopt;
    return value;
  };

  CResult best;
  best.method = "cell_heuristic";
  // Baseline: first point of each set; singletons are same-type under
  // verified general position.
  {
    std::vector<std::vector<int>> singletons(m, std::vector<int>{0});
    auto v = evaluate(singletons);
    if (!v) throw TheoremViolation("c_cell_heuristic: singleton family not same-type");
    best.value = *v;
    for (int s = 0; s < m; ++s)
      best.optimal_subsets.push_back(PointSet{f.sets[s].label, {f.sets[s].points[0]}});
  }

  // Canonical hyperplane pool: spans of d-subsets of the union, deduplicated.
  std::vector<Point> u = f.union_points();
  std::vector<Hyperplane> pool;
  {
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    const int n = static_cast<int>(u.size());
    if (n >= d) {
      while (true) {
        std::vector<Point> sub;
        for (int i : idx) sub.push_back(u[i]);
        try {
          pool.push_back(span_hyperplane(sub));
        } catch (const AffinelyDependent&) {
        }
        int k = d - 1;
        while (k >= 0 && idx[k] == n - d + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  }

  long long tried = 0;
  const int pool_n = static_cast<int>(pool.size());
  for (int k = 1; k <= m && tried < hyperplane_budget; ++k) {
    if (k > pool_n) break;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (tried < hyperplane_budget) {
      ++tried;
      // Sign vector per point; best (largest, then lexicographically first
      // sign key) zero-free cell per set.
      std::vector<std::vector<int>> selection(m);
      {
        std::map<std::pair<int, std::string>, std::vector<int>> cells;
        int offset = 0;
        for (int s = 0; s < m; ++s) {
          for (int pi = 0; pi < f.sets[s].size(); ++pi) {
            std::string key;
            bool zero = false;
            for (int hi : idx) {
              int sg = side(pool[hi], u[offset + pi]);
              if (sg == 0) {
                zero = true;
                break;
              }
              key.push_back(sg > 0 ? '+' : '-');
            }
            if (!zero) cells[{s, key}].push_back(pi);
          }
          offset += f.sets[s].size();
        }
        for (auto& [sk, pts] : cells) {
          auto& cur = selection[sk.first];
          if (pts.size() > cur.size()) cur = pts;
        }
      }
      if (auto v = evaluate(selection); v && *v > best.value) {
        best.value = *v;
        best.optimal_subsets.clear();
        for (int s = 0; s < m; ++s) {
          PointSet ps;
          ps.label = f.sets[s].label;
          for (int i : selection[s]) ps.points.push_back(f.sets[s].points[i]);
          best.optimal_subsets.push_back(std::move(ps));
        }
      }
      int t = k - 1;
      while (t >= 0 && idx[t] == pool_n - k + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int i = t + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return best;
}

}  // namespace sametype
