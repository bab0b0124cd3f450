#include "sametype/extraction.hpp"

#include <algorithm>

#include "sametype/errors.hpp"
#include "sametype/hull.hpp"
#include "sametype/rng.hpp"

namespace sametype {

int ExtractionConfig::J() const {
  if (r < 2) throw std::invalid_argument("ExtractionConfig: r must be >= 2");
  int j = 0;
  while ((1LL << j) < r) ++j;
  return j;
}

std::vector<CellVertex> heavy_cells(const Partition& part, int set_index,
                                    const Rational& threshold) {
  if (threshold <= 0) throw std::invalid_argument("heavy_cells: threshold must be > 0");
  std::vector<CellVertex> out;
  for (const auto& [key, idxs] : part.cells) {
    if (idxs.empty()) continue;
    if (Rational(Integer(idxs.size()), 1) > threshold)
      out.push_back(CellVertex{set_index, key, idxs});
  }
  return out;
}

bool piercing_edge(const std::vector<PointSet>& cell_points, GeneralPosition gp) {
  // Reduce to extreme points: convex hulls are unchanged, so both the
  // transversal question and the same-type property are unchanged.
  std::vector<PointSet> reduced;
  reduced.reserve(cell_points.size());
  int d = -1;
  for (const auto& s : cell_points) {
    if (s.points.empty()) throw DimensionMismatch("piercing_edge: empty cell");
    if (d < 0) d = s.points[0].dim();
    PointSet r;
    r.label = s.label;
    r.points = extreme_points(s.points, d);
    reduced.push_back(std::move(r));
  }
  return !same_type_tuple(reduced, gp).holds;
}

PiercingHypergraph build_hypergraph(const Family& f,
                                    const std::vector<Partition>& partitions,
                                    const ExtractionConfig& cfg) {
  const int d = f.dim;
  const int m = f.m();
  if (m < d + 1) throw std::invalid_argument("build_hypergraph: need m >= d+1");

  PiercingHypergraph h;
  h.parts.resize(m);
  for (int i = 0; i < m; ++i) {
    const int n = f.sets[i].size();
    const long long k = static_cast<long long>(partitions[i].cells.size());
    Rational threshold(Integer(n), Integer(cfg.heavy_threshold_denominator * std::max(1LL, k)));
    h.parts[i] = heavy_cells(partitions[i], i, threshold);
  }

  // Pre-reduce each heavy cell to its extreme points once.
  std::vector<std::vector<PointSet>> reduced(m);
  for (int i = 0; i < m; ++i) {
    for (const auto& cv : h.parts[i]) {
      PointSet s;
      s.label = cv.sign_key;
      for (int pi : cv.point_idx) s.points.push_back(f.sets[i].points[pi]);
      s.points = extreme_points(s.points, d);
      reduced[i].push_back(std::move(s));
    }
  }

  // Extreme points of each full set, for the subfamily-level early out below.
  std::vector<PointSet> full(m);
  for (int i = 0; i < m; ++i) {
    full[i].label = f.sets[i].label;
    full[i].points = extreme_points(f.sets[i].points, d);
  }

  // All (d+1)-subfamilies of parts, all cell tuples.
  std::vector<int> sub(d + 1);
  for (int i = 0; i <= d; ++i) sub[i] = i;
  while (true) {
    long long count = 0;
    bool any_empty = false;
    for (int i : sub) any_empty |= h.parts[i].empty();
    // If the full sets of this subfamily are same-type, monotonicity makes
    // every tuple of sub-cells same-type too: no edges to enumerate.
    if (!any_empty) {
      std::vector<PointSet> whole;
      for (int i : sub) whole.push_back(full[i]);
      if (!piercing_edge(whole, f.general_position)) any_empty = true;
    }
    if (!any_empty) {
      std::vector<int> pos(d + 1, 0);
      while (true) {
        std::vector<PointSet> cells;
        cells.reserve(d + 1);
        for (int t = 0; t <= d; ++t) cells.push_back(reduced[sub[t]][pos[t]]);
        if (piercing_edge(cells, f.general_position)) {
          std::vector<std::pair<int, int>> edge;
          for (int t = 0; t <= d; ++t) edge.emplace_back(sub[t], pos[t]);
          h.edges.insert(std::move(edge));
          ++count;
        }
        int k = d;
        while (k >= 0 && pos[k] + 1 == static_cast<int>(h.parts[sub[k]].size())) pos[k--] = 0;
        if (k < 0) break;
        ++pos[k];
      }
    }
    h.edge_counts[sub] = count;
    int t = d;
    while (t >= 0 && sub[t] == m - (d + 1) + t) --t;
    if (t < 0) break;
    ++sub[t];
    for (int i = t + 1; i <= d; ++i) sub[i] = sub[i - 1] + 1;
  }
  return h;
}

LllResult lll_select(const PiercingHypergraph& h, int dim, const ExtractionConfig& cfg) {
  const int m = static_cast<int>(h.parts.size());
  for (const auto& part : h.parts)
    if (part.empty())
      throw std::invalid_argument("lll_select: empty part (no heavy cells)");

  Rng rng(Rng::derive(cfg.seed, 0x6c6c6cULL));
  LllResult res;
  res.selection.resize(m);
  for (int i = 0; i < m; ++i)
    res.selection[i] = static_cast<int>(rng.below(h.parts[i].size()));

  auto violated = [&]() -> std::optional<std::vector<int>> {
    // First violated (d+1)-subfamily in lexicographic order.
    std::vector<int> sub(dim + 1);
    for (int i = 0; i <= dim; ++i) sub[i] = i;
    while (true) {
      std::vector<std::pair<int, int>> edge;
      for (int i : sub) edge.emplace_back(i, res.selection[i]);
      if (h.edges.count(edge)) return sub;
      int t = dim;
      while (t >= 0 && sub[t] == m - (dim + 1) + t) --t;
      if (t < 0) return std::nullopt;
      ++sub[t];
      for (int i = t + 1; i <= dim; ++i) sub[i] = sub[i - 1] + 1;
    }
  };

  while (auto bad = violated()) {
    if (++res.rounds > cfg.max_resample)
      throw ResampleLimitExceeded("lll_select: resample limit exceeded (r too small?)");
    for (int i : *bad) res.selection[i] = static_cast<int>(rng.below(h.parts[i].size()));
  }

  // Re-verify against H before returning.
  if (violated()) throw TheoremViolation("lll_select: returned selection spans an edge");
  return res;
}

ExtractionResult extract_same_type(const Family& f, const ExtractionConfig& cfg) {
  if (f.general_position != GeneralPosition::Verified)
    throw std::invalid_argument("extract_same_type requires verified general position");
  const int m = f.m();
  const int n = m > 0 ? f.sets[0].size() : 0;
  for (const auto& s : f.sets)
    if (s.size() != n)
      throw std::invalid_argument(
          "extract_same_type: sets must have equal sizes (blow up the input first)");

  const int J = cfg.J();
  std::vector<Partition> parts;
  parts.reserve(m);
  for (int i = 0; i < m; ++i) {
    HamSandwichOptions hs = cfg.hs;
    parts.push_back(build_partition(f.sets[i], J, f.dim,
                                    Rng::derive(cfg.seed, 0x70000ULL + i), hs));
  }

  ExtractionResult out;
  for (int i = 0; i < m; ++i) {
    const long long k = static_cast<long long>(parts[i].cells.size());
    out.report.realized_cells.push_back(static_cast<int>(k));
    out.report.warren_bounds.push_back(warren_audit(parts[i]).bound);
    Rational threshold(Integer(n), Integer(cfg.heavy_threshold_denominator * std::max(1LL, k)));
    out.report.thresholds.push_back(threshold);
    // Heavy-cell mass: light cells account for at most n/4 points.
    Integer light = 0;
    for (const auto& [key, idxs] : parts[i].cells)
      if (!(Rational(Integer(idxs.size()), 1) > threshold)) light += idxs.size();
    if (Rational(light, 1) * cfg.heavy_threshold_denominator > Rational(Integer(n), 1))
      throw TheoremViolation("extract_same_type: light cells hold more than n/4 points");
  }

  PiercingHypergraph h = build_hypergraph(f, parts, cfg);
  out.report.edge_counts = h.edge_counts;
  LllResult sel = lll_select(h, f.dim, cfg);
  out.report.resample_rounds = sel.rounds;

  Family selected;
  selected.dim = f.dim;
  selected.general_position = GeneralPosition::Verified;
  Rational fraction{1};
  for (int i = 0; i < m; ++i) {
    const CellVertex& cv = h.parts[i][sel.selection[i]];
    PointSet s;
    s.label = f.sets[i].label;
    for (int pi : cv.point_idx) s.points.push_back(f.sets[i].points[pi]);
    fraction = std::min(fraction, Rational(Integer(s.points.size()), Integer(n)));
    selected.sets.push_back(std::move(s));
  }
  out.report.achieved_fraction = fraction;

  out.verdict = same_type_family(selected);
  if (!out.verdict.holds)
    throw SameTypeVerificationFailed(
        "extract_same_type: independent selection failed the same-type check");
  out.subsets = std::move(selected.sets);
  return out;
}

}  // namespace sametype
