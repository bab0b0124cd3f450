#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sametype/errors.hpp"
#include "sametype/extraction.hpp"
#include "sametype/generators.hpp"

using namespace sametype;
using testutil::make_set;
using testutil::pt;

namespace {

bool contains_point(const PointSet& s, const Point& p) {
  return std::find(s.points.begin(), s.points.end(), p) != s.points.end();
}

// Three parts of two cells each, every part one set; edges over the single
// (d+1)-subfamily {0,1,2} are passed in by ordinal triple.
PiercingHypergraph toy_hypergraph(const std::vector<std::vector<int>>& bad) {
  PiercingHypergraph h;
  for (int i = 0; i < 3; ++i) {
    std::vector<CellVertex> part;
    for (int c = 0; c < 2; ++c)
      part.push_back(CellVertex{i, c == 0 ? "+" : "-", {c}});
    h.parts.push_back(std::move(part));
  }
  for (const auto& t : bad) {
    std::vector<std::pair<int, int>> edge;
    for (int i = 0; i < 3; ++i) edge.emplace_back(i, t[i]);
    h.edges.insert(edge);
  }
  h.edge_counts[{0, 1, 2}] = static_cast<long long>(bad.size());
  return h;
}

}  // namespace

TEST_SUITE("extraction") {

TEST_CASE("heavy cells use a strict threshold") {
  Family f = random_family(2, 1, 32, 7);
  Partition p = build_partition(f.sets[0], 2, 2, 3);
  // Oracle: count cells above the threshold directly from the cell map.
  for (const Rational& thr : {Rational(3), Rational(7, 2), Rational(100)}) {
    auto heavy = heavy_cells(p, 0, thr);
    size_t expect = 0;
    for (const auto& [key, idxs] : p.cells)
      if (Rational(static_cast<long long>(idxs.size())) > thr) ++expect;
    CHECK(heavy.size() == expect);
    for (const auto& cell : heavy) {
      CHECK(cell.set_index == 0);
      CHECK(Rational(static_cast<long long>(cell.point_idx.size())) > thr);
      CHECK(p.cells.at(cell.sign_key) == cell.point_idx);
    }
  }
}

TEST_CASE("piercing edge is the negation of the same-type check") {
  // Three segments through the x-axis: pierced by it.
  std::vector<PointSet> crossed = {
      make_set("a", {pt({0, 2}), pt({1, -3})}),
      make_set("b", {pt({5, 1}), pt({4, -1})}),
      make_set("c", {pt({9, 4}), pt({8, -2})})};
  Family fc = testutil::verified_family(2, crossed);
  REQUIRE(fc.general_position == GeneralPosition::Verified);
  CHECK(piercing_edge(crossed, fc.general_position));

  // Far-separated clusters: no transversal line.
  std::vector<PointSet> apart = {
      make_set("a", {pt({0, 0}), pt({1, 0})}),
      make_set("b", {pt({100, 3}), pt({101, 5})}),
      make_set("c", {pt({50, 200}), pt({53, 201})})};
  Family fa = testutil::verified_family(2, apart);
  REQUIRE(fa.general_position == GeneralPosition::Verified);
  CHECK_FALSE(piercing_edge(apart, fa.general_position));
}

TEST_CASE("resampling lands on the unique edge-free selection") {
  std::vector<std::vector<int>> bad;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (!(a == 1 && b == 0 && c == 1)) bad.push_back({a, b, c});
  PiercingHypergraph h = toy_hypergraph(bad);
  ExtractionConfig cfg;
  cfg.seed = 9;
  LllResult r = lll_select(h, 2, cfg);
  CHECK(r.selection == std::vector<int>{1, 0, 1});
}

TEST_CASE("resampling gives up when every selection spans an edge") {
  std::vector<std::vector<int>> bad;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) bad.push_back({a, b, c});
  PiercingHypergraph h = toy_hypergraph(bad);
  ExtractionConfig cfg;
  cfg.seed = 9;
  cfg.max_resample = 50;
  CHECK_THROWS_AS(lll_select(h, 2, cfg), ResampleLimitExceeded);
}

TEST_CASE("full pipeline on clustered sets") {
  Family f = clustered_family(2, 4, 80, 3);
  ExtractionConfig cfg;
  cfg.r = 8;
  cfg.seed = 3;
  ExtractionResult res = extract_same_type(f, cfg);
  CHECK(res.verdict.holds);
  REQUIRE(res.subsets.size() == 4);
  size_t min_size = 80;
  for (int i = 0; i < 4; ++i) {
    CHECK_FALSE(res.subsets[i].points.empty());
    for (const auto& p : res.subsets[i].points)
      CHECK(contains_point(f.sets[i], p));
    min_size = std::min(min_size, res.subsets[i].points.size());
  }
  CHECK(res.report.achieved_fraction ==
        Rational(static_cast<long long>(min_size), 80));
  CHECK(res.report.realized_cells.size() == 4);
  for (size_t i = 0; i < 4; ++i)
    CHECK(Integer(res.report.realized_cells[i]) <= res.report.warren_bounds[i]);
}

TEST_CASE("full pipeline on a random family, deterministically") {
  Family f = random_family(2, 3, 48, 1);
  ExtractionConfig cfg;
  cfg.r = 8;
  cfg.seed = 5;
  ExtractionResult a = extract_same_type(f, cfg);
  CHECK(a.verdict.holds);
  CHECK(a.report.achieved_fraction > 0);

  ExtractionResult b = extract_same_type(f, cfg);
  REQUIRE(a.subsets.size() == b.subsets.size());
  for (size_t i = 0; i < a.subsets.size(); ++i)
    CHECK(a.subsets[i].points == b.subsets[i].points);
  CHECK(a.report.resample_rounds == b.report.resample_rounds);
}

}  // TEST_SUITE
