#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sametype/errors.hpp"
#include "sametype/generators.hpp"
#include "sametype/same_type.hpp"

using namespace sametype;
using testutil::make_set;
using testutil::pt;
using testutil::ptq;
using testutil::verified_family;

namespace {

// Straddle instance: X3 sits on both sides of the line through X1 and X2.
Family straddle() {
  return verified_family(2, {make_set("X1", {pt({0, 0})}),
                             make_set("X2", {pt({7, 1})}),
                             make_set("X3", {pt({3, 5}), pt({3, -5})})});
}

Family triangle_clusters() {
  return verified_family(
      2, {make_set("A", {ptq({"0", "0"}), ptq({"1/100", "1/150"})}),
          make_set("B", {ptq({"10", "0"}), ptq({"10", "1/100"})}),
          make_set("C", {ptq({"5", "9"}), ptq({"499/100", "9"})})});
}

}  // namespace

TEST_SUITE("same_type") {

TEST_CASE("singleton triple holds with the triple's orientation") {
  Family f = verified_family(2, {make_set("a", {pt({0, 0})}),
                                 make_set("b", {pt({1, 0})}),
                                 make_set("c", {pt({0, 1})})});
  auto v = same_type_tuple(f.sets, f.general_position);
  CHECK(v.holds);
  CHECK(v.signs.at({0, 1, 2}) == 1);
}

TEST_CASE("straddling set fails with an opposite-orientation witness") {
  Family f = straddle();
  auto v = same_type_tuple(f.sets, f.general_position);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->kind == SameTypeWitness::Kind::OppositePair);
  CHECK(orient(v.witness->tuple_pos) == 1);
  CHECK(orient(v.witness->tuple_neg) == -1);
}

TEST_CASE("clusters at triangle vertices hold; exhaustive oracle agrees") {
  Family f = triangle_clusters();
  auto v = same_type_tuple(f.sets, f.general_position);
  CHECK(v.holds);
  // Oracle: direct loop over all 8 transversal triples.
  int expect = 0;
  bool consistent = true;
  for (const auto& a : f.sets[0].points)
    for (const auto& b : f.sets[1].points)
      for (const auto& c : f.sets[2].points) {
        int s = orient({a, b, c});
        if (expect == 0) expect = s;
        consistent &= (s == expect && s != 0);
      }
  CHECK(consistent);
  CHECK(v.signs.at({0, 1, 2}) == expect);
}

TEST_CASE("family check over four square clusters") {
  Family f = verified_family(
      2, {make_set("A", {ptq({"0", "0"}), ptq({"1/9", "1/7"})}),
          make_set("B", {ptq({"10", "1/3"}), ptq({"99/10", "1/5"})}),
          make_set("C", {ptq({"10", "10"}), ptq({"97/10", "49/5"})}),
          make_set("D", {ptq({"1/4", "10"}), ptq({"0", "48/5"})})});
  auto v = same_type_family(f);
  CHECK(v.holds);
  CHECK(v.signs.size() == 4);  // C(4,3) subfamilies

  // Stretch one set across the hull of the others: some subfamily fails.
  Family g = f;
  g.sets[3] = make_set("D", {ptq({"-30", "5"}), ptq({"40", "26/5"})});
  g.general_position = verify_general_position(g).verdict;
  REQUIRE(g.general_position == GeneralPosition::Verified);
  auto w = same_type_family(g);
  CHECK_FALSE(w.holds);
  CHECK(w.witness.has_value());
}

TEST_CASE("vacuous for m <= d") {
  Family f = verified_family(2, {make_set("a", {pt({0, 0})}),
                                 make_set("b", {pt({5, 3})})});
  CHECK(same_type_family(f).holds);
}

TEST_CASE("degenerate transversal tuples are an error when unverified") {
  Family f;
  f.dim = 2;
  f.sets = {make_set("a", {pt({0, 0})}), make_set("b", {pt({1, 1})}),
            make_set("c", {pt({2, 2})})};
  f.general_position = GeneralPosition::Assumed;
  CHECK_THROWS_AS(same_type_tuple(f.sets, f.general_position), DegenerateTuple);
}

TEST_CASE("transversal_hyperplane on named instances") {
  // Three segments crossing the x-axis.
  Family f = verified_family(
      2, {make_set("a", {pt({0, 2}), pt({1, -3})}),
          make_set("b", {pt({5, 1}), pt({4, -1})}),
          make_set("c", {pt({9, 4}), pt({8, -2})})});
  auto h = transversal_hyperplane(f.sets);
  REQUIRE(h.has_value());
  for (const auto& s : f.sets) CHECK(hull_meets_hyperplane(s, *h));

  // Far-separated same-type clusters: none.
  Family g = triangle_clusters();
  CHECK_FALSE(transversal_hyperplane(g.sets).has_value());
  CHECK(same_type_via_transversal(g.sets));

  // The straddle instance admits the line through (0,0) and (7,1).
  Family s = straddle();
  auto t = transversal_hyperplane(s.sets);
  REQUIRE(t.has_value());
  CHECK_FALSE(same_type_via_transversal(s.sets));
  for (const auto& set : s.sets) CHECK(hull_meets_hyperplane(set, *t));
}

TEST_CASE("checker equivalence on random families") {
  for (int d = 2; d <= 3; ++d) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      Family f = random_family(d, d + 1, 4, seed * 13 + d);
      REQUIRE(f.general_position == GeneralPosition::Verified);
      auto v = same_type_tuple(f.sets, f.general_position);
      CHECK(v.holds == same_type_via_transversal(f.sets));
    }
  }
}

TEST_CASE("c_exact named values") {
  Family ones = verified_family(2, {make_set("a", {pt({0, 0})}),
                                    make_set("b", {pt({1, 0})}),
                                    make_set("c", {pt({0, 1})})});
  auto r1 = c_exact(ones);
  CHECK(r1.value == 1);
  CHECK(r1.method == "exhaustive");

  auto r2 = c_exact(straddle());
  CHECK(r2.value == Rational(1, 2));
  // Tie-break: lexicographically smallest selection keeps the first point.
  CHECK(r2.optimal_subsets[2].points == std::vector<Point>{pt({3, 5})});
}

TEST_CASE("c_exact agrees with the unpruned exhaustive oracle") {
  for (std::uint64_t seed : {4u, 9u, 21u}) {
    Family f = random_family(2, 3, 4, seed);
    REQUIRE(f.general_position == GeneralPosition::Verified);
    auto got = c_exact(f);

    // Oracle: enumerate every triple of nonempty subsets, no pruning.
    Rational best = 0;
    const int n0 = f.sets[0].size(), n1 = f.sets[1].size(), n2 = f.sets[2].size();
    for (int m0 = 1; m0 < (1 << n0); ++m0)
      for (int m1 = 1; m1 < (1 << n1); ++m1)
        for (int m2 = 1; m2 < (1 << n2); ++m2) {
          Family sub;
          sub.dim = 2;
          sub.general_position = GeneralPosition::Verified;
          const int masks[3] = {m0, m1, m2};
          Rational frac = 1;
          for (int i = 0; i < 3; ++i) {
            PointSet s;
            for (int b = 0; b < f.sets[i].size(); ++b)
              if (masks[i] & (1 << b)) s.points.push_back(f.sets[i].points[b]);
            frac = std::min(frac,
                            Rational(Integer(s.size()), Integer(f.sets[i].size())));
            sub.sets.push_back(std::move(s));
          }
          if (frac <= best) continue;
          if (same_type_family(sub).holds) best = frac;
        }
    CHECK(got.value == best);
    CHECK(same_type_family(verified_family(2, got.optimal_subsets)).holds);
  }
}

TEST_CASE("c_exact is permutation-equivariant and bounded below") {
  Family f = random_family(2, 3, 5, 77);
  auto base = c_exact(f);
  CHECK(base.value >= Rational(1, 5));

  Family perm = f;
  std::swap(perm.sets[0], perm.sets[2]);
  auto swapped = c_exact(perm);
  CHECK(swapped.value == base.value);
}

TEST_CASE("c_exact budget exhaustion carries the best bound") {
  Family f = random_family(2, 3, 6, 5);
  CExactConfig cfg;
  cfg.node_budget = 50;
  try {
    c_exact(f, cfg);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.best.value >= 0);
  }
}

TEST_CASE("monotonicity: subsets of a same-type family stay same-type") {
  Family f = triangle_clusters();
  REQUIRE(same_type_family(f).holds);
  for (int drop = 0; drop < 3; ++drop) {
    Family sub = f;
    sub.sets[drop].points.pop_back();
    CHECK(same_type_family(sub).holds);
  }
}

TEST_CASE("cell heuristic is a lower bound") {
  Family ones = verified_family(2, {make_set("a", {pt({0, 0})}),
                                    make_set("b", {pt({1, 0})}),
                                    make_set("c", {pt({0, 1})})});
  CHECK(c_cell_heuristic(ones, 50).value == 1);

  for (std::uint64_t seed : {3u, 11u}) {
    Family f = random_family(2, 3, 6, seed);
    auto exact = c_exact(f);
    auto heur = c_cell_heuristic(f, 40);
    CHECK(heur.value <= exact.value);
    CHECK(heur.value > 0);
    CHECK(same_type_family(verified_family(2, heur.optimal_subsets)).holds);
  }
}

}  // TEST_SUITE
