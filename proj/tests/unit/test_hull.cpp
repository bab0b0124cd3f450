#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sametype/errors.hpp"
#include "sametype/hull.hpp"

using namespace sametype;
using testutil::pt;

TEST_SUITE("hull") {

TEST_CASE("unit square facets and classification") {
  std::vector<Point> sq = {pt({0, 0}), pt({2, 0}), pt({2, 2}), pt({0, 2})};
  auto facets = hull_facets(sq, 2);
  CHECK(facets.size() == 4);
  for (const auto& h : facets)
    for (const auto& p : sq) CHECK(side(h, p) <= 0);

  CHECK(classify_against_hull(facets, pt({1, 1})) == HullPosition::Interior);
  CHECK(classify_against_hull(facets, pt({1, 0})) == HullPosition::Boundary);
  CHECK(classify_against_hull(facets, pt({0, 0})) == HullPosition::Boundary);
  CHECK(classify_against_hull(facets, pt({5, 5})) == HullPosition::Outside);
  CHECK(classify_against_hull(facets, pt({2, 3})) == HullPosition::Outside);
}

TEST_CASE("degenerate bodies are refused") {
  CHECK_THROWS_AS(hull_facets({pt({0, 0}), pt({1, 1}), pt({2, 2})}, 2),
                  DegenerateBody);
  CHECK_THROWS_AS(hull_facets({pt({1, 2})}, 2), DegenerateBody);
}

TEST_CASE("3-d simplex") {
  std::vector<Point> simplex = {pt({0, 0, 0}), pt({4, 0, 0}), pt({0, 4, 0}),
                                pt({0, 0, 4})};
  auto facets = hull_facets(simplex, 3);
  CHECK(facets.size() == 4);
  CHECK(classify_against_hull(facets, pt({1, 1, 1})) == HullPosition::Interior);
  CHECK(classify_against_hull(facets, pt({2, 2, 0})) == HullPosition::Boundary);
  CHECK(classify_against_hull(facets, pt({4, 4, 4})) == HullPosition::Outside);
}

TEST_CASE("affine rank") {
  CHECK(affine_rank({pt({3, 5})}) == 0);
  CHECK(affine_rank({pt({0, 0}), pt({1, 1}), pt({2, 2})}) == 1);
  CHECK(affine_rank({pt({0, 0}), pt({1, 0}), pt({0, 1})}) == 2);
  CHECK(affine_rank({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0})}) == 2);
}

TEST_CASE("extreme points of a square with interior clutter") {
  std::vector<Point> pts = {pt({0, 0}), pt({2, 0}), pt({2, 2}), pt({0, 2}),
                            pt({1, 1}), testutil::ptq({"1/3", "5/4"})};
  auto ex = extreme_points(pts, 2);
  CHECK(ex.size() == 4);
  for (const auto& corner : {pt({0, 0}), pt({2, 0}), pt({2, 2}), pt({0, 2})})
    CHECK(std::find(ex.begin(), ex.end(), corner) != ex.end());
}

TEST_CASE("degenerate input falls back to the input") {
  std::vector<Point> line = {pt({0, 0}), pt({1, 1}), pt({2, 2})};
  CHECK(extreme_points(line, 2) == line);
}

}  // TEST_SUITE
