#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sametype/generators.hpp"
#include "sametype/partition.hpp"

using namespace sametype;

TEST_SUITE("partition") {

TEST_CASE("stage degree caps") {
  // Largest k with k^d <= d^d 2^j, plus one.
  CHECK(stage_degree_cap(2, 0) == 3);
  CHECK(stage_degree_cap(2, 1) == 3);
  CHECK(stage_degree_cap(2, 2) == 5);
  CHECK(stage_degree_cap(2, 3) == 6);
  CHECK(stage_degree_cap(2, 4) == 9);
  CHECK(stage_degree_cap(3, 0) == 4);
}

TEST_CASE("single stage halves every cell") {
  Family f = random_family(2, 1, 20, 3);
  Partition p = build_partition(f.sets[0], 1, 2, 9);
  CHECK(p.polys.size() == 1);
  for (const auto& [key, idxs] : p.cells) {
    CHECK(key.size() == 1);
    CHECK(static_cast<int>(idxs.size()) <= 10);
  }
}

TEST_CASE("cells and surface partition the index set") {
  Family f = random_family(2, 1, 64, 21);
  Partition p = build_partition(f.sets[0], 3, 2, 4);
  std::vector<int> seen = p.on_surface;
  for (const auto& [key, idxs] : p.cells) {
    CHECK(key.size() == 3);
    seen.insert(seen.end(), idxs.begin(), idxs.end());
  }
  std::sort(seen.begin(), seen.end());
  std::vector<int> expect(64);
  for (int i = 0; i < 64; ++i) expect[i] = i;
  CHECK(seen == expect);
}

TEST_CASE("guarantees at n=64, J=3") {
  Family f = random_family(2, 1, 64, 8);
  Partition p = build_partition(f.sets[0], 3, 2, 8);
  CHECK(p.max_cell_size() <= 8);  // 2^-3 * 64
  for (size_t j = 0; j < p.polys.size(); ++j)
    CHECK(p.polys[j].degree() <= p.stage_caps[j]);
  CHECK(p.degree_sum() <= 33);  // 3 * d^2 * 2^(J/d) = 12 * 2^1.5
  WarrenReport w = warren_audit(p);
  CHECK(Integer(w.realized) <= w.bound);
}

TEST_CASE("enough stages isolate every point") {
  Family f = random_family(2, 1, 7, 15);
  Partition p = build_partition(f.sets[0], 3, 2, 2);
  CHECK(p.max_cell_size() <= 1);
}

TEST_CASE("empty input yields no realized cells") {
  PointSet empty;
  empty.label = "e";
  Partition p = build_partition(empty, 2, 2, 1);
  CHECK(p.cells.empty());
  CHECK(warren_audit(p).realized == 0);
}

TEST_CASE("deterministic for a fixed seed") {
  Family f = random_family(2, 1, 48, 33);
  Partition a = build_partition(f.sets[0], 3, 2, 12);
  Partition b = build_partition(f.sets[0], 3, 2, 12);
  CHECK(a.cells == b.cells);
  CHECK(a.on_surface == b.on_surface);
  REQUIRE(a.polys.size() == b.polys.size());
  for (size_t i = 0; i < a.polys.size(); ++i)
    CHECK(a.polys[i].terms == b.polys[i].terms);
}

}  // TEST_SUITE
