#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "sametype/approx.hpp"
#include "sametype/generators.hpp"

using namespace sametype;

TEST_SUITE("approx") {

TEST_CASE("approximant size formula") {
  ApproxConfig cfg;
  cfg.eps = Rational(1, 2);
  cfg.vc_constant = Rational(1, 20);
  // D clamps to 1: ceil(128 * ln(64)) = 533.
  CHECK(approximant_size(2, 2, cfg) == 533);
  CHECK(approximant_size(1, 2, cfg) == 533);  // log2(1) = 0 still clamps to 1

  // Independent recomputation at a few larger parameters.
  cfg.vc_constant = 1;
  for (int m : {2, 5, 9}) {
    int d = 3;
    double e = 0.5;
    int dd = static_cast<int>(std::ceil(d * m * std::log2(double(m))));
    if (dd < 1) dd = 1;
    int expect = static_cast<int>(
        std::ceil((32.0 / (e * e)) * dd * std::log(16.0 * dd / (e * e))));
    CHECK(approximant_size(m, d, cfg) == expect);
  }
  // Monotone in m.
  CHECK(approximant_size(5, 3, cfg) < approximant_size(9, 3, cfg));
}

TEST_CASE("small inputs are returned unchanged") {
  Family f = random_family(2, 1, 30, 12);
  ApproxConfig cfg;
  cfg.eps = Rational(1, 2);
  PointSet a = eps_approximant(f.sets[0], 3, 2, cfg);
  CHECK(a.points == f.sets[0].points);
}

TEST_CASE("large inputs shrink and pass the range audit") {
  Family f = random_family(2, 1, 200, 19, 500);
  ApproxConfig cfg;
  cfg.eps = Rational(9, 10);
  cfg.vc_constant = Rational(1, 20);
  cfg.seed = 7;
  int target = approximant_size(2, 2, cfg);
  REQUIRE(target < 200);

  Rational worst = -1;
  PointSet a = eps_approximant(f.sets[0], 2, 2, cfg, &worst);
  CHECK(a.size() == target);
  CHECK(worst >= 0);
  CHECK(worst <= cfg.eps);
  for (const auto& p : a.points)
    CHECK(std::find(f.sets[0].points.begin(), f.sets[0].points.end(), p) !=
          f.sets[0].points.end());
  // No point sampled twice.
  auto pts = a.points;
  std::sort(pts.begin(), pts.end());
  CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());

  // Deterministic for a fixed seed.
  PointSet b = eps_approximant(f.sets[0], 2, 2, cfg);
  CHECK(a.points == b.points);
}

TEST_CASE("comparison report when approximants equal the originals") {
  Family f = random_family(2, 3, 5, 23);
  ApproxConfig cfg;
  cfg.eps = Rational(1, 2);
  CompareReport rep = compare_c(f, cfg);
  CHECK(rep.approximant_sizes == std::vector<int>{5, 5, 5});
  CHECK(rep.c_approximant == rep.c_original);
  CHECK(rep.gap == 0);
  CHECK(rep.one_sided_ok);
}

}  // TEST_SUITE
