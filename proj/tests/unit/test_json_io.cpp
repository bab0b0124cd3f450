#include <doctest.h>

#include <cstdio>

#include "helpers.hpp"
#include "sametype/generators.hpp"
#include "sametype/json_io.hpp"

using namespace sametype;
using testutil::make_set;
using testutil::pt;
using testutil::ptq;

TEST_SUITE("json_io") {

TEST_CASE("family round-trip keeps exact coordinates") {
  Family f = testutil::verified_family(
      2, {make_set("left", {ptq({"-1/3", "22/7"}), pt({4, -9})}),
          make_set("right", {ptq({"355/113", "0"}), pt({100, 3})})});
  Json j = family_to_json(f);
  CHECK(j["dim"] == 2);
  CHECK(j["sets"][0]["label"] == "left");
  CHECK(j["sets"][0]["points"][0][0] == "-1/3");

  Family back = family_from_json(j);
  CHECK(back.dim == f.dim);
  REQUIRE(back.m() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(back.sets[i].label == f.sets[i].label);
    CHECK(back.sets[i].points == f.sets[i].points);
  }
  // Serialization is canonical: round-trip reproduces the bytes.
  CHECK(dump(family_to_json(back)) == dump(j));
}

TEST_CASE("hyperplane and polynomial round-trips") {
  Hyperplane h = span_hyperplane({ptq({"1/2", "3"}), pt({5, -1})});
  Hyperplane hb = hyperplane_from_json(hyperplane_to_json(h));
  CHECK(hb == h);

  MultiPoly x = MultiPoly::variable(2, 0);
  MultiPoly y = MultiPoly::variable(2, 1);
  MultiPoly f = x * x;
  f += y * x;
  f -= MultiPoly::constant(2, parse_rational("7/3"));
  MultiPoly back = poly_from_json(poly_to_json(f));
  CHECK(back.terms == f.terms);
  CHECK(back.eval(ptq({"2/5", "-1"})) == f.eval(ptq({"2/5", "-1"})));
}

TEST_CASE("verdict and constant reports serialize without floats") {
  Family f = random_family(2, 3, 3, 6);
  auto v = same_type_family(f);
  std::string vs = dump(verdict_to_json(v));
  CHECK(vs.find("holds") != std::string::npos);

  auto r = c_exact(f);
  Json rj = cresult_to_json(r);
  // Exact rational string, never a decimal.
  std::string val = rj["value"].get<std::string>();
  CHECK(val.find('.') == std::string::npos);
  CHECK(parse_rational(val) == r.value);
}

TEST_CASE("partition and audit reports are stable across identical runs") {
  Family f = random_family(2, 1, 24, 14);
  Partition p1 = build_partition(f.sets[0], 2, 2, 5);
  Partition p2 = build_partition(f.sets[0], 2, 2, 5);
  std::string s1 = dump(partition_to_json(p1));
  CHECK(s1 == dump(partition_to_json(p2)));
  CHECK(fnv1a(s1) == fnv1a(dump(partition_to_json(p2))));
  CHECK(fnv1a(s1) != fnv1a(s1 + " "));

  Json w = warren_to_json(warren_audit(p1));
  CHECK(w.contains("realized"));
  CHECK(w.contains("bound"));
}

TEST_CASE("perturbed family round-trip keeps the predecessor map") {
  PerturbedFamily pf = perturbed_grid_family(4, 2, 2, Rational(1, 50), 8);
  Json j = perturbed_family_to_json(pf);
  PerturbedFamily back = perturbed_family_from_json(j);
  CHECK(back.magnitude == pf.magnitude);
  CHECK(back.predecessor == pf.predecessor);
  CHECK(back.grid.points.points == pf.grid.points.points);
  CHECK(back.grid.index == pf.grid.index);
  REQUIRE(back.family.m() == pf.family.m());
  for (int i = 0; i < pf.family.m(); ++i)
    CHECK(back.family.sets[i].points == pf.family.sets[i].points);
  CHECK(dump(perturbed_family_to_json(back)) == dump(j));
}

TEST_CASE("text files round-trip through the filesystem") {
  const std::string path = "json_io_test_scratch.json";
  const std::string content = dump(Json{{"k", "3/7"}});
  write_text(path, content);
  CHECK(read_text(path) == content);
  std::remove(path.c_str());
}

}  // TEST_SUITE
