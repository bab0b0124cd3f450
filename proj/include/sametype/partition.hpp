#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sametype/hamsandwich.hpp"
#include "sametype/poly.hpp"

namespace sametype {

// Sign-cell partition of a point set by polynomials p_1..p_J. Cell keys are
// full sign vectors over the polynomials, encoded as strings over {+,-};
// points with a zero sign at any stage live in on_surface instead.
struct Partition {
  int dim = 0;
  int n = 0;  // input size
  std::vector<MultiPoly> polys;
  std::vector<int> stage_caps;  // per-stage degree cap floor(d 2^{j/d}) + 1
  std::map<std::string, std::vector<int>> cells;
  std::vector<int> on_surface;

  int degree_sum() const;
  int max_cell_size() const;
};

// Largest integer <= d * 2^(j/d), plus one.
int stage_degree_cap(int d, int j);

// Iterated bisection: at stage j every current full-sign cell is bisected by
// one polynomial of degree <= stage_degree_cap(d, j). Guarantees, checked
// exactly after every stage:
//   |cell| * 2^(j+1) <= n, and sum of degrees within the ledger bound
//   (sum)^d <= (3 d^2)^d * 2^J.
Partition build_partition(const PointSet& x, int J, int dim, std::uint64_t seed,
                          const HamSandwichOptions& hs = {});

// Single attempt without the deterministic reseed-and-retry wrapper.
Partition build_partition_once(const PointSet& x, int J, int dim, std::uint64_t seed,
                               const HamSandwichOptions& hs = {});

struct WarrenReport {
  long long realized = 0;  // distinct full-sign cells
  Integer bound;           // 6 (2D)^d with D the degree of the product
  int degree_sum = 0;
};

// Asserts realized <= 6 (2D)^d; a violation is an arithmetic bug, reported as
// TheoremViolation.
WarrenReport warren_audit(const Partition& part);

}  // namespace sametype
