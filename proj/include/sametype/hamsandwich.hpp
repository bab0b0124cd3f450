#pragma once

#include <cstdint>
#include <vector>

#include "sametype/poly.hpp"

namespace sametype {

struct SignCounts {
  int pos = 0;
  int neg = 0;
  int zero = 0;
};

SignCounts count_signs(const MultiPoly& f, const PointSet& s);

// "Bisects": each strict side holds at most half of the set's points.
bool bisects(const MultiPoly& f, const PointSet& s);

struct HamSandwichOptions {
  std::uint64_t seed = 1;
  int direction_attempts = 120;       // projection searches
  long long dp_node_budget = 500'000; // per projection
  long long enum_limit = 400'000;     // lifted-span candidate cap
  long long pairing_limit = 2'000;    // grouping attempts (d = 2 fallback)
};

// Polynomial of degree <= D whose zero set bisects every input set.
// Search stack, every candidate verified exactly before being returned:
//   1. hyperplanes in Veronese-lifted space spanned by lifted input points
//      (exhaustive when the candidate count is small enough),
//   2. composites q(g(x)) with g a seeded random linear/quadratic projection
//      and q found by a complete root-placement search on the projected line,
//   3. d=2 products of lines, one per group of sets, each line bisecting its
//      group and sign-constant on the other sets' points.
// Throws SearchExhausted when every pool fails.
MultiPoly ham_sandwich_poly(const std::vector<PointSet>& sets, int D,
                            const HamSandwichOptions& opt = {});

}  // namespace sametype
