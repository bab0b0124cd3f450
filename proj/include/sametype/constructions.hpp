#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sametype/geometry.hpp"

namespace sametype {

// n hyperplanes in general position together with all C(n,d) d-wise
// intersection points. index maps each sorted d-subset of hyperplane indices
// to the position of its intersection point in `points`.
struct GridSet {
  int n = 0;
  int d = 0;
  std::vector<Hyperplane> hyperplanes;
  PointSet points;
  std::map<std::vector<int>, int> index;
};

// Random rational hyperplanes, redrawn until every d of them meet in exactly
// one point and no intersection point lies on a (d+1)-th hyperplane. Throws
// RetryExhausted after bounded attempts.
GridSet grid_set(int n, int d, std::uint64_t seed);

// Exact number of grid points on the boundary of conv(body): on the hull but
// not in the open interior. Throws DegenerateBody when body spans < d dims.
int boundary_count(const GridSet& g, const PointSet& body);

// Replaces X_i by a cloud of n_cloud points around each of its points, each
// within L-inf distance `radius` of the original. Requires 2*radius below the
// minimum pairwise L-inf distance over the union so clouds stay separated;
// general position is re-verified, re-perturbing within radius on failure.
Family blow_up(const Family& f, int i, int n_cloud, const Rational& radius,
               std::uint64_t seed);

struct PerturbedFamily {
  Family family;  // m perturbed copies of grid.points, verified general position
  GridSet grid;
  // predecessor[i][j] = index into grid.points of the grid point that
  // family.sets[i].points[j] perturbs (the map P(x)).
  std::vector<std::vector<int>> predecessor;
  Rational magnitude;  // actual L-inf perturbation bound used
};

// m independent rational perturbations of one grid set, jointly in verified
// general position. The requested magnitude is capped at half the minimum
// distance from any grid point to any non-incident grid hyperplane, which
// makes "sufficiently small" concrete: points interior to a predecessor hull
// stay interior to the perturbed hull's predecessor relation.
PerturbedFamily perturbed_grid_family(int n, int d, int m,
                                      const Rational& magnitude,
                                      std::uint64_t seed);

struct Inequality {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool ok = false;
};

struct UpperBoundReport {
  std::vector<long long> z_sizes;          // |Z_i| = grid points strictly inside conv(Y_i)
  std::vector<long long> hyperplanes_met;  // grid hyperplanes meeting Z_i, per i
  int pigeonhole_index = -1;               // argmin of hyperplanes_met
  long long pigeonhole_cap = 0;            // floor(d n / m)
  std::vector<Inequality> checks;          // every inequality instance (lhs, rhs, ok)
  Rational ratio_bound_floor;  // C(floor(dn/m), d) / C(n, d)
  Rational ratio_bound_real;   // falling-factorial binomial at dn/m, over C(n, d)
  Rational limit_ratio;        // (d/m)^d
};

// Audit chain for a same-type selection Y from a perturbed grid family:
//   - every grid hyperplane meets at most d of the sets Z_i,
//   - some Z_i meets at most floor(dn/m) grid hyperplanes,
//   - that |Z_i| <= C(floor(dn/m), d),
//   - |Y_i| <= |Z_i| + |X on the boundary of conv(P(Y_i))| for every i.
// Y must pass the same-type check; each Y_i is matched to family points by
// value. Any violated inequality is an arithmetic bug -> TheoremViolation.
UpperBoundReport upper_bound_audit(const PerturbedFamily& pf,
                                   const std::vector<PointSet>& y);

}  // namespace sametype
