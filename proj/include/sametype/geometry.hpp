#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sametype/rational.hpp"

namespace sametype {

struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](int i) const { return coords[i]; }
  Rational& operator[](int i) { return coords[i]; }

  bool operator==(const Point& o) const { return coords == o.coords; }
  bool operator<(const Point& o) const { return coords < o.coords; }
};

// {x : <normal, x> = offset}, normal nonzero. Normalized form: first nonzero
// normal coordinate equals +1 or -1... see normalize().
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;

  int dim() const { return static_cast<int>(normal.size()); }

  // Divides by |first nonzero normal coordinate| and flips so that coordinate
  // is positive; makes structurally equal hyperplanes compare equal.
  void normalize();

  bool operator==(const Hyperplane& o) const {
    return normal == o.normal && offset == o.offset;
  }
  bool operator<(const Hyperplane& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

struct PointSet {
  std::string label;
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
};

enum class GeneralPosition { Verified, Assumed, Violated };

struct Family {
  int dim = 0;
  std::vector<PointSet> sets;
  GeneralPosition general_position = GeneralPosition::Assumed;

  int m() const { return static_cast<int>(sets.size()); }
  std::vector<Point> union_points() const;
};

// Sign of det of the (d+1)x(d+1) matrix with rows (1, p_i). Exactly d+1
// points of dimension d.
int orient(const std::vector<Point>& pts);

// Sign of <normal, p> - offset.
int side(const Hyperplane& h, const Point& p);

// Hyperplane through d points of dimension d, normalized. Throws
// AffinelyDependent when the points do not span a unique hyperplane.
Hyperplane span_hyperplane(const std::vector<Point>& pts);

// conv(s) meets h iff the points of s are not all strictly on one open side.
bool hull_meets_hyperplane(const PointSet& s, const Hyperplane& h);

struct GpReport {
  GeneralPosition verdict = GeneralPosition::Verified;
  // Affinely dependent (d+1)-tuple, when verdict is Violated for that reason.
  std::vector<Point> dependent_tuple;
  // Duplicate point across/within sets, when disjointness fails.
  std::optional<Point> duplicate;
};

// Exhaustive check: pairwise-distinct union and no affinely dependent
// (d+1)-tuple. Dimensions 2 and 3 use an equivalent direction-multiset scan
// (O(N^2 log N) / O(N^3 log N)); other dimensions enumerate all tuples.
GpReport verify_general_position(const Family& f);

}  // namespace sametype
