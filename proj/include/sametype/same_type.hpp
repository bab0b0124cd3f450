#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sametype/geometry.hpp"

namespace sametype {

struct SameTypeWitness {
  enum class Kind { OppositePair, Transversal };
  Kind kind = Kind::OppositePair;
  std::vector<int> subfamily;  // set indices of the violating (d+1)-subfamily
  // OppositePair: two transversal tuples with opposite orientations.
  std::vector<Point> tuple_pos;
  std::vector<Point> tuple_neg;
  // Transversal: a hyperplane meeting every hull of the subfamily.
  std::optional<Hyperplane> hyperplane;
};

struct SameTypeVerdict {
  bool holds = false;
  // Populated when holds: sorted (d+1)-subset of set indices -> sign (+-1).
  std::map<std::vector<int>, int> signs;
  std::optional<SameTypeWitness> witness;
};

// Enumerates every transversal tuple of the d+1 sets. Holds iff all
// orientations are equal and nonzero. `indices` labels the sets in the verdict
// (defaults to 0..d). Throws DegenerateTuple on a zero orientation.
SameTypeVerdict same_type_tuple(const std::vector<PointSet>& sets,
                                GeneralPosition gp,
                                const std::vector<int>& indices = {});

// Checks every (d+1)-subfamily. For m <= d there is nothing to check and the
// verdict holds vacuously.
SameTypeVerdict same_type_family(const Family& f);

// First hyperplane (in lexicographic candidate order) meeting conv of every
// set, searching hyperplanes spanned by d affinely independent points of the
// union; completeness for verified-general-position inputs follows from the
// perturbation argument behind the transversal characterization.
std::optional<Hyperplane> transversal_hyperplane(const std::vector<PointSet>& sets);

// true iff no spanned hyperplane meets all d+1 hulls.
bool same_type_via_transversal(const std::vector<PointSet>& sets);

struct CResult {
  Rational value;
  std::vector<PointSet> optimal_subsets;
  std::string method;  // "exhaustive" or "cell_heuristic"
};

struct CExactConfig {
  int max_set_size = 12;
  int max_m = 5;
  long long node_budget = 50'000'000;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(CResult b)
      : std::runtime_error("c_exact: node budget exceeded"), best(std::move(b)) {}
  CResult best;  // best lower bound found before the budget ran out
};

// Exact maximum of min_i |Y_i|/|X_i| over nonempty same-type subset families,
// by branch and bound over inclusion decisions. Requires verified general
// position. Ties resolved toward the lexicographically smallest selection
// under the input point order.
CResult c_exact(const Family& f, const CExactConfig& cfg = {});

// Lower bound: assigns each set its best cell over arrangements of up to m
// canonical spanned hyperplanes, keeping the best verified same-type family.
CResult c_cell_heuristic(const Family& f, long long hyperplane_budget);

}  // namespace sametype
