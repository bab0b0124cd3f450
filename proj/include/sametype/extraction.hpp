#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "sametype/partition.hpp"
#include "sametype/same_type.hpp"

namespace sametype {

struct ExtractionConfig {
  int r = 16;                          // partition fineness target
  int heavy_threshold_denominator = 4; // threshold = n / (den * k)
  long long max_resample = 10'000;
  std::uint64_t seed = 1;
  HamSandwichOptions hs;

  int J() const;  // ceil(log2 r)
};

struct CellVertex {
  int set_index = 0;
  std::string sign_key;
  std::vector<int> point_idx;  // indices into the owning set
};

struct PiercingHypergraph {
  std::vector<std::vector<CellVertex>> parts;  // one list per set
  // Edge = sorted list of (set_index, cell ordinal within its part).
  std::set<std::vector<std::pair<int, int>>> edges;
  std::map<std::vector<int>, long long> edge_counts;  // per (d+1)-subfamily
};

// Cells with strictly more than `threshold` points.
std::vector<CellVertex> heavy_cells(const Partition& part, int set_index,
                                    const Rational& threshold);

// true iff some hyperplane meets conv of every cell's point set. Computed as
// the negation of the same-type property of the cells' extreme points, which
// is equivalent under verified general position.
bool piercing_edge(const std::vector<PointSet>& cell_points, GeneralPosition gp);

PiercingHypergraph build_hypergraph(const Family& f,
                                    const std::vector<Partition>& partitions,
                                    const ExtractionConfig& cfg);

// Moser-Tardos resampling: one uniform cell per part; while some
// (d+1)-subfamily of the selection spans an edge, redraw those parts.
// Returns the selected cell ordinal per part; throws ResampleLimitExceeded.
struct LllResult {
  std::vector<int> selection;  // per part, index into parts[i]
  long long rounds = 0;
};
LllResult lll_select(const PiercingHypergraph& h, int dim, const ExtractionConfig& cfg);

struct ExtractionReport {
  std::vector<int> realized_cells;       // k per set
  std::vector<Integer> warren_bounds;    // 6 (2D)^d per set
  std::vector<Rational> thresholds;      // n/(4k) per set
  std::map<std::vector<int>, long long> edge_counts;
  long long resample_rounds = 0;
  Rational achieved_fraction;
};

struct ExtractionResult {
  std::vector<PointSet> subsets;
  SameTypeVerdict verdict;  // must hold
  ExtractionReport report;
};

// Full pipeline: per-set partition (J = ceil(log2 r)), heavy cells with
// threshold n/(4 k_i) where k_i is the realized cell count, piercing
// hypergraph, Moser-Tardos selection, exact same-type verification.
ExtractionResult extract_same_type(const Family& f, const ExtractionConfig& cfg);

}  // namespace sametype
