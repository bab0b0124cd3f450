#include "sametype/partition.hpp"

#include <algorithm>

#include "sametype/errors.hpp"
#include "sametype/rng.hpp"

namespace sametype {

int Partition::degree_sum() const {
  int s = 0;
  for (const auto& p : polys) s += p.degree();
  return s;
}

int Partition::max_cell_size() const {
  size_t m = 0;
  for (const auto& [k, v] : cells) m = std::max(m, v.size());
  return static_cast<int>(m);
}

int stage_degree_cap(int d, int j) {
  // largest k with k^d <= d^d 2^j, plus one; keeps the cap within the
  // d 2^{j/d} + 1 stage bound, since k = floor((d^d 2^j)^{1/d}).
  Integer target = 1;
  for (int i = 0; i < d; ++i) target *= d;
  target <<= j;
  int k = 1;
  while (true) {
    Integer kd = 1;
    for (int i = 0; i < d; ++i) kd *= k + 1;
    if (kd > target) return k + 1;
    ++k;
  }
}

Partition build_partition(const PointSet& x, int J, int dim, std::uint64_t seed,
                          const HamSandwichOptions& hs) {
  // A stage can exhaust its candidate pools on an unlucky cell configuration;
  // earlier stages admit many valid bisectors, so rebuilding with a reseeded
  // search usually reshapes the hard stage. Deterministic retry schedule.
  constexpr int kAttempts = 6;
  for (int attempt = 0;; ++attempt) {
    try {
      return build_partition_once(x, J, dim, Rng::derive(seed, 0x626aULL + attempt), hs);
    } catch (const SearchExhausted&) {
      if (attempt + 1 == kAttempts) throw;
    }
  }
}

Partition build_partition_once(const PointSet& x, int J, int dim, std::uint64_t seed,
                               const HamSandwichOptions& hs) {
  if (J < 1) throw std::invalid_argument("build_partition: J must be >= 1");
  Partition part;
  part.dim = dim;
  part.n = x.size();
  if (part.n > 0) {
    part.cells[""] = {};
    for (int i = 0; i < part.n; ++i) part.cells[""].push_back(i);
  }

  for (int j = 0; j < J; ++j) {
    const int cap = stage_degree_cap(dim, j);
    part.stage_caps.push_back(cap);
    std::vector<PointSet> cell_sets;
    for (const auto& [key, idxs] : part.cells) {
      if (idxs.empty()) continue;
      PointSet s;
      s.label = key;
      for (int i : idxs) s.points.push_back(x.points[i]);
      cell_sets.push_back(std::move(s));
    }
    MultiPoly p;
    if (cell_sets.empty()) {
      // Everything already on a surface; any valid stage polynomial will do.
      p = MultiPoly::variable(dim, 0);
    } else {
      HamSandwichOptions opt = hs;
      opt.seed = Rng::derive(seed, static_cast<std::uint64_t>(j));
      p = ham_sandwich_poly(cell_sets, cap, opt);
    }
    if (p.degree() > cap)
      throw TheoremViolation("build_partition: stage polynomial exceeds the degree cap");
    part.polys.push_back(p);

    // Refine cells by the new sign; zeros migrate to on_surface.
    std::map<std::string, std::vector<int>> next;
    for (const auto& [key, idxs] : part.cells) {
      for (int i : idxs) {
        int sg = sign_of(p.eval(x.points[i]));
        if (sg == 0) {
          part.on_surface.push_back(i);
        } else {
          next[key + (sg > 0 ? '+' : '-')].push_back(i);
        }
      }
    }
    part.cells = std::move(next);
    for (const auto& [key, idxs] : part.cells) {
      // |cell| <= n / 2^(j+1), exactly.
      if (Integer(idxs.size()) << (j + 1) > Integer(part.n))
        throw TheoremViolation("build_partition: cell exceeds the bisection bound");
    }
  }
  std::sort(part.on_surface.begin(), part.on_surface.end());

  // Degree ledger: (sum deg)^d <= (3 d^2)^d 2^J.
  Integer lhs = 1, rhs = 1;
  for (int i = 0; i < dim; ++i) {
    lhs *= part.degree_sum();
    rhs *= 3 * dim * dim;
  }
  rhs <<= J;
  if (lhs > rhs) throw TheoremViolation("build_partition: degree ledger violated");
  return part;
}

WarrenReport warren_audit(const Partition& part) {
  WarrenReport rep;
  rep.realized = static_cast<long long>(part.cells.size());
  rep.degree_sum = part.degree_sum();
  Integer b = 6;
  for (int i = 0; i < part.dim; ++i) b *= 2 * rep.degree_sum;
  rep.bound = b;
  if (Integer(rep.realized) > rep.bound)
    throw TheoremViolation("warren_audit: realized sign cells exceed the bound");
  return rep;
}

}  // namespace sametype
