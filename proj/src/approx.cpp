#include "sametype/approx.hpp"

#include <algorithm>
#include <cmath>

#include "sametype/errors.hpp"
#include "sametype/rng.hpp"

namespace sametype {

namespace {

Rational rabs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace

int approximant_size(int m, int d, const ApproxConfig& cfg) {
  if (!(cfg.eps > 0 && cfg.eps < 1))
    throw std::invalid_argument("approximant_size: eps must be in (0,1)");
  if (!(cfg.vc_constant > 0))
    throw std::invalid_argument("approximant_size: vc_constant must be > 0");
  const double c = cfg.vc_constant.convert_to<double>();
  const double raw_d = c * d * m * (m > 1 ? std::log2(double(m)) : 0.0);
  const double D = std::max(1.0, std::ceil(raw_d));
  const double e = cfg.eps.convert_to<double>();
  const double size = (32.0 / (e * e)) * D * std::log(16.0 * D / (e * e));
  return static_cast<int>(std::ceil(size));
}

PointSet eps_approximant(const PointSet& x, int m, int d, const ApproxConfig& cfg,
                         Rational* max_discrepancy) {
  const int target = approximant_size(m, d, cfg);
  const int nx = x.size();
  if (max_discrepancy) *max_discrepancy = 0;
  if (nx <= target) return x;

  Rng rng(Rng::derive(cfg.seed, 0x61707078ULL));
  Rational worst = 0;
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    std::vector<int> order(nx);
    for (int i = 0; i < nx; ++i) order[i] = i;
    rng.shuffle(order);
    order.resize(target);
    std::sort(order.begin(), order.end());
    PointSet a;
    a.label = x.label;
    for (int i : order) a.points.push_back(x.points[i]);

    // Audit: random open polytopes with <= m facets, facets spanned by d
    // points of x with a random open side.
    bool ok = true;
    Rational attempt_worst = 0;
    for (int r = 0; r < cfg.range_samples && ok; ++r) {
      std::vector<Hyperplane> facets;
      std::vector<int> sides;
      for (int fidx = 0; fidx < m; ++fidx) {
        std::vector<Point> span;
        for (int t = 0; t < d; ++t)
          span.push_back(x.points[rng.below(nx)]);
        try {
          facets.push_back(span_hyperplane(span));
        } catch (const AffinelyDependent&) {
          --fidx;  // duplicate draw; redraw this facet
          continue;
        }
        sides.push_back(rng.below(2) ? 1 : -1);
      }
      auto inside = [&](const Point& p) {
        for (size_t fidx = 0; fidx < facets.size(); ++fidx)
          if (side(facets[fidx], p) != sides[fidx]) return false;
        return true;
      };
      long long in_x = 0, in_a = 0;
      for (const auto& p : x.points) in_x += inside(p);
      for (const auto& p : a.points) in_a += inside(p);
      Rational disc = rabs(Rational(Integer(in_x), Integer(nx)) -
                           Rational(Integer(in_a), Integer(target)));
      worst = std::max(worst, disc);
      attempt_worst = std::max(attempt_worst, disc);
      ok = disc <= cfg.eps;
    }
    if (ok) {
      if (max_discrepancy) *max_discrepancy = attempt_worst;
      return a;
    }
  }
  throw AuditFailedRepeatedly("eps_approximant: discrepancy audit failed " +
                              std::to_string(cfg.max_retries) +
                              " times; max observed discrepancy " + to_string(worst));
}

CompareReport compare_c(const Family& f, const ApproxConfig& cfg,
                        const CExactConfig& cexact) {
  CompareReport rep;
  Family approx;
  approx.dim = f.dim;
  approx.general_position = f.general_position;  // subsets inherit the status
  for (int i = 0; i < f.m(); ++i) {
    ApproxConfig per = cfg;
    per.seed = Rng::derive(cfg.seed, 0x63617070ULL + i);
    approx.sets.push_back(eps_approximant(f.sets[i], f.m(), f.dim, per));
    rep.approximant_sizes.push_back(approx.sets.back().size());
  }
  rep.c_original = c_exact(f, cexact).value;
  rep.c_approximant = c_exact(approx, cexact).value;
  rep.gap = rep.c_approximant - rep.c_original;
  rep.one_sided_ok = rep.c_approximant <= rep.c_original + cfg.eps;
  return rep;
}

}  // namespace sametype
