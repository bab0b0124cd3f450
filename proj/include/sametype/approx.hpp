#pragma once

#include <cstdint>

#include "sametype/same_type.hpp"

namespace sametype {

struct ApproxConfig {
  Rational eps{1, 10};       // in (0,1)
  Rational vc_constant{1};   // hidden constant in the D = O(d m log m) bound
  std::uint64_t seed = 1;
  int range_samples = 200;   // empirical audit size
  int max_retries = 20;
};

// ceil((32/eps^2) * D * ln(16 D / eps^2)) with D = ceil(vc_constant * d * m * log2 m),
// clamped to D >= 1.
int approximant_size(int m, int d, const ApproxConfig& cfg);

// Seeded uniform sample A of x without replacement, of size approximant_size
// (or x itself when x is already that small). Audited before returning:
// range_samples random open polytopes with <= m facets, each facet spanned by
// d points of x with a random open side, must all satisfy
//   | |F ∩ X|/|X| - |F ∩ A|/|A| | <= eps   (exact rational counting).
// Resamples on a failed audit; throws AuditFailedRepeatedly with the largest
// observed discrepancy after max_retries attempts.
PointSet eps_approximant(const PointSet& x, int m, int d, const ApproxConfig& cfg,
                         Rational* max_discrepancy = nullptr);

struct CompareReport {
  std::vector<int> approximant_sizes;
  Rational c_original;
  Rational c_approximant;
  Rational gap;        // c_approximant - c_original
  bool one_sided_ok = false;  // c(A) <= c(X) + eps
};

// Builds A_i = eps_approximant(X_i) and compares the exact constants. The
// one-sided bound follows the approximation chain
//   |Y_i|/|A_i| <= |P_i ∩ A_i|/|A_i| <= |P_i ∩ X_i|/|X_i| + eps/2,
// which bounds the approximant constant by the original plus eps.
CompareReport compare_c(const Family& f, const ApproxConfig& cfg,
                        const CExactConfig& cexact = {});

}  // namespace sametype
