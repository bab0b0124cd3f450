#include "sametype/generators.hpp"

#include <cmath>

#include "sametype/errors.hpp"
#include "sametype/rng.hpp"

namespace sametype {

namespace {

constexpr long long kDen = 4096;
constexpr int kAttempts = 50;

Family draw_family(int d, int m, int n, std::uint64_t seed,
                   const std::vector<Point>& centers, long long halfwidth) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(Rng::derive(seed, 0x67656eULL + attempt));
    Family f;
    f.dim = d;
    for (int i = 0; i < m; ++i) {
      PointSet s;
      s.label = "X" + std::to_string(i + 1);
      for (int p = 0; p < n; ++p) {
        Point q = centers[i];
        for (int c = 0; c < d; ++c)
          q[c] += Rational(Integer(rng.int_range(-halfwidth * kDen, halfwidth * kDen)),
                           Integer(kDen));
        s.points.push_back(std::move(q));
      }
      f.sets.push_back(std::move(s));
    }
    if (verify_general_position(f).verdict == GeneralPosition::Verified) {
      f.general_position = GeneralPosition::Verified;
      return f;
    }
  }
  throw RetryExhausted("family generation kept violating general position");
}

}  // namespace

Family random_family(int d, int m, int n, std::uint64_t seed, long long coord_range) {
  if (d < 1 || m < 1 || n < 1)
    throw std::invalid_argument("random_family: d, m, n must be positive");
  std::vector<Point> centers(m, Point(std::vector<Rational>(d, Rational(0))));
  return draw_family(d, m, n, seed, centers, coord_range);
}

Family clustered_family(int d, int m, int n, std::uint64_t seed,
                        long long center_radius, long long cluster_radius) {
  if (d < 2 || m < 1 || n < 1)
    throw std::invalid_argument("clustered_family: need d >= 2, m >= 1, n >= 1");
  std::vector<Point> centers;
  for (int i = 0; i < m; ++i) {
    const double theta = 2.0 * M_PI * i / m;
    Point c(std::vector<Rational>(d, Rational(0)));
    c[0] = Rational(Integer(std::llround(center_radius * std::cos(theta))), 1);
    c[1] = Rational(Integer(std::llround(center_radius * std::sin(theta))), 1);
    centers.push_back(std::move(c));
  }
  return draw_family(d, m, n, seed, centers, cluster_radius);
}

}  // namespace sametype
