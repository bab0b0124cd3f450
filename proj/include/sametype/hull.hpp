#pragma once

#include <vector>

#include "sametype/geometry.hpp"

namespace sametype {

// Supporting facet hyperplanes of conv(points), oriented so that every input
// point has side <= 0. Brute force over all d-subsets (desk scale). Throws
// DegenerateBody when the points do not span R^d affinely.
std::vector<Hyperplane> hull_facets(const std::vector<Point>& points, int d);

enum class HullPosition { Outside, Boundary, Interior };

HullPosition classify_against_hull(const std::vector<Hyperplane>& facets, const Point& p);

// Dimension of the affine span.
int affine_rank(const std::vector<Point>& points);

// Extreme points of conv(points): v is kept iff it is not a convex combination
// of the others. 2-d uses monotone chain; other dimensions keep points whose
// removal changes the facet classification.
std::vector<Point> hull_vertices_2d(const std::vector<Point>& points);

// Extreme-point reduction valid in any dimension where hull_facets applies;
// falls back to the input when the hull is degenerate.
std::vector<Point> extreme_points(const std::vector<Point>& points, int d);

}  // namespace sametype
