#pragma once

#include <cstdint>

#include "sametype/geometry.hpp"

namespace sametype {

// m sets of n uniform rational points in the box [-coord_range, coord_range]^d,
// redrawn until the union verifies general position. Throws RetryExhausted.
Family random_family(int d, int m, int n, std::uint64_t seed,
                     long long coord_range = 10);

// m sets of n points, set i drawn from a box of half-width cluster_radius
// around the i-th vertex of a regular m-gon of radius center_radius (first two
// coordinates; higher coordinates jitter around 0). Widely separated clusters
// keep transversal hyperplanes scarce. Verified general position; throws
// RetryExhausted.
Family clustered_family(int d, int m, int n, std::uint64_t seed,
                        long long center_radius = 100,
                        long long cluster_radius = 5);

}  // namespace sametype
