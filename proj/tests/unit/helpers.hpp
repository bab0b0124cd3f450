#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sametype/geometry.hpp"

namespace testutil {

inline sametype::Point pt(std::initializer_list<long long> coords) {
  std::vector<sametype::Rational> c;
  for (long long v : coords) c.emplace_back(v);
  return sametype::Point(std::move(c));
}

inline sametype::Point ptq(std::initializer_list<const char*> coords) {
  std::vector<sametype::Rational> c;
  for (const char* v : coords) c.push_back(sametype::parse_rational(v));
  return sametype::Point(std::move(c));
}

inline sametype::PointSet make_set(std::string label,
                                   std::vector<sametype::Point> pts) {
  sametype::PointSet s;
  s.label = std::move(label);
  s.points = std::move(pts);
  return s;
}

// Family whose general position has been exhaustively verified; fails the
// test if verification does not pass.
inline sametype::Family verified_family(int dim,
                                        std::vector<sametype::PointSet> sets) {
  sametype::Family f;
  f.dim = dim;
  f.sets = std::move(sets);
  const auto rep = sametype::verify_general_position(f);
  f.general_position = rep.verdict;
  return f;
}

}  // namespace testutil
