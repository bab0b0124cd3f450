#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "sametype/approx.hpp"
#include "sametype/constructions.hpp"
#include "sametype/extraction.hpp"
#include "sametype/partition.hpp"
#include "sametype/same_type.hpp"

namespace sametype {

// Insertion-ordered JSON keeps output byte-stable across runs.
using Json = nlohmann::ordered_json;

// All scalars serialize as exact rational strings "p/q" (reduced, q > 0) or
// integer strings; floats never appear in JSON.

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

// { "dim": d, "sets": [ { "label": str, "points": [["p/q", ...], ...] } ] }
Json family_to_json(const Family& f);
Family family_from_json(const Json& j);

Json hyperplane_to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const Json& j);

Json verdict_to_json(const SameTypeVerdict& v);
Json cresult_to_json(const CResult& r);

// Polynomials as { "exponents,comma,separated": "p/q" } term maps.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json partition_to_json(const Partition& part);
Json warren_to_json(const WarrenReport& rep);

Json extraction_to_json(const ExtractionResult& res);

// Family schema extended with "grid", "predecessor", "magnitude".
Json perturbed_family_to_json(const PerturbedFamily& pf);
PerturbedFamily perturbed_family_from_json(const Json& j);

Json audit_to_json(const UpperBoundReport& rep);
Json compare_to_json(const CompareReport& rep);

// Canonical rendering used for files and digests: 2-space indent, newline.
std::string dump(const Json& j);

std::uint64_t fnv1a(const std::string& data);

void write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

}  // namespace sametype
