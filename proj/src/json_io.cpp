#include "sametype/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sametype/errors.hpp"

namespace sametype {

namespace {

std::string key_of(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> key_to_vec(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(std::stoi(part));
  return v;
}

Json points_to_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(point_to_json(p));
  return arr;
}

}  // namespace

Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (const auto& c : p.coords) arr.push_back(to_string(c));
  return arr;
}

Point point_from_json(const Json& j) {
  Point p;
  for (const auto& c : j) p.coords.push_back(parse_rational(c.get<std::string>()));
  return p;
}

Json family_to_json(const Family& f) {
  Json j;
  j["dim"] = f.dim;
  j["sets"] = Json::array();
  for (const auto& s : f.sets) {
    Json js;
    js["label"] = s.label;
    js["points"] = points_to_json(s.points);
    j["sets"].push_back(std::move(js));
  }
  return j;
}

Family family_from_json(const Json& j) {
  Family f;
  f.dim = j.at("dim").get<int>();
  for (const auto& js : j.at("sets")) {
    PointSet s;
    s.label = js.at("label").get<std::string>();
    for (const auto& jp : js.at("points")) {
      Point p = point_from_json(jp);
      if (p.dim() != f.dim) throw DimensionMismatch("family_from_json: point dim != dim");
      s.points.push_back(std::move(p));
    }
    f.sets.push_back(std::move(s));
  }
  return f;
}

Json hyperplane_to_json(const Hyperplane& h) {
  Json j;
  Json normal = Json::array();
  for (const auto& c : h.normal) normal.push_back(to_string(c));
  j["normal"] = std::move(normal);
  j["offset"] = to_string(h.offset);
  return j;
}

Hyperplane hyperplane_from_json(const Json& j) {
  Hyperplane h;
  for (const auto& c : j.at("normal")) h.normal.push_back(parse_rational(c.get<std::string>()));
  h.offset = parse_rational(j.at("offset").get<std::string>());
  return h;
}

Json verdict_to_json(const SameTypeVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  Json signs = Json::object();
  for (const auto& [sub, sg] : v.signs) signs[key_of(sub)] = sg;
  j["signs"] = std::move(signs);
  if (v.witness) {
    Json w;
    w["kind"] = v.witness->kind == SameTypeWitness::Kind::OppositePair
                    ? "opposite_pair"
                    : "transversal";
    w["subfamily"] = v.witness->subfamily;
    if (!v.witness->tuple_pos.empty()) w["tuple_pos"] = points_to_json(v.witness->tuple_pos);
    if (!v.witness->tuple_neg.empty()) w["tuple_neg"] = points_to_json(v.witness->tuple_neg);
    if (v.witness->hyperplane) w["hyperplane"] = hyperplane_to_json(*v.witness->hyperplane);
    j["witness"] = std::move(w);
  }
  return j;
}

Json cresult_to_json(const CResult& r) {
  Json j;
  j["value"] = to_string(r.value);
  j["method"] = r.method;
  j["optimal_subsets"] = Json::array();
  for (const auto& s : r.optimal_subsets) {
    Json js;
    js["label"] = s.label;
    js["points"] = points_to_json(s.points);
    j["optimal_subsets"].push_back(std::move(js));
  }
  return j;
}

Json poly_to_json(const MultiPoly& p) {
  Json j;
  j["dim"] = p.dim;
  Json terms = Json::object();
  for (const auto& [exp, coef] : p.terms) terms[key_of(exp)] = to_string(coef);
  j["terms"] = std::move(terms);
  return j;
}

MultiPoly poly_from_json(const Json& j) {
  MultiPoly p;
  p.dim = j.at("dim").get<int>();
  for (const auto& [k, v] : j.at("terms").items())
    p.terms[key_to_vec(k)] = parse_rational(v.get<std::string>());
  return p;
}

Json partition_to_json(const Partition& part) {
  Json j;
  j["dim"] = part.dim;
  j["n"] = part.n;
  j["stage_caps"] = part.stage_caps;
  j["polys"] = Json::array();
  for (const auto& p : part.polys) j["polys"].push_back(poly_to_json(p));
  Json cells = Json::object();
  for (const auto& [key, idxs] : part.cells) cells[key] = idxs;
  j["cells"] = std::move(cells);
  j["on_surface"] = part.on_surface;
  return j;
}

Json warren_to_json(const WarrenReport& rep) {
  Json j;
  j["realized"] = rep.realized;
  j["degree_sum"] = rep.degree_sum;
  j["bound"] = rep.bound.str();
  return j;
}

Json extraction_to_json(const ExtractionResult& res) {
  Json j;
  Json subsets = Json::array();
  for (const auto& s : res.subsets) {
    Json js;
    js["label"] = s.label;
    js["points"] = points_to_json(s.points);
    subsets.push_back(std::move(js));
  }
  j["subsets"] = std::move(subsets);
  j["verdict"] = verdict_to_json(res.verdict);
  Json rep;
  rep["realized_cells"] = res.report.realized_cells;
  Json wb = Json::array();
  for (const auto& b : res.report.warren_bounds) wb.push_back(b.str());
  rep["warren_bounds"] = std::move(wb);
  Json th = Json::array();
  for (const auto& t : res.report.thresholds) th.push_back(to_string(t));
  rep["thresholds"] = std::move(th);
  Json ec = Json::object();
  for (const auto& [sub, c] : res.report.edge_counts) ec[key_of(sub)] = c;
  rep["edge_counts"] = std::move(ec);
  rep["resample_rounds"] = res.report.resample_rounds;
  rep["achieved_fraction"] = to_string(res.report.achieved_fraction);
  j["report"] = std::move(rep);
  return j;
}

Json perturbed_family_to_json(const PerturbedFamily& pf) {
  Json j = family_to_json(pf.family);
  Json grid;
  grid["n"] = pf.grid.n;
  grid["d"] = pf.grid.d;
  grid["hyperplanes"] = Json::array();
  for (const auto& h : pf.grid.hyperplanes)
    grid["hyperplanes"].push_back(hyperplane_to_json(h));
  grid["points"] = points_to_json(pf.grid.points.points);
  Json index = Json::object();
  for (const auto& [sub, idx] : pf.grid.index) index[key_of(sub)] = idx;
  grid["index"] = std::move(index);
  j["grid"] = std::move(grid);
  j["predecessor"] = pf.predecessor;
  j["magnitude"] = to_string(pf.magnitude);
  return j;
}

PerturbedFamily perturbed_family_from_json(const Json& j) {
  PerturbedFamily pf;
  pf.family = family_from_json(j);
  const Json& grid = j.at("grid");
  pf.grid.n = grid.at("n").get<int>();
  pf.grid.d = grid.at("d").get<int>();
  for (const auto& jh : grid.at("hyperplanes"))
    pf.grid.hyperplanes.push_back(hyperplane_from_json(jh));
  pf.grid.points.label = "grid";
  for (const auto& jp : grid.at("points"))
    pf.grid.points.points.push_back(point_from_json(jp));
  for (const auto& [k, v] : grid.at("index").items())
    pf.grid.index[key_to_vec(k)] = v.get<int>();
  pf.predecessor = j.at("predecessor").get<std::vector<std::vector<int>>>();
  pf.magnitude = parse_rational(j.at("magnitude").get<std::string>());
  return pf;
}

Json audit_to_json(const UpperBoundReport& rep) {
  Json j;
  j["z_sizes"] = rep.z_sizes;
  j["hyperplanes_met"] = rep.hyperplanes_met;
  j["pigeonhole_index"] = rep.pigeonhole_index;
  j["pigeonhole_cap"] = rep.pigeonhole_cap;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["lhs"] = to_string(c.lhs);
    jc["rhs"] = to_string(c.rhs);
    jc["ok"] = c.ok;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["ratio_bound_floor"] = to_string(rep.ratio_bound_floor);
  j["ratio_bound_real"] = to_string(rep.ratio_bound_real);
  j["limit_ratio"] = to_string(rep.limit_ratio);
  return j;
}

Json compare_to_json(const CompareReport& rep) {
  Json j;
  j["approximant_sizes"] = rep.approximant_sizes;
  j["c_original"] = to_string(rep.c_original);
  j["c_approximant"] = to_string(rep.c_approximant);
  j["gap"] = to_string(rep.gap);
  j["one_sided_ok"] = rep.one_sided_ok;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sametype
