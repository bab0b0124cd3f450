// Command-line driver: dataset generation, same-type checks, exact constants,
// partitions, extraction, approximants, audits, and CSV sweeps.
//
// Exit codes: 0 success / verdict holds, 1 verdict fails (with witness),
// 2 usage or input error, 3 internal assertion (a proven bound failed).

#include <chrono>
#include <cstdio>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sametype/approx.hpp"
#include "sametype/constructions.hpp"
#include "sametype/errors.hpp"
#include "sametype/extraction.hpp"
#include "sametype/generators.hpp"
#include "sametype/json_io.hpp"
#include "sametype/partition.hpp"
#include "sametype/rng.hpp"
#include "sametype/same_type.hpp"

namespace st = sametype;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string float_display(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Collects per-run metadata and writes exactly one manifest. Durations live
// only here so the primary outputs stay byte-identical across reruns.
class Manifest {
 public:
  explicit Manifest(std::string command) : start_(std::chrono::steady_clock::now()) {
    j_["command"] = std::move(command);
    j_["version"] = kVersion;
    j_["config"] = st::Json::object();
    j_["inputs"] = st::Json::object();
    j_["outputs"] = st::Json::object();
  }

  st::Json& config() { return j_["config"]; }

  void record_input(const std::string& path, const std::string& content) {
    j_["inputs"][path] = hex64(st::fnv1a(content));
  }
  void record_output(const std::string& path, const std::string& content) {
    j_["outputs"][path] = hex64(st::fnv1a(content));
  }

  void emit(const std::string& explicit_path, const std::string& out_path) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    j_["duration_ms"] = ms;
    std::string path = explicit_path;
    if (path.empty() && !out_path.empty()) path = out_path + ".manifest.json";
    if (path.empty())
      std::cerr << st::dump(j_);
    else
      st::write_text(path, st::dump(j_));
  }

 private:
  st::Json j_;
  std::chrono::steady_clock::time_point start_;
};

void deliver(const st::Json& j, const std::string& out, Manifest& man) {
  const std::string text = st::dump(j);
  if (out.empty()) {
    std::cout << text;
  } else {
    st::write_text(out, text);
    man.record_output(out, text);
  }
}

st::Family load_family(const std::string& path, Manifest& man) {
  const std::string text = st::read_text(path);
  man.record_input(path, text);
  st::Family f = st::family_from_json(st::Json::parse(text));
  const auto rep = st::verify_general_position(f);
  f.general_position = rep.verdict;
  return f;
}

// Transversal-based family check: no (d+1)-subfamily admits a hyperplane
// meeting every hull.
bool transversal_family_holds(const st::Family& f) {
  const int k = f.dim + 1;
  if (f.m() < k) return true;
  std::vector<int> sub(k);
  for (int i = 0; i < k; ++i) sub[i] = i;
  while (true) {
    std::vector<st::PointSet> sets;
    for (int i : sub) sets.push_back(f.sets[i]);
    if (!st::same_type_via_transversal(sets)) return false;
    int t = k - 1;
    while (t >= 0 && sub[t] == f.m() - k + t) --t;
    if (t < 0) return true;
    ++sub[t];
    for (int i = t + 1; i < k; ++i) sub[i] = sub[i - 1] + 1;
  }
}

// ---------------------------------------------------------------------------
// sweep

struct SweepConfig {
  std::string command;
  std::map<std::string, std::vector<std::string>> values;
};

SweepConfig parse_sweep_config(const std::string& text) {
  SweepConfig cfg;
  std::stringstream ss(text);
  std::string line;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };
  while (std::getline(ss, line)) {
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("sweep config: expected key = value, got: " + line);
    const std::string key = trim(line.substr(0, eq));
    std::vector<std::string> vals;
    std::stringstream vs(line.substr(eq + 1));
    std::string item;
    while (std::getline(vs, item, ',')) {
      item = trim(item);
      if (!item.empty()) vals.push_back(item);
    }
    if (key == "command") {
      if (vals.size() != 1)
        throw std::invalid_argument("sweep config: command must be a single value");
      cfg.command = vals[0];
    } else {
      cfg.values[key] = vals;
    }
  }
  if (cfg.command.empty())
    throw std::invalid_argument("sweep config: missing command");
  return cfg;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string run_sweep(const SweepConfig& cfg, int jobs) {
  struct Key {
    const char* name;
    const char* fallback;
  };
  std::vector<Key> keys;
  std::vector<std::string> columns;
  if (cfg.command == "partition") {
    keys = {{"d", "2"}, {"n", "64"}, {"J", "3"}, {"seed", "1"}};
    columns = {"d", "n", "J", "seed", "max_cell", "degree_sum", "cells_realized",
               "warren_bound", "ok", "error"};
  } else if (cfg.command == "extract") {
    keys = {{"d", "2"}, {"m", "5"}, {"n", "200"}, {"r", "16"},
            {"seed", "1"}, {"max_resample", "10000"}};
    columns = {"d", "m", "n", "r", "seed", "achieved_fraction",
               "achieved_fraction_float", "resample_rounds", "ok", "error"};
  } else {
    throw std::invalid_argument("sweep: unsupported command: " + cfg.command);
  }

  std::vector<std::vector<std::string>> axes;
  for (const auto& k : keys) {
    auto it = cfg.values.find(k.name);
    axes.push_back(it != cfg.values.end() ? it->second
                                          : std::vector<std::string>{k.fallback});
  }
  bool empty_grid = false;
  for (const auto& a : axes) empty_grid |= a.empty();

  std::vector<std::map<std::string, std::string>> points;
  if (!empty_grid) {
    std::vector<size_t> pos(axes.size(), 0);
    while (true) {
      std::map<std::string, std::string> pt;
      for (size_t i = 0; i < keys.size(); ++i) pt[keys[i].name] = axes[i][pos[i]];
      points.push_back(std::move(pt));
      int t = static_cast<int>(axes.size()) - 1;
      while (t >= 0 && pos[t] + 1 == axes[t].size()) pos[t--] = 0;
      if (t < 0) break;
      ++pos[t];
    }
  }

  auto run_point = [&cfg](const std::map<std::string, std::string>& pt) {
    std::vector<std::string> row;
    auto get = [&pt](const char* k) { return pt.at(k); };
    try {
      if (cfg.command == "partition") {
        const int d = std::stoi(get("d"));
        const int n = std::stoi(get("n"));
        const int J = std::stoi(get("J"));
        const std::uint64_t seed = std::stoull(get("seed"));
        row = {get("d"), get("n"), get("J"), get("seed")};
        st::Family f = st::random_family(d, 1, n, st::Rng::derive(seed, 0x646174ULL));
        st::Partition part = st::build_partition(f.sets[0], J, d, seed);
        st::WarrenReport w = st::warren_audit(part);
        row.push_back(std::to_string(part.max_cell_size()));
        row.push_back(std::to_string(part.degree_sum()));
        row.push_back(std::to_string(w.realized));
        row.push_back(w.bound.str());
        row.push_back("1");
        row.push_back("");
      } else {
        const int d = std::stoi(get("d"));
        const int m = std::stoi(get("m"));
        const int n = std::stoi(get("n"));
        const int r = std::stoi(get("r"));
        const std::uint64_t seed = std::stoull(get("seed"));
        row = {get("d"), get("m"), get("n"), get("r"), get("seed")};
        st::Family f = st::clustered_family(d, m, n, st::Rng::derive(seed, 0x646174ULL));
        st::ExtractionConfig ec;
        ec.r = r;
        ec.seed = seed;
        ec.max_resample = std::stoll(get("max_resample"));
        st::ExtractionResult res = st::extract_same_type(f, ec);
        row.push_back(st::to_string(res.report.achieved_fraction));
        row.push_back(
            float_display(res.report.achieved_fraction.convert_to<double>()));
        row.push_back(std::to_string(res.report.resample_rounds));
        row.push_back("1");
        row.push_back("");
      }
    } catch (const std::exception& e) {
      while (row.size() + 2 < (cfg.command == "partition" ? 10u : 10u)) row.push_back("");
      row.push_back("0");
      row.push_back(e.what());
    }
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) line += ',';
      line += csv_quote(row[i]);
    }
    return line;
  };

  std::vector<std::string> rows(points.size());
  const int batch = std::max(1, jobs);
  for (size_t base = 0; base < points.size(); base += batch) {
    std::vector<std::future<std::string>> futs;
    for (size_t i = base; i < std::min(points.size(), base + batch); ++i)
      futs.push_back(std::async(std::launch::async, run_point, points[i]));
    for (size_t i = 0; i < futs.size(); ++i) rows[base + i] = futs[i].get();
  }

  std::string csv;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) csv += ',';
    csv += columns[i];
  }
  csv += '\n';
  for (const auto& r : rows) csv += r + "\n";
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact same-type geometry toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path, manifest_path, y_path, config_path;
  std::string magnitude = "1/1000", eps = "1/10", vc_constant = "1", method = "orientation";
  std::uint64_t seed = 0;
  int n = 5, d = 2, m = 3, J = 3, set_index = 0, r = 16, samples = 200, jobs = 1;
  long long coord_range = 10, center_radius = 100, cluster_radius = 5, max_resample = 10000;
  long long node_budget = 50'000'000;
  bool compare = false;

  auto add_common = [&](CLI::App* cmd, bool needs_seed) {
    cmd->add_option("--out", out_path, "Output JSON path (stdout if omitted)");
    cmd->add_option("--manifest", manifest_path, "Manifest path");
    if (needs_seed) cmd->add_option("--seed", seed, "RNG seed")->required();
  };

  auto* gen = app.add_subcommand("gen", "Generate datasets");
  gen->require_subcommand(1);
  auto* gen_grid = gen->add_subcommand("grid", "Perturbed grid family");
  gen_grid->add_option("--n", n, "Number of grid hyperplanes")->required();
  gen_grid->add_option("--d", d, "Dimension")->required();
  gen_grid->add_option("--m", m, "Number of perturbed copies")->required();
  gen_grid->add_option("--magnitude", magnitude, "Perturbation magnitude (rational)");
  add_common(gen_grid, true);
  auto* gen_random = gen->add_subcommand("random", "Uniform random family");
  gen_random->add_option("--n", n, "Points per set")->required();
  gen_random->add_option("--d", d, "Dimension")->required();
  gen_random->add_option("--m", m, "Number of sets")->required();
  gen_random->add_option("--range", coord_range, "Coordinate half-range");
  add_common(gen_random, true);
  auto* gen_clustered = gen->add_subcommand("clustered", "Separated cluster family");
  gen_clustered->add_option("--n", n, "Points per set")->required();
  gen_clustered->add_option("--d", d, "Dimension")->required();
  gen_clustered->add_option("--m", m, "Number of sets")->required();
  gen_clustered->add_option("--center-radius", center_radius, "Cluster center radius");
  gen_clustered->add_option("--cluster-radius", cluster_radius, "Cluster half-width");
  add_common(gen_clustered, true);

  auto* check = app.add_subcommand("check", "Same-type check");
  check->add_option("--in", in_path, "Family JSON")->required();
  check->add_option("--method", method, "orientation | transversal | both")
      ->check(CLI::IsMember({"orientation", "transversal", "both"}));
  add_common(check, false);

  auto* cexact = app.add_subcommand("c-exact", "Exact same-type constant");
  cexact->add_option("--in", in_path, "Family JSON")->required();
  cexact->add_option("--node-budget", node_budget, "Branch-and-bound node budget");
  add_common(cexact, false);

  auto* partition = app.add_subcommand("partition", "Iterated bisection partition");
  partition->add_option("--in", in_path, "Family JSON")->required();
  partition->add_option("--set", set_index, "Set index within the family");
  partition->add_option("--J", J, "Number of bisection stages")->required();
  add_common(partition, true);

  auto* extract = app.add_subcommand("extract", "Same-type subfamily extraction");
  extract->add_option("--in", in_path, "Family JSON")->required();
  extract->add_option("--r", r, "Partition fineness target");
  extract->add_option("--max-resample", max_resample, "Resampling round limit");
  add_common(extract, true);

  auto* approx = app.add_subcommand("approx", "Epsilon-approximants");
  approx->add_option("--in", in_path, "Family JSON")->required();
  approx->add_option("--eps", eps, "Epsilon (rational in (0,1))");
  approx->add_option("--vc-constant", vc_constant, "VC-dimension constant");
  approx->add_option("--samples", samples, "Audit range samples");
  approx->add_flag("--compare", compare, "Also compare exact constants");
  add_common(approx, true);

  auto* audit = app.add_subcommand("audit", "Upper-bound chain audit");
  audit->add_option("--in", in_path, "Perturbed grid family JSON")->required();
  audit->add_option("--y", y_path, "Subsets JSON (family schema); default: c-exact optimum");
  add_common(audit, false);

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  sweep->add_option("--config", config_path, "Sweep config file")->required();
  sweep->add_option("--jobs", jobs, "Concurrent sweep points");
  sweep->add_option("--out", out_path, "Output CSV path (stdout if omitted)");
  sweep->add_option("--manifest", manifest_path, "Manifest path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_grid->parsed() || gen_random->parsed() || gen_clustered->parsed()) {
      const char* which = gen_grid->parsed()     ? "gen grid"
                          : gen_random->parsed() ? "gen random"
                                                 : "gen clustered";
      Manifest man(which);
      man.config() = {{"n", n}, {"d", d}, {"m", m}, {"seed", seed}};
      st::Json out;
      if (gen_grid->parsed()) {
        man.config()["magnitude"] = magnitude;
        out = st::perturbed_family_to_json(
            st::perturbed_grid_family(n, d, m, st::parse_rational(magnitude), seed));
      } else if (gen_random->parsed()) {
        man.config()["range"] = coord_range;
        out = st::family_to_json(st::random_family(d, m, n, seed, coord_range));
      } else {
        man.config()["center_radius"] = center_radius;
        man.config()["cluster_radius"] = cluster_radius;
        out = st::family_to_json(
            st::clustered_family(d, m, n, seed, center_radius, cluster_radius));
      }
      deliver(out, out_path, man);
      man.emit(manifest_path, out_path);
      return 0;
    }

    if (check->parsed()) {
      Manifest man("check");
      man.config() = {{"in", in_path}, {"method", method}};
      st::Family f = load_family(in_path, man);
      st::Json out;
      out["general_position"] =
          f.general_position == st::GeneralPosition::Verified ? "verified" : "violated";
      bool holds = false;
      if (method == "orientation" || method == "both") {
        st::SameTypeVerdict v = st::same_type_family(f);
        out["orientation"] = st::verdict_to_json(v);
        holds = v.holds;
      }
      if (method == "transversal" || method == "both") {
        const bool t = transversal_family_holds(f);
        out["transversal"] = {{"holds", t}};
        if (method == "both" && t != holds)
          throw st::TheoremViolation("check: orientation and transversal methods disagree");
        holds = t;
      }
      deliver(out, out_path, man);
      man.emit(manifest_path, out_path);
      return holds ? 0 : 1;
    }

    if (cexact->parsed()) {
      Manifest man("c-exact");
      man.config() = {{"in", in_path}, {"node_budget", node_budget}};
      st::Family f = load_family(in_path, man);
      st::CExactConfig cfg;
      cfg.node_budget = node_budget;
      try {
        st::Json out = st::cresult_to_json(st::c_exact(f, cfg));
        deliver(out, out_path, man);
        man.emit(manifest_path, out_path);
        return 0;
      } catch (const st::BudgetExceeded& e) {
        st::Json out = st::cresult_to_json(e.best);
        out["budget_exceeded"] = true;
        deliver(out, out_path, man);
        man.emit(manifest_path, out_path);
        return 1;
      }
    }

    if (partition->parsed()) {
      Manifest man("partition");
      man.config() = {{"in", in_path}, {"set", set_index}, {"J", J}, {"seed", seed}};
      st::Family f = load_family(in_path, man);
      if (set_index < 0 || set_index >= f.m())
        throw std::invalid_argument("partition: --set out of range");
      st::Partition part = st::build_partition(f.sets[set_index], J, f.dim, seed);
      st::Json out;
      out["partition"] = st::partition_to_json(part);
      out["warren"] = st::warren_to_json(st::warren_audit(part));
      deliver(out, out_path, man);
      man.emit(manifest_path, out_path);
      return 0;
    }

    if (extract->parsed()) {
      Manifest man("extract");
      man.config() = {
          {"in", in_path}, {"r", r}, {"max_resample", max_resample}, {"seed", seed}};
      st::Family f = load_family(in_path, man);
      st::ExtractionConfig cfg;
      cfg.r = r;
      cfg.max_resample = max_resample;
      cfg.seed = seed;
      try {
        st::Json out = st::extraction_to_json(st::extract_same_type(f, cfg));
        deliver(out, out_path, man);
        man.emit(manifest_path, out_path);
        return 0;
      } catch (const st::ResampleLimitExceeded& e) {
        st::Json out = {{"error", "resample_limit_exceeded"}, {"detail", e.what()}};
        deliver(out, out_path, man);
        man.emit(manifest_path, out_path);
        return 1;
      }
    }

    if (approx->parsed()) {
      Manifest man("approx");
      man.config() = {{"in", in_path}, {"eps", eps}, {"vc_constant", vc_constant},
                      {"samples", samples}, {"seed", seed}, {"compare", compare}};
      st::Family f = load_family(in_path, man);
      st::ApproxConfig cfg;
      cfg.eps = st::parse_rational(eps);
      cfg.vc_constant = st::parse_rational(vc_constant);
      cfg.range_samples = samples;
      cfg.seed = seed;
      st::Json out;
      out["target_size"] = st::approximant_size(f.m(), f.dim, cfg);
      st::Json sizes = st::Json::array();
      st::Json discs = st::Json::array();
      try {
        st::Rational worst = 0;
        for (int i = 0; i < f.m(); ++i) {
          st::ApproxConfig per = cfg;
          per.seed = st::Rng::derive(cfg.seed, 0x63617070ULL + i);
          st::Rational disc;
          st::PointSet a = st::eps_approximant(f.sets[i], f.m(), f.dim, per, &disc);
          sizes.push_back(a.size());
          discs.push_back(st::to_string(disc));
          worst = std::max(worst, disc);
        }
        out["sizes"] = std::move(sizes);
        out["max_discrepancy_per_set"] = std::move(discs);
        out["max_discrepancy"] = st::to_string(worst);
        if (compare) out["compare"] = st::compare_to_json(st::compare_c(f, cfg));
        deliver(out, out_path, man);
        man.emit(manifest_path, out_path);
        return 0;
      } catch (const st::AuditFailedRepeatedly& e) {
        st::Json err = {{"error", "audit_failed_repeatedly"}, {"detail", e.what()}};
        deliver(err, out_path, man);
        man.emit(manifest_path, out_path);
        return 1;
      }
    }

    if (audit->parsed()) {
      Manifest man("audit");
      man.config() = {{"in", in_path}, {"y", y_path}};
      const std::string text = st::read_text(in_path);
      man.record_input(in_path, text);
      st::PerturbedFamily pf = st::perturbed_family_from_json(st::Json::parse(text));
      pf.family.general_position = st::verify_general_position(pf.family).verdict;
      std::vector<st::PointSet> y;
      if (y_path.empty()) {
        y = st::c_exact(pf.family).optimal_subsets;
      } else {
        const std::string ytext = st::read_text(y_path);
        man.record_input(y_path, ytext);
        y = st::family_from_json(st::Json::parse(ytext)).sets;
      }
      st::Json out = st::audit_to_json(st::upper_bound_audit(pf, y));
      deliver(out, out_path, man);
      man.emit(manifest_path, out_path);
      return 0;
    }

    if (sweep->parsed()) {
      Manifest man("sweep");
      man.config() = {{"config", config_path}, {"jobs", jobs}};
      const std::string text = st::read_text(config_path);
      man.record_input(config_path, text);
      const std::string csv = run_sweep(parse_sweep_config(text), jobs);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        st::write_text(out_path, csv);
        man.record_output(out_path, csv);
      }
      man.emit(manifest_path, out_path);
      return 0;
    }
  } catch (const st::TheoremViolation& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return 3;
  } catch (const st::SameTypeVerificationFailed& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
