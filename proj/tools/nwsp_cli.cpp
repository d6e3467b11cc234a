#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include "nwsp/dimacs.hpp"
#include "nwsp/harness.hpp"

using namespace nwsp;

namespace {

enum Exit { kOk = 0, kCycle = 1, kUsage = 2, kInternal = 3 };

void print_dist(const std::vector<Dist>& d) {
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::cout << v + 1 << ' ';
    if (d[v])
      std::cout << *d[v];
    else
      std::cout << "INF";
    std::cout << '\n';
  }
}

void print_cycle(const NegCycleCertificate& c) {
  std::cout << "negative cycle " << c.total() << '\n';
  for (const Arc& a : c.edges) std::cout << a.from + 1 << ' ' << a.to + 1 << ' ' << a.w << '\n';
}

VertexId source_index(const InputGraph& h, int k) {
  if (k < 1 || k > h.n) throw CLI::ValidationError("--source", "out of range 1.." + std::to_string(h.n));
  return k - 1;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text << '\n';
}

// Diff suite description; every key is optional.
oracle::DiffConfig load_spec(const std::string& path) {
  oracle::DiffConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  if (j.contains("families")) {
    cfg.families.clear();
    for (const auto& s : j["families"]) cfg.families.push_back(oracle::family_from_string(s));
  }
  cfg.n_min = j.value("n_min", cfg.n_min);
  cfg.n_max = j.value("n_max", cfg.n_max);
  cfg.lo = j.value("lo", cfg.lo);
  cfg.hi = j.value("hi", cfg.hi);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.solve.base_threshold = j.value("base_threshold", cfg.solve.base_threshold);
  cfg.solve.gamma_scale = j.value("gamma_scale", cfg.solve.gamma_scale);
  return cfg;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double den = n * sxx - sx * sx;
  return den == 0 ? 0 : (n * sxy - sx * sy) / den;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negative-weight single-source shortest paths"};
  app.require_subcommand(1);

  std::string file, counters_path, mode = "exact-oracle", out_path, spec_path, report_path;
  std::string family = "erdos", sizes = "256,512,1024";
  int source = 1, runs = 100;
  std::uint64_t seed = 1;
  double gamma_scale = 1.0, p = 0.2, density = 0.25;
  VertexId n = 16;
  bool checks = false, force_pipeline = false;
  std::size_t max_edges = 5'000'000;

  auto* solve_cmd = app.add_subcommand("solve", "run the shortcut pipeline");
  solve_cmd->add_option("file", file, "DIMACS graph")->required();
  solve_cmd->add_option("--source", source, "1-based source vertex");
  solve_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact-oracle", "sampled"}));
  solve_cmd->add_option("--seed", seed);
  solve_cmd->add_option("--gamma-scale", gamma_scale);
  solve_cmd->add_option("--counters", counters_path, "write counters JSON here");
  solve_cmd->add_flag("--checks", checks, "run structural scans inline");

  auto* oracle_cmd = app.add_subcommand("oracle", "plain Bellman-Ford");
  oracle_cmd->add_option("file", file, "DIMACS graph")->required();
  oracle_cmd->add_option("--source", source, "1-based source vertex");

  auto* diff_cmd = app.add_subcommand("diff", "differential run against Bellman-Ford");
  diff_cmd->add_option("--spec", spec_path, "JSON suite description");
  diff_cmd->add_option("--runs", runs);
  diff_cmd->add_option("--report", report_path);

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--family", family)
      ->check(CLI::IsMember({"erdos", "path", "grid", "layered", "planted-cycle"}));
  gen_cmd->add_option("--n", n)->check(CLI::Range(1, 1 << 24));
  gen_cmd->add_option("--p", p, "edge probability");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("-o", out_path)->required();

  auto* bench_cmd = app.add_subcommand("bench", "timing and counter sweep");
  bench_cmd->add_option("--sizes", sizes);
  bench_cmd->add_option("--density", density, "edge probability");
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--report", report_path);
  bench_cmd->add_option("--max-edges", max_edges, "abandon a size past this many edges (0: never)");
  bench_cmd->add_flag("--force-pipeline", force_pipeline, "skip the base case at every size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) {
      InputGraph h = read_dimacs_file(file);
      SolveConfig cfg;
      cfg.seed = seed;
      cfg.gamma_scale = gamma_scale;
      cfg.checks = checks;
      if (mode == "sampled") cfg.mode = BetweennessMode::Sampled;
      SolveResult r = solve(h, source_index(h, source), cfg);
      if (!counters_path.empty()) write_file(counters_path, counters_to_json(r.counters));
      if (r.negative_cycle) {
        print_cycle(r.cert);
        return kCycle;
      }
      print_dist(r.dist);
      return kOk;
    }
    if (*oracle_cmd) {
      InputGraph h = read_dimacs_file(file);
      VertexId s = source_index(h, source);
      if (auto c = find_negative_cycle(h)) {
        print_cycle(*c);
        return kCycle;
      }
      print_dist(oracle::bellman_ford(h, s).dist);
      return kOk;
    }
    if (*diff_cmd) {
      oracle::DiffConfig cfg = load_spec(spec_path);
      cfg.runs = runs;
      oracle::DiffReport rep = oracle::differential_run(cfg);
      std::string js = oracle::report_to_json(rep, cfg);
      if (!report_path.empty()) write_file(report_path, js);
      std::cout << js << '\n';
      if (rep.internal_errors > 0) return kInternal;
      return rep.mismatches == 0 ? kOk : kCycle;
    }
    if (*gen_cmd) {
      oracle::GraphSpec s;
      s.family = oracle::family_from_string(family);
      s.n = n;
      s.p = p;
      s.seed = seed;
      InputGraph h = oracle::generate(s);
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot write " + out_path);
      f << "c family " << family << " n " << n << " p " << p << " seed " << seed << '\n';
      write_dimacs(f, h);
      return kOk;
    }
    if (*bench_cmd) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      std::vector<double> lx, ly;
      for (const std::string& tok : CLI::detail::split(sizes, ',')) {
        oracle::GraphSpec s;
        s.n = std::stoi(tok);
        s.p = density;
        s.seed = seed;
        InputGraph h = oracle::generate(s);
        SolveConfig cfg;
        cfg.seed = seed;
        cfg.max_edges = max_edges;
        if (force_pipeline) cfg.base_threshold = 0;
        auto t0 = std::chrono::steady_clock::now();
        SolveResult r;
        try {
          r = solve(h, 0, cfg);
        } catch (const BudgetExceeded& e) {
          double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          nlohmann::ordered_json row;
          row["n"] = s.n;
          row["m"] = h.arcs.size();
          row["status"] = "budget_exceeded";
          row["wall_s"] = secs;
          row["iteration"] = e.iteration;
          row["edges"] = e.edges;
          rows.push_back(row);
          std::cerr << "n=" << s.n << " " << e.what() << " after " << secs << "s\n";
          continue;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::uint64_t sq = 0;
        for (const auto& it : r.counters.iterations) sq += it.sum_u_sq;
        nlohmann::ordered_json row;
        row["n"] = s.n;
        row["m"] = h.arcs.size();
        row["status"] = r.counters.base_case ? "base_case" : "pipeline";
        row["wall_s"] = secs;
        row["relaxations"] = r.counters.relaxations_total;
        row["sum_u_sq"] = sq;
        row["vertices_final"] = r.counters.vertices_final;
        row["vertex_growth"] =
            static_cast<double>(r.counters.vertices_final) / std::max<std::int64_t>(1, r.counters.n0);
        row["iterations"] = r.counters.iterations.size();
        rows.push_back(row);
        lx.push_back(std::log(static_cast<double>(s.n)));
        ly.push_back(std::log(std::max(secs, 1e-9)));
        std::cerr << "n=" << s.n << " " << secs << "s\n";
      }
      nlohmann::ordered_json rep;
      rep["seed"] = seed;
      rep["density"] = density;
      rep["max_edges"] = max_edges;
      rep["force_pipeline"] = force_pipeline;
      rep["rows"] = rows;
      // Over completed sizes only; null when fewer than two finished.
      rep["loglog_slope_wall"] = lx.size() >= 2 ? nlohmann::ordered_json(slope(lx, ly)) : nullptr;
      rep["context"] =
          "asymptotic claim: single-source shortest paths in real-weighted graphs in n^{2+o(1)} time";
      if (!report_path.empty()) write_file(report_path, rep.dump(2));
      std::cout << rep.dump(2) << '\n';
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
