#include "nwsp/harness.hpp"

#include <json.hpp>
#include <random>

namespace nwsp::oracle {

GraphSpec instance_spec(const DiffConfig& cfg, int i) {
  std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i));
  GraphSpec s;
  s.family = cfg.families[static_cast<std::size_t>(i) % cfg.families.size()];
  s.n = std::uniform_int_distribution<VertexId>(cfg.n_min, cfg.n_max)(rng);
  s.lo = cfg.lo;
  s.hi = cfg.hi;
  double deg = std::uniform_real_distribution<double>(2.0, 6.0)(rng);
  s.p = std::min(1.0, deg / s.n);
  if (s.family == Family::Grid || s.family == Family::Layered) s.p = 0.5;
  s.neg_fraction = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  s.seed = rng();
  return s;
}

std::string check_instance(const InputGraph& h, const SolveConfig& cfg) {
  const bool cyclic = has_negative_cycle(h);
  SolveResult r;
  try {
    r = solve(h, 0, cfg);
  } catch (const InvariantError& e) {
    return std::string("invariant: ") + e.what();
  }
  if (cyclic) {
    if (!r.negative_cycle) return "distances returned for a cyclic input";
    if (r.cert.edges.empty() || r.cert.total() >= 0) return "certificate is not negative";
    for (std::size_t i = 0; i < r.cert.edges.size(); ++i) {
      const Arc& a = r.cert.edges[i];
      const Arc& b = r.cert.edges[(i + 1) % r.cert.edges.size()];
      if (a.to != b.from) return "certificate is not a closed walk";
      bool found = false;
      for (const Arc& x : h.arcs) found |= x.from == a.from && x.to == a.to && x.w == a.w;
      if (!found) return "certificate uses a non-input arc";
    }
    return "";
  }
  if (r.negative_cycle) return "certificate returned for an acyclic input";
  BFResult bf = bellman_ford(h, 0);
  for (VertexId v = 0; v < h.n; ++v)
    if (bf.dist[v] != r.dist[v])
      return "distance mismatch at vertex " + std::to_string(v);
  return "";
}

VertexId shrink(const InputGraph& h, const std::function<bool(const InputGraph&)>& fails) {
  auto prefix = [&](VertexId k) {
    InputGraph g;
    g.n = k;
    for (const Arc& a : h.arcs)
      if (a.from < k && a.to < k) g.arcs.push_back(a);
    return g;
  };
  VertexId lo = 1, hi = h.n;  // hi always fails
  while (lo < hi) {
    VertexId mid = lo + (hi - lo) / 2;
    if (fails(prefix(mid)))
      hi = mid;
    else
      lo = mid + 1;
  }
  return hi;
}

VertexId shrink(const InputGraph& h, const SolveConfig& cfg) {
  return shrink(h, [&](const InputGraph& g) { return !check_instance(g, cfg).empty(); });
}

DiffReport differential_run(const DiffConfig& cfg) {
  DiffReport rep;
  for (int i = 0; i < cfg.runs; ++i) {
    GraphSpec spec = instance_spec(cfg, i);
    InputGraph h = generate(spec);
    ++rep.runs;
    int neg = 0;
    for (const Arc& a : h.arcs) neg += a.w < 0;
    if (neg >= 5) ++rep.many_negative;
    const bool cyclic = has_negative_cycle(h);
    if (cyclic) ++rep.cycles;
    std::string err = check_instance(h, cfg.solve);
    if (cyclic && err.empty()) ++rep.certificates;
    if (cyclic && err == "distances returned for a cyclic input") ++rep.false_distances;
    if (err.rfind("invariant", 0) == 0) ++rep.internal_errors;
    if (err.empty()) continue;
    ++rep.mismatches;
    if (rep.first_bad_seed < 0) {
      rep.first_bad_seed = static_cast<std::int64_t>(spec.seed);
      rep.first_error = err;
      rep.shrunk_n = shrink(h, cfg.solve);
    }
  }
  return rep;
}

std::string report_to_json(const DiffReport& r, const DiffConfig& cfg) {
  nlohmann::ordered_json j;
  j["seed"] = cfg.seed;
  j["runs"] = r.runs;
  j["n_min"] = cfg.n_min;
  j["n_max"] = cfg.n_max;
  std::vector<std::string> fam;
  for (Family f : cfg.families) fam.emplace_back(family_name(f));
  j["families"] = fam;
  j["mismatches"] = r.mismatches;
  j["cycles"] = r.cycles;
  j["certificates"] = r.certificates;
  j["false_distances"] = r.false_distances;
  j["internal_errors"] = r.internal_errors;
  j["many_negative"] = r.many_negative;
  j["first_bad_seed"] = r.first_bad_seed;
  j["first_error"] = r.first_error;
  j["shrunk_n"] = r.shrunk_n;
  return j.dump(2);
}

}  // namespace nwsp::oracle
