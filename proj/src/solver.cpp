#include "nwsp/solver.hpp"

#include <algorithm>
#include <cmath>

namespace nwsp {

double gamma_for(std::int64_t n0, double scale) {
  double lg = std::log2(static_cast<double>(std::max<std::int64_t>(n0, 2)));
  double g = std::max(1.0, std::ceil(lg * std::pow(2.0, std::sqrt(lg))));
  return g * scale;
}

int iterations_for(std::int64_t n0) {
  double x = std::log(static_cast<double>(std::max<std::int64_t>(n0, 2))) / std::log(1.5);
  return static_cast<int>(std::ceil(x - 1e-12)) + 2;
}

EngineParams make_params(std::int64_t n0, const SolveConfig& cfg) {
  EngineParams p;
  p.n0 = n0;
  p.L = iterations_for(n0);
  p.h = p.L + 1;
  p.gamma = gamma_for(n0, cfg.gamma_scale);
  p.reps_c = cfg.reps_c;
  p.mode = cfg.mode;
  p.hook = cfg.hook;
  p.seed = cfg.seed;
  p.checks = cfg.checks;
  p.max_edges = cfg.max_edges;
  return p;
}

std::optional<NegCycleCertificate> find_negative_cycle(const InputGraph& h) {
  const VertexId n = h.n;
  std::vector<Weight> d(n, 0);
  std::vector<int> pred(n, -1);
  VertexId last = kNoVertex;
  for (VertexId round = 0; round <= n; ++round) {
    last = kNoVertex;
    for (std::size_t i = 0; i < h.arcs.size(); ++i) {
      const Arc& a = h.arcs[i];
      if (d[a.from] + a.w < d[a.to]) {
        d[a.to] = d[a.from] + a.w;
        pred[a.to] = static_cast<int>(i);
        last = a.to;
      }
    }
    if (last == kNoVertex) return std::nullopt;
  }
  VertexId y = last;
  for (VertexId i = 0; i < n; ++i) y = h.arcs[pred[y]].from;
  NegCycleCertificate c;
  VertexId cur = y;
  do {
    const Arc& a = h.arcs[pred[cur]];
    c.edges.push_back(a);
    cur = a.from;
  } while (cur != y);
  std::reverse(c.edges.begin(), c.edges.end());
  if (c.total() >= 0) throw InvariantError("extracted cycle is not negative");
  return c;
}

namespace {

std::vector<Dist> base_case(const Digraph& g, VertexId s, VertexId n_input, int hops,
                            RunCounters& c) {
  FrozenGraph f = freeze(g);
  std::vector<std::pair<VertexId, Weight>> all;
  for (VertexId v = 0; v < f.n; ++v) all.emplace_back(v, 0);
  if (!hop_sssp(f, all, hops, Direction::Forward, &c.relaxations_total).stable)
    throw NegCycleError(NegCycleCertificate{}, "base case");
  HopResult r = hop_sssp(f, s, hops, Direction::Forward, &c.relaxations_total);
  return {r.dist.begin(), r.dist.begin() + n_input};
}

std::vector<Dist> finalize(const SolverState& st, VertexId s, VertexId n_input, RunCounters& c) {
  FrozenGraph f = freeze(st.g);
  HopResult d2 = hop_sssp(f, s, 2, Direction::Forward, &c.relaxations_total);
  HopResult d3 = hop_sssp(f, s, 3, Direction::Forward, &c.relaxations_total);
  std::vector<Dist> out(n_input);
  for (VertexId v = 0; v < n_input; ++v) {
    if (d2.dist[v] != d3.dist[v])
      throw HopResidueError("vertex " + std::to_string(v) + " still improves with a third hop");
    if (d2.dist[v]) out[v] = *d2.dist[v] - st.phi[s] + st.phi[v];
  }
  return out;
}

}  // namespace

SolveResult solve(const InputGraph& h, VertexId s, const SolveConfig& cfg) {
  if (s < 0 || s >= h.n) throw std::invalid_argument("source out of range");
  if (cfg.mode == BetweennessMode::Sampled && !cfg.hook)
    throw std::invalid_argument("sampled mode needs a betweenness hook");
  SolveResult res;
  RunCounters& c = res.counters;
  c.n_input = h.n;
  c.seed = cfg.seed;
  try {
    Digraph g = to_well_behaved(h);
    c.n0 = g.size();
    c.eta = static_cast<std::int64_t>(g.eta());
    if (c.eta <= cfg.base_threshold) {
      c.base_case = true;
      c.vertices_final = g.size();
      c.edges_final = static_cast<std::int64_t>(g.num_edges());
      res.dist = base_case(g, s, h.n, cfg.base_hops, c);
      return res;
    }
    EngineParams p = make_params(c.n0, cfg);
    c.L = p.L;
    c.gamma = p.gamma;
    SolverState st = make_state(std::move(g), cfg.seed);
    st.counters = c;
    for (int t = 1; t <= p.L; ++t) shortcut_iteration(st, p, cfg.checkpoint);
    c = st.counters;
    c.vertices_final = st.g.size();
    c.edges_final = static_cast<std::int64_t>(st.g.num_edges());
    res.dist = finalize(st, s, h.n, c);
  } catch (const NegCycleError&) {
    auto cert = find_negative_cycle(h);
    if (!cert) throw InvariantError("negative cycle reported for an input without one");
    res.negative_cycle = true;
    res.cert = std::move(*cert);
    res.dist.clear();
  }
  return res;
}

}  // namespace nwsp
