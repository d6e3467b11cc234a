#pragma once

#include <string>

#include "nwsp/graph.hpp"

namespace nwsp::oracle {

// Plain Bellman-Ford from s. cycle is set when a negative cycle is reachable from s.
struct BFResult {
  bool cycle = false;
  std::vector<Dist> dist;
};
BFResult bellman_ford(const InputGraph& h, VertexId s);

// Floyd-Warshall diagonal test; any negative cycle anywhere in h.
bool has_negative_cycle(const InputGraph& h);

// Snapshot of a Digraph as an arc list, with hop flags.
struct ArcGraph {
  VertexId n = 0;
  std::vector<Arc> arcs;  // grouped by tail
  std::vector<char> hop;
  std::vector<std::size_t> off;  // arcs of u are [off[u], off[u+1])
};
ArcGraph arcs_of(const Digraph& g);

// Single-source distances on an arbitrary arc graph (no cycle handling: caller
// guarantees there is no negative cycle).
std::vector<Dist> distances_from(const ArcGraph& g, VertexId s);

// layers[k][v] = d^k(s, v) for k = 0..h, by relaxation over (vertex, hops) states.
std::vector<std::vector<Dist>> hop_layers(const ArcGraph& g, VertexId s, int h);
// Same, towards a target (d^k(v, t)).
std::vector<std::vector<Dist>> hop_layers_to(const ArcGraph& g, VertexId t, int h);

// Queue-based Bellman-Ford from a virtual source. nullopt on a negative cycle.
std::optional<std::vector<Weight>> spfa_potential(const ArcGraph& g);

// Exact distance plus the fewest hops among the shortest paths, by Dijkstra on
// reduced weights with (distance, hops) keys. zero_hop drops every hop arc (and
// then needs no potential: pass an empty vector).
struct HopDist {
  std::vector<Dist> d;
  std::vector<int> hops;
};
HopDist lex_dijkstra(const ArcGraph& g, const std::vector<Weight>& pot, VertexId s,
                     bool zero_hop = false);

// Smallest k with d^k(s, v) = d(s, v); -1 when v is unreachable.
std::vector<int> min_hops(const ArcGraph& g, VertexId s, int max_h);

// Per (u, v): number of negative vertices r with d^h(u,r) + d^h(r,v) < 0.
std::vector<std::vector<int>> betweenness_dp(const ArcGraph& g, const std::vector<VertexId>& negs,
                                             int h);
std::vector<std::vector<int>> betweenness_minplus(const ArcGraph& g,
                                                  const std::vector<VertexId>& negs, int h);

enum class Family { Erdos, Path, Grid, Layered, PlantedCycle };
Family family_from_string(const std::string& s);
const char* family_name(Family f);

struct GraphSpec {
  Family family = Family::Erdos;
  VertexId n = 16;
  double p = 0.2;  // edge probability (erdos) or extra-edge density
  Weight lo = -8, hi = 15;
  double neg_fraction = 0.3;
  std::uint64_t seed = 1;
};

// Solvable by construction except for PlantedCycle, which always has a negative
// cycle reachable from vertex 0.
InputGraph generate(const GraphSpec& spec);

}  // namespace nwsp::oracle
