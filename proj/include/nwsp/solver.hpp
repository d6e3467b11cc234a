#pragma once

#include "nwsp/shortcut.hpp"

namespace nwsp {

struct SolveConfig {
  double gamma_scale = 1.0;
  int reps_c = 8;
  int base_threshold = 100;  // eta at or below this takes the base case
  int base_hops = 100;
  BetweennessMode mode = BetweennessMode::ExactOracle;
  SampledHook hook;
  std::uint64_t seed = 1;
  bool checks = false;
  std::size_t max_edges = 0;  // BudgetExceeded past this many edges; 0 disables
  CheckpointHook checkpoint;
};

struct SolveResult {
  bool negative_cycle = false;
  NegCycleCertificate cert;  // edges of the input graph
  std::vector<Dist> dist;    // per input vertex
  RunCounters counters;
};

double gamma_for(std::int64_t n0, double scale);
int iterations_for(std::int64_t n0);
EngineParams make_params(std::int64_t n0, const SolveConfig& cfg);

// Finds some negative cycle of h (any, reachable from s or not), or nullopt.
std::optional<NegCycleCertificate> find_negative_cycle(const InputGraph& h);

SolveResult solve(const InputGraph& h, VertexId s, const SolveConfig& cfg = {});

}  // namespace nwsp
