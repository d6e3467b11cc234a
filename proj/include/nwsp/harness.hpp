#pragma once

#include <functional>
#include <string>

#include "nwsp/oracle.hpp"
#include "nwsp/solver.hpp"

namespace nwsp::oracle {

struct DiffConfig {
  std::vector<Family> families{Family::Erdos, Family::Path, Family::Grid, Family::Layered};
  VertexId n_min = 8, n_max = 48;
  Weight lo = -8, hi = 15;
  int runs = 100;
  std::uint64_t seed = 1;
  SolveConfig solve;
};

// Instance i of a suite: family, size and density are drawn from (cfg.seed, i).
GraphSpec instance_spec(const DiffConfig& cfg, int i);

struct DiffReport {
  int runs = 0;
  int mismatches = 0;
  int cycles = 0;           // instances the oracle says carry a negative cycle
  int certificates = 0;     // cycle instances answered with a valid certificate
  int false_distances = 0;  // cycle instances answered with distances
  int internal_errors = 0;
  int many_negative = 0;    // instances with at least 5 negative arcs
  std::int64_t first_bad_seed = -1;
  VertexId shrunk_n = 0;    // size of the smallest failing prefix subgraph
  std::string first_error;
};

// Checks one instance against Bellman-Ford from vertex 0. Empty string on agreement.
std::string check_instance(const InputGraph& h, const SolveConfig& cfg);

DiffReport differential_run(const DiffConfig& cfg);

// Smallest n' such that the subgraph induced on 0..n'-1 still fails, by bisection.
VertexId shrink(const InputGraph& h, const std::function<bool(const InputGraph&)>& fails);
VertexId shrink(const InputGraph& h, const SolveConfig& cfg);

std::string report_to_json(const DiffReport& r, const DiffConfig& cfg);

}  // namespace nwsp::oracle
