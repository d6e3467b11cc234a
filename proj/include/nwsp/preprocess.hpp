#pragma once

#include <functional>
#include <random>

#include "nwsp/hop_distances.hpp"

namespace nwsp {

enum class BetweennessMode { ExactOracle, Sampled };

// Sampled mode is an external construction: given the graph, b and h it must
// return a valid potential (or throw NegCycleError).
using SampledHook =
    std::function<std::vector<Weight>(const Digraph& g, double b, int h, std::uint64_t seed)>;

// Distances from a virtual source joined to every vertex by 0-weight edges.
// Throws NegCycleError (empty certificate) when the graph has a negative cycle.
std::vector<Weight> exact_potential(const Digraph& g, std::uint64_t* relaxations = nullptr);

// Per r (index into g.negatives()): D^in and D^out at one scale p.
struct ScaleSample {
  std::vector<ExtDist> din, dout;
};

// Algorithm "Estimate(p)": reps samples, lower median per r.
ScaleSample estimate_scale(const FrozenGraph& g, const std::vector<VertexId>& negatives, int p_log2,
                           int reps, int h, std::mt19937_64& rng,
                           std::uint64_t* relaxations = nullptr);

// Prefix maximum in lex order. Idempotent.
void monotone_repair(std::vector<ExtDist>& seq);

struct DeltaChoice {
  Dist delta;        // nullopt stands for +infinity (only reachable in case 2)
  int case_id = 0;   // 1..4
  int lstar = 0;     // 0 when no crossing scale exists
};

// din/dout: first components of the repaired sequences, nullopt meaning +infinity.
DeltaChoice choose_delta(const std::vector<Dist>& din, const std::vector<Dist>& dout);

inline int ceil_log2(std::uint64_t x) {
  int k = 0;
  while ((std::uint64_t{1} << k) < x) ++k;
  return k;
}
inline int floor_log2(std::uint64_t x) {
  int k = -1;
  while (x) {
    x >>= 1;
    ++k;
  }
  return k;
}

}  // namespace nwsp
