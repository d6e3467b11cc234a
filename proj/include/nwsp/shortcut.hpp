#pragma once

#include <functional>
#include <random>
#include <unordered_map>

#include "nwsp/counters.hpp"
#include "nwsp/preprocess.hpp"

namespace nwsp {

// Candidate edge kept out of G until a later potential makes it nonnegative.
// phi_u / phi_v are the cumulative potentials when it was recorded.
struct DeferredEdge {
  VertexId u, v;
  Weight w;
  Weight phi_u, phi_v;
};

struct DeferredSet {
  std::vector<DeferredEdge> items;
  // (u,v) -> index; only the entry with the smallest frame-free weight is kept.
  std::unordered_map<std::uint64_t, std::size_t> index;
  // Returns false when an entry at least as light already exists.
  bool add(const DeferredEdge& e);
};

struct EngineParams {
  std::int64_t n0 = 0;
  int L = 1;          // number of Shortcut iterations
  int h = 2;          // hop budget used by Estimate
  double gamma = 1;
  int reps_c = 8;     // Estimate repetitions = ceil(reps_c * ln n)
  BetweennessMode mode = BetweennessMode::ExactOracle;
  SampledHook hook;
  std::uint64_t seed = 0;
  bool checks = false;  // run the cheap structural scans inline
  std::size_t max_edges = 0;  // 0: unlimited
};

struct SolverState {
  Digraph g;
  std::vector<Weight> phi;  // cumulative potential, one per vertex
  DeferredSet f_in, f_out;
  std::mt19937_64 rng;
  RunCounters counters;
  int t = 0;  // last completed iteration
  std::vector<int> neg_index;  // r -> position in g.negatives(), -1 otherwise
};

SolverState make_state(Digraph g, std::uint64_t seed);

struct Threshold {
  VertexId r = kNoVertex, rbar = kNoVertex, hub = kNoVertex;
  Weight delta = 0;
  Weight w_rr = 0;  // w(r, rbar) at Step 3
  int case_id = 0;
  bool clamped = false;
  Ball uin;   // v -> d^0(v, r)
  Ball uout;  // v -> d^1(r, v)
};

using AList = std::vector<std::pair<VertexId, Weight>>;

struct IterationContext {
  int t = 0;
  double b = 1, lambda = 0;
  int h = 0;
  VertexId n_at_step4 = 0;
  std::vector<Threshold> thresholds;  // indexed like g.negatives()
  std::vector<AList> ain, aout;       // snapshot, vertices < n_at_step4
  std::vector<VertexId> in_gadget, out_gadget;  // first Steiner id or kNoVertex
  std::vector<int> in_gadget_size, out_gadget_size;
  std::vector<VertexId> new_in, new_out;  // Steiner vertices created this iteration
  IterationCounters* ctr = nullptr;
  std::uint64_t addedge_work = 0;  // calls inside the current top-level AddEdge
};

enum class Checkpoint { AfterPhase1, PreRestore, PostIteration };
using CheckpointHook =
    std::function<void(Checkpoint, const SolverState&, const IterationContext&)>;

// Steps 1-3. Throws NegCycleError when the reweighting finds a negative cycle.
void phase1(SolverState& s, IterationContext& it, const EngineParams& p);
void replay_deferred(SolverState& s, IterationContext& it, std::size_t fin_end,
                     std::size_t fout_end);
void snapshot_aux_lists(SolverState& s, IterationContext& it);
void simple_merge_in(SolverState& s, IterationContext& it, const Threshold& th);
void simple_merge_out(SolverState& s, IterationContext& it, const Threshold& th);
void build_in_gadget(SolverState& s, IterationContext& it, VertexId v);
void build_out_gadget(SolverState& s, IterationContext& it, VertexId v);
VertexId create_n_steiner(SolverState& s, IterationContext& it, Threshold& th);
void add_edge_in(SolverState& s, IterationContext& it, VertexId u, VertexId v, Weight w);
void add_edge_out(SolverState& s, IterationContext& it, VertexId u, VertexId v, Weight w);
void hub_edge_cases(SolverState& s, IterationContext& it, const Threshold& th);
void restore_well_behaved(SolverState& s, VertexId r);
void classify_steiner(SolverState& s, IterationContext& it);

// j (1-based) and level for a list sorted non-increasing; shift = d_v - delta
// (in) or d_v + delta (out).
struct Crossing {
  std::size_t j;
  int level;
};
Crossing threshold_crossing_index(const AList& sorted, Weight shift);

void shortcut_in(SolverState& s, IterationContext& it, const Threshold& th);
void shortcut_out(SolverState& s, IterationContext& it, const Threshold& th);

// One full Shortcut(G, t) with t = s.t + 1.
void shortcut_iteration(SolverState& s, const EngineParams& p, const CheckpointHook& hook = {});

}  // namespace nwsp
