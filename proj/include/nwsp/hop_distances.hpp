#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "nwsp/graph.hpp"

namespace nwsp {

enum class Direction { Forward, Backward };

struct HopResult {
  std::vector<Dist> dist;
  int relax_rounds = 0;  // hop relaxations that changed something
  bool stable = false;   // one more hop would change nothing
};

// d^h(S, .) (forward) or d^h(., S) (backward). Seeds carry a starting offset.
HopResult hop_sssp(const FrozenGraph& g, const std::vector<std::pair<VertexId, Weight>>& seeds,
                   int h, Direction dir, std::uint64_t* relaxations = nullptr);

HopResult hop_sssp(const FrozenGraph& g, VertexId source, int h, Direction dir,
                   std::uint64_t* relaxations = nullptr);

// (distance, source, sink) ordered lexicographically. An infinite distance
// still carries its endpoints, so unreachable pairs stay totally ordered.
struct ExtendedDistance {
  bool infinite = false;  // d is ignored (0) when set
  Weight d = 0;
  VertexId src = kNoVertex;
  VertexId dst = kNoVertex;
  auto operator<=>(const ExtendedDistance&) const = default;
  Dist dist() const { return infinite ? Dist{} : Dist(d); }
};
using ExtDist = std::optional<ExtendedDistance>;  // nullopt sorts after everything

inline bool ext_less(const ExtDist& a, const ExtDist& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

// Forward: per v, lex-min over u in S of (d^h(u,v), u, v).
// Backward: per v, lex-min over u in S of (d^h(v,u), v, u).
// Vertices no source reaches get (inf, min S, v) resp. (inf, v, min S).
// With `readout`, only the entries for those vertices are guaranteed exact.
std::vector<ExtDist> hop_sssp_extended(const FrozenGraph& g, const std::vector<VertexId>& sources,
                                       int h, Direction dir, std::uint64_t* relaxations = nullptr,
                                       const std::vector<VertexId>* readout = nullptr);

struct Ball {
  std::vector<std::pair<VertexId, Weight>> members;  // sorted by vertex id
  std::size_t size() const { return members.size(); }
};

// Reusable dense scratch for repeated small searches.
class BallScratch {
 public:
  explicit BallScratch(VertexId n = 0) { resize(n); }
  void resize(VertexId n) {
    dist_.assign(n, 0);
    seen_.assign(n, 0);
    done_.assign(n, 0);
  }
  std::vector<Weight> dist_;
  std::vector<char> seen_, done_;
  std::vector<VertexId> touched_;
  void reset() {
    for (VertexId v : touched_) seen_[v] = done_[v] = 0;
    touched_.clear();
  }
};

// {v : d^0(v,r) < delta}
Ball bounded_ball_in(const FrozenGraph& g, VertexId r, Weight delta, BallScratch& s,
                     std::uint64_t* relaxations = nullptr);
// {v : d^1(r,v) < -delta}; r's only way out is (r, rbar) of weight w_rrbar.
Ball bounded_ball_out(const FrozenGraph& g, VertexId r, VertexId rbar, Weight w_rrbar, Weight delta,
                      BallScratch& s, std::uint64_t* relaxations = nullptr);

}  // namespace nwsp
