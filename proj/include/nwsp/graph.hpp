#pragma once

#include <unordered_map>
#include <vector>

#include "nwsp/types.hpp"

namespace nwsp {

enum class VertexKind : std::uint8_t { Regular, InSteiner, OutSteiner, NSteiner };

const char* kind_name(VertexKind k);

struct VertexMeta {
  VertexKind kind = VertexKind::Regular;
  int level = 0;
  VertexId parent = kNoVertex;  // p^in, p^out or p^N depending on kind
  bool heavy = true;
};

enum class Side : std::uint8_t { None, Neg, NegBar };

// Mutable weighted digraph with one stored edge per ordered pair (minimum weight wins).
//
// The designated negative edges are (r, partner(r)) for r in N. Those count as hops
// whatever their sign; any other edge is a hop only while its weight is negative.
class Digraph {
 public:
  using EdgeMap = std::unordered_map<VertexId, Weight>;

  VertexId add_vertex(const VertexMeta& m, Side side = Side::None);
  VertexId size() const { return static_cast<VertexId>(meta_.size()); }

  const VertexMeta& meta(VertexId v) const { return meta_[v]; }
  VertexMeta& meta(VertexId v) { return meta_[v]; }

  const EdgeMap& out(VertexId v) const { return out_[v]; }
  const EdgeMap& in(VertexId v) const { return in_[v]; }

  Dist edge(VertexId u, VertexId v) const;
  // Direct edge, or the path u -> partner(u) -> v when u is in N (edges leaving r are
  // stored on r-bar after restoration), whichever is lighter.
  Dist weight(VertexId u, VertexId v) const;

  // Min-dedup insert. Returns true when the stored weight changed.
  bool insert_edge(VertexId u, VertexId v, Weight w);
  void set_edge(VertexId u, VertexId v, Weight w);
  void erase_edge(VertexId u, VertexId v);

  std::size_t num_edges() const { return num_edges_; }
  std::uint64_t insertions() const { return insertions_; }

  void pair_negative(VertexId r, VertexId rbar);
  Side side(VertexId v) const { return side_[v]; }
  bool in_n(VertexId v) const { return side_[v] == Side::Neg; }
  bool in_nbar(VertexId v) const { return side_[v] == Side::NegBar; }
  VertexId partner(VertexId v) const { return partner_[v]; }
  const std::vector<VertexId>& negatives() const { return negatives_; }
  std::size_t eta() const { return negatives_.size(); }

  bool designated(VertexId u, VertexId v) const {
    return side_[u] == Side::Neg && partner_[u] == v;
  }
  bool is_hop(VertexId u, VertexId v, Weight w) const { return w < 0 || designated(u, v); }

 private:
  std::vector<VertexMeta> meta_;
  std::vector<Side> side_;
  std::vector<VertexId> partner_;
  std::vector<EdgeMap> out_, in_;
  std::vector<VertexId> negatives_;
  std::size_t num_edges_ = 0;
  std::uint64_t insertions_ = 0;
};

// Vertex i of H becomes i (in N) and n + i (its copy in N-bar).
Digraph to_well_behaved(const InputGraph& h);
inline VertexId bar_of(VertexId v, VertexId n_input) { return v + n_input; }

// w(u,v) += phi(u) - phi(v) on every stored edge. Throws InvariantError if a
// non-designated edge that was nonnegative turns negative.
void apply_potential(Digraph& g, const std::vector<Weight>& phi);

// Compressed read-only copy used by the distance routines.
struct FrozenGraph {
  VertexId n = 0;
  std::vector<std::size_t> fwd_off, bwd_off;
  std::vector<VertexId> fwd_to, bwd_to;
  std::vector<Weight> fwd_w, bwd_w;
  std::vector<Arc> hops;  // edges that consume one hop
};

FrozenGraph freeze(const Digraph& g);

// Edges with a negative weight that are not designated, as (u,v,w) triples.
std::vector<Arc> stray_negative_edges(const Digraph& g);

}  // namespace nwsp
