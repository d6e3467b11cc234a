#include "nwsp/graph.hpp"

#include <algorithm>

namespace nwsp {

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Regular: return "regular";
    case VertexKind::InSteiner: return "in-steiner";
    case VertexKind::OutSteiner: return "out-steiner";
    case VertexKind::NSteiner: return "n-steiner";
  }
  return "?";
}

VertexId Digraph::add_vertex(const VertexMeta& m, Side side) {
  meta_.push_back(m);
  side_.push_back(side);
  partner_.push_back(kNoVertex);
  out_.emplace_back();
  in_.emplace_back();
  return size() - 1;
}

Dist Digraph::edge(VertexId u, VertexId v) const {
  auto it = out_[u].find(v);
  if (it == out_[u].end()) return std::nullopt;
  return it->second;
}

Dist Digraph::weight(VertexId u, VertexId v) const {
  Dist direct = edge(u, v);
  if (side_[u] != Side::Neg || partner_[u] == v) return direct;
  Dist lifted = edge(u, partner_[u]);
  if (!lifted) return direct;
  Dist second = edge(partner_[u], v);
  if (!second) return direct;
  Weight via = *lifted + *second;
  if (!direct || via < *direct) return via;
  return direct;
}

bool Digraph::insert_edge(VertexId u, VertexId v, Weight w) {
  ++insertions_;
  if (u == v) {
    if (w < 0) throw NegCycleError(NegCycleCertificate{{Arc{u, v, w}}}, "self-loop");
    return false;
  }
  auto [it, fresh] = out_[u].try_emplace(v, w);
  if (fresh) {
    in_[v][u] = w;
    ++num_edges_;
    return true;
  }
  if (w < it->second) {
    it->second = w;
    in_[v][u] = w;
    return true;
  }
  return false;
}

void Digraph::set_edge(VertexId u, VertexId v, Weight w) {
  if (u == v) throw InvariantError("set_edge on a self-loop");
  auto [it, fresh] = out_[u].insert_or_assign(v, w);
  in_[v][u] = w;
  if (fresh) ++num_edges_;
}

void Digraph::erase_edge(VertexId u, VertexId v) {
  if (out_[u].erase(v)) {
    in_[v].erase(u);
    --num_edges_;
  }
}

void Digraph::pair_negative(VertexId r, VertexId rbar) {
  side_[r] = Side::Neg;
  side_[rbar] = Side::NegBar;
  partner_[r] = rbar;
  partner_[rbar] = r;
  negatives_.push_back(r);
}

Digraph to_well_behaved(const InputGraph& h) {
  const VertexId n = h.n;
  std::vector<Weight> wmin(n, 0);
  for (const auto& a : h.arcs) wmin[a.from] = std::min(wmin[a.from], a.w);

  Digraph g;
  for (VertexId v = 0; v < n; ++v) g.add_vertex(VertexMeta{}, Side::Neg);
  for (VertexId v = 0; v < n; ++v) g.add_vertex(VertexMeta{}, Side::NegBar);
  for (VertexId v = 0; v < n; ++v) {
    g.pair_negative(v, bar_of(v, n));
    g.set_edge(v, bar_of(v, n), wmin[v]);
    g.set_edge(bar_of(v, n), v, -wmin[v]);
  }
  for (const auto& a : h.arcs) {
    if (a.from == a.to) {
      // A self-loop only matters when it is negative.
      if (a.w < 0) throw NegCycleError(NegCycleCertificate{{a}}, "input self-loop");
      continue;
    }
    g.insert_edge(bar_of(a.from, n), a.to, a.w - wmin[a.from]);
  }
  return g;
}

void apply_potential(Digraph& g, const std::vector<Weight>& phi) {
  for (VertexId u = 0; u < g.size(); ++u) {
    // Collect first; set_edge touches in_ maps of other vertices only.
    std::vector<std::pair<VertexId, Weight>> upd;
    upd.reserve(g.out(u).size());
    for (const auto& [v, w] : g.out(u)) {
      Weight nw = w + phi[u] - phi[v];
      if (nw < 0 && w >= 0 && !g.designated(u, v))
        throw InvariantError("potential is not valid on edge " + std::to_string(u) + "->" +
                             std::to_string(v));
      upd.emplace_back(v, nw);
    }
    for (const auto& [v, nw] : upd) g.set_edge(u, v, nw);
  }
}

FrozenGraph freeze(const Digraph& g) {
  FrozenGraph f;
  f.n = g.size();
  f.fwd_off.assign(f.n + 1, 0);
  f.bwd_off.assign(f.n + 1, 0);
  for (VertexId u = 0; u < f.n; ++u) {
    for (const auto& [v, w] : g.out(u)) {
      if (g.is_hop(u, v, w)) {
        f.hops.push_back(Arc{u, v, w});
      } else {
        ++f.fwd_off[u + 1];
        ++f.bwd_off[v + 1];
      }
    }
  }
  for (VertexId v = 0; v < f.n; ++v) {
    f.fwd_off[v + 1] += f.fwd_off[v];
    f.bwd_off[v + 1] += f.bwd_off[v];
  }
  f.fwd_to.resize(f.fwd_off[f.n]);
  f.fwd_w.resize(f.fwd_off[f.n]);
  f.bwd_to.resize(f.bwd_off[f.n]);
  f.bwd_w.resize(f.bwd_off[f.n]);
  std::vector<std::size_t> fpos(f.fwd_off.begin(), f.fwd_off.end() - 1);
  std::vector<std::size_t> bpos(f.bwd_off.begin(), f.bwd_off.end() - 1);
  for (VertexId u = 0; u < f.n; ++u) {
    // Sorted neighbor order keeps every traversal independent of hash layout.
    std::vector<std::pair<VertexId, Weight>> nb(g.out(u).begin(), g.out(u).end());
    std::sort(nb.begin(), nb.end());
    for (const auto& [v, w] : nb) {
      if (g.is_hop(u, v, w)) continue;
      f.fwd_to[fpos[u]] = v;
      f.fwd_w[fpos[u]++] = w;
      f.bwd_to[bpos[v]] = u;
      f.bwd_w[bpos[v]++] = w;
    }
  }
  std::sort(f.hops.begin(), f.hops.end(),
            [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return f;
}

std::vector<Arc> stray_negative_edges(const Digraph& g) {
  std::vector<Arc> bad;
  for (VertexId u = 0; u < g.size(); ++u)
    for (const auto& [v, w] : g.out(u))
      if (w < 0 && !g.designated(u, v)) bad.push_back(Arc{u, v, w});
  std::sort(bad.begin(), bad.end(),
            [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return bad;
}

}  // namespace nwsp
