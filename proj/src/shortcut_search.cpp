#include <algorithm>
#include <map>
#include <set>

#include "nwsp/shortcut.hpp"

namespace nwsp {

Crossing threshold_crossing_index(const AList& sorted, Weight shift) {
  const std::size_t k = sorted.size();
  // First position whose weight + shift is negative; weights are non-increasing.
  auto it = std::partition_point(sorted.begin(), sorted.end(),
                                 [&](const auto& e) { return e.second + shift >= 0; });
  std::size_t j = it == sorted.end() ? k : static_cast<std::size_t>(it - sorted.begin()) + 1;
  return {j, ceil_log2(k - j + 1)};
}

namespace {

Weight live(const Digraph& g, VertexId u, VertexId v) {
  Dist w = g.weight(u, v);
  if (!w)
    throw InvariantError("missing edge " + std::to_string(u) + "->" + std::to_string(v));
  return *w;
}

// Level buckets S_0..S_t with a lazily initialised d map.
class Buckets {
 public:
  explicit Buckets(int t) : s_(t + 1) {}
  void offer(const Digraph& g, VertexId v, Weight d) {
    auto [pos, fresh] = d_.try_emplace(v, d);
    if (!fresh) {
      if (d < pos->second) pos->second = d;
      return;
    }
    int l = g.meta(v).level;
    if (l < 0 || l >= static_cast<int>(s_.size())) throw InvariantError("vertex level out of range");
    if (l >= current_) throw InvariantError("search inserted a vertex at a non-lower level");
    s_[l].push_back(v);
  }
  template <class F>
  void run(F&& process) {
    for (int l = static_cast<int>(s_.size()) - 1; l >= 0; --l) {
      current_ = l;
      std::sort(s_[l].begin(), s_[l].end());
      // process() only inserts at levels below l, so s_[l] is stable here.
      for (VertexId v : s_[l]) {
        if (!done_.insert(v).second) throw InvariantError("vertex processed twice");
        process(v, d_.at(v));
      }
    }
  }

 private:
  std::vector<std::vector<VertexId>> s_;
  std::map<VertexId, Weight> d_;
  std::set<VertexId> done_;
  int current_ = 1 << 30;
};

}  // namespace

void shortcut_in(SolverState& s, IterationContext& it, const Threshold& th) {
  Digraph& g = s.g;
  const Weight delta = th.delta;
  const VertexId hub = th.hub;
  Buckets b(it.t);
  for (const auto& [v, d] : th.uin.members) b.offer(g, v, d);
  b.run([&](VertexId v, Weight dv) {
    const VertexMeta m = g.meta(v);
    if (m.kind == VertexKind::InSteiner) {
      b.offer(g, m.parent, dv - live(g, v, m.parent));
      return;
    }
    if (m.kind == VertexKind::OutSteiner) {
      Weight w = live(g, m.parent, v) + dv - delta;
      if (w >= 0) add_edge_in(s, it, m.parent, hub, w);
    }
    const AList& a = it.ain[v];
    if (!m.heavy) {
      for (const auto& [u, w] : a)
        if (w + dv - delta >= 0) add_edge_in(s, it, u, hub, w + dv - delta);
      return;
    }
    const std::size_t k = a.size();
    if (k == 0) return;
    Crossing cr = threshold_crossing_index(a, dv - delta);
    if (cr.level <= ceil_log2(k) - 1) {
      VertexId vl = it.in_gadget[v] + cr.level;
      add_edge_in(s, it, vl, hub, live(g, vl, v) + dv - delta);
    }
    std::size_t lo = (std::size_t{1} << cr.level) >= k ? 1 : k - (std::size_t{1} << cr.level) + 1;
    for (std::size_t i = lo; i <= k; ++i) {
      auto [u, w] = a[i - 1];
      const VertexMeta& mu = g.meta(u);
      if (mu.kind == VertexKind::InSteiner && !mu.heavy) {
        Weight x = w + dv - live(g, u, mu.parent);
        if (x < delta) b.offer(g, mu.parent, x);
      } else if (w + dv - delta >= 0) {
        add_edge_in(s, it, u, hub, w + dv - delta);
      }
    }
  });
}

void shortcut_out(SolverState& s, IterationContext& it, const Threshold& th) {
  Digraph& g = s.g;
  const Weight delta = th.delta;
  const VertexId hub = th.hub;
  Buckets b(it.t);
  for (const auto& [v, d] : th.uout.members) b.offer(g, v, d);
  b.run([&](VertexId v, Weight dv) {
    const VertexMeta m = g.meta(v);
    if (m.kind == VertexKind::OutSteiner) {
      b.offer(g, m.parent, dv - live(g, m.parent, v));
      return;
    }
    if (m.kind == VertexKind::InSteiner) {
      Weight w = dv + live(g, v, m.parent) + delta;
      if (w >= 0) add_edge_out(s, it, hub, m.parent, w);
    }
    const AList& a = it.aout[v];
    if (!m.heavy) {
      for (const auto& [u, w] : a)
        if (dv + w + delta >= 0) add_edge_out(s, it, hub, u, dv + w + delta);
      return;
    }
    const std::size_t k = a.size();
    if (k == 0) return;
    Crossing cr = threshold_crossing_index(a, dv + delta);
    if (cr.level <= ceil_log2(k) - 1) {
      VertexId vl = it.out_gadget[v] + cr.level;
      add_edge_out(s, it, hub, vl, dv + live(g, v, vl) + delta);
    }
    std::size_t lo = (std::size_t{1} << cr.level) >= k ? 1 : k - (std::size_t{1} << cr.level) + 1;
    for (std::size_t i = lo; i <= k; ++i) {
      auto [u, w] = a[i - 1];
      const VertexMeta& mu = g.meta(u);
      if (mu.kind == VertexKind::OutSteiner && !mu.heavy) {
        Weight x = dv + w - live(g, mu.parent, u);
        if (x < -delta) b.offer(g, mu.parent, x);
      } else if (dv + w + delta >= 0) {
        add_edge_out(s, it, hub, u, dv + w + delta);
      }
    }
  });
}

}  // namespace nwsp
