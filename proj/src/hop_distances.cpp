#include "nwsp/hop_distances.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace nwsp {
namespace {

// Label = (distance, tie-break source). The plain variant keeps src = 0 everywhere.
struct Labels {
  std::vector<Weight> d;
  std::vector<VertexId> src;
  std::vector<char> has;
  explicit Labels(VertexId n) : d(n, 0), src(n, 0), has(n, 0) {}
  bool better(VertexId v, Weight nd, VertexId ns) const {
    return !has[v] || std::tie(nd, ns) < std::tie(d[v], src[v]);
  }
  void set(VertexId v, Weight nd, VertexId ns) {
    d[v] = nd;
    src[v] = ns;
    has[v] = 1;
  }
};

// Indexed 4-ary min-heap on (d, src) with decrease-key.
class Heap {
 public:
  explicit Heap(VertexId n) : pos_(n, -1) {}
  bool empty() const { return h_.empty(); }
  void push_or_decrease(VertexId v, const Labels& lab) {
    if (pos_[v] < 0) {
      pos_[v] = static_cast<int>(h_.size());
      h_.push_back(v);
    }
    up(pos_[v], lab);
  }
  VertexId pop(const Labels& lab) {
    VertexId top = h_[0];
    pos_[top] = -1;
    VertexId last = h_.back();
    h_.pop_back();
    if (!h_.empty()) {
      h_[0] = last;
      pos_[last] = 0;
      down(0, lab);
    }
    return top;
  }

 private:
  static bool lt(const Labels& lab, VertexId a, VertexId b) {
    return lab.d[a] != lab.d[b] ? lab.d[a] < lab.d[b] : lab.src[a] < lab.src[b];
  }
  void place(int i, VertexId v) {
    h_[i] = v;
    pos_[v] = i;
  }
  void up(int i, const Labels& lab) {
    VertexId v = h_[i];
    while (i > 0) {
      int p = (i - 1) / 4;
      if (!lt(lab, v, h_[p])) break;
      place(i, h_[p]);
      i = p;
    }
    place(i, v);
  }
  void down(int i, const Labels& lab) {
    VertexId v = h_[i];
    const int n = static_cast<int>(h_.size());
    for (;;) {
      int c = 4 * i + 1;
      if (c >= n) break;
      int best = c;
      for (int k = c + 1; k < std::min(c + 4, n); ++k)
        if (lt(lab, h_[k], h_[best])) best = k;
      if (!lt(lab, h_[best], v)) break;
      place(i, h_[best]);
      i = best;
    }
    place(i, v);
  }
  std::vector<VertexId> h_;
  std::vector<int> pos_;
};

// Vertices whose labels must be final when a round ends. Without a watch set
// every round runs until the heap is empty.
struct Watch {
  std::vector<char> is, dirty;
  int ndirty = 0, unlabeled = 0;
  bool active = false;
  void labelled(VertexId v, bool had) {
    if (!active || !is[v]) return;
    if (!had) --unlabeled;
    if (!dirty[v]) {
      dirty[v] = 1;
      ++ndirty;
    }
  }
  void settled(VertexId v) {
    if (active && dirty[v]) {
      dirty[v] = 0;
      --ndirty;
    }
  }
  bool done() const { return active && ndirty == 0 && unlabeled == 0; }
};

// Resumable: vertices left in the heap keep their place for the next round, so
// stopping early never loses a label that still has to be propagated.
void dijkstra(const FrozenGraph& g, Direction dir, Labels& lab, Heap& pq, Watch& w,
              std::uint64_t* relax) {
  const auto& off = dir == Direction::Forward ? g.fwd_off : g.bwd_off;
  const auto& to = dir == Direction::Forward ? g.fwd_to : g.bwd_to;
  const auto& wt = dir == Direction::Forward ? g.fwd_w : g.bwd_w;
  std::uint64_t scanned = 0;
  while (!pq.empty() && !w.done()) {
    VertexId u = pq.pop(lab);
    w.settled(u);
    const Weight d = lab.d[u];
    const VertexId s = lab.src[u];
    scanned += off[u + 1] - off[u];
    for (std::size_t e = off[u]; e < off[u + 1]; ++e) {
      VertexId v = to[e];
      Weight nd = d + wt[e];
      if (lab.better(v, nd, s)) {
        bool had = lab.has[v];
        lab.set(v, nd, s);
        w.labelled(v, had);
        pq.push_or_decrease(v, lab);
      }
    }
  }
  if (relax) *relax += scanned;
}

// h+1 Dijkstra rounds interleaved with h single relaxations over the hop edges.
// Stops early once a relaxation changes nothing. `readout`, when given, lists the
// only vertices (besides hop tails) whose final labels the caller needs.
int run_rounds(const FrozenGraph& g, Direction dir, Labels& lab, const std::vector<VertexId>& start,
               int h, bool& stable, std::uint64_t* relax,
               const std::vector<VertexId>* readout = nullptr) {
  Heap pq(g.n);
  Watch w;
  if (readout) {
    w.active = true;
    w.is.assign(g.n, 0);
    w.dirty.assign(g.n, 0);
    auto watch = [&](VertexId v) {
      if (w.is[v]) return;
      w.is[v] = 1;
      if (!lab.has[v]) ++w.unlabeled;
    };
    for (VertexId v : *readout) watch(v);
    for (const Arc& a : g.hops) watch(dir == Direction::Forward ? a.from : a.to);
    for (VertexId v : start)
      if (w.is[v] && lab.has[v] && !w.dirty[v]) {
        w.dirty[v] = 1;
        ++w.ndirty;
      }
  }
  for (VertexId v : start) pq.push_or_decrease(v, lab);
  dijkstra(g, dir, lab, pq, w, relax);
  stable = false;
  int used = 0;
  std::vector<std::tuple<VertexId, Weight, VertexId>> cand;
  for (int i = 0; i <= h; ++i) {
    cand.clear();
    for (const Arc& a : g.hops) {
      VertexId x = dir == Direction::Forward ? a.from : a.to;
      VertexId y = dir == Direction::Forward ? a.to : a.from;
      if (!lab.has[x]) continue;
      Weight nd = lab.d[x] + a.w;
      if (lab.better(y, nd, lab.src[x])) cand.emplace_back(y, nd, lab.src[x]);
    }
    if (relax) *relax += g.hops.size();
    if (cand.empty()) {
      stable = true;
      break;
    }
    if (i == h) break;  // the probe above only tells whether hop h+1 would help
    for (const auto& [y, nd, s] : cand) {
      if (lab.better(y, nd, s)) {
        bool had = lab.has[y];
        lab.set(y, nd, s);
        w.labelled(y, had);
        pq.push_or_decrease(y, lab);
      }
    }
    ++used;
    dijkstra(g, dir, lab, pq, w, relax);
  }
  return used;
}

}  // namespace

HopResult hop_sssp(const FrozenGraph& g, const std::vector<std::pair<VertexId, Weight>>& seeds, int h,
                   Direction dir, std::uint64_t* relaxations) {
  Labels lab(g.n);
  std::vector<VertexId> start;
  for (const auto& [v, off] : seeds) {
    if (lab.better(v, off, 0)) lab.set(v, off, 0);
    start.push_back(v);
  }
  HopResult res;
  res.relax_rounds = run_rounds(g, dir, lab, start, h, res.stable, relaxations);
  res.dist.resize(g.n);
  for (VertexId v = 0; v < g.n; ++v)
    if (lab.has[v]) res.dist[v] = lab.d[v];
  return res;
}

HopResult hop_sssp(const FrozenGraph& g, VertexId source, int h, Direction dir,
                   std::uint64_t* relaxations) {
  return hop_sssp(g, {{source, 0}}, h, dir, relaxations);
}

std::vector<ExtDist> hop_sssp_extended(const FrozenGraph& g, const std::vector<VertexId>& sources,
                                       int h, Direction dir, std::uint64_t* relaxations,
                                       const std::vector<VertexId>* readout) {
  Labels lab(g.n);
  for (VertexId u : sources)
    if (lab.better(u, 0, u)) lab.set(u, 0, u);
  bool stable = false;
  run_rounds(g, dir, lab, sources, h, stable, relaxations, readout);
  std::vector<ExtDist> out(g.n);
  if (sources.empty()) return out;
  const VertexId first = *std::min_element(sources.begin(), sources.end());
  for (VertexId v = 0; v < g.n; ++v) {
    const bool inf = !lab.has[v];
    const Weight d = inf ? 0 : lab.d[v];
    const VertexId u = inf ? first : lab.src[v];
    if (dir == Direction::Forward)
      out[v] = ExtendedDistance{inf, d, u, v};
    else
      out[v] = ExtendedDistance{inf, d, v, u};
  }
  return out;
}

namespace {

Ball bounded_search(const FrozenGraph& g, Direction dir,
                    const std::vector<std::pair<VertexId, Weight>>& seeds, Weight limit,
                    BallScratch& s, std::uint64_t* relax) {
  if (static_cast<VertexId>(s.dist_.size()) < g.n) s.resize(g.n);
  s.reset();
  const auto& off = dir == Direction::Forward ? g.fwd_off : g.bwd_off;
  const auto& to = dir == Direction::Forward ? g.fwd_to : g.bwd_to;
  const auto& wt = dir == Direction::Forward ? g.fwd_w : g.bwd_w;
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  auto offer = [&](VertexId v, Weight d) {
    if (!s.seen_[v]) {
      s.seen_[v] = 1;
      s.touched_.push_back(v);
      s.dist_[v] = d;
      pq.emplace(d, v);
    } else if (!s.done_[v] && d < s.dist_[v]) {
      s.dist_[v] = d;
      pq.emplace(d, v);
    }
  };
  for (const auto& [v, d] : seeds) offer(v, d);
  Ball ball;
  std::uint64_t scanned = 0;
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    if (d >= limit) break;  // strict sublevel set
    pq.pop();
    if (s.done_[u] || d != s.dist_[u]) continue;
    s.done_[u] = 1;
    ball.members.emplace_back(u, d);
    for (std::size_t e = off[u]; e < off[u + 1]; ++e) {
      ++scanned;
      offer(to[e], d + wt[e]);
    }
  }
  if (relax) *relax += scanned;
  std::sort(ball.members.begin(), ball.members.end());
  return ball;
}

}  // namespace

Ball bounded_ball_in(const FrozenGraph& g, VertexId r, Weight delta, BallScratch& s,
                     std::uint64_t* relaxations) {
  return bounded_search(g, Direction::Backward, {{r, 0}}, delta, s, relaxations);
}

Ball bounded_ball_out(const FrozenGraph& g, VertexId r, VertexId rbar, Weight w_rrbar, Weight delta,
                      BallScratch& s, std::uint64_t* relaxations) {
  return bounded_search(g, Direction::Forward, {{r, 0}, {rbar, w_rrbar}}, -delta, s, relaxations);
}

}  // namespace nwsp
