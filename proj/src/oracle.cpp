#include "nwsp/oracle.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>
#include <cmath>
#include <random>
#include <stdexcept>

namespace nwsp::oracle {

namespace {

bool relax(std::vector<Dist>& d, VertexId a, VertexId b, Weight w) {
  if (!d[a]) return false;
  Weight nd = *d[a] + w;
  if (!d[b] || nd < *d[b]) {
    d[b] = nd;
    return true;
  }
  return false;
}

}  // namespace

BFResult bellman_ford(const InputGraph& h, VertexId s) {
  BFResult r;
  r.dist.assign(h.n, std::nullopt);
  r.dist[s] = 0;
  for (VertexId round = 0; round < h.n; ++round) {
    bool changed = false;
    for (const Arc& a : h.arcs) changed |= relax(r.dist, a.from, a.to, a.w);
    if (!changed) return r;
  }
  for (const Arc& a : h.arcs)
    if (r.dist[a.from] && *r.dist[a.from] + a.w < *r.dist[a.to]) r.cycle = true;
  return r;
}

bool has_negative_cycle(const InputGraph& h) {
  const VertexId n = h.n;
  std::vector<std::vector<Dist>> d(n, std::vector<Dist>(n));
  for (VertexId v = 0; v < n; ++v) d[v][v] = 0;
  for (const Arc& a : h.arcs)
    if (!d[a.from][a.to] || a.w < *d[a.from][a.to]) d[a.from][a.to] = a.w;
  for (VertexId k = 0; k < n; ++k)
    for (VertexId i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (VertexId j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        Weight x = *d[i][k] + *d[k][j];
        if (!d[i][j] || x < *d[i][j]) d[i][j] = x;
      }
      if (*d[i][i] < 0) return true;
    }
  return false;
}

ArcGraph arcs_of(const Digraph& g) {
  ArcGraph a;
  a.n = g.size();
  a.off.assign(a.n + 1, 0);
  for (VertexId u = 0; u < a.n; ++u) {
    a.off[u] = a.arcs.size();
    std::vector<std::pair<VertexId, Weight>> nb(g.out(u).begin(), g.out(u).end());
    std::sort(nb.begin(), nb.end());
    for (const auto& [v, w] : nb) {
      a.arcs.push_back(Arc{u, v, w});
      a.hop.push_back(g.is_hop(u, v, w) ? 1 : 0);
    }
  }
  a.off[a.n] = a.arcs.size();
  return a;
}

std::optional<std::vector<Weight>> spfa_potential(const ArcGraph& g) {
  std::vector<Weight> d(g.n, 0);
  std::vector<int> count(g.n, 0);
  std::vector<char> queued(g.n, 1);
  std::deque<VertexId> q;
  for (VertexId v = 0; v < g.n; ++v) q.push_back(v);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    queued[u] = 0;
    if (++count[u] > g.n + 1) return std::nullopt;
    for (std::size_t i = g.off[u]; i < g.off[u + 1]; ++i) {
      const Arc& a = g.arcs[i];
      if (d[u] + a.w < d[a.to]) {
        d[a.to] = d[u] + a.w;
        if (!queued[a.to]) {
          queued[a.to] = 1;
          q.push_back(a.to);
        }
      }
    }
  }
  return d;
}

HopDist lex_dijkstra(const ArcGraph& g, const std::vector<Weight>& pot, VertexId s, bool zero_hop) {
  auto p = [&](VertexId v) { return pot.empty() ? Weight{0} : pot[v]; };
  HopDist r;
  r.d.assign(g.n, std::nullopt);
  r.hops.assign(g.n, -1);
  std::vector<Weight> red(g.n, 0);
  std::vector<char> done(g.n, 0);
  using Key = std::tuple<Weight, int, VertexId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> pq;
  red[s] = 0;
  r.hops[s] = 0;
  r.d[s] = 0;
  pq.emplace(0, 0, s);
  while (!pq.empty()) {
    auto [d, h, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (std::size_t i = g.off[u]; i < g.off[u + 1]; ++i) {
      if (zero_hop && g.hop[i]) continue;
      const Arc& a = g.arcs[i];
      Weight nw = a.w + p(u) - p(a.to);
      if (nw < 0) throw std::logic_error("lex_dijkstra: negative reduced weight");
      Weight nd = d + nw;
      int nh = h + (g.hop[i] ? 1 : 0);
      VertexId v = a.to;
      if (done[v]) continue;
      if (!r.d[v] || std::tie(nd, nh) < std::tie(red[v], r.hops[v])) {
        red[v] = nd;
        r.hops[v] = nh;
        r.d[v] = nd;
        pq.emplace(nd, nh, v);
      }
    }
  }
  for (VertexId v = 0; v < g.n; ++v)
    if (r.d[v]) r.d[v] = red[v] - p(s) + p(v);
  return r;
}

std::vector<Dist> distances_from(const ArcGraph& g, VertexId s) {
  std::vector<Dist> d(g.n);
  d[s] = 0;
  for (VertexId round = 0; round < g.n; ++round) {
    bool changed = false;
    for (const Arc& a : g.arcs) changed |= relax(d, a.from, a.to, a.w);
    if (!changed) break;
  }
  return d;
}

namespace {

std::vector<std::vector<Dist>> layers(const ArcGraph& g, VertexId s, int h, bool reverse) {
  auto from = [&](const Arc& a) { return reverse ? a.to : a.from; };
  auto to = [&](const Arc& a) { return reverse ? a.from : a.to; };
  auto close = [&](std::vector<Dist>& d) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < g.arcs.size(); ++i)
        if (!g.hop[i]) changed |= relax(d, from(g.arcs[i]), to(g.arcs[i]), g.arcs[i].w);
    }
  };
  std::vector<std::vector<Dist>> out;
  std::vector<Dist> d(g.n);
  d[s] = 0;
  close(d);
  out.push_back(d);
  for (int k = 1; k <= h; ++k) {
    std::vector<Dist> nd = out.back();
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
      if (!g.hop[i]) continue;
      const Arc& a = g.arcs[i];
      const Dist& src = out.back()[from(a)];
      if (src && (!nd[to(a)] || *src + a.w < *nd[to(a)])) nd[to(a)] = *src + a.w;
    }
    close(nd);
    out.push_back(std::move(nd));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Dist>> hop_layers(const ArcGraph& g, VertexId s, int h) {
  return layers(g, s, h, false);
}

std::vector<std::vector<Dist>> hop_layers_to(const ArcGraph& g, VertexId t, int h) {
  return layers(g, t, h, true);
}

std::vector<int> min_hops(const ArcGraph& g, VertexId s, int max_h) {
  std::vector<Dist> d = distances_from(g, s);
  auto lay = hop_layers(g, s, max_h);
  std::vector<int> out(g.n, -1);
  for (VertexId v = 0; v < g.n; ++v) {
    if (!d[v]) continue;
    out[v] = max_h + 1;
    for (int k = 0; k <= max_h; ++k)
      if (lay[k][v] == d[v]) {
        out[v] = k;
        break;
      }
  }
  return out;
}

std::vector<std::vector<int>> betweenness_dp(const ArcGraph& g, const std::vector<VertexId>& negs,
                                             int h) {
  std::vector<std::vector<Dist>> dh(g.n);
  for (VertexId u = 0; u < g.n; ++u) dh[u] = hop_layers(g, u, h).back();
  std::vector<std::vector<int>> cnt(g.n, std::vector<int>(g.n, 0));
  for (VertexId u = 0; u < g.n; ++u)
    for (VertexId v = 0; v < g.n; ++v)
      for (VertexId r : negs)
        if (dh[u][r] && dh[r][v] && *dh[u][r] + *dh[r][v] < 0) ++cnt[u][v];
  return cnt;
}

std::vector<std::vector<int>> betweenness_minplus(const ArcGraph& g,
                                                  const std::vector<VertexId>& negs, int h) {
  using Mat = std::vector<std::vector<Dist>>;
  const VertexId n = g.n;
  auto mul = [n](const Mat& a, const Mat& b) {
    Mat c(n, std::vector<Dist>(n));
    for (VertexId i = 0; i < n; ++i)
      for (VertexId k = 0; k < n; ++k) {
        if (!a[i][k]) continue;
        for (VertexId j = 0; j < n; ++j) {
          if (!b[k][j]) continue;
          Weight x = *a[i][k] + *b[k][j];
          if (!c[i][j] || x < *c[i][j]) c[i][j] = x;
        }
      }
    return c;
  };
  Mat zero(n, std::vector<Dist>(n)), hop(n, std::vector<Dist>(n));
  for (VertexId v = 0; v < n; ++v) zero[v][v] = 0;
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const Arc& a = g.arcs[i];
    Mat& m = g.hop[i] ? hop : zero;
    if (!m[a.from][a.to] || a.w < *m[a.from][a.to]) m[a.from][a.to] = a.w;
  }
  // Transitive closure of the hop-free part (all its weights are nonnegative).
  for (VertexId k = 0; k < n; ++k)
    for (VertexId i = 0; i < n; ++i) {
      if (!zero[i][k]) continue;
      for (VertexId j = 0; j < n; ++j)
        if (zero[k][j] && (!zero[i][j] || *zero[i][k] + *zero[k][j] < *zero[i][j]))
          zero[i][j] = *zero[i][k] + *zero[k][j];
    }
  Mat best = zero, cur = zero;
  for (int i = 1; i <= h; ++i) {
    cur = mul(mul(cur, hop), zero);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = 0; b < n; ++b)
        if (cur[a][b] && (!best[a][b] || *cur[a][b] < *best[a][b])) best[a][b] = cur[a][b];
  }
  std::vector<std::vector<int>> cnt(n, std::vector<int>(n, 0));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      for (VertexId r : negs)
        if (best[u][r] && best[r][v] && *best[u][r] + *best[r][v] < 0) ++cnt[u][v];
  return cnt;
}

Family family_from_string(const std::string& s) {
  if (s == "erdos") return Family::Erdos;
  if (s == "path") return Family::Path;
  if (s == "grid") return Family::Grid;
  if (s == "layered") return Family::Layered;
  if (s == "planted-cycle") return Family::PlantedCycle;
  throw std::invalid_argument("unknown family: " + s);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Erdos: return "erdos";
    case Family::Path: return "path";
    case Family::Grid: return "grid";
    case Family::Layered: return "layered";
    case Family::PlantedCycle: return "planted-cycle";
  }
  return "?";
}

namespace {

// Draws weights that stay nonnegative under the hidden potential pi, so the
// result has no negative cycle.
class WeightDrawer {
 public:
  WeightDrawer(const GraphSpec& spec, std::mt19937_64& rng) : spec_(spec), rng_(rng) {
    std::uniform_int_distribution<Weight> pd(0, std::max<Weight>(1, -spec.lo + 4));
    pi_.resize(spec.n);
    for (auto& x : pi_) x = pd(rng_);
  }
  std::optional<Weight> draw(VertexId u, VertexId v) {
    Weight wmin = std::max(spec_.lo, pi_[v] - pi_[u]);
    if (wmin > spec_.hi) return std::nullopt;
    std::bernoulli_distribution neg(spec_.neg_fraction);
    if (wmin < 0 && neg(rng_)) return std::uniform_int_distribution<Weight>(wmin, -1)(rng_);
    return std::uniform_int_distribution<Weight>(std::max<Weight>(wmin, 0), spec_.hi)(rng_);
  }

 private:
  const GraphSpec& spec_;
  std::mt19937_64& rng_;
  std::vector<Weight> pi_;
};

void add(InputGraph& g, WeightDrawer& wd, VertexId u, VertexId v) {
  if (u == v) return;
  if (auto w = wd.draw(u, v)) g.arcs.push_back(Arc{u, v, *w});
}

}  // namespace

InputGraph generate(const GraphSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  InputGraph g;
  g.n = spec.n;
  WeightDrawer wd(spec, rng);
  std::bernoulli_distribution coin(std::clamp(spec.p, 0.0, 1.0));
  const VertexId n = spec.n;
  switch (spec.family) {
    case Family::Erdos:
    case Family::PlantedCycle:
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
          if (u != v && coin(rng)) add(g, wd, u, v);
      break;
    case Family::Path:
      for (VertexId u = 0; u + 1 < n; ++u) add(g, wd, u, u + 1);
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
          if (u != v && std::bernoulli_distribution(spec.p / 4)(rng)) add(g, wd, u, v);
      break;
    case Family::Grid: {
      VertexId side = static_cast<VertexId>(std::ceil(std::sqrt(static_cast<double>(n))));
      for (VertexId u = 0; u < n; ++u) {
        VertexId right = (u % side + 1 < side) ? u + 1 : n;
        VertexId down = u + side;
        if (right < n) add(g, wd, u, right);
        if (down < n) add(g, wd, u, down);
        if (right < n && coin(rng)) add(g, wd, right, u);
        if (down < n && coin(rng)) add(g, wd, down, u);
      }
      break;
    }
    case Family::Layered: {
      VertexId width = std::max<VertexId>(2, static_cast<VertexId>(std::lround(std::sqrt(n))));
      std::bernoulli_distribution link(std::max(spec.p, 0.5));
      for (VertexId u = 0; u < n; ++u) {
        VertexId layer = u / width;
        VertexId lo = (layer + 1) * width, hi = std::min(n, lo + width);
        bool any = false;
        for (VertexId v = lo; v < hi; ++v)
          if (link(rng)) {
            add(g, wd, u, v);
            any = true;
          }
        if (!any && lo < hi) add(g, wd, u, lo + static_cast<VertexId>(rng() % (hi - lo)));
      }
      break;
    }
  }
  if (spec.family == Family::PlantedCycle) {
    VertexId len = std::min<VertexId>(n, 2 + static_cast<VertexId>(rng() % 4));
    std::vector<VertexId> perm(n);
    for (VertexId i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    perm.resize(len);
    Weight target = -1 - static_cast<Weight>(rng() % 3);
    std::vector<Weight> w(len, 0);
    bool ok = false;
    std::uniform_int_distribution<Weight> wd2(spec.lo, spec.hi);
    for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
      Weight sum = 0;
      for (VertexId i = 0; i + 1 < len; ++i) sum += (w[i] = wd2(rng));
      w[len - 1] = target - sum;
      ok = w[len - 1] >= spec.lo && w[len - 1] <= spec.hi;
    }
    if (!ok) {
      for (VertexId i = 0; i + 1 < len; ++i) w[i] = -2;
      w[len - 1] = target + 2 * (len - 1);
      if (w[len - 1] > spec.hi) throw std::invalid_argument("cannot plant a cycle in this range");
    }
    for (VertexId i = 0; i < len; ++i) g.arcs.push_back(Arc{perm[i], perm[(i + 1) % len], w[i]});
    if (std::find(perm.begin(), perm.end(), 0) == perm.end())
      g.arcs.push_back(Arc{0, perm[0], std::max<Weight>(0, spec.lo)});
  }
  return g;
}

}  // namespace nwsp::oracle
