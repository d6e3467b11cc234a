#include "nwsp/invariants.hpp"

#include <sstream>

namespace nwsp {

namespace {

using K = VertexKind;

std::string e2s(VertexId u, VertexId v) { return std::to_string(u) + "->" + std::to_string(v); }

bool has_out(const Digraph& g, VertexId u, VertexId v) { return g.out(u).count(v) > 0; }

Dist deferred_weight(const SolverState& s, const DeferredSet& f, VertexId u, VertexId v) {
  std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
                      static_cast<std::uint32_t>(v);
  auto it = f.index.find(key);
  if (it == f.index.end()) return std::nullopt;
  const DeferredEdge& e = f.items[it->second];
  return e.w + (s.phi[u] - e.phi_u) - (s.phi[v] - e.phi_v);
}

bool at_most(Dist have, Weight bound) { return have && *have <= bound; }

class Scanner {
 public:
  Scanner(const SolverState& s, const IterationContext& it) : s_(s), g_(s.g), it_(it) {}

  void in_steiner(VertexId v) {
    const VertexMeta& m = g_.meta(v);
    const VertexId p = m.parent;
    Dist vp_d = g_.edge(v, p);
    if (!vp_d) return fail("in.parent_edge", e2s(v, p));
    const Weight vp = *vp_d;

    for (const auto& [u, w] : g_.in(v))
      if (!at_most(g_.weight(u, p), w + vp)) fail("in.a", e2s(u, v));

    std::size_t steiner_out = 0;
    for (const auto& [u, w] : g_.out(v)) {
      if (u == p) continue;
      const VertexMeta& mu = g_.meta(u);
      bool ok = false;
      if (mu.kind == K::OutSteiner && mu.parent == v) ok = true;
      if (g_.in_n(u) || mu.kind == K::NSteiner) ok = true;
      if (mu.kind == K::InSteiner && has_out(g_, v, mu.parent) &&
          (g_.in_n(mu.parent) || g_.meta(mu.parent).kind == K::NSteiner))
        ok = true;
      if (!ok) fail("in.b", e2s(v, u));

      if (g_.in_n(u) && !at_most(g_.weight(p, u), w - vp)) fail("in.c.negative", e2s(v, u));
      if (mu.kind == K::NSteiner) {
        if (!at_most(deferred_weight(s_, s_.f_in, p, u), w - vp)) fail("in.c.deferred", e2s(v, u));
        // w(r, hub) sits on r-bar once Step 11 has run, hence the lifted weight.
        Dist r_hub = g_.weight(mu.parent, u);
        if (!r_hub || !at_most(g_.weight(p, mu.parent), w - *r_hub - vp))
          fail("in.c.hub", e2s(v, u));
      }

      bool fresh_hub = mu.kind == K::NSteiner && mu.level == m.level;
      if (m.level == it_.t && !fresh_hub) fail("in.fresh", e2s(v, u));
      if (fresh_hub) ++steiner_out;
      if (!m.heavy) {
        bool lok = fresh_hub;
        if (mu.kind == K::InSteiner) {
          const VertexMeta& mp = g_.meta(mu.parent);
          lok = mp.kind == K::NSteiner && mp.level == m.level && has_out(g_, v, mu.parent);
        }
        if (!lok) fail("in.light", e2s(v, u));
      }
    }
    if (!m.heavy && m.level == it_.t && static_cast<double>(steiner_out) > it_.lambda)
      fail("in.light.size", std::to_string(v));
  }

  void out_steiner(VertexId v) {
    const VertexMeta& m = g_.meta(v);
    const VertexId p = m.parent;
    Dist pv_d = g_.weight(p, v);
    if (!pv_d) return fail("out.parent_edge", e2s(p, v));
    const Weight pv = *pv_d;

    for (const auto& [u, w] : g_.out(v))
      if (!at_most(g_.weight(p, u), pv + w)) fail("out.a", e2s(v, u));

    std::size_t steiner_in = 0;
    for (const auto& [u, w0] : g_.in(v)) {
      if (u == p) continue;
      const Weight w = *g_.weight(u, v);
      const VertexMeta& mu = g_.meta(u);
      bool ok = false;
      if (mu.kind == K::InSteiner && mu.parent == v) ok = true;
      if (g_.in_nbar(u) || mu.kind == K::NSteiner) ok = true;
      if (mu.kind == K::OutSteiner && has_out(g_, mu.parent, v) &&
          (g_.in_nbar(mu.parent) || g_.meta(mu.parent).kind == K::NSteiner))
        ok = true;
      if (!ok) fail("out.b", e2s(u, v));

      if (g_.in_nbar(u) && !at_most(g_.weight(u, p), w - pv)) fail("out.c.negative", e2s(u, v));
      if (mu.kind == K::NSteiner) {
        if (!at_most(deferred_weight(s_, s_.f_out, u, p), w - pv)) fail("out.c.deferred", e2s(u, v));
        Dist hub_r = g_.edge(u, mu.parent);
        if (!hub_r || !at_most(g_.weight(mu.parent, p), w - *hub_r - pv))
          fail("out.c.hub", e2s(u, v));
      }

      bool fresh_hub = mu.kind == K::NSteiner && mu.level == m.level;
      if (m.level == it_.t && !fresh_hub) fail("out.fresh", e2s(u, v));
      if (fresh_hub) ++steiner_in;
      if (!m.heavy) {
        bool lok = fresh_hub;
        if (mu.kind == K::OutSteiner) {
          const VertexMeta& mp = g_.meta(mu.parent);
          lok = mp.kind == K::NSteiner && mp.level == m.level && has_out(g_, mu.parent, v);
        }
        if (!lok) fail("out.light", e2s(u, v));
      }
    }
    if (!m.heavy && m.level == it_.t && static_cast<double>(steiner_in) > it_.lambda)
      fail("out.light.size", std::to_string(v));
  }

  std::vector<Violation> take() { return std::move(out_); }

 private:
  void fail(const char* check, std::string detail) { out_.push_back({check, std::move(detail)}); }

  const SolverState& s_;
  const Digraph& g_;
  const IterationContext& it_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> scan_negative_incident(const Digraph& g) {
  std::vector<Violation> out;
  for (VertexId u = 0; u < g.size(); ++u)
    for (const auto& [v, w] : g.out(u))
      if (w < 0 && !g.in_n(u) && !g.in_n(v)) out.push_back({"negative_incident", e2s(u, v)});
  return out;
}

std::vector<Violation> scan_well_behaved(const Digraph& g) {
  std::vector<Violation> out;
  for (const Arc& a : stray_negative_edges(g))
    out.push_back({"wb.stray", e2s(a.from, a.to)});
  for (VertexId r : g.negatives()) {
    VertexId rb = g.partner(r);
    if (g.out(r).size() != 1 || !g.edge(r, rb)) {
      out.push_back({"wb.out_degree", std::to_string(r)});
      continue;
    }
    Dist back = g.edge(rb, r);
    if (!back || *back != -*g.edge(r, rb)) out.push_back({"wb.reverse", e2s(rb, r)});
    for (const auto& [u, w] : g.in(rb))
      if (u != r && w < 0) out.push_back({"wb.into_bar", e2s(u, rb)});
  }
  return out;
}

std::vector<Violation> scan_steiner(const SolverState& s, const IterationContext& it) {
  Scanner sc(s, it);
  for (VertexId v = 0; v < s.g.size(); ++v) {
    VertexKind k = s.g.meta(v).kind;
    if (k == VertexKind::InSteiner) sc.in_steiner(v);
    if (k == VertexKind::OutSteiner) sc.out_steiner(v);
  }
  return sc.take();
}

std::string format_violations(const std::vector<Violation>& v) {
  std::ostringstream os;
  for (const auto& x : v) os << x.check << ": " << x.detail << '\n';
  return os.str();
}

}  // namespace nwsp
