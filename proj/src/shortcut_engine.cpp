#include <algorithm>
#include <cmath>

#include "nwsp/shortcut.hpp"

namespace nwsp {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

Weight live(const Digraph& g, VertexId u, VertexId v) {
  Dist w = g.weight(u, v);
  if (!w)
    throw InvariantError("missing edge " + std::to_string(u) + "->" + std::to_string(v));
  return *w;
}

bool is_n_steiner(const Digraph& g, VertexId v) {
  return g.meta(v).kind == VertexKind::NSteiner;
}

void grow_phi(SolverState& s) { s.phi.resize(s.g.size(), 0); }

void add_edge_in_rec(SolverState& s, IterationContext& it, VertexId u, VertexId v, Weight w,
                     int depth);
void add_edge_out_rec(SolverState& s, IterationContext& it, VertexId u, VertexId v, Weight w,
                      int depth);

void note_call(IterationContext& it, int depth) {
  ++it.addedge_work;
  if (!it.ctr) return;
  ++it.ctr->addedge_calls;
  it.ctr->addedge_max_depth = std::max(it.ctr->addedge_max_depth, depth);
}

void add_edge_in_rec(SolverState& s, IterationContext& it, VertexId u, VertexId v, Weight w,
                     int depth) {
  Digraph& g = s.g;
  note_call(it, depth);
  const VertexMeta& mu = g.meta(u);
  if (mu.kind == VertexKind::InSteiner && !mu.heavy)
    throw InvariantError("AddEdgeIn from light in-Steiner " + std::to_string(u));
  if (!g.in_n(v) && !is_n_steiner(g, v))
    throw InvariantError("AddEdgeIn target is neither negative nor N-Steiner");
  g.insert_edge(u, v, w);
  if (mu.kind == VertexKind::InSteiner) {
    VertexId p = mu.parent;
    Weight up = live(g, u, p);
    if (g.in_n(v)) {
      add_edge_in_rec(s, it, p, v, w - up, depth + 1);
    } else {
      DeferredEdge e{p, v, w - up, s.phi[p], s.phi[v]};
      if (s.f_in.add(e) && it.ctr) ++it.ctr->deferred_in;
      if (w - up >= 0) add_edge_in_rec(s, it, p, v, w - up, depth + 1);
      VertexId pn = g.meta(v).parent;
      add_edge_in_rec(s, it, p, pn, w - live(g, pn, v) - up, depth + 1);
    }
  } else if (mu.kind == VertexKind::OutSteiner) {
    VertexId p = mu.parent;
    add_edge_in_rec(s, it, p, v, w + live(g, p, u), depth + 1);
  }
}

void add_edge_out_rec(SolverState& s, IterationContext& it, VertexId u, VertexId v, Weight w,
                      int depth) {
  Digraph& g = s.g;
  note_call(it, depth);
  const VertexMeta& mv = g.meta(v);
  if (mv.kind == VertexKind::OutSteiner && !mv.heavy)
    throw InvariantError("AddEdgeOut into light out-Steiner " + std::to_string(v));
  if (!g.in_n(u) && !is_n_steiner(g, u))
    throw InvariantError("AddEdgeOut source is neither negative nor N-Steiner");
  g.insert_edge(u, v, w);
  if (mv.kind == VertexKind::InSteiner) {
    VertexId p = mv.parent;
    add_edge_out_rec(s, it, u, p, w + live(g, v, p), depth + 1);
  } else if (mv.kind == VertexKind::OutSteiner) {
    VertexId p = mv.parent;
    Weight pv = live(g, p, v);
    if (g.in_n(u)) {
      add_edge_out_rec(s, it, u, p, w - pv, depth + 1);
    } else {
      DeferredEdge e{u, p, w - pv, s.phi[u], s.phi[p]};
      if (s.f_out.add(e) && it.ctr) ++it.ctr->deferred_out;
      if (w - pv >= 0) add_edge_out_rec(s, it, u, p, w - pv, depth + 1);
      VertexId pn = g.meta(u).parent;
      add_edge_out_rec(s, it, pn, p, w - live(g, u, pn) - pv, depth + 1);
    }
  }
}

template <class F>
void top_level(IterationContext& it, F&& body) {
  it.addedge_work = 0;
  body();
  if (it.ctr) {
    ++it.ctr->addedge_top_calls;
    it.ctr->addedge_max_work = std::max(it.ctr->addedge_max_work, it.addedge_work);
  }
}

}  // namespace

bool DeferredSet::add(const DeferredEdge& e) {
  auto key = pair_key(e.u, e.v);
  auto [pos, fresh] = index.try_emplace(key, items.size());
  if (fresh) {
    items.push_back(e);
    return true;
  }
  DeferredEdge& old = items[pos->second];
  // Compare in the frame where all potentials are zero.
  if (e.w - e.phi_u + e.phi_v < old.w - old.phi_u + old.phi_v) {
    old = e;
    return true;
  }
  return false;
}

SolverState make_state(Digraph g, std::uint64_t seed) {
  SolverState s;
  s.g = std::move(g);
  s.phi.assign(s.g.size(), 0);
  s.rng.seed(seed);
  s.neg_index.assign(s.g.size(), -1);
  const auto& negs = s.g.negatives();
  for (std::size_t i = 0; i < negs.size(); ++i) s.neg_index[negs[i]] = static_cast<int>(i);
  return s;
}

void add_edge_in(SolverState& s, IterationContext& it, VertexId u, VertexId v, Weight w) {
  top_level(it, [&] { add_edge_in_rec(s, it, u, v, w, 0); });
}

void add_edge_out(SolverState& s, IterationContext& it, VertexId u, VertexId v, Weight w) {
  top_level(it, [&] { add_edge_out_rec(s, it, u, v, w, 0); });
}

void replay_deferred(SolverState& s, IterationContext& it, std::size_t fin_end,
                     std::size_t fout_end) {
  auto current = [&](const DeferredEdge& e) {
    return e.w + (s.phi[e.u] - e.phi_u) - (s.phi[e.v] - e.phi_v);
  };
  // Copy first: AddEdge may replace entries of the live sets.
  std::vector<DeferredEdge> fin(s.f_in.items.begin(), s.f_in.items.begin() + fin_end);
  std::vector<DeferredEdge> fout(s.f_out.items.begin(), s.f_out.items.begin() + fout_end);
  for (const auto& e : fin) {
    Weight w = current(e);
    if (w < 0) continue;
    if (it.ctr) ++it.ctr->replayed;
    add_edge_in(s, it, e.u, e.v, w);
  }
  for (const auto& e : fout) {
    Weight w = current(e);
    if (w < 0) continue;
    if (it.ctr) ++it.ctr->replayed;
    add_edge_out(s, it, e.u, e.v, w);
  }
}

void phase1(SolverState& s, IterationContext& it, const EngineParams& p) {
  Digraph& g = s.g;
  IterationCounters& c = *it.ctr;
  const auto& negs = g.negatives();
  const double eta = static_cast<double>(negs.size());
  it.h = p.h;
  it.b = std::max(1.0, eta / p.gamma);
  it.lambda = static_cast<double>(g.size()) / std::sqrt(it.b);

  // Step 1
  std::vector<Weight> phi;
  if (p.mode == BetweennessMode::ExactOracle || it.b <= 1.0) {
    phi = exact_potential(g, &c.relaxations);
  } else {
    if (!p.hook) throw std::invalid_argument("sampled mode needs a betweenness hook");
    phi = p.hook(g, it.b, it.h, p.seed + static_cast<std::uint64_t>(it.t));
  }
  apply_potential(g, phi);
  for (VertexId v = 0; v < g.size(); ++v) s.phi[v] += phi[v];

  // Step 2
  replay_deferred(s, it, s.f_in.items.size(), s.f_out.items.size());
  // Replayed edges may leave r through something other than (r, rbar) or enter r
  // with a negative weight; the Step-11 rewrite puts the graph back in shape.
  for (VertexId r : negs) restore_well_behaved(s, r);
  auto stray = stray_negative_edges(g);
  if (!stray.empty())
    throw InvariantError("negative edge " + std::to_string(stray[0].from) + "->" +
                         std::to_string(stray[0].to) + " after replay");

  // Step 3
  FrozenGraph f = freeze(g);
  const int n = f.n;
  int l_scale = std::max(1, floor_log2(static_cast<std::uint64_t>(n)) - 2);
  int reps = std::max(1, static_cast<int>(std::ceil(p.reps_c * std::log(std::max(2, n)))));
  std::vector<std::vector<ExtDist>> din(negs.size()), dout(negs.size());
  for (int l = 1; l <= l_scale; ++l) {
    ScaleSample sc = estimate_scale(f, negs, l, reps, it.h, s.rng, &c.relaxations);
    for (std::size_t i = 0; i < negs.size(); ++i) {
      din[i].push_back(sc.din[i]);
      dout[i].push_back(sc.dout[i]);
    }
  }
  BallScratch scratch(n);
  it.thresholds.assign(negs.size(), Threshold{});
  for (std::size_t i = 0; i < negs.size(); ++i) {
    monotone_repair(din[i]);
    monotone_repair(dout[i]);
    std::vector<Dist> a, b;
    for (int l = 0; l < l_scale; ++l) {
      a.push_back(din[i][l] ? din[i][l]->dist() : std::nullopt);
      b.push_back(dout[i][l] ? dout[i][l]->dist() : std::nullopt);
    }
    DeltaChoice dc = choose_delta(a, b);
    Threshold& th = it.thresholds[i];
    th.r = negs[i];
    th.rbar = g.partner(th.r);
    th.w_rr = *g.edge(th.r, th.rbar);
    th.case_id = dc.case_id;
    ++c.delta_cases[dc.case_id];
    if (dc.delta) {
      th.delta = *dc.delta;
      th.uin = bounded_ball_in(f, th.r, th.delta, scratch, &c.relaxations);
    } else {
      // +infinity: every vertex with a 0-hop path to r is inside.
      Ball all = bounded_ball_in(f, th.r, std::numeric_limits<Weight>::max(), scratch,
                                 &c.relaxations);
      Weight mx = 0;
      for (const auto& [v, d] : all.members) mx = std::max(mx, d);
      th.delta = mx + 1;
      th.clamped = true;
      ++c.clamped_deltas;
      th.uin = std::move(all);
    }
    th.uout = bounded_ball_out(f, th.r, th.rbar, th.w_rr, th.delta, scratch, &c.relaxations);
    std::uint64_t sz = th.uin.size() + th.uout.size();
    c.sum_u += sz;
    c.sum_u_sq += sz * sz;
  }
}

void snapshot_aux_lists(SolverState& s, IterationContext& it) {
  const Digraph& g = s.g;
  const VertexId n = g.size();
  it.n_at_step4 = n;
  it.ain.assign(n, {});
  it.aout.assign(n, {});
  for (VertexId v = 0; v < n; ++v) {
    const VertexMeta& m = g.meta(v);
    AList& ai = it.ain[v];
    AList& ao = it.aout[v];
    if (m.kind != VertexKind::InSteiner) {
      for (const auto& [u, w] : g.in(v)) {
        if (w < 0) continue;
        const VertexMeta& mu = g.meta(u);
        if (m.heavy && mu.kind == VertexKind::InSteiner && mu.parent == v) continue;
        if (m.kind == VertexKind::OutSteiner && u == m.parent) continue;
        ai.emplace_back(u, w);
      }
    }
    if (m.kind != VertexKind::OutSteiner) {
      for (const auto& [u, w] : g.out(v)) {
        if (w < 0) continue;
        const VertexMeta& mu = g.meta(u);
        if (m.heavy && mu.kind == VertexKind::OutSteiner && mu.parent == v) continue;
        if (m.kind == VertexKind::InSteiner && u == m.parent) continue;
        ao.emplace_back(u, w);
      }
    }
    if (m.heavy) {
      auto by_weight = [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
      };
      std::sort(ai.begin(), ai.end(), by_weight);
      std::sort(ao.begin(), ao.end(), by_weight);
    } else {
      std::sort(ai.begin(), ai.end());
      std::sort(ao.begin(), ao.end());
    }
  }
}

void simple_merge_in(SolverState& s, IterationContext& it, const Threshold& th) {
  Digraph& g = s.g;
  for (const auto& [ub, d] : th.uin.members) {
    if (!g.in_nbar(ub)) continue;
    VertexId u = g.partner(ub);
    Weight wu = it.thresholds[s.neg_index[u]].w_rr;
    if (g.insert_edge(u, th.rbar, wu + d + th.w_rr) && it.ctr) ++it.ctr->simple_merges;
  }
}

void simple_merge_out(SolverState& s, IterationContext& it, const Threshold& th) {
  Digraph& g = s.g;
  for (const auto& [v, d] : th.uout.members) {
    if (!g.in_n(v)) continue;
    Weight wv = it.thresholds[s.neg_index[v]].w_rr;
    if (g.insert_edge(th.r, g.partner(v), d + wv) && it.ctr) ++it.ctr->simple_merges;
  }
}

void build_in_gadget(SolverState& s, IterationContext& it, VertexId v) {
  Digraph& g = s.g;
  const AList& a = it.ain[v];
  const std::size_t k = a.size();
  if (k == 0) return;
  const int tau = ceil_log2(k) - 1;
  if (tau < 0) return;
  VertexId base = g.size();
  for (int l = 0; l <= tau; ++l) {
    VertexId x = g.add_vertex(VertexMeta{VertexKind::InSteiner, it.t, v, true});
    it.new_in.push_back(x);
  }
  grow_phi(s);
  it.in_gadget[v] = base;
  it.in_gadget_size[v] = tau + 1;
  const VertexMeta mv = g.meta(v);
  for (int l = 0; l <= tau; ++l) {
    VertexId vl = base + l;
    std::size_t lim = k - (std::size_t{1} << l);  // u_1 .. u_lim, 1-based
    Weight up = a[lim - 1].second;                  // w(u_{k-2^l}, v)
    g.insert_edge(vl, v, up);
    for (std::size_t i = 0; i < lim; ++i) {
      auto [ui, wi] = a[i];
      g.insert_edge(ui, vl, wi - up);
      if (g.meta(ui).kind == VertexKind::OutSteiner) {
        VertexId po = g.meta(ui).parent;
        g.insert_edge(po, vl, live(g, po, ui) + wi - up);
      }
    }
    if (g.in_n(v)) g.insert_edge(v, vl, -up);
    if (mv.kind == VertexKind::NSteiner) g.insert_edge(mv.parent, vl, live(g, mv.parent, v) - up);
  }
}

void build_out_gadget(SolverState& s, IterationContext& it, VertexId v) {
  Digraph& g = s.g;
  const AList& a = it.aout[v];
  const std::size_t k = a.size();
  if (k == 0) return;
  const int tau = ceil_log2(k) - 1;
  if (tau < 0) return;
  VertexId base = g.size();
  for (int l = 0; l <= tau; ++l) {
    VertexId x = g.add_vertex(VertexMeta{VertexKind::OutSteiner, it.t, v, true});
    it.new_out.push_back(x);
  }
  grow_phi(s);
  it.out_gadget[v] = base;
  it.out_gadget_size[v] = tau + 1;
  const VertexMeta mv = g.meta(v);
  for (int l = 0; l <= tau; ++l) {
    VertexId vl = base + l;
    std::size_t lim = k - (std::size_t{1} << l);
    Weight up = a[lim - 1].second;  // w(v, u_{k-2^l})
    g.insert_edge(v, vl, up);
    for (std::size_t i = 0; i < lim; ++i) {
      auto [ui, wi] = a[i];
      g.insert_edge(vl, ui, wi - up);
      if (g.meta(ui).kind == VertexKind::InSteiner) {
        VertexId pi = g.meta(ui).parent;
        g.insert_edge(vl, pi, wi + live(g, ui, pi) - up);
      }
    }
    if (g.in_nbar(v)) {
      VertexId r = g.partner(v);
      g.insert_edge(vl, r, -live(g, r, v) - up);
    }
    if (mv.kind == VertexKind::NSteiner) g.insert_edge(vl, mv.parent, live(g, v, mv.parent) - up);
  }
}

VertexId create_n_steiner(SolverState& s, IterationContext& it, Threshold& th) {
  Digraph& g = s.g;
  th.hub = g.add_vertex(VertexMeta{VertexKind::NSteiner, it.t, th.r, true});
  grow_phi(s);
  g.insert_edge(th.hub, th.r, th.delta);
  g.insert_edge(th.r, th.hub, -th.delta);
  return th.hub;
}

void hub_edge_cases(SolverState& s, IterationContext& it, const Threshold& th) {
  if (th.delta <= 0)
    for (const auto& [v, w] : it.ain[th.r]) add_edge_in(s, it, v, th.hub, w - th.delta);
  if (th.delta >= -th.w_rr)
    for (const auto& [v, w] : it.aout[th.rbar])
      add_edge_out(s, it, th.hub, v, th.w_rr + th.delta + w);
}

void restore_well_behaved(SolverState& s, VertexId r) {
  Digraph& g = s.g;
  const VertexId rb = g.partner(r);
  const Weight W = *g.edge(r, rb);
  Weight w_out = W;
  for (const auto& [v, w] : g.out(r)) w_out = std::min(w_out, w);
  Weight w_in = 0;
  for (const auto& [v, w] : g.in(r)) w_in = std::min(w_in, w);

  std::vector<std::pair<VertexId, Weight>> ins(g.in(r).begin(), g.in(r).end());
  for (const auto& [v, w] : ins)
    if (v != rb) g.set_edge(v, r, w - w_in);
  g.set_edge(r, rb, w_in + w_out);
  g.set_edge(rb, r, -(w_in + w_out));
  std::vector<std::pair<VertexId, Weight>> outs(g.out(rb).begin(), g.out(rb).end());
  for (const auto& [v, w] : outs)
    if (v != r) g.set_edge(rb, v, w + W - w_out);
  std::vector<std::pair<VertexId, Weight>> moved(g.out(r).begin(), g.out(r).end());
  std::sort(moved.begin(), moved.end());
  for (const auto& [v, w] : moved) {
    if (v == rb) continue;
    g.erase_edge(r, v);
    g.insert_edge(rb, v, w - w_out);
  }
  s.phi[r] += w_in;
  s.phi[rb] += W - w_out;
}

void classify_steiner(SolverState& s, IterationContext& it) {
  Digraph& g = s.g;
  for (VertexId v : it.new_in) {
    bool heavy = static_cast<double>(g.out(v).size()) - 1 >= it.lambda;
    g.meta(v).heavy = heavy;
    if (heavy && it.ctr) ++it.ctr->new_heavy;
  }
  for (VertexId v : it.new_out) {
    bool heavy = static_cast<double>(g.in(v).size()) - 1 >= it.lambda;
    g.meta(v).heavy = heavy;
    if (heavy && it.ctr) ++it.ctr->new_heavy;
  }
  if (it.ctr) {
    it.ctr->in_steiner += it.new_in.size();
    it.ctr->out_steiner += it.new_out.size();
  }
}

void shortcut_iteration(SolverState& s, const EngineParams& p, const CheckpointHook& hook) {
  IterationContext it;
  it.t = s.t + 1;
  s.counters.iterations.emplace_back();
  IterationCounters& c = s.counters.iterations.back();
  c.t = it.t;
  c.n_before = s.g.size();
  c.m_before = static_cast<std::int64_t>(s.g.num_edges());
  c.eta = static_cast<std::int64_t>(s.g.eta());
  it.ctr = &c;
  auto budget = [&] {
    if (p.max_edges && s.g.num_edges() > p.max_edges) throw BudgetExceeded(it.t, s.g.num_edges());
  };

  phase1(s, it, p);
  c.b = it.b;
  c.lambda = it.lambda;
  c.h = it.h;
  if (hook) hook(Checkpoint::AfterPhase1, s, it);

  snapshot_aux_lists(s, it);
  for (const Threshold& th : it.thresholds) simple_merge_in(s, it, th);
  for (const Threshold& th : it.thresholds) simple_merge_out(s, it, th);

  const VertexId n4 = it.n_at_step4;
  it.in_gadget.assign(n4, kNoVertex);
  it.out_gadget.assign(n4, kNoVertex);
  it.in_gadget_size.assign(n4, 0);
  it.out_gadget_size.assign(n4, 0);
  for (VertexId v = 0; v < n4; ++v)
    if (s.g.meta(v).heavy) build_in_gadget(s, it, v);
  for (VertexId v = 0; v < n4; ++v)
    if (s.g.meta(v).heavy) build_out_gadget(s, it, v);
  for (Threshold& th : it.thresholds) create_n_steiner(s, it, th);
  c.n_steiner += it.thresholds.size();
  budget();

  for (const Threshold& th : it.thresholds) {
    shortcut_in(s, it, th);
    shortcut_out(s, it, th);
    hub_edge_cases(s, it, th);
    budget();
  }
  if (hook) hook(Checkpoint::PreRestore, s, it);

  for (VertexId r : s.g.negatives()) restore_well_behaved(s, r);
  classify_steiner(s, it);
  s.neg_index.resize(s.g.size(), -1);
  s.t = it.t;

  c.n_after = s.g.size();
  c.m_after = static_cast<std::int64_t>(s.g.num_edges());
  s.counters.relaxations_total += c.relaxations;
  if (p.checks) {
    auto stray = stray_negative_edges(s.g);
    if (!stray.empty()) throw InvariantError("graph not well-behaved after iteration");
  }
  if (hook) hook(Checkpoint::PostIteration, s, it);
}

}  // namespace nwsp
