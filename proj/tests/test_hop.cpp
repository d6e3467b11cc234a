#include <gtest/gtest.h>

#include <random>

#include "nwsp/hop_distances.hpp"
#include "nwsp/oracle.hpp"

using namespace nwsp;

namespace {

// a -> r (1), r -> rbar (-5), rbar -> b (2)
struct Chain {
  Digraph g;
  VertexId a, r, rbar, b;
  Chain() {
    a = g.add_vertex({});
    r = g.add_vertex({}, Side::Neg);
    rbar = g.add_vertex({}, Side::NegBar);
    b = g.add_vertex({});
    g.pair_negative(r, rbar);
    g.set_edge(a, r, 1);
    g.set_edge(r, rbar, -5);
    g.set_edge(rbar, r, 5);
    g.set_edge(rbar, b, 2);
  }
};

InputGraph random_input(std::uint64_t seed, VertexId n, double p) {
  oracle::GraphSpec spec;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  return oracle::generate(spec);
}

}  // namespace

TEST(HopSssp, ZeroAndOneHop) {
  Chain c;
  FrozenGraph f = freeze(c.g);
  EXPECT_EQ(hop_sssp(f, c.a, 0, Direction::Forward).dist[c.b], std::nullopt);
  EXPECT_EQ(hop_sssp(f, c.a, 1, Direction::Forward).dist[c.b], Dist(-2));
  EXPECT_EQ(hop_sssp(f, c.b, 1, Direction::Backward).dist[c.a], Dist(-2));
}

TEST(HopSssp, NonnegativeGraphIsDijkstra) {
  oracle::GraphSpec spec;
  spec.n = 12;
  spec.lo = 0;
  spec.seed = 3;
  InputGraph h = oracle::generate(spec);
  Digraph g = to_well_behaved(h);
  auto got = hop_sssp(freeze(g), 0, 0, Direction::Forward).dist;
  auto want = oracle::hop_layers(oracle::arcs_of(g), 0, 0)[0];
  EXPECT_EQ(got, want);
}

TEST(HopSssp, MatchesLayeredOracleAndIsMonotone) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Digraph g = to_well_behaved(random_input(seed, 6, 0.4));
    FrozenGraph f = freeze(g);
    oracle::ArcGraph a = oracle::arcs_of(g);
    auto layers = oracle::hop_layers(a, 0, 4);
    for (int h = 0; h <= 4; ++h) {
      auto got = hop_sssp(f, 0, h, Direction::Forward).dist;
      ASSERT_EQ(got, layers[h]) << "seed " << seed << " h " << h;
      if (h > 0)
        for (VertexId v = 0; v < f.n; ++v) EXPECT_FALSE(less(layers[h - 1][v], got[v]));
    }
    auto back = oracle::hop_layers_to(a, 1, 3);
    EXPECT_EQ(hop_sssp(f, 1, 3, Direction::Backward).dist, back[3]) << "seed " << seed;
  }
}

TEST(HopSsspExtended, SingletonSource) {
  Chain c;
  FrozenGraph f = freeze(c.g);
  auto ext = hop_sssp_extended(f, {c.a}, 1, Direction::Forward);
  ASSERT_TRUE(ext[c.b]);
  EXPECT_FALSE(ext[c.b]->infinite);
  EXPECT_EQ(ext[c.b]->d, -2);
  EXPECT_EQ(ext[c.b]->src, c.a);
  EXPECT_EQ(ext[c.b]->dst, c.b);
}

TEST(HopSsspExtended, TieBreaksOnSmallerSource) {
  Digraph g;
  VertexId u1 = g.add_vertex({}), u2 = g.add_vertex({}), v = g.add_vertex({});
  g.set_edge(u1, v, 4);
  g.set_edge(u2, v, 4);
  auto ext = hop_sssp_extended(freeze(g), {u2, u1}, 0, Direction::Forward);
  EXPECT_EQ(ext[v]->src, u1);
  EXPECT_EQ(ext[v]->d, 4);
}

TEST(HopSsspExtended, UnreachableKeepsSmallestSource) {
  Digraph g;
  VertexId x = g.add_vertex({}), y = g.add_vertex({}), z = g.add_vertex({});
  g.set_edge(y, x, 1);
  auto fwd = hop_sssp_extended(freeze(g), {y, x}, 0, Direction::Forward);
  ASSERT_TRUE(fwd[z]);
  EXPECT_TRUE(fwd[z]->infinite);
  EXPECT_EQ(fwd[z]->src, x);
  EXPECT_EQ(fwd[z]->dst, z);
  EXPECT_TRUE(ext_less(fwd[x], fwd[z]));
}

TEST(HopSsspExtended, MatchesBruteForceLexMin) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Digraph g = to_well_behaved(random_input(seed, 5, 0.5));
    FrozenGraph f = freeze(g);
    oracle::ArcGraph a = oracle::arcs_of(g);
    std::vector<VertexId> s;
    for (VertexId v = 0; v < f.n; ++v)
      if (rng() % 3 == 0) s.push_back(v);
    if (s.empty()) s.push_back(f.n - 1);
    const int h = 2;
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
      auto got = hop_sssp_extended(f, s, h, dir);
      for (VertexId v = 0; v < f.n; ++v) {
        ExtDist best;
        for (VertexId u : s) {
          Dist d = dir == Direction::Forward ? oracle::hop_layers(a, u, h)[h][v]
                                             : oracle::hop_layers_to(a, u, h)[h][v];
          ExtendedDistance e = dir == Direction::Forward
                                   ? ExtendedDistance{!d, d.value_or(0), u, v}
                                   : ExtendedDistance{!d, d.value_or(0), v, u};
          if (!best || e < *best) best = e;
        }
        ASSERT_EQ(got[v], best) << "seed " << seed << " v " << v;
      }
    }
  }
}

TEST(Ball, InChain) {
  Digraph g;
  VertexId a = g.add_vertex({}), b = g.add_vertex({}), r = g.add_vertex({}, Side::Neg),
           rb = g.add_vertex({}, Side::NegBar);
  g.pair_negative(r, rb);
  g.set_edge(a, b, 1);
  g.set_edge(b, r, 1);
  g.set_edge(r, rb, -1);
  g.set_edge(rb, r, 1);
  FrozenGraph f = freeze(g);
  BallScratch s(f.n);
  Ball ball = bounded_ball_in(f, r, 3, s);
  std::vector<std::pair<VertexId, Weight>> want = {{a, 2}, {b, 1}, {r, 0}, {rb, 1}};
  EXPECT_EQ(ball.members, want);
  // Strict limit: a vertex exactly at the threshold is out.
  Ball tight = bounded_ball_in(f, r, 2, s);
  for (const auto& [v, d] : tight.members) EXPECT_NE(v, a);
  EXPECT_TRUE(bounded_ball_in(f, r, -1, s).members.empty());
}

TEST(Ball, OutThroughDesignatedEdge) {
  Digraph g;
  VertexId r = g.add_vertex({}, Side::Neg), rb = g.add_vertex({}, Side::NegBar),
           v = g.add_vertex({});
  g.pair_negative(r, rb);
  g.set_edge(r, rb, -5);
  g.set_edge(rb, r, 5);
  g.set_edge(rb, v, 2);
  FrozenGraph f = freeze(g);
  BallScratch s(f.n);
  std::vector<std::pair<VertexId, Weight>> want = {{rb, -5}, {v, -3}};
  EXPECT_EQ(bounded_ball_out(f, r, rb, -5, 1, s).members, want);
  EXPECT_TRUE(bounded_ball_out(f, r, rb, -5, 5, s).members.empty());
}

TEST(Ball, RandomAgainstLayeredOracle) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Digraph g = to_well_behaved(random_input(seed, 6, 0.4));
    FrozenGraph f = freeze(g);
    oracle::ArcGraph a = oracle::arcs_of(g);
    BallScratch s(f.n);
    for (VertexId r : g.negatives()) {
      const VertexId rb = g.partner(r);
      const Weight w = *g.edge(r, rb);
      for (Weight delta : {-3, 0, 4, 11}) {
        auto to_r = oracle::hop_layers_to(a, r, 0)[0];
        std::vector<std::pair<VertexId, Weight>> in_want, out_want;
        for (VertexId v = 0; v < f.n; ++v)
          if (to_r[v] && *to_r[v] < delta) in_want.emplace_back(v, *to_r[v]);
        EXPECT_EQ(bounded_ball_in(f, r, delta, s).members, in_want);
        // d^1(r, .) where the one hop is (r, rbar).
        auto from_rb = oracle::hop_layers(a, rb, 0)[0];
        for (VertexId v = 0; v < f.n; ++v)
          if (from_rb[v] && w + *from_rb[v] < -delta) out_want.emplace_back(v, w + *from_rb[v]);
        EXPECT_EQ(bounded_ball_out(f, r, rb, w, delta, s).members, out_want) << "seed " << seed;
      }
    }
  }
}
