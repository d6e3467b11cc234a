#include "nwsp/preprocess.hpp"

#include <algorithm>

namespace nwsp {

std::vector<Weight> exact_potential(const Digraph& g, std::uint64_t* relaxations) {
  FrozenGraph f = freeze(g);
  std::vector<std::pair<VertexId, Weight>> seeds;
  seeds.reserve(f.n);
  for (VertexId v = 0; v < f.n; ++v) seeds.emplace_back(v, 0);
  // A simple path uses every hop edge at most once.
  int h = static_cast<int>(f.hops.size());
  HopResult res = hop_sssp(f, seeds, h, Direction::Forward, relaxations);
  if (!res.stable) throw NegCycleError(NegCycleCertificate{}, "potential");
  std::vector<Weight> phi(f.n);
  for (VertexId v = 0; v < f.n; ++v) phi[v] = *res.dist[v];
  return phi;
}

ScaleSample estimate_scale(const FrozenGraph& g, const std::vector<VertexId>& negatives, int p_log2,
                           int reps, int h, std::mt19937_64& rng, std::uint64_t* relaxations) {
  const std::size_t eta = negatives.size();
  std::vector<std::vector<ExtDist>> in_runs(eta), out_runs(eta);
  for (int rep = 0; rep < reps; ++rep) {
    std::vector<VertexId> s;
    for (int attempt = 0; attempt <= 20 && s.empty(); ++attempt) {
      if (attempt == 20) throw std::runtime_error("estimate: empty sample after 20 retries");
      for (VertexId v = 0; v < g.n; ++v)
        if ((rng() >> (64 - p_log2)) == 0) s.push_back(v);
    }
    auto fwd = hop_sssp_extended(g, s, h, Direction::Forward, relaxations, &negatives);
    auto bwd = hop_sssp_extended(g, s, h, Direction::Backward, relaxations, &negatives);
    for (std::size_t i = 0; i < eta; ++i) {
      in_runs[i].push_back(fwd[negatives[i]]);
      out_runs[i].push_back(bwd[negatives[i]]);
    }
  }
  ScaleSample out;
  out.din.resize(eta);
  out.dout.resize(eta);
  auto lower_median = [](std::vector<ExtDist>& xs) {
    std::sort(xs.begin(), xs.end(), ext_less);
    return xs[(xs.size() - 1) / 2];
  };
  for (std::size_t i = 0; i < eta; ++i) {
    out.din[i] = lower_median(in_runs[i]);
    out.dout[i] = lower_median(out_runs[i]);
  }
  return out;
}

void monotone_repair(std::vector<ExtDist>& seq) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (ext_less(seq[i], seq[i - 1])) seq[i] = seq[i - 1];
}

namespace {

// Extended reals on top of Dist: nullopt is +infinity.
bool sum_nonneg(Dist a, Dist b) { return !a || !b || *a + *b >= 0; }
bool lt(Dist a, Dist b) { return less(a, b); }
Dist neg(Dist a) { return a ? Dist(-*a) : std::nullopt; }  // only called on finite values

}  // namespace

DeltaChoice choose_delta(const std::vector<Dist>& din, const std::vector<Dist>& dout) {
  const int L = static_cast<int>(din.size());
  int lstar = 0;
  for (int l = 1; l <= L; ++l) {
    if (sum_nonneg(din[l - 1], dout[l - 1])) {
      lstar = l;
      break;
    }
  }
  if (lstar == 0) return {din[L - 1], 1, 0};
  if (lstar == 1) return {din[0], 2, 1};
  Dist in_prev = din[lstar - 2], in_cur = din[lstar - 1];
  Dist out_prev = dout[lstar - 2], out_cur = dout[lstar - 1];
  // Below l*, both entries are finite because their sum is negative.
  if (lt(in_prev, in_cur)) {
    Dist cand = neg(out_prev);
    if (!lt(in_cur, cand)) return {cand, 3, lstar};
    return {in_cur, 3, lstar};
  }
  if (lt(out_prev, out_cur)) {
    // -d(D^out_{l*}) is -infinity when D^out_{l*} is absent.
    if (!out_cur || *in_prev >= -*out_cur) return {in_prev, 4, lstar};
    return {neg(out_cur), 4, lstar};
  }
  throw InvariantError("choose_delta: no case applies");
}

}  // namespace nwsp
