#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nwsp/types.hpp"

namespace nwsp {

struct IterationCounters {
  int t = 0;
  std::int64_t n_before = 0, n_after = 0;
  std::int64_t m_before = 0, m_after = 0;
  std::int64_t eta = 0;
  double b = 1, lambda = 0;
  int h = 0;
  std::uint64_t sum_u = 0;     // sum over r of |U^in_r| + |U^out_r|
  std::uint64_t sum_u_sq = 0;  // sum over r of (|U^in_r| + |U^out_r|)^2
  std::uint64_t new_heavy = 0;
  std::uint64_t in_steiner = 0, out_steiner = 0, n_steiner = 0;
  std::uint64_t simple_merges = 0;
  std::uint64_t addedge_top_calls = 0, addedge_calls = 0;
  int addedge_max_depth = 0;
  std::uint64_t addedge_max_work = 0;
  std::uint64_t deferred_in = 0, deferred_out = 0, replayed = 0;
  std::uint64_t relaxations = 0;
  std::uint64_t clamped_deltas = 0;
  std::array<std::uint64_t, 5> delta_cases{};  // index 1..4
};

struct RunCounters {
  std::int64_t n_input = 0, n0 = 0, eta = 0;
  int L = 0;
  double gamma = 0;
  std::uint64_t seed = 0;
  bool base_case = false;
  std::int64_t vertices_final = 0, edges_final = 0;
  std::uint64_t relaxations_total = 0;
  std::vector<IterationCounters> iterations;
};

std::string counters_to_json(const RunCounters& c, int indent = 2);

}  // namespace nwsp
