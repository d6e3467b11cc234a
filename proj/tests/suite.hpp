#pragma once

// Per-iteration property checks shared by the acceptance binary and the
// calibration tool.

#include <map>
#include <string>

#include "nwsp/harness.hpp"
#include "nwsp/invariants.hpp"

namespace suite {

using namespace nwsp;

struct Tally {
  long checked = 0, bad = 0;
  std::string first;
  void fail(const std::string& what) {
    ++bad;
    if (first.empty()) first = what;
  }
};

struct IterStats {
  Tally hops;        // criterion 3
  Tally triples;     // criterion 4
  Tally structure;   // criterion 5
  Tally distances;   // criterion 8
  Tally heavy, depth, work, vertices;  // criterion 7
  double max_k = 0, max_k_prime = 0;   // observed calibration ratios
  int instances = 0, iterations = 0;
};

struct Constants {
  double k = 0, k_prime = 0;
};

// Drives make_state + shortcut_iteration on one solvable input, checking every
// iteration. `consts` may be null (calibration mode: only ratios are recorded).
void drive(const InputGraph& h, std::uint64_t seed, IterStats& st, const Constants* consts);

// Input instances for the per-iteration suite: n in [n_lo, n_hi], solvable.
std::vector<InputGraph> small_suite(int count, VertexId n_lo, VertexId n_hi, std::uint64_t seed);

Constants load_constants(const std::string& path);

}  // namespace suite
