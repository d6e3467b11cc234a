#pragma once

#include <string>
#include <vector>

#include "nwsp/shortcut.hpp"

namespace nwsp {

struct Violation {
  std::string check;
  std::string detail;
};

// Every negative edge touches a vertex of N. Meant for the PreRestore checkpoint.
std::vector<Violation> scan_negative_incident(const Digraph& g);

// Only designated edges are negative, out(r) = {rbar}, w(rbar, r) = -w(r, rbar)
// and nothing negative enters rbar.
std::vector<Violation> scan_well_behaved(const Digraph& g);

// Neighbourhood properties of in- and out-Steiner vertices, checked after an
// iteration has completed. `it` is the context of that iteration.
std::vector<Violation> scan_steiner(const SolverState& s, const IterationContext& it);

// One "check: detail" line per violation.
std::string format_violations(const std::vector<Violation>& v);

}  // namespace nwsp
