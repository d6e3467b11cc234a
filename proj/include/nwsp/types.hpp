#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nwsp {

using Weight = std::int64_t;
using VertexId = std::int32_t;
using Dist = std::optional<Weight>;  // nullopt means "no path"

inline constexpr VertexId kNoVertex = -1;

struct Arc {
  VertexId from;
  VertexId to;
  Weight w;
};

// Plain input digraph (vertices 0..n-1).
struct InputGraph {
  VertexId n = 0;
  std::vector<Arc> arcs;
};

// A closed walk whose weights sum below zero.
struct NegCycleCertificate {
  std::vector<Arc> edges;
  Weight total() const {
    Weight s = 0;
    for (const auto& a : edges) s += a.w;
    return s;
  }
};

class NegCycleError : public std::runtime_error {
 public:
  explicit NegCycleError(NegCycleCertificate c, std::string where = "")
      : std::runtime_error("negative cycle" + (where.empty() ? "" : " (" + where + ")")),
        cert(std::move(c)) {}
  NegCycleCertificate cert;
};

// Raised when an internal invariant fails. Always a bug or an unsupported input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A final graph whose 2-hop distances are not yet exact.
class HopResidueError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// The working graph outgrew the configured edge budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int t, std::size_t edges)
      : std::runtime_error("edge budget exceeded in iteration " + std::to_string(t) + " at " +
                           std::to_string(edges) + " edges"),
        iteration(t),
        edges(edges) {}
  int iteration;
  std::size_t edges;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line(line) {}
  std::size_t line;
};

inline Dist add(Dist a, Weight b) { return a ? Dist(*a + b) : std::nullopt; }

inline bool less(Dist a, Dist b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

}  // namespace nwsp
