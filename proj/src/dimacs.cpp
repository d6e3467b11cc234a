#include "nwsp/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace nwsp {

InputGraph parse_dimacs(std::istream& in) {
  InputGraph g;
  bool header = false;
  std::size_t expected = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long n = -1, m = -1;
      if (header) throw ParseError(line_no, "duplicate header");
      if (!(ls >> kind >> n >> m) || kind != "sp" || n < 0 || m < 0)
        throw ParseError(line_no, "malformed header");
      g.n = static_cast<VertexId>(n);
      expected = static_cast<std::size_t>(m);
      header = true;
    } else if (tag == "a") {
      if (!header) throw ParseError(line_no, "arc before header");
      long long u, v, w;
      if (!(ls >> u >> v >> w)) throw ParseError(line_no, "malformed arc");
      std::string extra;
      if (ls >> extra) throw ParseError(line_no, "trailing data");
      if (u < 1 || u > g.n || v < 1 || v > g.n) throw ParseError(line_no, "vertex out of range");
      g.arcs.push_back(Arc{static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), w});
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!header) throw ParseError(line_no, "missing header");
  if (g.arcs.size() != expected)
    throw ParseError(line_no, "expected " + std::to_string(expected) + " arcs, found " +
                                  std::to_string(g.arcs.size()));
  return g;
}

InputGraph parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

InputGraph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const InputGraph& g) {
  out << "p sp " << g.n << ' ' << g.arcs.size() << '\n';
  for (const Arc& a : g.arcs) out << "a " << a.from + 1 << ' ' << a.to + 1 << ' ' << a.w << '\n';
}

}  // namespace nwsp
