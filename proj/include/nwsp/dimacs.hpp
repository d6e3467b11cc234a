#pragma once

#include <iosfwd>
#include <string>

#include "nwsp/types.hpp"

namespace nwsp {

// "p sp n m" header, "a u v w" arcs (1-based), "c" comments.
InputGraph parse_dimacs(std::istream& in);
InputGraph parse_dimacs_string(const std::string& text);
InputGraph read_dimacs_file(const std::string& path);

void write_dimacs(std::ostream& out, const InputGraph& g);

}  // namespace nwsp
