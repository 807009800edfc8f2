#pragma once

#include <iosfwd>
#include <string>

#include "graphgeo/forms.hpp"
#include "graphgeo/graph.hpp"
#include "graphgeo/morse.hpp"
#include "graphgeo/simplicial.hpp"

namespace graphgeo::io {

// Graph text format:
//   # comment
//   p <n>        exactly once, first non-comment line
//   e <u> <v>    one edge, 0 <= u, v < n
// Blank lines are ignored. Duplicate edges and loops are rejected.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g, const std::string& comment = {});

// Vertex function: `<vertex-id> <integer or p/q>` per line, every vertex
// exactly once, values pairwise distinct.
VertexFunction read_vertex_function(std::istream& in, int order);

// Form: `<v0> ... <vk> <p/q>` per line. Vertices may come in any order; the
// value is stored for the ascending order with the permutation sign applied.
// All lines must have the same level; simplices not listed are zero.
Form read_form(std::istream& in, const CliqueComplex& c);
void write_form(std::ostream& out, const CliqueComplex& c, const Form& f);

}  // namespace graphgeo::io
