#pragma once

#include <string_view>

#include "cyclen/graph.hpp"

namespace cyclen {

// Small expression language for named constructions:
//
//   petersen
//   K5  K(5)          complete graph
//   K(3,3)            complete bipartite graph
//   C5  C(5)          cycle
//   P4  P(4)          path on 4 vertices
//   E3  E(3)          edgeless graph
//   join(a, b, ...)   a v b v ...
//   union(a, b, ...)  disjoint union
//   co(a)             complement (alias: complement)
//   lex(a, b)         lexicographic product a[b]
//   add_edge(a, u, v)  delete_edge(a, u, v)
//
// Operands of join/union are numbered left to right.
Graph named_graph(std::string_view expr);

// Input as accepted by the CLI: a graph6 line or a named expression.
Graph graph_from_text(std::string_view text);

}  // namespace cyclen
