#pragma once

#include <cstdint>
#include <vector>

#include "cyclen/graph.hpp"

namespace cyclen {

// Canonical relabelling by individualisation-refinement: position[v] is the
// new id of v. Isomorphic graphs receive identical canonical forms.
std::vector<Vertex> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

Graph relabel(const Graph& g, const std::vector<Vertex>& position);

// Upper triangle of the adjacency matrix, column-major as in graph6, packed
// into one word. Requires order <= 11.
std::uint64_t pack_upper_triangle(const Graph& g);
Graph unpack_upper_triangle(int n, std::uint64_t code);

}  // namespace cyclen
