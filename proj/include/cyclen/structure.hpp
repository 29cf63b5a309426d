#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cyclen/graph.hpp"

namespace cyclen {

// (G, x, y) with distinct roots.
struct RootedGraph {
    Graph g;
    Vertex x;
    Vertex y;

    RootedGraph(Graph graph, Vertex root_x, Vertex root_y);
};

struct BipartiteVerdict {
    bool bipartite = false;
    std::vector<int> coloring;       // 0/1 per vertex when bipartite
    std::vector<Vertex> odd_cycle;   // cyclic vertex sequence otherwise
};
BipartiteVerdict is_bipartite(const Graph& g);

struct TriangleVerdict {
    bool triangle_free = true;
    std::optional<std::array<Vertex, 3>> triangle;
};
TriangleVerdict is_triangle_free(const Graph& g);
// Triangle-freeness of G[within].
bool triangle_free_within(const Graph& g, VertexSet within);

// Vertices reachable from `from` inside `within`.
VertexSet reach(const Graph& g, Vertex from, VertexSet within);
bool connected_within(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
// Components of G[within], ordered by least vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);

struct ConnectivityVerdict {
    bool holds = false;
    // On failure: a smallest vertex set whose removal disconnects g
    // (empty when g is already disconnected).
    VertexSet separator;
};
// k in 1..3, |g| > k. Exhaustive over separators of size < k.
ConnectivityVerdict connectivity_at_least(const Graph& g, int k);

struct BlockTree {
    struct EndBlock {
        std::size_t block;
        Vertex cut_vertex;  // -1 when g has no cut-vertex
    };

    std::vector<VertexSet> blocks;                  // ordered by sorted member list
    VertexSet cut_vertices;
    std::vector<std::vector<Vertex>> block_cuts;    // tree adjacency: cut-vertices of each block
    std::vector<EndBlock> end_blocks;
};
// Lowpoint DFS; g must be connected.
BlockTree block_cutvertex_tree(const Graph& g);
// Cut-vertices of G[within] (within must induce a connected graph), as ids of g.
VertexSet cut_vertices_within(const Graph& g, VertexSet within);

// Is G + xy 2-connected?
bool rooted_is_2_connected(const RootedGraph& r);
// Minimum degree over V(G) \ {x, y}.
int rooted_min_degree(const RootedGraph& r);

}  // namespace cyclen
