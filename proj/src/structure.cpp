#include "cyclen/structure.hpp"

#include <algorithm>
#include <functional>

#include "cyclen/errors.hpp"

namespace cyclen {

RootedGraph::RootedGraph(Graph graph, Vertex root_x, Vertex root_y) : g(std::move(graph)), x(root_x), y(root_y) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) throw InvalidInput("rooted graph needs distinct roots");
}

BipartiteVerdict is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (Vertex root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Same BFS layer parity: climb both tree paths to their meeting point.
                    std::vector<Vertex> left{u}, right{w};
                    Vertex a = u, b = w;
                    while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                    while (a != b) {
                        left.push_back(a = parent[a]);
                        right.push_back(b = parent[b]);
                    }
                    right.pop_back();
                    BipartiteVerdict v;
                    v.odd_cycle.assign(left.begin(), left.end());
                    v.odd_cycle.insert(v.odd_cycle.end(), right.rbegin(), right.rend());
                    return v;
                }
            }
        }
    }
    return {true, color, {}};
}

TriangleVerdict is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        const VertexSet common = g.neighbors(u) & g.neighbors(v);
        if (!common.empty()) return {false, std::array<Vertex, 3>{u, v, common.first()}};
    }
    return {true, std::nullopt};
}

bool triangle_free_within(const Graph& g, VertexSet within) {
    for (Vertex u : within)
        for (Vertex v : g.neighbors(u) & within)
            if (u < v && !(g.neighbors(u) & g.neighbors(v) & within).empty()) return false;
    return true;
}

VertexSet reach(const Graph& g, Vertex from, VertexSet within) {
    VertexSet seen = VertexSet::single(from), frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        frontier = (next & within) - seen;
        seen |= frontier;
    }
    return seen;
}

bool connected_within(const Graph& g, VertexSet within) {
    return within.empty() || reach(g, within.first(), within) == within;
}

bool is_connected(const Graph& g) { return connected_within(g, g.vertices()); }

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        const VertexSet c = reach(g, left.first(), within);
        out.push_back(c);
        left -= c;
    }
    return out;
}

ConnectivityVerdict connectivity_at_least(const Graph& g, int k) {
    if (k < 1 || k > 3) throw InvalidInput("connectivity check supports k in 1..3");
    if (g.order() <= k)
        throw InvalidInput("connectivity " + std::to_string(k) + " undefined at order " + std::to_string(g.order()));
    const VertexSet all = g.vertices();
    const int n = g.order();
    if (!connected_within(g, all)) return {false, {}};
    for (Vertex a = 0; k >= 2 && a < n; ++a)
        if (!connected_within(g, all - VertexSet{a})) return {false, VertexSet{a}};
    for (Vertex a = 0; k >= 3 && a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!connected_within(g, all - VertexSet{a, b})) return {false, VertexSet{a, b}};
    return {true, {}};
}

namespace {

bool set_less(VertexSet a, VertexSet b) {
    // Lexicographic on sorted member lists.
    auto av = a.to_vector(), bv = b.to_vector();
    return av < bv;
}

}  // namespace

BlockTree block_cutvertex_tree(const Graph& g) {
    if (g.order() == 0) throw InvalidInput("block decomposition of the empty graph");
    const auto comps = components(g, g.vertices());
    if (comps.size() != 1)
        throw InvalidInput("block decomposition needs a connected graph; found " + std::to_string(comps.size()) +
                           " components");

    BlockTree tree;
    const int n = g.order();
    if (n == 1) {
        tree.blocks.push_back(VertexSet{0});
    } else {
        std::vector<int> disc(n, -1), low(n, 0);
        std::vector<std::pair<Vertex, Vertex>> edge_stack;
        int clock = 0;
        std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
            disc[u] = low[u] = clock++;
            for (Vertex w : g.neighbors(u)) {
                if (disc[w] == -1) {
                    edge_stack.emplace_back(u, w);
                    dfs(w, u);
                    low[u] = std::min(low[u], low[w]);
                    if (low[w] >= disc[u]) {
                        // u separates the subtree of w: pop one block.
                        VertexSet block;
                        for (;;) {
                            auto [a, b] = edge_stack.back();
                            edge_stack.pop_back();
                            block.insert(a);
                            block.insert(b);
                            if (a == u && b == w) break;
                        }
                        tree.blocks.push_back(block);
                    }
                } else if (w != parent && disc[w] < disc[u]) {
                    edge_stack.emplace_back(u, w);
                    low[u] = std::min(low[u], disc[w]);
                }
            }
        };
        dfs(0, -1);
    }
    std::sort(tree.blocks.begin(), tree.blocks.end(), set_less);

    std::vector<int> membership(n, 0);
    for (VertexSet b : tree.blocks)
        for (Vertex v : b) ++membership[v];
    for (Vertex v = 0; v < n; ++v)
        if (membership[v] > 1) tree.cut_vertices.insert(v);

    for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
        tree.block_cuts.push_back((tree.blocks[i] & tree.cut_vertices).to_vector());
        if (tree.cut_vertices.empty())
            tree.end_blocks.push_back({i, -1});
        else if (tree.block_cuts[i].size() == 1)
            tree.end_blocks.push_back({i, tree.block_cuts[i][0]});
    }
    return tree;
}

VertexSet cut_vertices_within(const Graph& g, VertexSet within) {
    if (within.size() <= 2) return {};
    VertexSet cuts;
    for (Vertex v : within)
        if (!connected_within(g, within - VertexSet::single(v))) cuts.insert(v);
    return cuts;
}

bool rooted_is_2_connected(const RootedGraph& r) {
    if (r.g.order() < 3) throw InvalidInput("rooted 2-connectedness needs at least 3 vertices");
    return connectivity_at_least(with_edge(r.g, r.x, r.y), 2).holds;
}

int rooted_min_degree(const RootedGraph& r) {
    const VertexSet rest = r.g.vertices() - VertexSet{r.x, r.y};
    if (rest.empty()) throw InvalidInput("rooted minimum degree over an empty vertex set");
    int best = Graph::kMaxOrder;
    for (Vertex v : rest) best = std::min(best, r.g.degree(v));
    return best;
}

}  // namespace cyclen
