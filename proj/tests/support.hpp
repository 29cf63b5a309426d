#pragma once

// Independent brute-force oracles and fixtures shared by the unit tests and
// the acceptance suite. Nothing here calls the library's search routines.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cyclen/graph.hpp"

namespace oracle {

using cyclen::Graph;
using cyclen::Vertex;
using cyclen::VertexSet;

// Cycle lengths by trying every vertex subset and every cyclic order of it
// (first vertex fixed at the subset minimum). Fine for n <= 9.
inline std::set<int> cycle_lengths(const Graph& g) {
    std::set<int> out;
    const int n = g.order();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet s(mask);
        if (s.size() < 3) continue;
        std::vector<Vertex> order = s.to_vector();
        bool found = false;
        do {
            bool ok = true;
            for (std::size_t i = 0; i < order.size() && ok; ++i)
                ok = g.adjacent(order[i], order[(i + 1) % order.size()]);
            found = ok;
        } while (!found && std::next_permutation(order.begin() + 1, order.end()));
        if (found) out.insert(s.size());
    }
    return out;
}

inline bool connected_after_removing(const Graph& g, VertexSet removed) {
    const VertexSet rest = g.vertices() - removed;
    if (rest.empty()) return true;
    VertexSet seen = VertexSet::single(rest.first());
    std::vector<Vertex> stack{rest.first()};
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : (g.neighbors(v) & rest) - seen) {
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return seen == rest;
}

// k-connected: more than k vertices and no separator of size < k.
inline bool k_connected(const Graph& g, int k) {
    if (g.order() <= k) return false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
        if (std::popcount(mask) < k && !connected_after_removing(g, VertexSet(mask))) return false;
    return true;
}

inline bool has_triangle(const Graph& g, VertexSet within) {
    for (Vertex a : within)
        for (Vertex b : within)
            for (Vertex c : within)
                if (a < b && b < c && g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
    return false;
}

inline bool bipartite(const Graph& g) {
    const int n = g.order();
    for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
        bool ok = true;
        for (auto [u, v] : g.edges()) ok = ok && (((side >> u) ^ (side >> v)) & 1U);
        if (ok) return true;
    }
    return false;
}

// All (x,y)-path lengths by plain DFS.
inline std::set<int> xy_lengths(const Graph& g, Vertex x, Vertex y) {
    std::set<int> out;
    std::vector<Vertex> path{x};
    VertexSet used = VertexSet::single(x);
    auto dfs = [&](auto&& self, Vertex v) -> void {
        if (v == y) {
            out.insert(static_cast<int>(path.size()) - 1);
            return;
        }
        for (Vertex w : g.neighbors(v) - used) {
            used.insert(w);
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used.erase(w);
        }
    };
    dfs(dfs, x);
    return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Graph permuted(const Graph& g, std::mt19937_64& rng) {
    std::vector<Vertex> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(p[u], p[v]);
    return h;
}

// Isomorphism by trying every bijection (n <= 8).
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<Vertex> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges()) ok = ok && b.adjacent(p[u], p[v]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace oracle

namespace fixture {

// Triangle-free, 3-connected, nonbipartite instances in which no vertex off
// the selected 5-cycle 0..4 sees two of its vertices, so the constructive
// routes apply. Built as C5 attached to a bipartite remainder.
//
// C5 + K(4,6), min degree 4, remainder 2-connected.
inline const char* const case1_k4 = "NheAIGSD?W@__~G~C^_";
// C5 + two K(3,3) sharing one vertex, min degree 4, remainder has a cut-vertex.
inline const char* const case2_k4 = "Ohc@GgK_yFO_P?B?C?w_M";
// C5 + K(6,9), min degree 5.
inline const char* const case1_k5 = "SheAIHCD?gA_B?B?@_CF~_~wb~`F~@F~?";
// C5 + two K(4,4) sharing one vertex, min degree 5.
inline const char* const case2_k5 = "ShcKIICP?fc]C{H?C_?g?`??G@y?BoOBo";

// A 5-cycle on 0..4 attached to a random bipartite remainder on sides
// [5, 5+a) and [5+a, 5+a+b). Cycle vertex i gets `per_vertex` neighbours on one
// side, and every remainder vertex sees at most one cycle vertex, so the result
// is triangle-free. Hypotheses still have to be checked by the caller.
inline cyclen::Graph c5_over_bipartite(int a, int b, double p, int per_vertex, std::mt19937_64& rng) {
    using cyclen::Vertex;
    cyclen::Graph g(5 + a + b);
    for (Vertex i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 5; u < 5 + a; ++u)
        for (Vertex v = 5 + a; v < 5 + a + b; ++v)
            if (coin(rng)) g.add_edge(u, v);
    std::vector<Vertex> left, right;
    for (Vertex u = 5; u < 5 + a; ++u) left.push_back(u);
    for (Vertex v = 5 + a; v < 5 + a + b; ++v) right.push_back(v);
    std::shuffle(left.begin(), left.end(), rng);
    std::shuffle(right.begin(), right.end(), rng);
    for (Vertex i = 0; i < 5; ++i) {
        auto& side = (rng() & 1U) ? left : right;
        auto& other = &side == &left ? right : left;
        auto& pick = static_cast<int>(side.size()) >= per_vertex ? side : other;
        for (int t = 0; t < per_vertex && !pick.empty(); ++t) {
            g.add_edge(i, pick.back());
            pick.pop_back();
        }
    }
    return g;
}

// As above, but the remainder is two random bipartite blocks on sides
// (a, b) glued at one cut-vertex; cycle neighbours avoid the cut-vertex.
inline cyclen::Graph c5_over_two_blocks(int a, int b, double p, int per_vertex, std::mt19937_64& rng) {
    using cyclen::Vertex;
    const int block = a + b;
    cyclen::Graph g(5 + 2 * block - 1);
    for (Vertex i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    std::bernoulli_distribution coin(p);
    const Vertex x = 5 + block - 1;
    for (Vertex base : {5, x}) {
        // Vertex base + j is on side 0 for j < a; the glued vertex is the last of
        // the first block and the first of the second.
        for (int i = 0; i < a; ++i)
            for (int j = a; j < block; ++j)
                if (coin(rng)) g.add_edge(base + i, base + j);
    }
    std::vector<Vertex> free;
    for (Vertex v = 5; v < g.order(); ++v)
        if (v != x) free.push_back(v);
    std::shuffle(free.begin(), free.end(), rng);
    for (Vertex i = 0; i < 5; ++i) {
        std::vector<Vertex> chosen;
        for (auto it = free.begin(); it != free.end() && static_cast<int>(chosen.size()) < per_vertex;) {
            const bool clash = std::any_of(chosen.begin(), chosen.end(), [&](Vertex c) { return g.adjacent(c, *it); });
            if (clash) {
                ++it;
                continue;
            }
            chosen.push_back(*it);
            it = free.erase(it);
        }
        for (Vertex c : chosen) g.add_edge(i, c);
    }
    return g;
}

}  // namespace fixture
