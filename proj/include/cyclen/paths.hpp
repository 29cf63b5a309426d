#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclen/graph.hpp"
#include "cyclen/structure.hpp"

namespace cyclen {

struct Path {
    std::vector<Vertex> vertices;  // x = p0, p1, ..., pL = y

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    VertexSet vertex_set() const { return VertexSet::of(vertices); }
    bool operator==(const Path&) const = default;
};

// Length >= 1, distinct vertices, consecutive vertices adjacent.
bool is_valid_path(const Graph& g, const Path& p);

enum class FamilyKind { nice, good };

struct PathFamily {
    std::vector<Path> paths;  // ascending length
    FamilyKind kind = FamilyKind::nice;
};

// Lengths form an arithmetic progression with difference 2 starting at >= 2.
bool lengths_are_nice(std::vector<int> lengths);
// Three distinct lengths >= 2 that are nice or whose successive gaps are {1, 2}.
bool lengths_are_good(std::array<int, 3> lengths);

// Paths must share their endpoint pair, else InvalidInput.
bool is_nice(std::span<const Path> family);

struct GoodTripleVerdict {
    bool good = false;
    bool via_nice = false;
    std::array<Path, 3> sorted;  // longest first
};
GoodTripleVerdict is_good_triple(const Path& p1, const Path& p2, const Path& p3);

// Every length realized by an (x,y)-path, with one witness each.
struct PathLengths {
    std::map<int, Path> witnesses;

    std::vector<int> lengths() const;
    bool has(int length) const { return witnesses.contains(length); }
};

// Brute-force backtracking over all (x,y)-paths. Refuses graphs above cap.
PathLengths enumerate_xy_path_lengths(const Graph& g, Vertex x, Vertex y, int cap = 12);

// Subset dynamic programme over interior vertex sets; exact up to cap
// (memory 2^(n-2) words).
PathLengths xy_path_lengths(const Graph& g, Vertex x, Vertex y, int cap = 22);

// Hypotheses as a named list of failures; empty means all hold.
std::vector<std::string> lemma4_violations(const RootedGraph& r);
std::vector<std::string> lemma5_violations(const RootedGraph& r);

struct NicePathOptions {
    // Follow the inductive proof (4-cycle case / contraction case) instead of
    // searching directly. The result is validated either way, and a failed
    // step falls back to search with a note in the trace.
    bool follow_proof = false;
    std::vector<std::string>* trace = nullptr;
};

// Two nice (x,y)-paths; requires G - x triangle-free, (G,x,y) 2-connected and
// rooted minimum degree >= 3.
PathFamily two_nice_paths(const RootedGraph& r, NicePathOptions options = {});

// Three good (x,y)-paths; requires G - x triangle-free, (G,x,y) 2-connected
// and rooted minimum degree >= 4.
PathFamily three_good_paths(const RootedGraph& r);

// Shortest (from,to)-path inside `within` by BFS; a single vertex when
// from == to. Empty when `to` is unreachable.
std::optional<Path> shortest_path(const Graph& g, Vertex from, Vertex to, VertexSet within);

// Picks from a length table; the family is empty when nothing fits.
PathFamily pick_nice_pair(const PathLengths& table);
PathFamily pick_good_triple(const PathLengths& table);

}  // namespace cyclen
