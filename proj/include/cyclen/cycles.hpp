#pragma once

#include <functional>
#include <map>
#include <vector>

#include "cyclen/graph.hpp"

namespace cyclen {

struct Cycle {
    std::vector<Vertex> vertices;  // v0 v1 ... v_{L-1}, closing edge v_{L-1} v0

    int length() const { return static_cast<int>(vertices.size()); }
    VertexSet vertex_set() const { return VertexSet::of(vertices); }
    // v_i with i read modulo the length.
    Vertex at(int i) const;
    bool operator==(const Cycle&) const = default;
};

// Length >= 3, distinct vertices, consecutive pairs and the wrap-around adjacent.
bool is_valid_cycle(const Graph& g, const Cycle& c);

// Rotate so the least vertex comes first and orient so that v1 < v_{L-1}.
Cycle normalized(Cycle c);

struct SpectrumOptions {
    int max_order = 16;  // hard ceiling 24 (memory is 2^n words)
};

struct SpectrumReport {
    struct Run {
        int start = 0;
        int len = 0;
    };

    std::vector<int> lengths;          // ascending
    std::map<int, Cycle> witnesses;    // one normalized cycle per length
    Run best_run;                      // longest block of consecutive lengths, least start on ties

    bool has_length(int length) const { return witnesses.contains(length); }
};

// Exact set of cycle lengths. Refuses graphs above options.max_order.
SpectrumReport cycle_spectrum(const Graph& g, SpectrumOptions options = {});

struct ConsecutiveVerdict {
    bool holds = false;
    std::vector<Cycle> cycles;  // lengths l, l+1, ..., l+k-1 with least l
};
ConsecutiveVerdict has_k_consecutive(const Graph& g, int k, SpectrumOptions options = {});
ConsecutiveVerdict k_consecutive_in(const SpectrumReport& spectrum, int k);

// Is G - V(C) connected? Spanning cycles are refused.
bool is_non_separating(const Graph& g, const Cycle& c);
// No chords.
bool is_induced_cycle(const Graph& g, const Cycle& c);

// Calls visit on every induced cycle of the given length, in normalized form
// and lexicographic order, until visit returns true. Returns whether it did.
bool for_each_induced_cycle(const Graph& g, int length, const std::function<bool(const Cycle&)>& visit);

// An odd, induced, non-separating cycle; least length, then least sequence.
// Requires g 3-connected and nonbipartite.
Cycle find_nonseparating_induced_odd_cycle(const Graph& g);

enum class OddCycleShape { triangle, spaced };

struct StructuredOddCycle {
    Cycle cycle;
    OddCycleShape shape;
};

// Every non-cut-vertex v of G - V(C) has at most two neighbours on C, and
// exactly two only as a pair {v_i, v_{i+2}}, indices modulo the length.
bool has_spaced_neighbor_pattern(const Graph& g, const Cycle& c);

// A non-separating induced odd cycle that is a triangle or has the spaced
// neighbour pattern. Requires minimum degree >= 4 and at least one
// non-separating induced odd cycle.
StructuredOddCycle select_structured_odd_cycle(const Graph& g);

}  // namespace cyclen
