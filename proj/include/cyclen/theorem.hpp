#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclen/cycles.hpp"
#include "cyclen/graph.hpp"
#include "cyclen/paths.hpp"

namespace cyclen {

// How a certificate was obtained.
//   constructive_case1  odd cycle C with G - V(C) 2-connected
//   constructive_case2  odd cycle C, end-block of G - V(C) plus a connector
//   triangle_fallback   g has a triangle; lengths come from the spectrum
//   claim1_fallback     a vertex off C sees two vertices of C; spectrum
//   spectrum            assembly failed for another reason; see diagnostic
enum class Route { constructive_case1, constructive_case2, triangle_fallback, claim1_fallback, spectrum };

std::string to_string(Route r);

struct ConsecutiveCyclesCertificate {
    int k = 0;
    std::vector<Cycle> cycles;  // lengths first_length() .. first_length()+k-1
    Route route = Route::spectrum;
    std::string diagnostic;

    // Provenance of the constructive routes.
    std::optional<Cycle> odd_cycle;
    std::optional<Path> short_arc;   // (v,u)-path over C of length s+2
    std::optional<Path> long_arc;    // (v,u)-path over C of length s+3
    std::optional<Path> connector;   // (u,x)-path in G2, case 2 only
    std::optional<PathFamily> family;
    std::vector<int> assembled_lengths;  // all 2k-4 concatenations

    int first_length() const { return cycles.empty() ? 0 : cycles.front().length(); }
};

// All cycles valid in g and of k consecutive lengths.
bool certificate_is_sound(const Graph& g, const ConsecutiveCyclesCertificate& cert);

struct Theorem3Hypotheses {
    bool three_connected = false;
    bool nonbipartite = false;
    bool min_degree_at_least_k = false;
    bool order_at_least_k_plus_2 = false;

    bool all() const { return three_connected && nonbipartite && min_degree_at_least_k && order_at_least_k_plus_2; }
};
Theorem3Hypotheses theorem3_hypotheses(const Graph& g, int k);

enum class Theorem3Status { holds, hypotheses_not_met, out_of_range, counterexample };

struct Theorem3Verdict {
    int k = 0;
    Theorem3Hypotheses hypotheses;
    Theorem3Status status = Theorem3Status::hypotheses_not_met;
    std::vector<Cycle> witnesses;
    std::optional<SpectrumReport> spectrum;
    std::string note;
};

struct VerifyOptions {
    // Test the k-cycle statement even for k < 4, where it is known to fail.
    bool probe = false;
    SpectrumOptions spectrum;
};

// Checks the hypotheses and, when they hold, whether g has k cycles of
// consecutive lengths. A negative answer is reported as a counterexample.
Theorem3Verdict verify_theorem3(const Graph& g, int k, VerifyOptions options = {});

// k in {4, 5}. Builds the cycles from a structured odd cycle and nice/good
// path families where the argument applies; falls back to the spectrum
// otherwise and records why.
ConsecutiveCyclesCertificate construct_consecutive_cycles(const Graph& g, int k, SpectrumOptions spectrum = {});

// Least i with N(v_i) meeting d1 - {x} and N(v_{i+s}) meeting g2, where the
// cycle has length 2s+1.
int claim2_index(const Graph& g, const Cycle& c, VertexSet d1, Vertex x, VertexSet g2);

}  // namespace cyclen
