#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclen/graph.hpp"
#include "cyclen/report.hpp"

namespace cyclen {

struct GeneratorOptions {
    // Keep only graphs of maximum degree <= max_degree (hereditary, so the
    // augmentation stays complete). -1 disables the bound.
    int max_degree = -1;
    // Built-in generation cap; larger orders come from graph6 corpora.
    int max_order = 9;
};

// One packed canonical code per isomorphism class on n vertices, ascending.
// Results are cached per (n, max_degree) for the life of the process.
const std::vector<std::uint64_t>& isomorphism_classes(int n, GeneratorOptions options = {});

// Representatives of the classes above, in the same order.
std::vector<Graph> generate_all_graphs(int n, GeneratorOptions options = {});

// Non-empty, non-'>>' lines of a graph6 file.
std::vector<Graph> read_graph6_corpus(const std::string& path);

enum class Claim { theorem3, construct, lemma4, lemma5, lemma6, lemma7, bondy_vince };

std::string to_string(Claim c);
Claim claim_from_string(const std::string& name);

struct CampaignSpec {
    Claim claim = Claim::theorem3;
    int n_min = 1;
    int n_max = 9;
    int k = 4;
    // Graphs to scan instead of the built-in generator (filtered by order).
    std::optional<std::string> corpus_path;
    std::optional<std::vector<Graph>> corpus;
    // construct only: restrict to triangle-free inputs.
    bool triangle_free_only = false;
    int threads = 0;  // 0: hardware concurrency
    GeneratorOptions generator;
};

struct Alarm {
    std::string graph6;  // no trailing newline
    std::string detail;
};

struct CampaignReport {
    std::string id;
    CampaignSpec spec;
    std::uint64_t scanned = 0;
    std::uint64_t satisfying = 0;  // hypothesis-satisfying instances (rooted instances for the path claims)
    std::uint64_t verified = 0;
    std::vector<Alarm> alarms;
    std::map<std::string, std::uint64_t> tallies;  // routes, proof fallbacks, ...
    double wall_seconds = 0;

    Json to_json() const;
};

// Every hypothesis-satisfying instance is checked; alarms never abort the
// scan. The report is identical across runs and thread counts except for
// wall_seconds.
CampaignReport run_campaign(const CampaignSpec& spec);

// Per-graph evaluation used by run_campaign; exposed for reproducing alarms.
struct GraphOutcome {
    std::uint64_t satisfying = 0;
    std::uint64_t verified = 0;
    std::vector<std::string> alarm_details;
    std::map<std::string, std::uint64_t> tallies;
};
GraphOutcome evaluate_claim(const Graph& g, const CampaignSpec& spec);

}  // namespace cyclen
