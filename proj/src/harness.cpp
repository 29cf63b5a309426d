#include "cyclen/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>

#include "cyclen/canonical.hpp"
#include "cyclen/errors.hpp"
#include "cyclen/graph6.hpp"
#include "cyclen/structure.hpp"

namespace cyclen {

namespace {

// Runs fn(i) for i in [0, count) on `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
        });
}

// Children of one parent class: add a vertex whose degree is maximum in the
// child. Every graph arises this way from deleting a maximum-degree vertex.
void augment(const Graph& parent, int max_degree, std::vector<std::uint64_t>& out) {
    const int m = parent.order();
    std::vector<int> degree(m);
    int top = 0;
    for (Vertex v = 0; v < m; ++v) top = std::max(top, degree[v] = parent.degree(v));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        const int size = std::popcount(s);
        if (size < top || (max_degree >= 0 && size > max_degree)) continue;
        bool ok = true;
        for (Vertex v = 0; v < m && ok; ++v) {
            const int d = degree[v] + static_cast<int>((s >> v) & 1U);
            ok = d <= size && (max_degree < 0 || d <= max_degree);
        }
        if (!ok) continue;
        Graph child(m + 1);
        for (auto [a, b] : parent.edges()) child.add_edge(a, b);
        for (Vertex v : VertexSet(s)) child.add_edge(v, m);
        out.push_back(pack_upper_triangle(canonical_form(child)));
    }
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::vector<std::uint64_t>> cache;

}  // namespace

const std::vector<std::uint64_t>& isomorphism_classes(int n, GeneratorOptions options) {
    if (n < 1) throw InvalidInput("generator needs n >= 1");
    if (n > options.max_order || n > 11)
        throw Refused("built-in generation stops at n = " + std::to_string(std::min(options.max_order, 11)) +
                      "; ingest a graph6 corpus (e.g. from nauty's geng) for larger orders");
    const int bound = options.max_degree < 0 ? -1 : options.max_degree;
    std::lock_guard lock(cache_mutex);
    for (int m = 1; m <= n; ++m) {
        if (cache.contains({m, bound})) continue;
        if (m == 1) {
            cache[{1, bound}] = {0};
            continue;
        }
        const auto& parents = cache.at({m - 1, bound});
        std::vector<std::vector<std::uint64_t>> per_parent(parents.size());
        parallel_for(parents.size(), 0, [&](std::size_t i) {
            augment(unpack_upper_triangle(m - 1, parents[i]), bound, per_parent[i]);
        });
        std::vector<std::uint64_t> all;
        for (auto& chunk : per_parent) all.insert(all.end(), chunk.begin(), chunk.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        cache[{m, bound}] = std::move(all);
    }
    return cache.at({n, bound});
}

std::vector<Graph> generate_all_graphs(int n, GeneratorOptions options) {
    std::vector<Graph> out;
    for (std::uint64_t code : isomorphism_classes(n, options)) out.push_back(unpack_upper_triangle(n, code));
    return out;
}

std::vector<Graph> read_graph6_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open corpus file " + path);
    std::vector<Graph> out;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (line.empty() || line == "\r") continue;
        if (line.starts_with(">>") && !line.starts_with(">>graph6<<")) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(number) + ": " + e.what(), e.offset());
        }
    }
    return out;
}

std::string to_string(Claim c) {
    switch (c) {
        case Claim::theorem3: return "theorem3";
        case Claim::construct: return "construct";
        case Claim::lemma4: return "lemma4";
        case Claim::lemma5: return "lemma5";
        case Claim::lemma6: return "lemma6";
        case Claim::lemma7: return "lemma7";
        case Claim::bondy_vince: return "bondy-vince";
    }
    return "unknown";
}

Claim claim_from_string(const std::string& name) {
    for (Claim c : {Claim::theorem3, Claim::construct, Claim::lemma4, Claim::lemma5, Claim::lemma6, Claim::lemma7,
                    Claim::bondy_vince})
        if (to_string(c) == name) return c;
    throw InvalidInput("unknown claim '" + name +
                       "' (expected theorem3, construct, lemma4, lemma5, lemma6, lemma7 or bondy-vince)");
}

namespace {

bool three_connected_nonbipartite(const Graph& g) {
    return g.order() >= 4 && g.min_degree() >= 3 && !is_bipartite(g).bipartite && connectivity_at_least(g, 3).holds;
}

std::string describe(const Error& e) { return e.what(); }

void evaluate_rooted(const Graph& g, int min_degree, GraphOutcome& out, bool five) {
    // A rooted instance tolerates at most two vertices (the roots) below the bound.
    int low = 0;
    for (Vertex v = 0; v < g.order(); ++v) low += g.degree(v) < min_degree ? 1 : 0;
    if (low > 2 || g.order() < 3) return;

    for (Vertex x = 0; x < g.order(); ++x) {
        if (!triangle_free_within(g, g.vertices() - VertexSet::single(x))) continue;
        for (Vertex y = 0; y < g.order(); ++y) {
            if (y == x) continue;
            const RootedGraph r(g, x, y);
            if (!(five ? lemma5_violations(r) : lemma4_violations(r)).empty()) continue;
            ++out.satisfying;
            const std::string where = "x=" + std::to_string(x) + " y=" + std::to_string(y) + ": ";
            try {
                PathFamily family;
                if (five) {
                    family = three_good_paths(r);
                } else {
                    std::vector<std::string> trace;
                    family = two_nice_paths(r, {.follow_proof = true, .trace = &trace});
                    const bool fell_back = std::any_of(trace.begin(), trace.end(), [](const std::string& line) {
                        return line.starts_with("fallback");
                    });
                    ++out.tallies[fell_back ? "proof-fallback" : "proof-followed"];
                }
                // Independent oracle: brute-force path lengths must contain the family.
                const PathLengths oracle = g.order() <= 12 ? enumerate_xy_path_lengths(g, x, y)
                                                           : xy_path_lengths(g, x, y);
                bool agrees = true;
                for (const Path& p : family.paths) agrees = agrees && oracle.has(p.length());
                const bool oracle_has_family =
                    !(five ? pick_good_triple(oracle) : pick_nice_pair(oracle)).paths.empty();
                if (!agrees || !oracle_has_family) {
                    out.alarm_details.push_back(where + "family disagrees with the brute-force oracle");
                    continue;
                }
                ++out.verified;
            } catch (const Error& e) {
                out.alarm_details.push_back(where + describe(e));
            }
        }
    }
}

}  // namespace

GraphOutcome evaluate_claim(const Graph& g, const CampaignSpec& spec) {
    GraphOutcome out;
    auto alarm_or_verify = [&](bool ok, const std::string& detail) {
        if (ok)
            ++out.verified;
        else
            out.alarm_details.push_back(detail);
    };

    switch (spec.claim) {
        case Claim::theorem3: {
            if (g.order() < spec.k + 2 || g.min_degree() < spec.k || !three_connected_nonbipartite(g)) break;
            ++out.satisfying;
            try {
                const Theorem3Verdict v = verify_theorem3(g, spec.k, {.probe = true, .spectrum = {}});
                alarm_or_verify(v.status == Theorem3Status::holds,
                                "no " + std::to_string(spec.k) + " consecutive cycle lengths; spectrum " +
                                    to_json(*v.spectrum)["lengths"].dump());
            } catch (const Error& e) {
                out.alarm_details.push_back(describe(e));
            }
            break;
        }
        case Claim::construct: {
            if (g.order() < spec.k + 2 || g.min_degree() < spec.k || !three_connected_nonbipartite(g)) break;
            if (spec.triangle_free_only && !is_triangle_free(g).triangle_free) break;
            ++out.satisfying;
            try {
                const ConsecutiveCyclesCertificate cert = construct_consecutive_cycles(g, spec.k);
                ++out.tallies["route:" + to_string(cert.route)];
                const SpectrumReport spectrum = cycle_spectrum(g);
                bool in_spectrum = true;
                for (const Cycle& c : cert.cycles) in_spectrum = in_spectrum && spectrum.has_length(c.length());
                if (!certificate_is_sound(g, cert))
                    out.alarm_details.push_back("unsound certificate via " + to_string(cert.route));
                else if (!in_spectrum)
                    out.alarm_details.push_back("certificate lengths missing from the spectrum");
                else if (cert.route == Route::spectrum)
                    out.alarm_details.push_back("unattributed fallback: " + cert.diagnostic);
                else
                    ++out.verified;
            } catch (const Error& e) {
                out.alarm_details.push_back(describe(e));
            }
            break;
        }
        case Claim::lemma4: evaluate_rooted(g, 3, out, false); break;
        case Claim::lemma5: evaluate_rooted(g, 4, out, true); break;
        case Claim::lemma6: {
            if (!three_connected_nonbipartite(g)) break;
            ++out.satisfying;
            try {
                const Cycle c = find_nonseparating_induced_odd_cycle(g);
                ++out.tallies["length:" + std::to_string(c.length())];
                ++out.verified;
            } catch (const Error& e) {
                out.alarm_details.push_back(describe(e));
            }
            break;
        }
        case Claim::lemma7: {
            if (g.min_degree() < 4 || !three_connected_nonbipartite(g)) break;
            ++out.satisfying;
            try {
                const StructuredOddCycle c = select_structured_odd_cycle(g);
                const bool spaced = c.shape == OddCycleShape::spaced;
                ++out.tallies[spaced ? "shape:spaced" : "shape:triangle"];
                alarm_or_verify(!spaced || has_spaced_neighbor_pattern(g, c.cycle),
                                "spaced cycle fails the neighbour-pattern audit");
            } catch (const Error& e) {
                out.alarm_details.push_back(describe(e));
            }
            break;
        }
        case Claim::bondy_vince: {
            if (!three_connected_nonbipartite(g)) break;
            ++out.satisfying;
            try {
                alarm_or_verify(has_k_consecutive(g, 2).holds, "no two cycles of consecutive lengths");
            } catch (const Error& e) {
                out.alarm_details.push_back(describe(e));
            }
            break;
        }
    }
    return out;
}

CampaignReport run_campaign(const CampaignSpec& spec) {
    const auto started = std::chrono::steady_clock::now();
    if (spec.n_min > spec.n_max) throw InvalidInput("empty order range");
    if ((spec.claim == Claim::construct) && spec.k != 4 && spec.k != 5)
        throw InvalidInput("construct campaigns need k = 4 or 5");

    CampaignReport report;
    report.spec = spec;
    report.id = to_string(spec.claim) + ":n=" + std::to_string(spec.n_min) + ".." + std::to_string(spec.n_max);
    if (spec.claim == Claim::theorem3 || spec.claim == Claim::construct) report.id += ":k=" + std::to_string(spec.k);
    if (spec.triangle_free_only) report.id += ":triangle-free";
    if (spec.corpus_path) report.id += ":corpus=" + *spec.corpus_path;

    std::vector<Graph> graphs;
    auto keep = [&](const std::vector<Graph>& source) {
        for (const Graph& g : source)
            if (g.order() >= spec.n_min && g.order() <= spec.n_max) graphs.push_back(g);
    };
    if (spec.corpus) keep(*spec.corpus);
    if (spec.corpus_path) keep(read_graph6_corpus(*spec.corpus_path));
    if (!spec.corpus && !spec.corpus_path)
        for (int n = std::max(spec.n_min, 1); n <= spec.n_max; ++n) {
            for (std::uint64_t code : isomorphism_classes(n, spec.generator))
                graphs.push_back(unpack_upper_triangle(n, code));
        }

    std::vector<GraphOutcome> outcomes(graphs.size());
    parallel_for(graphs.size(), spec.threads, [&](std::size_t i) { outcomes[i] = evaluate_claim(graphs[i], spec); });

    report.scanned = graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const GraphOutcome& o = outcomes[i];
        report.satisfying += o.satisfying;
        report.verified += o.verified;
        for (const auto& [name, count] : o.tallies) report.tallies[name] += count;
        if (o.alarm_details.empty()) continue;
        std::string g6 = emit_graph6(graphs[i]);
        g6.pop_back();
        for (const auto& d : o.alarm_details) report.alarms.push_back({g6, d});
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

Json CampaignReport::to_json() const {
    Json filter{{"claim", cyclen::to_string(spec.claim)}, {"n_min", spec.n_min}, {"n_max", spec.n_max}};
    if (spec.claim == Claim::theorem3 || spec.claim == Claim::construct) filter["k"] = spec.k;
    filter["corpus"] = spec.corpus_path ? Json(*spec.corpus_path) : Json(nullptr);
    if (spec.triangle_free_only) filter["triangle_free_only"] = true;
    if (spec.generator.max_degree >= 0) filter["max_degree"] = spec.generator.max_degree;

    Json alarm_list = Json::array();
    for (const Alarm& a : alarms) alarm_list.push_back({{"graph6", a.graph6}, {"detail", a.detail}});
    return Json{{"schema", "1"},
                {"campaign", id},
                {"filter", filter},
                {"counts",
                 {{"scanned", scanned}, {"satisfying", satisfying}, {"verified", verified}, {"alarms", alarms.size()}}},
                {"tallies", tallies},
                {"alarms", alarm_list},
                {"wall_time_s", wall_seconds}};
}

}  // namespace cyclen
