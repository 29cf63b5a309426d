#include "cyclen/theorem.hpp"

#include <algorithm>

#include "cyclen/errors.hpp"
#include "cyclen/structure.hpp"

namespace cyclen {

std::string to_string(Route r) {
    switch (r) {
        case Route::constructive_case1: return "constructive-case1";
        case Route::constructive_case2: return "constructive-case2";
        case Route::triangle_fallback: return "triangle-fallback";
        case Route::claim1_fallback: return "claim1-fallback";
        case Route::spectrum: return "spectrum";
    }
    return "unknown";
}

bool certificate_is_sound(const Graph& g, const ConsecutiveCyclesCertificate& cert) {
    if (static_cast<int>(cert.cycles.size()) != cert.k || cert.k < 1) return false;
    for (std::size_t i = 0; i < cert.cycles.size(); ++i) {
        if (!is_valid_cycle(g, cert.cycles[i])) return false;
        if (cert.cycles[i].length() != cert.first_length() + static_cast<int>(i)) return false;
    }
    return true;
}

Theorem3Hypotheses theorem3_hypotheses(const Graph& g, int k) {
    Theorem3Hypotheses h;
    h.order_at_least_k_plus_2 = g.order() >= k + 2;
    h.min_degree_at_least_k = g.order() > 0 && g.min_degree() >= k;
    h.nonbipartite = !is_bipartite(g).bipartite;
    h.three_connected = g.order() >= 4 && connectivity_at_least(g, 3).holds;
    return h;
}

Theorem3Verdict verify_theorem3(const Graph& g, int k, VerifyOptions options) {
    if (k < 1) throw InvalidInput("k must be at least 1");
    Theorem3Verdict v;
    v.k = k;
    v.hypotheses = theorem3_hypotheses(g, k);

    if (k < 4 && !options.probe) {
        v.status = Theorem3Status::out_of_range;
        v.note = "k = " + std::to_string(k) + " is outside the theorem's range k >= 4";
        if (g.order() <= options.spectrum.max_order) {
            v.spectrum = cycle_spectrum(g, options.spectrum);
            const bool has = k_consecutive_in(*v.spectrum, k).holds;
            v.note += has ? "; the graph does contain " : "; the graph does not contain ";
            v.note += std::to_string(k) + " cycles of consecutive lengths (longest run " +
                      std::to_string(v.spectrum->best_run.len) + ")";
        }
        return v;
    }
    if (!v.hypotheses.all()) {
        v.status = Theorem3Status::hypotheses_not_met;
        std::string missing;
        auto add = [&](bool ok, const char* name) {
            if (!ok) missing += (missing.empty() ? "" : ", ") + std::string(name);
        };
        add(v.hypotheses.three_connected, "3-connected");
        add(v.hypotheses.nonbipartite, "nonbipartite");
        add(v.hypotheses.min_degree_at_least_k, "minimum degree >= k");
        add(v.hypotheses.order_at_least_k_plus_2, "order >= k+2");
        v.note = "hypotheses not met: " + missing;
        return v;
    }
    v.spectrum = cycle_spectrum(g, options.spectrum);
    const ConsecutiveVerdict found = k_consecutive_in(*v.spectrum, k);
    v.status = found.holds ? Theorem3Status::holds : Theorem3Status::counterexample;
    v.witnesses = found.cycles;
    if (!found.holds)
        v.note = "COUNTEREXAMPLE: hypotheses hold but no " + std::to_string(k) + " cycles of consecutive lengths";
    return v;
}

int claim2_index(const Graph& g, const Cycle& c, VertexSet d1, Vertex x, VertexSet g2) {
    if (!is_valid_cycle(g, c) || c.length() % 2 == 0) throw InvalidInput("the index search needs an odd cycle of the graph");
    g.check_set(d1);
    g.check_set(g2);
    if (d1.empty() || g2.empty()) throw InvalidInput("the index search needs a nonempty end-block and remainder");
    if (!d1.contains(x) || !g2.contains(x) || (d1 & g2) != VertexSet::single(x))
        throw InvalidInput("end-block and remainder must meet exactly in the cut-vertex");
    if (!(c.vertex_set() & (d1 | g2)).empty()) throw InvalidInput("end-block and remainder must avoid the cycle");

    const int s = (c.length() - 1) / 2;
    const VertexSet d1_inner = d1 - VertexSet::single(x);
    for (int i = 0; i < c.length(); ++i)
        if (!(g.neighbors(c.at(i)) & d1_inner).empty() && !(g.neighbors(c.at(i + s)) & g2).empty()) return i;
    throw InternalContradiction("no cycle index reaches both the end-block and the remainder");
}

namespace {

std::vector<Vertex> arc(const Cycle& c, int from, int steps, int dir) {
    std::vector<Vertex> out;
    for (int t = 0; t <= steps; ++t) out.push_back(c.at(from + dir * t));
    return out;
}

PathFamily family_in(const Graph& g, VertexSet part, Vertex a, Vertex b, int k) {
    const Derived sub = induced_subgraph(g, part);
    const RootedGraph r(sub.graph, sub.image_of(a), sub.image_of(b));
    PathFamily f = k == 4 ? two_nice_paths(r) : three_good_paths(r);
    for (Path& p : f.paths)
        for (Vertex& v : p.vertices) v = sub.origin[v];
    return f;
}

ConsecutiveCyclesCertificate from_spectrum(const Graph& g, int k, Route route, std::string diagnostic,
                                           SpectrumOptions spectrum) {
    ConsecutiveCyclesCertificate cert;
    cert.k = k;
    cert.route = route;
    cert.diagnostic = std::move(diagnostic);
    const ConsecutiveVerdict v = has_k_consecutive(g, k, spectrum);
    if (!v.holds)
        throw InternalContradiction("hypotheses hold but the spectrum has no " + std::to_string(k) +
                                    " consecutive lengths");
    cert.cycles = v.cycles;
    return cert;
}

// Glue each arc to each family path through the optional connector and pick
// the least window of k consecutive lengths among the results.
bool assemble(ConsecutiveCyclesCertificate& cert, const Graph& g) {
    std::vector<Cycle> made;
    for (const Path* q : {&*cert.short_arc, &*cert.long_arc}) {
        for (const Path& p : cert.family->paths) {
            std::vector<Vertex> seq = q->vertices;  // v ... u
            if (cert.connector)
                seq.insert(seq.end(), cert.connector->vertices.begin() + 1, cert.connector->vertices.end());  // ... x
            // Family paths run from the current tip back to v; drop both ends.
            seq.insert(seq.end(), p.vertices.begin() + 1, p.vertices.end() - 1);
            made.push_back(Cycle{seq});
        }
    }
    cert.assembled_lengths.clear();
    for (const Cycle& c : made) {
        if (!is_valid_cycle(g, c)) return false;
        cert.assembled_lengths.push_back(c.length());
    }
    std::vector<int> sorted = cert.assembled_lengths;
    std::sort(sorted.begin(), sorted.end());
    for (int start : sorted) {
        std::vector<Cycle> window;
        for (int len = start; len < start + cert.k; ++len) {
            auto it = std::find_if(made.begin(), made.end(), [&](const Cycle& c) { return c.length() == len; });
            if (it == made.end()) break;
            window.push_back(*it);
        }
        if (static_cast<int>(window.size()) == cert.k) {
            cert.cycles = std::move(window);
            return true;
        }
    }
    return false;
}

}  // namespace

ConsecutiveCyclesCertificate construct_consecutive_cycles(const Graph& g, int k, SpectrumOptions spectrum) {
    if (k != 4 && k != 5)
        throw InvalidInput("the constructive engine covers k = 4 and k = 5 only; k >= 6 is a separate theorem");
    const Theorem3Hypotheses h = theorem3_hypotheses(g, k);
    if (!h.three_connected) throw HypothesisError("3-connected", "");
    if (!h.nonbipartite) throw HypothesisError("nonbipartite", "");
    if (!h.min_degree_at_least_k) throw HypothesisError("minimum degree >= k", "");
    if (!h.order_at_least_k_plus_2) throw HypothesisError("order >= k+2", "");

    if (const auto t = is_triangle_free(g); !t.triangle_free) {
        const auto [a, b, c] = *t.triangle;
        return from_spectrum(g, k, Route::triangle_fallback,
                             "triangle " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c),
                             spectrum);
    }

    const StructuredOddCycle chosen = select_structured_odd_cycle(g);
    const Cycle& c = chosen.cycle;
    const int s = (c.length() - 1) / 2;
    const VertexSet rest = g.vertices() - c.vertex_set();
    auto sees_two = [&](VertexSet pool) -> std::optional<Vertex> {
        for (Vertex v : pool)
            if ((g.neighbors(v) & c.vertex_set()).size() == 2) return v;
        return std::nullopt;
    };

    ConsecutiveCyclesCertificate cert;
    cert.k = k;
    cert.odd_cycle = c;
    const bool two_connected = rest.size() >= 3 && cut_vertices_within(g, rest).empty();

    try {
        if (two_connected) {
            if (auto v = sees_two(rest))
                return from_spectrum(g, k, Route::claim1_fallback,
                                     "vertex " + std::to_string(*v) + " has two neighbours on the odd cycle", spectrum);
            cert.route = Route::constructive_case1;
            const VertexSet vs = g.neighbors(c.at(0)) & rest;
            if (vs.empty()) throw InternalContradiction("case 1: v_0 has no neighbour off the cycle");
            const Vertex v = vs.first();
            const VertexSet us = (g.neighbors(c.at(s)) & rest) - VertexSet::single(v);
            if (us.empty()) throw InternalContradiction("case 1: no attachment at v_s distinct from v");
            const Vertex u = us.first();
            cert.short_arc = Path{[&] { auto a = arc(c, 0, s, +1); a.insert(a.begin(), v); a.push_back(u); return a; }()};
            cert.long_arc = Path{[&] { auto a = arc(c, 0, s + 1, -1); a.insert(a.begin(), v); a.push_back(u); return a; }()};
            cert.family = family_in(g, rest, u, v, k);
        } else {
            const Derived sub = induced_subgraph(g, rest);
            const BlockTree tree = block_cutvertex_tree(sub.graph);
            auto lift = [&](VertexSet local) {
                VertexSet out;
                for (Vertex w : local) out.insert(sub.origin[w]);
                return out;
            };
            for (const auto& end : tree.end_blocks) {
                const VertexSet inner = lift(tree.blocks[end.block]) - VertexSet::single(sub.origin[end.cut_vertex]);
                if (auto v = sees_two(inner))
                    return from_spectrum(g, k, Route::claim1_fallback,
                                         "vertex " + std::to_string(*v) + " of an end-block has two neighbours on the odd cycle",
                                         spectrum);
            }
            cert.route = Route::constructive_case2;
            const auto& end = tree.end_blocks.front();
            const VertexSet d1 = lift(tree.blocks[end.block]);
            const Vertex x = sub.origin[end.cut_vertex];
            const VertexSet g2 = rest - (d1 - VertexSet::single(x));
            const int i = claim2_index(g, c, d1, x, g2);
            const Vertex v = (g.neighbors(c.at(i)) & (d1 - VertexSet::single(x))).first();
            const Vertex u = (g.neighbors(c.at(i + s)) & g2).first();
            cert.short_arc = Path{[&] { auto a = arc(c, i, s, +1); a.insert(a.begin(), v); a.push_back(u); return a; }()};
            cert.long_arc = Path{[&] { auto a = arc(c, i, s + 1, -1); a.insert(a.begin(), v); a.push_back(u); return a; }()};
            cert.connector = shortest_path(g, u, x, g2);
            if (!cert.connector) throw InternalContradiction("case 2: remainder is disconnected");
            cert.family = family_in(g, d1, x, v, k);
        }
        if (!assemble(cert, g))
            throw InternalContradiction("assembled cycles hold no " + std::to_string(k) + " consecutive lengths");
    } catch (const Error& e) {
        // Hypothesis failures of the path finders and assembly gaps land here.
        return from_spectrum(g, k, Route::spectrum, std::string("assembly failed: ") + e.what(), spectrum);
    }
    if (!certificate_is_sound(g, cert))
        return from_spectrum(g, k, Route::spectrum, "assembled certificate failed validation", spectrum);
    return cert;
}

}  // namespace cyclen
