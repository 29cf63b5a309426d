#include "cyclen/cycles.hpp"

#include <algorithm>
#include <optional>

#include "cyclen/errors.hpp"
#include "cyclen/structure.hpp"

namespace cyclen {

namespace {

constexpr int kSpectrumCeiling = 24;

// Walk back through the path table from (mask, end) to the start vertex.
std::vector<Vertex> rebuild_path(const Graph& g, const std::vector<VertexSet>& paths, std::uint64_t mask, Vertex end) {
    std::vector<Vertex> seq{end};
    Vertex cur = end;
    while (std::popcount(mask) > 1) {
        mask &= ~(std::uint64_t{1} << cur);
        const VertexSet prev = paths[mask] & g.neighbors(cur);
        cur = prev.first();
        seq.push_back(cur);
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

}  // namespace

Vertex Cycle::at(int i) const {
    const int len = length();
    return vertices[static_cast<std::size_t>(((i % len) + len) % len)];
}

bool is_valid_cycle(const Graph& g, const Cycle& c) {
    if (c.length() < 3) return false;
    VertexSet seen;
    for (Vertex v : c.vertices) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 0; i < c.length(); ++i)
        if (!g.adjacent(c.at(i), c.at(i + 1))) return false;
    return true;
}

Cycle normalized(Cycle c) {
    auto least = std::min_element(c.vertices.begin(), c.vertices.end());
    std::rotate(c.vertices.begin(), least, c.vertices.end());
    if (c.vertices.size() > 2 && c.vertices[1] > c.vertices.back())
        std::reverse(c.vertices.begin() + 1, c.vertices.end());
    return c;
}

SpectrumReport cycle_spectrum(const Graph& g, SpectrumOptions options) {
    const int n = g.order();
    const int cap = std::min(options.max_order, kSpectrumCeiling);
    if (n > cap)
        throw Refused("exact spectrum is limited to " + std::to_string(cap) + " vertices (got " + std::to_string(n) +
                      "); raise the cap up to " + std::to_string(kSpectrumCeiling) + " if memory allows");

    SpectrumReport report;
    // paths[mask]: end vertices of paths that start at the least vertex of
    // mask, use only vertices above it, and visit exactly mask.
    std::vector<VertexSet> paths(std::size_t{1} << n);
    for (Vertex s = 0; s < n; ++s) paths[std::uint64_t{1} << s] = VertexSet::single(s);

    int missing = std::max(0, n - 2);
    for (std::uint64_t mask = 1; mask < paths.size() && missing > 0; ++mask) {
        const VertexSet ends = paths[mask];
        if (ends.empty()) continue;
        const Vertex s = std::countr_zero(mask);
        const int len = std::popcount(mask);
        const VertexSet above = VertexSet(~((std::uint64_t{2} << s) - 1));
        if (len >= 3 && !report.witnesses.contains(len)) {
            const VertexSet closing = ends & g.neighbors(s);
            if (!closing.empty()) {
                report.witnesses.emplace(len, normalized(Cycle{rebuild_path(g, paths, mask, closing.first())}));
                --missing;
            }
        }
        for (Vertex v : ends) {
            const VertexSet next = (g.neighbors(v) & above) - VertexSet(mask);
            for (Vertex w : next) paths[mask | (std::uint64_t{1} << w)].insert(w);
        }
    }

    for (const auto& [len, _] : report.witnesses) report.lengths.push_back(len);
    for (std::size_t i = 0; i < report.lengths.size();) {
        std::size_t j = i + 1;
        while (j < report.lengths.size() && report.lengths[j] == report.lengths[j - 1] + 1) ++j;
        const int run = static_cast<int>(j - i);
        if (run > report.best_run.len) report.best_run = {report.lengths[i], run};
        i = j;
    }
    return report;
}

ConsecutiveVerdict k_consecutive_in(const SpectrumReport& spectrum, int k) {
    if (k < 1) throw InvalidInput("k must be at least 1");
    for (int start : spectrum.lengths) {
        bool window = true;
        for (int len = start; len < start + k && window; ++len) window = spectrum.has_length(len);
        if (!window) continue;
        ConsecutiveVerdict v{true, {}};
        for (int len = start; len < start + k; ++len) v.cycles.push_back(spectrum.witnesses.at(len));
        return v;
    }
    return {};
}

ConsecutiveVerdict has_k_consecutive(const Graph& g, int k, SpectrumOptions options) {
    if (k < 1) throw InvalidInput("k must be at least 1");
    return k_consecutive_in(cycle_spectrum(g, options), k);
}

bool is_non_separating(const Graph& g, const Cycle& c) {
    if (!is_valid_cycle(g, c)) throw InvalidInput("not a cycle of the graph");
    const VertexSet rest = g.vertices() - c.vertex_set();
    if (rest.empty()) throw InvalidInput("spanning cycle leaves no remainder to be connected");
    return connected_within(g, rest);
}

bool is_induced_cycle(const Graph& g, const Cycle& c) {
    if (!is_valid_cycle(g, c)) throw InvalidInput("not a cycle of the graph");
    const VertexSet on = c.vertex_set();
    int twice = 0;
    for (Vertex v : on) twice += (g.neighbors(v) & on).size();
    return twice == 2 * c.length();
}

bool for_each_induced_cycle(const Graph& g, int length, const std::function<bool(const Cycle&)>& visit) {
    const int n = g.order();
    if (length < 3 || length > n) return false;
    std::vector<Vertex> path(static_cast<std::size_t>(length));

    // interior: neighbours of p_1..p_{j-2}, which p_j must avoid.
    std::function<bool(int, VertexSet, VertexSet, VertexSet)> extend = [&](int j, VertexSet used, VertexSet interior,
                                                                           VertexSet allowed) -> bool {
        const Vertex s = path[0];
        const Vertex last = path[static_cast<std::size_t>(j - 1)];
        VertexSet options = (g.neighbors(last) & allowed) - used - interior;
        if (j == length - 1) {
            options &= g.neighbors(s);
            for (Vertex w : options) {
                if (w < path[1]) continue;  // each cycle once, in normalized orientation
                path[static_cast<std::size_t>(j)] = w;
                if (visit(Cycle{path})) return true;
            }
            return false;
        }
        if (j > 1) options -= g.neighbors(s);
        for (Vertex w : options) {
            path[static_cast<std::size_t>(j)] = w;
            const VertexSet next_interior = j >= 2 ? interior | g.neighbors(last) : interior;
            if (extend(j + 1, used | VertexSet::single(w), next_interior, allowed)) return true;
        }
        return false;
    };

    for (Vertex s = 0; s + length <= n; ++s) {
        path[0] = s;
        const VertexSet allowed = VertexSet(~((std::uint64_t{2} << s) - 1)) & g.vertices();
        if (extend(1, VertexSet::single(s), {}, allowed)) return true;
    }
    return false;
}

Cycle find_nonseparating_induced_odd_cycle(const Graph& g) {
    if (g.order() < 4 || !connectivity_at_least(g, 3).holds)
        throw HypothesisError("3-connected", "graph of order " + std::to_string(g.order()));
    if (is_bipartite(g).bipartite) throw HypothesisError("nonbipartite", "");

    std::optional<Cycle> found;
    for (int len = 3; len < g.order() && !found; len += 2) {
        for_each_induced_cycle(g, len, [&](const Cycle& c) {
            if (!connected_within(g, g.vertices() - c.vertex_set())) return false;
            found = c;
            return true;
        });
    }
    if (!found)
        throw InternalContradiction("no non-separating induced odd cycle in a 3-connected nonbipartite graph");
    const Cycle& c = *found;
    if (!is_valid_cycle(g, c) || c.length() % 2 == 0 || !is_induced_cycle(g, c) || !is_non_separating(g, c))
        throw InternalContradiction("selected odd cycle failed re-validation");
    return c;
}

bool has_spaced_neighbor_pattern(const Graph& g, const Cycle& c) {
    const VertexSet rest = g.vertices() - c.vertex_set();
    const VertexSet cuts = cut_vertices_within(g, rest);
    const int len = c.length();
    std::vector<int> index(g.order(), -1);
    for (int i = 0; i < len; ++i) index[c.at(i)] = i;
    for (Vertex v : rest - cuts) {
        const VertexSet on = g.neighbors(v) & c.vertex_set();
        if (on.size() > 2) return false;
        if (on.size() == 2) {
            const auto both = on.to_vector();
            const int gap = ((index[both[1]] - index[both[0]]) % len + len) % len;
            if (gap != 2 && gap != len - 2) return false;
        }
    }
    return true;
}

StructuredOddCycle select_structured_odd_cycle(const Graph& g) {
    if (g.min_degree() < 4) throw HypothesisError("minimum degree >= 4", "found " + std::to_string(g.min_degree()));

    bool any_candidate = false;
    std::optional<StructuredOddCycle> found;
    for (int len = 3; len < g.order() && !found; len += 2) {
        for_each_induced_cycle(g, len, [&](const Cycle& c) {
            if (!connected_within(g, g.vertices() - c.vertex_set())) return false;
            any_candidate = true;
            if (len == 3) {
                found = StructuredOddCycle{c, OddCycleShape::triangle};
                return true;
            }
            if (!has_spaced_neighbor_pattern(g, c)) return false;
            found = StructuredOddCycle{c, OddCycleShape::spaced};
            return true;
        });
    }
    if (!any_candidate) throw HypothesisError("has a non-separating induced odd cycle", "none found");
    if (!found) throw InternalContradiction("no non-separating induced odd cycle is a triangle or spaced");
    const Cycle& c = found->cycle;
    if (!is_valid_cycle(g, c) || c.length() % 2 == 0 || !is_induced_cycle(g, c) || !is_non_separating(g, c) ||
        (found->shape == OddCycleShape::spaced && !has_spaced_neighbor_pattern(g, c)))
        throw InternalContradiction("structured odd cycle failed re-validation");
    return *found;
}

}  // namespace cyclen
