#include "cyclen/canonical.hpp"

#include <algorithm>

#include "cyclen/errors.hpp"

namespace cyclen {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Split cells by neighbour counts into every other cell until stable. The
// order of the resulting cells depends only on the counts, never on ids.
void refine(const Graph& g, Cells& cells) {
    for (;;) {
        std::vector<VertexSet> masks;
        masks.reserve(cells.size());
        for (const auto& cell : cells) masks.push_back(VertexSet::of(cell));

        Cells next;
        next.reserve(g.order());
        bool split = false;
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            keyed.clear();
            for (Vertex v : cell) {
                std::vector<int> sig(masks.size());
                for (std::size_t c = 0; c < masks.size(); ++c) sig[c] = (g.neighbors(v) & masks[c]).size();
                keyed.emplace_back(std::move(sig), v);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<Vertex> group{keyed[0].second};
            for (std::size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first) {
                    next.push_back(std::move(group));
                    group.clear();
                    split = true;
                }
                group.push_back(keyed[i].second);
            }
            next.push_back(std::move(group));
        }
        cells = std::move(next);
        if (!split) return;
    }
}

bool twins(const Graph& g, Vertex u, Vertex v) {
    return (g.neighbors(u) - VertexSet::single(v)) == (g.neighbors(v) - VertexSet::single(u));
}

struct Search {
    const Graph& g;
    std::vector<VertexSet> best_code;
    std::vector<Vertex> best_position;

    void leaf(const Cells& cells) {
        std::vector<Vertex> position(g.order());
        for (std::size_t i = 0; i < cells.size(); ++i) position[cells[i][0]] = static_cast<Vertex>(i);
        std::vector<VertexSet> code(g.order());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            VertexSet row;
            for (Vertex w : g.neighbors(cells[i][0])) row.insert(position[w]);
            code[i] = row;
        }
        auto less = [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); };
        if (best_position.empty() ||
            std::lexicographical_compare(code.begin(), code.end(), best_code.begin(), best_code.end(), less)) {
            best_code = std::move(code);
            best_position = std::move(position);
        }
    }

    void descend(Cells cells) {
        refine(g, cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        const std::size_t t = static_cast<std::size_t>(target - cells.begin());
        const std::vector<Vertex> members = cells[t];
        std::vector<Vertex> tried;
        for (Vertex v : members) {
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
            child.push_back({v});
            std::vector<Vertex> rest;
            for (Vertex w : members)
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());
            descend(std::move(child));
        }
    }
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
    if (g.order() == 0) return {};
    Search search{g, {}, {}};
    Cells initial(1);
    for (Vertex v = 0; v < g.order(); ++v) initial[0].push_back(v);
    search.descend(std::move(initial));
    return search.best_position;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& position) {
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(position[u], position[v]);
    return out;
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

std::uint64_t pack_upper_triangle(const Graph& g) {
    if (g.order() > 11) throw InvalidInput("packed adjacency holds at most 11 vertices");
    std::uint64_t code = 0;
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
    return code;
}

Graph unpack_upper_triangle(int n, std::uint64_t code) {
    Graph g(n);
    int bit = n * (n - 1) / 2;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if ((code >> --bit) & 1U) g.add_edge(i, j);
    return g;
}

}  // namespace cyclen
