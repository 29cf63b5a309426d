#include "cyclen/paths.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "cyclen/errors.hpp"

namespace cyclen {

bool is_valid_path(const Graph& g, const Path& p) {
    if (p.length() < 1) return false;
    VertexSet seen;
    for (Vertex v : p.vertices) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!g.adjacent(p.vertices[i], p.vertices[i + 1])) return false;
    return true;
}

bool lengths_are_nice(std::vector<int> lengths) {
    if (lengths.empty()) return false;
    std::sort(lengths.begin(), lengths.end());
    if (lengths.front() < 2) return false;
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i] - lengths[i - 1] != 2) return false;
    return true;
}

bool lengths_are_good(std::array<int, 3> lengths) {
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    const auto [l1, l2, l3] = lengths;
    if (!(l1 > l2 && l2 > l3 && l3 >= 2)) return false;
    const int d1 = l1 - l2, d2 = l2 - l3;
    return (d1 == 2 && d2 == 2) || (d1 == 1 && d2 == 2) || (d1 == 2 && d2 == 1);
}

namespace {

void require_common_endpoints(std::span<const Path> family) {
    for (const Path& p : family) {
        if (p.vertices.empty()) throw InvalidInput("empty path");
        const std::pair<Vertex, Vertex> ends = std::minmax(p.front(), p.back());
        const std::pair<Vertex, Vertex> first = std::minmax(family[0].front(), family[0].back());
        if (ends != first) throw InvalidInput("paths do not share their endpoint pair");
    }
}

}  // namespace

bool is_nice(std::span<const Path> family) {
    if (family.empty()) throw InvalidInput("empty path family");
    require_common_endpoints(family);
    std::vector<int> lengths;
    for (const Path& p : family) lengths.push_back(p.length());
    return lengths_are_nice(lengths);
}

GoodTripleVerdict is_good_triple(const Path& p1, const Path& p2, const Path& p3) {
    std::array<Path, 3> sorted{p1, p2, p3};
    require_common_endpoints(sorted);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Path& a, const Path& b) { return a.length() > b.length(); });
    GoodTripleVerdict v;
    v.sorted = sorted;
    v.good = lengths_are_good({sorted[0].length(), sorted[1].length(), sorted[2].length()});
    v.via_nice = v.good && lengths_are_nice({sorted[0].length(), sorted[1].length(), sorted[2].length()});
    return v;
}

std::vector<int> PathLengths::lengths() const {
    std::vector<int> out;
    for (const auto& [len, _] : witnesses) out.push_back(len);
    return out;
}

PathLengths enumerate_xy_path_lengths(const Graph& g, Vertex x, Vertex y, int cap) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) throw InvalidInput("path endpoints coincide");
    if (g.order() > cap)
        throw Refused("path-length oracle is limited to " + std::to_string(cap) + " vertices");

    PathLengths out;
    std::vector<Vertex> stack{x};
    std::function<void(VertexSet)> walk = [&](VertexSet used) {
        const Vertex tip = stack.back();
        for (Vertex w : g.neighbors(tip) - used) {
            stack.push_back(w);
            if (w == y) {
                const int len = static_cast<int>(stack.size()) - 1;
                if (!out.witnesses.contains(len)) out.witnesses.emplace(len, Path{stack});
            } else {
                walk(used | VertexSet::single(w));
            }
            stack.pop_back();
        }
    };
    walk(VertexSet::single(x));
    return out;
}

PathLengths xy_path_lengths(const Graph& g, Vertex x, Vertex y, int cap) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) throw InvalidInput("path endpoints coincide");
    if (g.order() > cap) throw Refused("path-length table is limited to " + std::to_string(cap) + " vertices");

    const std::vector<Vertex> inner = (g.vertices() - VertexSet{x, y}).to_vector();
    std::vector<int> bit(g.order(), -1);
    for (std::size_t i = 0; i < inner.size(); ++i) bit[inner[i]] = static_cast<int>(i);
    auto to_mask = [&](VertexSet s) {
        std::uint64_t m = 0;
        for (Vertex v : s) m |= std::uint64_t{1} << bit[v];
        return m;
    };
    auto to_set = [&](std::uint64_t m) {
        VertexSet s;
        for (; m; m &= m - 1) s.insert(inner[static_cast<std::size_t>(std::countr_zero(m))]);
        return s;
    };

    // ends[m]: last vertices of x-paths whose interior set is exactly m.
    std::vector<VertexSet> ends(std::size_t{1} << inner.size());
    ends[0] = VertexSet::single(x);
    PathLengths out;
    for (std::uint64_t m = 0; m < ends.size(); ++m) {
        if (ends[m].empty()) continue;
        const VertexSet interior = to_set(m);
        const int len = std::popcount(m) + 1;
        const VertexSet closing = ends[m] & g.neighbors(y);
        if (!closing.empty() && !out.witnesses.contains(len)) {
            std::vector<Vertex> seq{y};
            Vertex cur = closing.first();
            std::uint64_t rest = m;
            while (cur != x) {
                seq.push_back(cur);
                rest &= ~(std::uint64_t{1} << bit[cur]);
                cur = (ends[rest] & g.neighbors(cur)).first();
            }
            seq.push_back(x);
            std::reverse(seq.begin(), seq.end());
            out.witnesses.emplace(len, Path{seq});
        }
        for (Vertex v : ends[m]) {
            const VertexSet next = (g.neighbors(v) - interior) - VertexSet{x, y};
            for (Vertex w : next) ends[m | to_mask(VertexSet::single(w))].insert(w);
        }
    }
    return out;
}

std::vector<std::string> lemma4_violations(const RootedGraph& r) {
    std::vector<std::string> out;
    if (!triangle_free_within(r.g, r.g.vertices() - VertexSet::single(r.x))) out.emplace_back("G - x triangle-free");
    if (r.g.order() < 3 || !rooted_is_2_connected(r)) out.emplace_back("(G,x,y) 2-connected");
    if (r.g.order() < 3 || rooted_min_degree(r) < 3) out.emplace_back("rooted minimum degree >= 3");
    return out;
}

std::vector<std::string> lemma5_violations(const RootedGraph& r) {
    std::vector<std::string> out;
    if (!triangle_free_within(r.g, r.g.vertices() - VertexSet::single(r.x))) out.emplace_back("G - x triangle-free");
    if (r.g.order() < 3 || !rooted_is_2_connected(r)) out.emplace_back("(G,x,y) 2-connected");
    if (r.g.order() < 3 || rooted_min_degree(r) < 4) out.emplace_back("rooted minimum degree >= 4");
    return out;
}

std::optional<Path> shortest_path(const Graph& g, Vertex from, Vertex to, VertexSet within) {
    if (!within.contains(from) || !within.contains(to)) return std::nullopt;
    std::vector<Vertex> parent(g.order(), -1);
    VertexSet seen = VertexSet::single(from);
    std::vector<Vertex> queue{from};
    for (std::size_t head = 0; head < queue.size() && !seen.contains(to); ++head) {
        for (Vertex w : (g.neighbors(queue[head]) & within) - seen) {
            seen.insert(w);
            parent[w] = queue[head];
            queue.push_back(w);
        }
    }
    if (!seen.contains(to)) return std::nullopt;
    std::vector<Vertex> seq{to};
    while (seq.back() != from) seq.push_back(parent[seq.back()]);
    std::reverse(seq.begin(), seq.end());
    return Path{seq};
}

PathFamily pick_nice_pair(const PathLengths& table) {
    for (const auto& [len, path] : table.witnesses)
        if (len >= 2 && table.has(len + 2)) return {{path, table.witnesses.at(len + 2)}, FamilyKind::nice};
    return {};
}

PathFamily pick_good_triple(const PathLengths& table) {
    static constexpr std::array<std::array<int, 2>, 3> kPatterns{{{1, 3}, {2, 3}, {2, 4}}};
    for (const auto& [len, path] : table.witnesses) {
        if (len < 2) continue;
        for (auto [mid, top] : kPatterns) {
            if (table.has(len + mid) && table.has(len + top))
                return {{path, table.witnesses.at(len + mid), table.witnesses.at(len + top)}, FamilyKind::good};
        }
    }
    return {};
}

namespace {

void require(const std::vector<std::string>& violations) {
    if (violations.empty()) return;
    std::string all;
    for (const auto& v : violations) all += (all.empty() ? "" : "; ") + v;
    throw HypothesisError(violations.front(), all);
}

bool family_ok(const Graph& g, Vertex x, Vertex y, const std::vector<Path>& paths) {
    for (const Path& p : paths)
        if (!is_valid_path(g, p) || p.front() != x || p.back() != y) return false;
    return true;
}

std::string join_ids(std::initializer_list<Vertex> ids) {
    std::string s;
    for (Vertex v : ids) s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
}

// Follows the induction on |G|: a 4-cycle through x avoiding y (case 1), or
// contraction of N(x) (case 2). Sub-results are lifted back through the
// recorded vertex origins.
class NicePathProof {
public:
    explicit NicePathProof(std::vector<std::string>* trace) : trace_(trace) {}

    std::vector<Path> prove(const Graph& g, Vertex x, Vertex y, int depth) {
        const auto bad = lemma4_violations(RootedGraph(g, x, y));
        if (!bad.empty()) fail(depth, "subproblem violates " + bad.front());
        const Graph h = without_edge(g, x, y);
        std::vector<Path> out;
        if (h.order() <= 5) {
            note(depth, "case=base order=" + std::to_string(h.order()));
            out = pick_nice_pair(xy_path_lengths(h, x, y)).paths;
        } else if (auto c = four_cycle(h, x, y)) {
            out = case_four_cycle(h, x, y, *c, depth);
        } else {
            out = case_contract(h, x, y, depth);
        }
        if (out.size() != 2 || !family_ok(h, x, y, out) || !lengths_are_nice({out[0].length(), out[1].length()}))
            fail(depth, "step produced no valid nice pair");
        std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return a.length() < b.length(); });
        return out;
    }

private:
    [[noreturn]] void fail(int depth, const std::string& what) {
        throw InternalContradiction("nice-path induction, depth " + std::to_string(depth) + ": " + what);
    }

    void note(int depth, const std::string& line) {
        if (trace_) trace_->push_back("depth=" + std::to_string(depth) + " " + line);
    }

    static std::optional<std::tuple<Vertex, Vertex, Vertex>> four_cycle(const Graph& h, Vertex x, Vertex y) {
        const VertexSet around = h.neighbors(x) - VertexSet::single(y);
        for (Vertex x1 : around)
            for (Vertex x2 : around)
                if (x1 < x2) {
                    const VertexSet apex = (h.neighbors(x1) & h.neighbors(x2)) - VertexSet{x, y};
                    if (!apex.empty()) return std::make_tuple(x1, apex.first(), x2);
                }
        return std::nullopt;
    }

    static std::vector<Vertex> concat(std::vector<Vertex> head, const std::vector<Vertex>& tail) {
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    }

    // A path of the derived graph leaving its merged vertex, mapped to g and
    // prefixed by x and a vertex of `merged_members` adjacent to the first
    // real vertex.
    static std::vector<Vertex> lift_from_merged(const Graph& h, Vertex x, const Path& p,
                                                const std::vector<Vertex>& origin, VertexSet merged_members) {
        std::vector<Vertex> seq{x};
        const Vertex first_real = origin[p.vertices[1]];
        seq.push_back((merged_members & h.neighbors(first_real)).first());
        for (std::size_t i = 1; i < p.vertices.size(); ++i) seq.push_back(origin[p.vertices[i]]);
        return seq;
    }

    std::vector<Path> case_four_cycle(const Graph& h, Vertex x, Vertex y, std::tuple<Vertex, Vertex, Vertex> c,
                                      int depth) {
        const auto [x1, a, x2] = c;
        const VertexSet far = reach(h, y, h.vertices() - VertexSet{x, x1, a, x2});
        for (auto [near, other] : {std::pair{x1, x2}, std::pair{x2, x1}}) {
            const VertexSet zs = h.neighbors(near) & far;
            if (zs.empty()) continue;
            const Vertex z = zs.first();
            const Path tail = *shortest_path(h, z, y, far);
            note(depth, "case=1.1 cycle=" + join_ids({x, x1, a, x2}) + " z=" + std::to_string(z));
            return {Path{concat({x, near}, tail.vertices)}, Path{concat({x, other, a, near}, tail.vertices)}};
        }
        const VertexSet bs = h.neighbors(a) & far;
        if (bs.empty()) fail(depth, "case 1.2 apex has no neighbour in the component of y");
        const Vertex b = bs.first();
        const Path tail = *shortest_path(h, b, y, far);
        note(depth, "case=1.2 cycle=" + join_ids({x, x1, a, x2}) + " vertex=a:" + std::to_string(a) +
                        " b=" + std::to_string(b) + " removed=F(" + std::to_string(far.size()) + ")");
        const Derived sub = remove_vertices(h, far);
        std::vector<Path> out;
        for (const Path& p : prove(sub.graph, sub.image_of(x), sub.image_of(a), depth + 1)) {
            std::vector<Vertex> seq;
            for (Vertex v : p.vertices) seq.push_back(sub.origin[v]);
            out.push_back(Path{concat(seq, tail.vertices)});
        }
        return out;
    }

    // G[X u D] with X - {keep} contracted, solved rooted at the merged vertex
    // and `keep`, lifted to x-u-...-keep paths.
    std::vector<std::vector<Vertex>> through_component(const Graph& h, Vertex x, VertexSet X, VertexSet D,
                                                       Vertex keep, int depth) {
        const Derived part = induced_subgraph(h, X | D);
        VertexSet merge_local;
        for (Vertex v : X - VertexSet::single(keep)) merge_local.insert(part.image_of(v));
        const Contraction c = contract(part.graph, merge_local, "w");
        std::vector<Vertex> origin(c.origin.size(), -1);
        for (std::size_t i = 0; i < c.origin.size(); ++i)
            if (c.origin[i] != -1) origin[i] = part.origin[c.origin[i]];
        const Vertex keep_local = static_cast<Vertex>(std::find(origin.begin(), origin.end(), keep) - origin.begin());
        std::vector<std::vector<Vertex>> out;
        for (const Path& p : prove(c.graph, c.merged, keep_local, depth + 1))
            out.push_back(lift_from_merged(h, x, p, origin, X - VertexSet::single(keep)));
        return out;
    }

    std::vector<Path> case_contract(const Graph& h, Vertex x, Vertex y, int depth) {
        const VertexSet X = h.neighbors(x);
        const Derived minus_x = remove_vertices(h, VertexSet::single(x));
        VertexSet x_local;
        for (Vertex v : X) x_local.insert(minus_x.image_of(v));
        const Contraction star = contract(minus_x.graph, x_local, "x*");
        std::vector<Vertex> origin(star.origin.size(), -1);
        for (std::size_t i = 0; i < star.origin.size(); ++i)
            if (star.origin[i] != -1) origin[i] = minus_x.origin[star.origin[i]];
        const Vertex y_star = static_cast<Vertex>(std::find(origin.begin(), origin.end(), y) - origin.begin());

        const Graph closed = with_edge(star.graph, star.merged, y_star);
        VertexSet block = closed.vertices();
        if (closed.order() >= 3 && !connectivity_at_least(closed, 2).holds) {
            const BlockTree tree = block_cutvertex_tree(closed);
            for (VertexSet b : tree.blocks)
                if (b.contains(y_star) && b.contains(star.merged)) block = b;
        }

        if (block.size() >= 3) {
            note(depth, "case=2 contraction=X(" + std::to_string(X.size()) + ") block=" + std::to_string(block.size()));
            const Derived sub = induced_subgraph(star.graph, block);
            std::vector<Vertex> sub_origin;
            for (Vertex v : sub.origin) sub_origin.push_back(origin[v]);
            std::vector<Path> out;
            for (const Path& p : prove(sub.graph, sub.image_of(star.merged), sub.image_of(y_star), depth + 1))
                out.push_back(Path{lift_from_merged(h, x, p, sub_origin, X)});
            return out;
        }

        // N(y) is inside X.
        const std::vector<VertexSet> parts = components(h, h.vertices() - X - VertexSet{x, y});
        for (Vertex y1 : h.neighbors(y)) {
            for (VertexSet D : parts) {
                if ((h.neighbors(y1) & D).empty()) continue;
                note(depth, "case=2.1 y'=" + std::to_string(y1) + " contraction=X-y'");
                std::vector<Path> out;
                for (auto seq : through_component(h, x, X, D, y1, depth)) {
                    seq.push_back(y);
                    out.push_back(Path{seq});
                }
                return out;
            }
        }

        const Vertex y_star_g = h.neighbors(y).first();
        const VertexSet y1s = h.neighbors(y_star_g) - VertexSet{x, y};
        if (y1s.empty()) fail(depth, "case 2.2 neighbour of y has degree below 3");
        const Vertex y1 = y1s.first();
        const VertexSet y2s = (h.neighbors(y1) & X) - VertexSet::single(y_star_g);
        if (!y2s.empty()) {
            const Vertex y2 = y2s.first();
            note(depth, "case=2.2 y*=" + std::to_string(y_star_g) + " y1=" + std::to_string(y1) +
                            " y2=" + std::to_string(y2));
            return {Path{{x, y_star_g, y}}, Path{{x, y2, y1, y_star_g, y}}};
        }
        for (VertexSet D : parts) {
            if ((h.neighbors(y1) & D).empty()) continue;
            note(depth, "case=2.2 y*=" + std::to_string(y_star_g) + " y1=" + std::to_string(y1) +
                            " contraction=X-y1");
            std::vector<Path> out;
            for (auto seq : through_component(h, x, X, D, y1, depth)) {
                seq.push_back(y_star_g);
                seq.push_back(y);
                out.push_back(Path{seq});
            }
            return out;
        }
        fail(depth, "case 2.2 y1 has no neighbour outside X");
    }

    std::vector<std::string>* trace_;
};

PathFamily certified(const Graph& original, Vertex x, Vertex y, PathFamily family, const char* what) {
    if (family.paths.empty()) throw InternalContradiction(std::string("no ") + what + " found on a valid input");
    for (const Path& p : family.paths)
        if (!is_valid_path(original, p) || p.front() != x || p.back() != y)
            throw InternalContradiction(std::string(what) + " failed re-validation");
    return family;
}

}  // namespace

PathFamily two_nice_paths(const RootedGraph& r, NicePathOptions options) {
    require(lemma4_violations(r));
    const Graph h = without_edge(r.g, r.x, r.y);
    if (options.follow_proof) {
        try {
            auto paths = NicePathProof(options.trace).prove(r.g, r.x, r.y, 0);
            return certified(r.g, r.x, r.y, {std::move(paths), FamilyKind::nice}, "nice pair");
        } catch (const InternalContradiction& e) {
            if (options.trace) options.trace->push_back(std::string("fallback=search reason=") + e.what());
        }
    }
    PathFamily family = pick_nice_pair(xy_path_lengths(h, r.x, r.y));
    family = certified(r.g, r.x, r.y, std::move(family), "nice pair");
    if (!is_nice(family.paths)) throw InternalContradiction("nice pair failed re-validation");
    return family;
}

PathFamily three_good_paths(const RootedGraph& r) {
    require(lemma5_violations(r));
    const Graph h = without_edge(r.g, r.x, r.y);
    PathFamily family = certified(r.g, r.x, r.y, pick_good_triple(xy_path_lengths(h, r.x, r.y)), "good triple");
    if (!is_good_triple(family.paths[0], family.paths[1], family.paths[2]).good)
        throw InternalContradiction("good triple failed re-validation");
    return family;
}

}  // namespace cyclen
