#include "cyclen/graph.hpp"

#include <algorithm>

#include "cyclen/errors.hpp"

namespace cyclen {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxOrder)
        throw InvalidInput("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
    adj_.resize(n);
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
    int twice = 0;
    for (VertexSet a : adj_) twice += a.size();
    return twice / 2;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : n_;
    for (VertexSet a : adj_) best = std::min(best, a.size());
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (VertexSet a : adj_) best = std::max(best, a.size());
    return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
}

std::string Graph::label(Vertex v) const {
    check_vertex(v);
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

void Graph::set_label(Vertex v, std::string tag) {
    check_vertex(v);
    if (labels_.empty()) {
        labels_.resize(n_);
        for (Vertex u = 0; u < n_; ++u) labels_[u] = std::to_string(u);
    }
    labels_[v] = std::move(tag);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw InvalidInput("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::check_set(VertexSet s) const {
    if (!s.subset_of(vertices()))
        throw InvalidInput("vertex set has members outside 0.." + std::to_string(n_ - 1));
}

Vertex Derived::image_of(Vertex source) const {
    auto it = std::find(origin.begin(), origin.end(), source);
    return it == origin.end() ? -1 : static_cast<Vertex>(it - origin.begin());
}

VertexSet neighborhood(const Graph& g, VertexSet s, bool closed) {
    g.check_set(s);
    VertexSet out;
    for (Vertex v : s) out |= g.neighbors(v);
    return closed ? (out | s) : (out - s);
}

Derived induced_subgraph(const Graph& g, VertexSet s) {
    g.check_set(s);
    if (s.empty()) throw InvalidInput("induced subgraph of an empty vertex set");
    Derived d{Graph(s.size()), s.to_vector()};
    std::vector<Vertex> image(g.order(), -1);
    for (std::size_t i = 0; i < d.origin.size(); ++i) image[d.origin[i]] = static_cast<Vertex>(i);
    for (std::size_t i = 0; i < d.origin.size(); ++i) {
        Vertex u = d.origin[i];
        for (Vertex w : g.neighbors(u) & s)
            if (u < w) d.graph.add_edge(static_cast<Vertex>(i), image[w]);
        if (g.has_labels()) d.graph.set_label(static_cast<Vertex>(i), g.label(u));
    }
    return d;
}

Derived remove_vertices(const Graph& g, VertexSet s) {
    g.check_set(s);
    return induced_subgraph(g, g.vertices() - s);
}

Contraction contract(const Graph& g, VertexSet s, const std::string& tag) {
    g.check_set(s);
    if (s.empty()) throw InvalidInput("contraction of an empty vertex set");
    if (s == g.vertices()) throw InvalidInput("contraction of the whole vertex set");
    VertexSet rest = g.vertices() - s;
    Contraction c;
    c.origin = rest.to_vector();
    c.origin.push_back(-1);
    c.merged = static_cast<Vertex>(c.origin.size() - 1);
    c.graph = Graph(static_cast<int>(c.origin.size()));

    std::vector<Vertex> image(g.order(), c.merged);
    for (std::size_t i = 0; i + 1 < c.origin.size(); ++i) image[c.origin[i]] = static_cast<Vertex>(i);
    for (auto [u, v] : g.edges()) {
        Vertex a = image[u], b = image[v];
        if (a != b) c.graph.add_edge(a, b);
    }
    for (std::size_t i = 0; i + 1 < c.origin.size(); ++i)
        c.graph.set_label(static_cast<Vertex>(i), g.label(c.origin[i]));
    c.graph.set_label(c.merged, tag);
    return c;
}

Graph with_edge(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw InvalidInput("with_edge: endpoints coincide");
    Graph out = g;
    out.add_edge(u, v);
    return out;
}

Graph without_edge(const Graph& g, Vertex u, Vertex v) {
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
    return out;
}

Graph join(const Graph& a, const Graph& b) {
    Graph out = disjoint_union(a, b);
    for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
    return out;
}

Graph lexicographic_product(const Graph& a, const Graph& b) {
    const int m = b.order();
    Graph out(a.order() * m);
    for (Vertex u = 0; u < a.order(); ++u) {
        for (auto [p, q] : b.edges()) out.add_edge(u * m + p, u * m + q);
        for (Vertex w : a.neighbors(u))
            if (u < w)
                for (Vertex p = 0; p < m; ++p)
                    for (Vertex q = 0; q < m; ++q) out.add_edge(u * m + p, w * m + q);
    }
    return out;
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int s, int t) { return join(Graph(s), Graph(t)); }

Graph petersen_graph() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

}  // namespace cyclen
