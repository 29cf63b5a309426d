#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

namespace cyclen {

using Vertex = int;

// Subset of vertex ids 0..63 packed into one machine word.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> members) {
        for (Vertex v : members) insert(v);
    }
    template <class Range>
    static VertexSet of(const Range& members) {
        VertexSet s;
        for (Vertex v : members) s.insert(v);
        return s;
    }
    // {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    // Least member; undefined on the empty set.
    Vertex first() const { return std::countr_zero(bits_); }

    void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }
    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

// Simple undirected graph on dense ids 0..n-1, n <= 64, one adjacency bitset
// per vertex. Labels are optional display tags; they do not take part in
// equality.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int order() const { return n_; }
    int size() const;
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return adj_[v].size(); }
    int min_degree() const;
    int max_degree() const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    // Builder mutators. Everything in the edit algebra below returns new
    // values instead.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    bool has_labels() const { return !labels_.empty(); }
    // Label of v, or its id when the graph carries no labels.
    std::string label(Vertex v) const;
    void set_label(Vertex v, std::string tag);

    void check_vertex(Vertex v) const;
    void check_set(VertexSet s) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

// A derived graph together with the id each of its vertices had in the
// source graph. origin[v] == -1 marks a vertex created by contraction.
struct Derived {
    Graph graph;
    std::vector<Vertex> origin;

    // Image of a source vertex, or -1 when it did not survive.
    Vertex image_of(Vertex source) const;
};

// N(S) when closed is false, N[S] when closed is true.
VertexSet neighborhood(const Graph& g, VertexSet s, bool closed = false);

// G[S]; surviving vertices keep their relative order.
Derived induced_subgraph(const Graph& g, VertexSet s);

// G - S.
Derived remove_vertices(const Graph& g, VertexSet s);

// Contract S to one new vertex tagged `tag`, placed last (id n - |S|). The new
// vertex is adjacent exactly to N(S); multi-edges collapse and loops vanish.
struct Contraction : Derived {
    Vertex merged = -1;
};
Contraction contract(const Graph& g, VertexSet s, const std::string& tag);

// G + uv; returns g unchanged when uv is already an edge.
Graph with_edge(const Graph& g, Vertex u, Vertex v);
// G - uv; returns g unchanged when uv is not an edge.
Graph without_edge(const Graph& g, Vertex u, Vertex v);

Graph complement(const Graph& g);
// Vertices of a come first, then those of b.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
// Lexicographic product a[b]: every vertex of a is replaced by a copy of b.
Graph lexicographic_product(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int s, int t);
// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen_graph();

}  // namespace cyclen
