#include "cyclen/canonical.hpp"

#include "cyclen/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cyclen;

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 400; ++t) {
        const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 11), 0.45, rng);
        CHECK(canonical_form(oracle::permuted(g, rng)) == canonical_form(g));
    }
    const Graph p = petersen_graph();
    CHECK(canonical_form(oracle::permuted(p, rng)) == canonical_form(p));
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 400; ++t) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph a = oracle::random_graph(n, 0.5, rng);
        const Graph b = oracle::random_graph(n, 0.5, rng);
        CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    }
}

TEST_CASE("canonical labelling is a permutation and relabel applies it") {
    const Graph g = join(complete_graph(1), cycle_graph(4));
    std::vector<Vertex> pos = canonical_labeling(g);
    std::vector<Vertex> sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(relabel(g, pos) == canonical_form(g));
}

TEST_CASE("packing") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 11);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        CHECK(unpack_upper_triangle(n, pack_upper_triangle(g)) == g);
    }
    CHECK(pack_upper_triangle(empty_graph(7)) == 0);
    CHECK_THROWS(pack_upper_triangle(empty_graph(12)));
}
