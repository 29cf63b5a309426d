#include "cyclen/paths.hpp"

#include <array>

#include "cyclen/errors.hpp"
#include "cyclen/graph.hpp"
#include "cyclen/harness.hpp"
#include "cyclen/named.hpp"
#include "cyclen/structure.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cyclen;

namespace {

// An (0,1)-path of the given length through fresh interior ids.
Path of_length(int length, Vertex x = 0, Vertex y = 1) {
    Path p{{x}};
    for (int i = 1; i < length; ++i) p.vertices.push_back(100 + 10 * length + i);
    p.vertices.push_back(y);
    return p;
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

void check_family(const Graph& g, Vertex x, Vertex y, const PathFamily& f, std::size_t count) {
    REQUIRE(f.paths.size() == count);
    for (const Path& p : f.paths) {
        CHECK(is_valid_path(g, p));
        CHECK(p.front() == x);
        CHECK(p.back() == y);
    }
}

}  // namespace

TEST_CASE("nice predicate") {
    CHECK(lengths_are_nice({2, 4}));
    CHECK(lengths_are_nice({3, 5, 7}));
    CHECK(lengths_are_nice({7, 3, 5}));
    CHECK_FALSE(lengths_are_nice({1, 3}));
    CHECK_FALSE(lengths_are_nice({2, 3}));
    CHECK_FALSE(lengths_are_nice({}));

    const std::vector<Path> nice{of_length(2), of_length(4)};
    CHECK(is_nice(nice));
    const std::vector<Path> short_start{of_length(1), of_length(3)};
    CHECK_FALSE(is_nice(short_start));
    const std::vector<Path> mismatch{of_length(2), of_length(4, 0, 2)};
    CHECK_THROWS_AS(is_nice(mismatch), InvalidInput);
}

TEST_CASE("good triples") {
    const GoodTripleVerdict a = is_good_triple(of_length(6), of_length(4), of_length(2));
    CHECK(a.good);
    CHECK(a.via_nice);
    const GoodTripleVerdict b = is_good_triple(of_length(5), of_length(4), of_length(2));
    CHECK(b.good);
    CHECK_FALSE(b.via_nice);
    CHECK(is_good_triple(of_length(5), of_length(3), of_length(2)).good);
    CHECK_FALSE(is_good_triple(of_length(5), of_length(4), of_length(3)).good);
    CHECK_FALSE(is_good_triple(of_length(4), of_length(4), of_length(2)).good);
    CHECK_FALSE(is_good_triple(of_length(4), of_length(2), of_length(1)).good);
    CHECK_THROWS_AS(is_good_triple(of_length(5), of_length(3), of_length(2, 0, 3)), InvalidInput);
    const GoodTripleVerdict sorted = is_good_triple(of_length(2), of_length(5), of_length(3));
    CHECK(sorted.sorted[0].length() == 5);
    CHECK(sorted.sorted[2].length() == 2);
}

TEST_CASE("good triple verdict does not depend on argument order") {
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b)
            for (int c = 1; c <= 8; ++c) {
                std::array<Path, 3> ps{of_length(a), of_length(b), of_length(c)};
                const bool first = is_good_triple(ps[0], ps[1], ps[2]).good;
                std::array<int, 3> idx{0, 1, 2};
                do {
                    CHECK(is_good_triple(ps[idx[0]], ps[idx[1]], ps[idx[2]]).good == first);
                } while (std::next_permutation(idx.begin(), idx.end()));
                CHECK(lengths_are_good({a, b, c}) == first);
            }
}

TEST_CASE("path length tables") {
    CHECK(enumerate_xy_path_lengths(cycle_graph(5), 0, 1).lengths() == std::vector<int>{1, 4});
    CHECK(enumerate_xy_path_lengths(complete_graph(4), 2, 3).lengths() == std::vector<int>{1, 2, 3});
    const Graph wheel = named_graph("join(K1,C4)");
    CHECK(enumerate_xy_path_lengths(wheel, 0, 1).lengths() == std::vector<int>{1, 2, 3, 4});
    CHECK(xy_path_lengths(wheel, 0, 1).lengths() == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(enumerate_xy_path_lengths(complete_graph(13), 0, 1), Refused);
    CHECK_THROWS_AS(enumerate_xy_path_lengths(complete_graph(4), 1, 1), InvalidInput);
    CHECK(xy_path_lengths(complete_graph(20), 0, 1).lengths().size() == 19);
}

TEST_CASE("both path tables agree with plain DFS") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 10), 0.2 + 0.1 * (t % 6), rng);
        const Vertex x = static_cast<Vertex>(rng() % g.order());
        const Vertex y = static_cast<Vertex>((x + 1 + rng() % (g.order() - 1)) % g.order());
        const std::set<int> expected = oracle::xy_lengths(g, x, y);
        const PathLengths a = enumerate_xy_path_lengths(g, x, y);
        const PathLengths b = xy_path_lengths(g, x, y);
        CHECK(as_set(a.lengths()) == expected);
        CHECK(as_set(b.lengths()) == expected);
        for (const auto& [len, p] : b.witnesses) {
            CHECK(p.length() == len);
            CHECK(is_valid_path(g, p));
            CHECK(p.front() == x);
            CHECK(p.back() == y);
        }
    }
}

TEST_CASE("picking from a table") {
    PathLengths t;
    for (int len : {1, 3, 4, 6}) t.witnesses[len] = of_length(len);
    const PathFamily nice = pick_nice_pair(t);
    REQUIRE(nice.paths.size() == 2);
    CHECK(nice.paths[0].length() == 4);
    CHECK(nice.paths[1].length() == 6);
    const PathFamily good = pick_good_triple(t);
    REQUIRE(good.paths.size() == 3);
    CHECK(lengths_are_good({good.paths[0].length(), good.paths[1].length(), good.paths[2].length()}));
    PathLengths none;
    none.witnesses[2] = of_length(2);
    none.witnesses[3] = of_length(3);
    CHECK(pick_nice_pair(none).paths.empty());
    CHECK(pick_good_triple(none).paths.empty());
}

TEST_CASE("shortest path") {
    const Graph c6 = cycle_graph(6);
    const auto p = shortest_path(c6, 0, 3, c6.vertices());
    REQUIRE(p);
    CHECK(p->length() == 3);
    CHECK(shortest_path(c6, 2, 2, c6.vertices())->length() == 0);
    CHECK_FALSE(shortest_path(c6, 0, 3, c6.vertices() - VertexSet{1, 5}));
}

TEST_CASE("hypothesis lists") {
    const RootedGraph wheel(named_graph("join(K1,C4)"), 0, 1);
    CHECK(lemma4_violations(wheel).empty());
    CHECK_FALSE(lemma5_violations(wheel).empty());
    // K(2,3) rooted at the two degree-3 vertices: the others have degree 2.
    const RootedGraph k23(complete_bipartite(2, 3), 0, 1);
    CHECK(lemma4_violations(k23).size() == 1);
    CHECK_THROWS_AS(two_nice_paths(k23), HypothesisError);
    // G - x must be triangle-free.
    CHECK_THROWS_AS(two_nice_paths(RootedGraph(complete_graph(5), 0, 1)), HypothesisError);
}

TEST_CASE("two nice paths on the order-5 base graphs") {
    const Graph wheel = named_graph("join(K1,C4)");
    for (Vertex y = 1; y < 5; ++y) {
        for (bool follow : {false, true}) {
            const PathFamily f = two_nice_paths(RootedGraph(wheel, 0, y), {.follow_proof = follow, .trace = nullptr});
            check_family(wheel, 0, y, f, 2);
            CHECK(f.paths[0].length() == 2);
            CHECK(f.paths[1].length() == 4);
        }
    }

    // Two non-adjacent vertices joined to K2 + K1. Ids: 0, 1 the outer pair,
    // 2-3 the K2, 4 the K1. Frozen from an independent scan of all 20 root
    // pairs: x must be a K2 vertex (else G - x keeps a triangle) and y the K1.
    const Graph b = named_graph("join(E2, union(K2, K1))");
    std::vector<std::pair<Vertex, Vertex>> qualifying;
    for (Vertex x = 0; x < 5; ++x)
        for (Vertex y = 0; y < 5; ++y)
            if (x != y && lemma4_violations(RootedGraph(b, x, y)).empty()) qualifying.emplace_back(x, y);
    CHECK(qualifying == std::vector<std::pair<Vertex, Vertex>>{{2, 4}, {3, 4}});
    for (auto [x, y] : qualifying) {
        const PathFamily f = two_nice_paths(RootedGraph(b, x, y), {.follow_proof = true, .trace = nullptr});
        check_family(b, x, y, f, 2);
        CHECK(f.paths[0].length() == 2);
        CHECK(f.paths[1].length() == 4);
    }
}

TEST_CASE("the recursion never needs its search fallback up to order 7") {
    int instances = 0;
    std::set<std::string> cases;
    for (int n = 3; n <= 7; ++n)
        for (const Graph& g : generate_all_graphs(n))
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = 0; y < n; ++y) {
                    if (x == y) continue;
                    const RootedGraph r(g, x, y);
                    if (!lemma4_violations(r).empty()) continue;
                    ++instances;
                    std::vector<std::string> trace;
                    const PathFamily f = two_nice_paths(r, {.follow_proof = true, .trace = &trace});
                    check_family(g, x, y, f, 2);
                    CHECK(lengths_are_nice({f.paths[0].length(), f.paths[1].length()}));
                    for (const auto& line : trace) {
                        CHECK(line.find("fallback") == std::string::npos);
                        const auto at = line.find("case=");
                        if (at != std::string::npos) cases.insert(line.substr(at + 5, line.find(' ', at) - at - 5));
                    }
                    const std::set<int> lengths = oracle::xy_lengths(g, x, y);
                    CHECK(lengths.contains(f.paths[0].length()));
                    CHECK(lengths.contains(f.paths[1].length()));
                }
    CHECK(instances > 0);
    CHECK(cases.contains("base"));
    CHECK(cases.contains("1.1"));
    MESSAGE("cases seen: " << cases.size());
}

TEST_CASE("three good paths on the order-7 base graphs") {
    const Graph r = named_graph("join(K1,K(3,3))");
    for (Vertex y = 1; y < 7; ++y) {
        const RootedGraph rg(r, 0, y);
        REQUIRE(lemma5_violations(rg).empty());
        const PathFamily f = three_good_paths(rg);
        check_family(r, 0, y, f, 3);
        CHECK(lengths_are_good({f.paths[0].length(), f.paths[1].length(), f.paths[2].length()}));
    }
    // Frozen from enumeration: apex to a side vertex realizes 1..6.
    CHECK(enumerate_xy_path_lengths(r, 0, 1).lengths() == std::vector<int>{1, 2, 3, 4, 5, 6});

    // One apex edge deleted; roots from an exhaustive scan of the 42 pairs.
    const Graph r1 = named_graph("delete_edge(join(K1,K(3,3)),0,1)");
    int ok = 0;
    for (Vertex x = 0; x < 7; ++x)
        for (Vertex y = 0; y < 7; ++y) {
            if (x == y || !lemma5_violations(RootedGraph(r1, x, y)).empty()) continue;
            const PathFamily f = three_good_paths(RootedGraph(r1, x, y));
            check_family(r1, x, y, f, 3);
            ++ok;
        }
    CHECK(ok > 0);
}

TEST_CASE("complete bipartite rooting gives lengths 2, 4, 6") {
    // Apex x = 0 over K(3,4), y = 1 on the 3-side: paths zig-zag through the
    // bipartite part.
    const Graph g = named_graph("join(E1, K(3,4))");
    const PathLengths t = enumerate_xy_path_lengths(g, 0, 1);
    CHECK(t.has(2));
    CHECK(t.has(4));
    CHECK(t.has(6));
    const PathFamily f = three_good_paths(RootedGraph(g, 0, 1));
    check_family(g, 0, 1, f, 3);
}

TEST_CASE("no qualifying rooted graph below the base orders") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : generate_all_graphs(n))
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = 0; y < n; ++y) {
                    if (x == y) continue;
                    const RootedGraph r(g, x, y);
                    if (n < 5) CHECK_FALSE(lemma4_violations(r).empty());
                    CHECK_FALSE(lemma5_violations(r).empty());
                }
}

TEST_CASE("finders ignore the xy edge") {
    const Graph wheel = named_graph("join(K1,C4)");
    const PathFamily f = two_nice_paths(RootedGraph(wheel, 0, 1));
    for (const Path& p : f.paths) CHECK(p.length() >= 2);
}
