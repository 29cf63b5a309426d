#include "cyclen/harness.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cyclen/canonical.hpp"
#include "cyclen/errors.hpp"
#include "cyclen/graph6.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cyclen;

namespace {

Json without_time(Json j) {
    j.erase("wall_time_s");
    return j;
}

std::string temp_file(const std::string& name, const std::string& body) {
    const std::string path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("class counts match the simple-graph sequence") {
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) CHECK(isomorphism_classes(n).size() == expected[n - 1]);
}

TEST_CASE("generated classes are canonical and pairwise distinct") {
    for (int n = 1; n <= 6; ++n) {
        const std::vector<Graph> graphs = generate_all_graphs(n);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            CHECK(canonical_form(graphs[i]) == graphs[i]);
            for (std::size_t j = i + 1; j < graphs.size(); ++j) CHECK_FALSE(oracle::isomorphic(graphs[i], graphs[j]));
        }
    }
    std::mt19937_64 rng(51);
    const auto& seven = isomorphism_classes(7);
    for (int t = 0; t < 200; ++t) {
        const Graph g = oracle::random_graph(7, 0.5, rng);
        CHECK(std::binary_search(seven.begin(), seven.end(), pack_upper_triangle(canonical_form(g))));
    }
}

TEST_CASE("the degree bound equals filtering the full generation") {
    for (int bound = 0; bound <= 4; ++bound) {
        std::size_t filtered = 0;
        for (const Graph& g : generate_all_graphs(8))
            if (g.max_degree() <= bound) ++filtered;
        CHECK(isomorphism_classes(8, {.max_degree = bound, .max_order = 9}).size() == filtered);
    }
}

TEST_CASE("cubic graphs on ten vertices") {
    int cubic = 0;
    for (const Graph& g : generate_all_graphs(10, {.max_degree = 3, .max_order = 10}))
        if (g.min_degree() == 3) ++cubic;
    CHECK(cubic == 21);
}

TEST_CASE("generation above the cap is refused with advice") {
    try {
        isomorphism_classes(10);
        FAIL("expected a refusal");
    } catch (const Refused& e) {
        CHECK(std::string(e.what()).find("graph6") != std::string::npos);
    }
    CHECK_THROWS_AS(isomorphism_classes(12, {.max_degree = 2, .max_order = 12}), Refused);
    CHECK_THROWS_AS(isomorphism_classes(0), InvalidInput);
}

TEST_CASE("claims by name") {
    for (Claim c : {Claim::theorem3, Claim::construct, Claim::lemma4, Claim::lemma5, Claim::lemma6, Claim::lemma7,
                    Claim::bondy_vince})
        CHECK(claim_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(claim_from_string("lemma9"), InvalidInput);
}

TEST_CASE("corpus ingestion") {
    const std::string path = temp_file("corpus_ok.g6", ">>graph6<<IheA@GUAo\n\nD?{\n");
    const std::vector<Graph> gs = read_graph6_corpus(path);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].order() == 10);
    const std::string bad = temp_file("corpus_bad.g6", "D?{\nD?\n");
    try {
        read_graph6_corpus(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
    CHECK_THROWS_AS(read_graph6_corpus("/nonexistent/file.g6"), InvalidInput);
    std::remove(path.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("campaign reports") {
    CampaignSpec spec;
    spec.claim = Claim::lemma6;
    spec.n_min = 4;
    spec.n_max = 7;
    spec.threads = 1;
    const CampaignReport a = run_campaign(spec);
    CHECK(a.alarms.empty());
    CHECK(a.verified + a.alarms.size() == a.satisfying);
    CHECK(a.scanned == 11 + 34 + 156 + 1044);
    const Json j = a.to_json();
    CHECK(j["schema"] == "1");
    CHECK(j["campaign"] == "lemma6:n=4..7");
    CHECK(j["counts"]["satisfying"] == a.satisfying);
    CHECK(j.contains("wall_time_s"));

    spec.threads = 3;
    CHECK(without_time(run_campaign(spec).to_json()).dump() == without_time(j).dump());

    CHECK_THROWS_AS(run_campaign({.claim = Claim::lemma6, .n_min = 5, .n_max = 4}), InvalidInput);
}

TEST_CASE("lemma campaigns count rooted instances") {
    CampaignSpec spec;
    spec.claim = Claim::lemma4;
    spec.n_min = 1;
    spec.n_max = 5;
    const CampaignReport r = run_campaign(spec);
    CHECK(r.alarms.empty());
    CHECK(r.satisfying > 0);
    CHECK(r.verified == r.satisfying);
    CHECK(r.tallies.at("proof-followed") == r.satisfying);
}

TEST_CASE("the k = 3 probe flags exactly the Petersen class among cubic graphs on ten vertices") {
    CampaignSpec spec;
    spec.claim = Claim::theorem3;
    spec.k = 3;
    spec.n_min = 10;
    spec.n_max = 10;
    spec.corpus = generate_all_graphs(10, {.max_degree = 3, .max_order = 10});
    const CampaignReport r = run_campaign(spec);
    REQUIRE(r.alarms.size() == 1);
    const Graph flagged = parse_graph6(r.alarms[0].graph6);
    CHECK(canonical_form(flagged) == canonical_form(petersen_graph()));
    CHECK(r.alarms[0].detail.find("[5,6,8,9]") != std::string::npos);
    CHECK(r.verified + r.alarms.size() == r.satisfying);

    // The alarm reproduces from its graph6 alone.
    const GraphOutcome again = evaluate_claim(parse_graph6(r.alarms[0].graph6), spec);
    CHECK(again.alarm_details.size() == 1);
    CHECK(again.alarm_details[0] == r.alarms[0].detail);
}
