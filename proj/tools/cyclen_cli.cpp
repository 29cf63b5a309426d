// cyclen: cycle spectra, consecutive-length certificates and verification
// campaigns for small graphs.
//
// Exit status: 0 success / claim holds, 1 usage or parse error,
// 2 hypothesis not met, 3 alarm or counterexample.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cyclen/canonical.hpp"
#include "cyclen/cycles.hpp"
#include "cyclen/errors.hpp"
#include "cyclen/graph6.hpp"
#include "cyclen/harness.hpp"
#include "cyclen/named.hpp"
#include "cyclen/paths.hpp"
#include "cyclen/report.hpp"
#include "cyclen/structure.hpp"
#include "cyclen/theorem.hpp"

using namespace cyclen;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kHypothesis = 2;
constexpr int kAlarm = 3;

std::string brace_list(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_spectrum(const std::string& input, bool json, int cap) {
    const Graph g = graph_from_text(input);
    const SpectrumReport s = cycle_spectrum(g, {.max_order = cap});
    if (json) {
        print(to_json(s));
        return kOk;
    }
    std::cout << brace_list(s.lengths) << '\n';
    std::cout << "best run: " << s.best_run.len;
    if (s.best_run.len > 0)
        std::cout << " (" << s.best_run.start << ".." << s.best_run.start + s.best_run.len - 1 << ")";
    std::cout << '\n';
    return kOk;
}

int cmd_verify(const std::string& input, int k, bool probe) {
    const Graph g = graph_from_text(input);
    const Theorem3Verdict v = verify_theorem3(g, k, {.probe = probe, .spectrum = {}});
    print(to_json(v));
    if (!v.note.empty()) std::cerr << "note: " << v.note << '\n';
    switch (v.status) {
        case Theorem3Status::holds: return kOk;
        case Theorem3Status::counterexample: return kAlarm;
        default: return kHypothesis;
    }
}

int cmd_construct(const std::string& input, int k) {
    const Graph g = graph_from_text(input);
    const ConsecutiveCyclesCertificate cert = construct_consecutive_cycles(g, k);
    print(to_json(cert));
    return certificate_is_sound(g, cert) ? kOk : kAlarm;
}

int cmd_paths(const std::string& input, const std::string& mode, int x, int y, bool trace) {
    const Graph g = graph_from_text(input);
    const RootedGraph r(g, x, y);
    std::vector<std::string> lines;
    PathFamily family;
    if (mode == "nice2")
        family = two_nice_paths(r, {.follow_proof = trace, .trace = trace ? &lines : nullptr});
    else
        family = three_good_paths(r);
    Json out = to_json(family);
    if (trace) out["trace"] = lines;
    print(out);
    for (const Path& p : family.paths)
        if (!is_valid_path(g, p)) return kAlarm;
    return kOk;
}

int cmd_oddcycle(const std::string& input, bool structured) {
    const Graph g = graph_from_text(input);
    Json out;
    if (structured) {
        const StructuredOddCycle c = select_structured_odd_cycle(g);
        out = {{"cycle", to_json(c.cycle)}, {"length", c.cycle.length()}};
        out["shape"] = c.shape == OddCycleShape::triangle ? "triangle" : "spaced";
    } else {
        const Cycle c = find_nonseparating_induced_odd_cycle(g);
        out = {{"cycle", to_json(c)}, {"length", c.length()}};
    }
    print(out);
    return kOk;
}

int cmd_campaign(CampaignSpec spec, const std::string& claim, const std::string& corpus, const std::string& out_path) {
    spec.claim = claim_from_string(claim);
    if (!corpus.empty()) spec.corpus_path = corpus;
    const CampaignReport report = run_campaign(spec);
    const std::string text = report.to_json().dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw InvalidInput("cannot write " + out_path);
        out << text;
    }
    std::cerr << report.id << ": scanned " << report.scanned << ", satisfying " << report.satisfying << ", verified "
              << report.verified << ", alarms " << report.alarms.size() << '\n';
    return report.alarms.empty() ? kOk : kAlarm;
}

int cmd_generate(int n, int max_degree, int max_order, bool complement_out) {
    for (const Graph& g : generate_all_graphs(n, {.max_degree = max_degree, .max_order = max_order}))
        std::cout << emit_graph6(complement_out ? canonical_form(complement(g)) : g);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle spectra and consecutive-length certificates for small graphs"};
    app.require_subcommand(1);
    int code = kOk;

    std::string input;
    int k = 4;

    auto* spectrum = app.add_subcommand("spectrum", "set of cycle lengths");
    bool json = false;
    int cap = 16;
    spectrum->add_option("input", input, "graph6 line or named expression")->required();
    spectrum->add_flag("--json", json, "full report with witnesses");
    spectrum->add_option("--max-order", cap, "refuse larger graphs (ceiling 24)");
    spectrum->callback([&] { code = cmd_spectrum(input, json, cap); });

    auto* verify = app.add_subcommand("verify", "check the k consecutive cycle lengths statement");
    bool probe = false;
    verify->add_option("--k", k)->required();
    verify->add_flag("--probe", probe, "test the statement even for k < 4");
    verify->add_option("input", input)->required();
    verify->callback([&] { code = cmd_verify(input, k, probe); });

    auto* construct = app.add_subcommand("construct", "certificate of k consecutive cycle lengths (k = 4, 5)");
    construct->add_option("--k", k)->required();
    construct->add_option("input", input)->required();
    construct->callback([&] { code = cmd_construct(input, k); });

    auto* paths = app.add_subcommand("paths", "nice or good (x,y)-path families");
    std::string mode;
    int x = 0, y = 1;
    bool trace = false;
    paths->add_option("--mode", mode)->required()->check(CLI::IsMember({"nice2", "good3"}));
    paths->add_option("--x", x)->required();
    paths->add_option("--y", y)->required();
    paths->add_flag("--trace", trace, "follow the inductive construction and print its steps (nice2)");
    paths->add_option("input", input)->required();
    paths->callback([&] { code = cmd_paths(input, mode, x, y, trace); });

    auto* oddcycle = app.add_subcommand("oddcycle", "non-separating induced odd cycle");
    bool structured = false;
    oddcycle->add_flag("--structured", structured, "triangle or spaced-neighbour cycle (needs min degree >= 4)");
    oddcycle->add_option("input", input)->required();
    oddcycle->callback([&] { code = cmd_oddcycle(input, structured); });

    auto* campaign = app.add_subcommand("campaign", "exhaustive verification over a graph universe");
    CampaignSpec spec;
    std::string claim, corpus, out_path;
    campaign->add_option("--claim", claim, "theorem3, construct, lemma4, lemma5, lemma6, lemma7, bondy-vince")
        ->required();
    campaign->add_option("--n-min", spec.n_min)->required();
    campaign->add_option("--n-max", spec.n_max)->required();
    campaign->add_option("--k", spec.k);
    campaign->add_option("--corpus", corpus, "graph6 file to scan instead of generating");
    campaign->add_option("--out", out_path, "write the JSON report here");
    campaign->add_option("--threads", spec.threads, "0 = hardware concurrency");
    campaign->add_option("--max-degree", spec.generator.max_degree, "generator: bound the maximum degree");
    campaign->add_option("--max-order", spec.generator.max_order, "generator: raise the order cap (at most 11)");
    campaign->add_flag("--triangle-free", spec.triangle_free_only, "construct: triangle-free inputs only");
    campaign->callback([&] { code = cmd_campaign(spec, claim, corpus, out_path); });

    auto* named = app.add_subcommand("named", "graph6 of a named-graph expression");
    std::string expr;
    named->add_option("expr", expr)->required();
    named->callback([&] { std::cout << emit_graph6(named_graph(expr)); });

    auto* generate = app.add_subcommand("generate", "one graph6 line per isomorphism class");
    int n = 0, max_degree = -1, max_order = 9;
    bool complement_out = false;
    generate->add_option("--n", n)->required();
    generate->add_option("--max-degree", max_degree);
    generate->add_option("--max-order", max_order, "raise the order cap (at most 11)");
    generate->add_flag("--complement", complement_out, "emit complements (min degree >= n-1-max_degree)");
    generate->callback([&] { code = cmd_generate(n, max_degree, max_order, complement_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? kOk : kUsage;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kHypothesis;
    } catch (const InternalContradiction& e) {
        std::cerr << "alarm: " << e.what() << '\n';
        return kAlarm;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return code;
}
