#include "cyclen/report.hpp"

namespace cyclen {

Json to_json(const Cycle& c) { return c.vertices; }

Json to_json(const Path& p) { return Json{{"length", p.length()}, {"vertices", p.vertices}}; }

Json to_json(const PathFamily& f) {
    Json paths = Json::array();
    for (const Path& p : f.paths) paths.push_back(to_json(p));
    return Json{{"kind", f.kind == FamilyKind::nice ? "nice" : "good"}, {"paths", paths}};
}

Json to_json(const SpectrumReport& s) {
    Json witnesses = Json::object();
    for (const auto& [len, c] : s.witnesses) witnesses[std::to_string(len)] = to_json(c);
    return Json{{"lengths", s.lengths},
                {"best_run", {{"start", s.best_run.start}, {"len", s.best_run.len}}},
                {"witnesses", witnesses}};
}

Json to_json(const ConsecutiveCyclesCertificate& c) {
    Json cycles = Json::array();
    std::vector<int> lengths;
    for (const Cycle& cy : c.cycles) {
        cycles.push_back(to_json(cy));
        lengths.push_back(cy.length());
    }
    Json out{{"k", c.k}, {"route", to_string(c.route)}, {"lengths", lengths}, {"cycles", cycles}};
    if (!c.diagnostic.empty()) out["diagnostic"] = c.diagnostic;
    Json provenance = Json::object();
    if (c.odd_cycle) provenance["odd_cycle"] = to_json(*c.odd_cycle);
    if (c.short_arc) provenance["short_arc"] = to_json(*c.short_arc);
    if (c.long_arc) provenance["long_arc"] = to_json(*c.long_arc);
    if (c.connector) provenance["connector"] = to_json(*c.connector);
    if (c.family) provenance["family"] = to_json(*c.family);
    if (!c.assembled_lengths.empty()) provenance["assembled_lengths"] = c.assembled_lengths;
    if (!provenance.empty()) out["provenance"] = provenance;
    return out;
}

std::string to_string(Theorem3Status s) {
    switch (s) {
        case Theorem3Status::holds: return "holds";
        case Theorem3Status::hypotheses_not_met: return "hypotheses-not-met";
        case Theorem3Status::out_of_range: return "out-of-range";
        case Theorem3Status::counterexample: return "counterexample";
    }
    return "unknown";
}

Json to_json(const Theorem3Verdict& v) {
    Json witnesses = Json::array();
    for (const Cycle& c : v.witnesses) witnesses.push_back(to_json(c));
    Json out{{"k", v.k},
             {"status", to_string(v.status)},
             {"hypotheses",
              {{"3-connected", v.hypotheses.three_connected},
               {"nonbipartite", v.hypotheses.nonbipartite},
               {"min-degree>=k", v.hypotheses.min_degree_at_least_k},
               {"order>=k+2", v.hypotheses.order_at_least_k_plus_2}}},
             {"witnesses", witnesses}};
    if (v.spectrum) out["spectrum"] = to_json(*v.spectrum);
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

}  // namespace cyclen
