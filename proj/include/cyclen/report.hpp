#pragma once

#include "json.hpp"

#include "cyclen/cycles.hpp"
#include "cyclen/paths.hpp"
#include "cyclen/theorem.hpp"

namespace cyclen {

using Json = nlohmann::json;

Json to_json(const Cycle& c);
Json to_json(const Path& p);
Json to_json(const PathFamily& f);
// {"lengths":[...],"best_run":{"start":l,"len":r},"witnesses":{"5":[...],...}}
Json to_json(const SpectrumReport& s);
Json to_json(const ConsecutiveCyclesCertificate& c);
Json to_json(const Theorem3Verdict& v);

std::string to_string(Theorem3Status s);

}  // namespace cyclen
