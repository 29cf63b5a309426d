#pragma once

#include <string>
#include <string_view>

#include "cyclen/graph.hpp"

namespace cyclen {

// Short-form graph6 (n <= 62). An optional ">>graph6<<" header and one
// trailing LF (or CRLF) are accepted. Padding bits must be zero.
Graph parse_graph6(std::string_view text);

// No header, LF-terminated.
std::string emit_graph6(const Graph& g);

}  // namespace cyclen
