#include "cyclen/graph6.hpp"

#include "cyclen/errors.hpp"

namespace cyclen {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMaxShortForm = 62;

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (text.ends_with('\n')) text.remove_suffix(1);
    if (text.ends_with('\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 line", base);

    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", base + i);
    }
    if (text[0] == 126) throw ParseError("only graphs with at most 62 vertices are supported", base);

    const int n = text[0] - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " bytes for order " + std::to_string(n) +
                             ", got " + std::to_string(text.size()),
                         base + std::min(text.size(), expected));

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int word = text[1 + k / 6] - 63;
            if ((word >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        const int word = text[1 + k / 6] - 63;
        if (word & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero padding bits", base + 1 + k / 6);
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw InvalidInput("graph6 emission needs at least one vertex");
    if (n > kMaxShortForm) throw InvalidInput("graph6 short form holds at most 62 vertices");

    std::string out(1, static_cast<char>(n + 63));
    int word = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
    out.push_back('\n');
    return out;
}

}  // namespace cyclen
