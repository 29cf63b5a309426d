#include "cyclen/named.hpp"

#include <cctype>
#include <string>
#include <variant>
#include <vector>

#include "cyclen/errors.hpp"
#include "cyclen/graph6.hpp"

namespace cyclen {

namespace {

using Arg = std::variant<long, Graph>;

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Graph parse() {
        Graph g = expect_graph(parse_arg());
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Graph expect_graph(Arg a) {
        if (auto* g = std::get_if<Graph>(&a)) return std::move(*g);
        fail("expected a graph expression, found an integer");
    }

    long expect_int(const Arg& a, long lo, long hi) {
        const auto* v = std::get_if<long>(&a);
        if (!v) fail("expected an integer argument");
        if (*v < lo || *v > hi) fail("integer argument " + std::to_string(*v) + " out of range");
        return *v;
    }

    Arg parse_arg() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return parse_int();
        return parse_call();
    }

    long parse_int() {
        long v = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > 1'000'000) {
                pos_ = start;
                fail("integer too large");
            }
        }
        return v;
    }

    Graph parse_call() {
        const std::size_t start = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name.push_back(text_[pos_++]);
        if (name.empty()) fail("expected a construction name");

        std::vector<Arg> args;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            args.emplace_back(parse_int());  // K5, C4, ...
        } else if (accept('(')) {
            if (!accept(')')) {
                do args.push_back(parse_arg());
                while (accept(','));
                if (!accept(')')) fail("expected ')'");
            }
        }
        return build(name, std::move(args), start);
    }

    Graph build(const std::string& name, std::vector<Arg> args, std::size_t at) {
        auto arity = [&](std::size_t lo, std::size_t hi) {
            if (args.size() < lo || args.size() > hi) {
                pos_ = at;
                fail("wrong number of arguments to '" + name + "'");
            }
        };
        const long cap = Graph::kMaxOrder;
        if (name == "petersen") {
            arity(0, 0);
            return petersen_graph();
        }
        if (name == "K") {
            arity(1, 2);
            if (args.size() == 1) return complete_graph(static_cast<int>(expect_int(args[0], 1, cap)));
            return complete_bipartite(static_cast<int>(expect_int(args[0], 1, cap)),
                                      static_cast<int>(expect_int(args[1], 1, cap)));
        }
        if (name == "C") {
            arity(1, 1);
            return cycle_graph(static_cast<int>(expect_int(args[0], 3, cap)));
        }
        if (name == "P") {
            arity(1, 1);
            return path_graph(static_cast<int>(expect_int(args[0], 1, cap)));
        }
        if (name == "E") {
            arity(1, 1);
            return empty_graph(static_cast<int>(expect_int(args[0], 1, cap)));
        }
        if (name == "join" || name == "union") {
            arity(1, 64);
            Graph acc = expect_graph(std::move(args[0]));
            for (std::size_t i = 1; i < args.size(); ++i) {
                Graph next = expect_graph(std::move(args[i]));
                if (acc.order() + next.order() > cap) fail("construction exceeds 64 vertices");
                acc = name == "join" ? join(acc, next) : disjoint_union(acc, next);
            }
            return acc;
        }
        if (name == "co" || name == "complement") {
            arity(1, 1);
            return complement(expect_graph(std::move(args[0])));
        }
        if (name == "lex") {
            arity(2, 2);
            Graph a = expect_graph(std::move(args[0]));
            Graph b = expect_graph(std::move(args[1]));
            if (a.order() * b.order() > cap) fail("construction exceeds 64 vertices");
            return lexicographic_product(a, b);
        }
        if (name == "add_edge" || name == "delete_edge") {
            arity(3, 3);
            Graph g = expect_graph(std::move(args[0]));
            const auto u = static_cast<Vertex>(expect_int(args[1], 0, g.order() - 1));
            const auto v = static_cast<Vertex>(expect_int(args[2], 0, g.order() - 1));
            if (u == v) fail("edge endpoints coincide");
            return name == "add_edge" ? with_edge(g, u, v) : without_edge(g, u, v);
        }
        pos_ = at;
        fail("unknown construction '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph named_graph(std::string_view expr) { return ExprParser(expr).parse(); }

Graph graph_from_text(std::string_view text) {
    try {
        return named_graph(text);
    } catch (const ParseError& named_error) {
        try {
            return parse_graph6(text);
        } catch (const ParseError&) {
            throw ParseError("input is neither a named graph nor graph6: " + std::string(named_error.what()),
                             named_error.offset());
        }
    }
}

}  // namespace cyclen
