#include "potstab/graph_expr.hpp"

#include "potstab/errors.hpp"

#include <cctype>
#include <charconv>
#include <climits>
#include <map>

namespace potstab {

namespace {

using Kind = GraphExpr::Kind;

struct Generator {
    Kind kind;
    int arity;
    int min_first;  // smallest legal value of each argument
};

const std::map<std::string, Generator, std::less<>>& generators() {
    static const std::map<std::string, Generator, std::less<>> table{
        {"K", {Kind::Complete, 1, 1}},        {"Kbar", {Kind::Empty, 1, 0}},
        {"C", {Kind::Cycle, 1, 3}},           {"P", {Kind::Path, 1, 1}},
        {"Kbip", {Kind::Bipartite, 2, 0}},    {"split", {Kind::Split, 2, 0}},
        {"dstar", {Kind::DoubleStar, 2, 0}},  {"friendship", {Kind::Friendship, 1, 1}},
    };
    return table;
}

constexpr long long max_argument = 1'000'000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GraphExpr parse() {
        GraphExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool at_integer() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    int integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        long long v = 0;
        auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc{} || v > max_argument) throw ParseError("integer overflow", start);
        return static_cast<int>(v);
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected generator name", start);
        return std::string(text_.substr(start, pos_ - start));
    }

    GraphExpr expr() {
        skip_ws();
        const std::size_t start = pos_;
        const std::string name = identifier();

        if (name == "join" || name == "union") {
            expect('(');
            GraphExpr left = expr();
            expect(',');
            GraphExpr right = expr();
            expect(')');
            return {name == "join" ? Kind::Join : Kind::Union, {}, {std::move(left), std::move(right)},
                    start};
        }
        if (name == "complement") {
            expect('(');
            GraphExpr inner = expr();
            expect(')');
            return {Kind::Complement, {}, {std::move(inner)}, start};
        }

        const auto it = generators().find(name);
        if (it == generators().end()) throw ParseError("unknown generator '" + name + "'", start);
        const Generator& gen = it->second;
        GraphExpr e{gen.kind, {}, {}, start};
        for (int a = 0; a < gen.arity; ++a) {
            if (!at_integer())
                throw ParseError("'" + name + "' takes " + std::to_string(gen.arity) +
                                     " integer argument(s)",
                                 pos_);
            const std::size_t at = pos_;
            const int v = integer();
            if (v < gen.min_first)
                throw ParseError("'" + name + "' argument must be at least " +
                                     std::to_string(gen.min_first),
                                 at);
            e.args.push_back(v);
        }
        if (at_integer()) throw ParseError("too many arguments to '" + name + "'", pos_);
        if ((gen.kind == Kind::Bipartite || gen.kind == Kind::Split) && e.args[0] + e.args[1] == 0)
            throw ParseError("'" + name + "' needs at least one vertex", start);
        return e;
    }
};

long long saturating_add(long long a, long long b) { return std::min<long long>(a + b, INT_MAX); }

} // namespace

long long GraphExpr::order() const {
    switch (kind) {
    case Kind::Complete:
    case Kind::Empty:
    case Kind::Cycle:
    case Kind::Path: return args[0];
    case Kind::Bipartite:
    case Kind::Split: return saturating_add(args[0], args[1]);
    case Kind::DoubleStar: return saturating_add(args[0], args[1]) + 2;
    case Kind::Friendship: return 2LL * args[0] + 1;
    case Kind::Join:
    case Kind::Union: return saturating_add(children[0].order(), children[1].order());
    case Kind::Complement: return children[0].order();
    }
    return 0;
}

GraphExpr parse_graph_expr(std::string_view text) { return Parser(text).parse(); }

SmallGraph build(const GraphExpr& expr, int cap) {
    if (expr.order() > cap)
        throw CapExceeded("graph order " + std::to_string(expr.order()) + " exceeds cap " +
                          std::to_string(cap));
    const auto& a = expr.args;
    switch (expr.kind) {
    case Kind::Complete: return complete_graph(a[0]);
    case Kind::Empty: return empty_graph(a[0]);
    case Kind::Cycle: return cycle_graph(a[0]);
    case Kind::Path: return path_graph(a[0]);
    case Kind::Bipartite: return complete_bipartite(a[0], a[1]);
    case Kind::Split: return complete_split(a[0], a[1]);
    case Kind::DoubleStar: return double_star(a[0], a[1]);
    case Kind::Friendship: return friendship_graph(a[0]);
    case Kind::Join: return join(build(expr.children[0], cap), build(expr.children[1], cap));
    case Kind::Union: return disjoint_union(build(expr.children[0], cap), build(expr.children[1], cap));
    case Kind::Complement: return complement(build(expr.children[0], cap));
    }
    throw std::logic_error("unhandled graph expression kind");
}

std::string to_string(const GraphExpr& expr) {
    auto name = [&]() -> std::string {
        for (const auto& [n, g] : generators())
            if (g.kind == expr.kind) return n;
        return {};
    };
    switch (expr.kind) {
    case Kind::Join:
    case Kind::Union:
        return std::string(expr.kind == Kind::Join ? "join(" : "union(") + to_string(expr.children[0]) +
               ", " + to_string(expr.children[1]) + ")";
    case Kind::Complement: return "complement(" + to_string(expr.children[0]) + ")";
    default: {
        std::string out = name();
        for (int v : expr.args) out += " " + std::to_string(v);
        return out;
    }
    }
}

SmallGraph parse_graph(std::string_view text, int cap) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const bool edge_list = i < text.size() && (text[i] == '#' ||
                           (text[i] == 'n' && i + 1 < text.size() &&
                            std::isspace(static_cast<unsigned char>(text[i + 1]))));
    if (edge_list) {
        SmallGraph g = parse_edge_list(text);
        if (g.order() > cap)
            throw CapExceeded("graph order " + std::to_string(g.order()) + " exceeds cap " +
                              std::to_string(cap));
        return g;
    }
    return build(parse_graph_expr(text), cap);
}

} // namespace potstab
