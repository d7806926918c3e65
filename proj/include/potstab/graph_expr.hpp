#pragma once

#include "potstab/graph.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace potstab {

/// AST for graph generator expressions:
///
///   expr := "K" int | "Kbar" int | "C" int | "P" int
///         | "Kbip" int int | "split" int int | "dstar" int int
///         | "friendship" int
///         | "join" "(" expr "," expr ")" | "union" "(" expr "," expr ")"
///         | "complement" "(" expr ")"
struct GraphExpr {
    enum class Kind { Complete, Empty, Cycle, Path, Bipartite, Split, DoubleStar, Friendship,
                      Join, Union, Complement };

    Kind kind;
    std::vector<int> args;
    std::vector<GraphExpr> children;
    std::size_t position = 0;

    /// Vertex count of the built graph, saturating at INT_MAX.
    long long order() const;
};

inline constexpr int default_build_cap = 16;

GraphExpr parse_graph_expr(std::string_view text);
SmallGraph build(const GraphExpr& expr, int cap = default_build_cap);
std::string to_string(const GraphExpr& expr);

/// Accepts a generator expression or edge-list text.
SmallGraph parse_graph(std::string_view text, int cap = default_build_cap);

} // namespace potstab
