#pragma once

#include "potstab/sequence.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace potstab {

using VertexMask = std::uint64_t;

/// Simple labeled graph on vertices 0..order-1 stored as adjacency bit rows.
/// Public APIs and file formats are 1-based; the class itself is 0-based.
class SmallGraph {
public:
    static constexpr int max_order = 64;

    SmallGraph() = default;
    explicit SmallGraph(int order);

    int order() const noexcept { return order_; }
    VertexMask all() const noexcept;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
    VertexMask neighbors(int v) const noexcept { return rows_[v]; }
    int degree(int v) const noexcept;
    int max_degree() const noexcept;
    int max_degree_within(VertexMask subset) const noexcept;
    int edge_count() const noexcept;
    int edge_count_within(VertexMask subset) const noexcept;

    std::vector<std::pair<int, int>> edges() const;
    /// Sorted nonincreasing.
    DegreeSequence degree_sequence() const;
    std::vector<int> degrees() const;

    /// Induced subgraph on `subset`, vertices renumbered in increasing order.
    SmallGraph induced(VertexMask subset) const;

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

private:
    int order_ = 0;
    std::vector<VertexMask> rows_;
};

int popcount(VertexMask m) noexcept;
std::vector<int> mask_vertices(VertexMask m);
VertexMask vertices_mask(const std::vector<int>& vs);

/// Calls `fn(mask)` for every `size`-subset of {0..order-1} in increasing
/// numeric order. Stops early when `fn` returns false.
void for_each_subset(int order, int size, const std::function<bool(VertexMask)>& fn);

// Constructions. Vertex numbering is canonical: the left operand first.
SmallGraph complete_graph(int k);
SmallGraph empty_graph(int k);
SmallGraph cycle_graph(int k);
SmallGraph path_graph(int k);
SmallGraph complete_bipartite(int r, int s);
SmallGraph complete_split(int r, int t);
/// Double star S_{b1,b2}: adjacent centers 0 and 1 with b1 and b2 pendant
/// leaves, so the centers have degrees b1+1 and b2+1.
SmallGraph double_star(int b1, int b2);
SmallGraph friendship_graph(int t);
SmallGraph join(const SmallGraph& a, const SmallGraph& b);
SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);
SmallGraph complement(const SmallGraph& g);

bool is_complete(const SmallGraph& g) noexcept;

int independence_number(const SmallGraph& g);
/// Lexicographically first maximum independent set (by sorted vertex list).
VertexMask maximum_independent_set(const SmallGraph& g);

/// Largest subset order accepted by the exhaustive subset enumerations.
inline constexpr int max_enumerable_order = 20;

/// min over i-subsets X of the maximum degree of h[X], for alpha(h)+1 <= i <= k.
int nabla(const SmallGraph& h, int i);
/// Every i-subset attaining nabla(h, i), increasing numeric order.
std::vector<VertexMask> nabla_subsets(const SmallGraph& h, int i);

struct DeletedMember {
    VertexMask kept;
    SmallGraph graph;
};

/// h[X] for every (k-t)-subset X. With `dedup`, keeps the first member of
/// each isomorphism class.
std::vector<DeletedMember> deleted_family(const SmallGraph& h, int t, bool dedup = false);

bool are_isomorphic(const SmallGraph& a, const SmallGraph& b);
/// All automorphisms as vertex images, identity first.
std::vector<std::vector<int>> automorphisms(const SmallGraph& g);

/// An injective map of pattern vertices into `host_subset` that carries every
/// pattern edge to a host edge (not necessarily induced).
std::optional<std::vector<int>> find_embedding(const SmallGraph& pattern, const SmallGraph& host,
                                               VertexMask host_subset);
std::optional<std::vector<int>> find_embedding(const SmallGraph& pattern, const SmallGraph& host);

/// Same-order containment. Throws std::invalid_argument on order mismatch.
bool spanning_subgraph_of(const SmallGraph& h, const SmallGraph& host);

/// A `size`-subset inducing exactly one edge, if any.
std::optional<VertexMask> find_one_edge_set(const SmallGraph& h, int size);
bool one_edge_set_exists(const SmallGraph& h, int size);

/// Edge-list text: first line `n <k>`, then `e <u> <v>` lines, 1-based.
/// Blank lines and lines starting with '#' are ignored.
SmallGraph parse_edge_list(std::string_view text);
std::string format_edge_list(const SmallGraph& g);

} // namespace potstab
