#include "potstab/graph.hpp"

#include "potstab/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace potstab {

namespace {

void check_vertex(const SmallGraph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
}

void check_order(int k) {
    if (k < 0) throw std::invalid_argument("graph order must be nonnegative");
    if (k > SmallGraph::max_order)
        throw CapExceeded("graph order " + std::to_string(k) + " exceeds " +
                          std::to_string(SmallGraph::max_order));
}

void check_enumerable(const SmallGraph& g) {
    if (g.order() > max_enumerable_order)
        throw CapExceeded("subset enumeration limited to order " +
                          std::to_string(max_enumerable_order));
}

int lowest(VertexMask m) noexcept { return std::countr_zero(m); }

} // namespace

int popcount(VertexMask m) noexcept { return std::popcount(m); }

std::vector<int> mask_vertices(VertexMask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(lowest(m));
    return out;
}

VertexMask vertices_mask(const std::vector<int>& vs) {
    VertexMask m = 0;
    for (int v : vs) m |= VertexMask{1} << v;
    return m;
}

SmallGraph::SmallGraph(int order) : order_(order) {
    check_order(order);
    rows_.assign(static_cast<std::size_t>(order), 0);
}

VertexMask SmallGraph::all() const noexcept {
    return order_ == 64 ? ~VertexMask{0} : (VertexMask{1} << order_) - 1;
}

void SmallGraph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    rows_[u] |= VertexMask{1} << v;
    rows_[v] |= VertexMask{1} << u;
}

void SmallGraph::remove_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    rows_[u] &= ~(VertexMask{1} << v);
    rows_[v] &= ~(VertexMask{1} << u);
}

int SmallGraph::degree(int v) const noexcept { return std::popcount(rows_[v]); }

int SmallGraph::max_degree() const noexcept { return max_degree_within(all()); }

int SmallGraph::max_degree_within(VertexMask subset) const noexcept {
    int best = 0;
    for (VertexMask m = subset; m; m &= m - 1)
        best = std::max(best, std::popcount(rows_[lowest(m)] & subset));
    return best;
}

int SmallGraph::edge_count() const noexcept { return edge_count_within(all()); }

int SmallGraph::edge_count_within(VertexMask subset) const noexcept {
    int twice = 0;
    for (VertexMask m = subset; m; m &= m - 1) twice += std::popcount(rows_[lowest(m)] & subset);
    return twice / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u)
        for (VertexMask m = rows_[u] & ~((VertexMask{2} << u) - 1); m; m &= m - 1)
            out.emplace_back(u, lowest(m));
    return out;
}

std::vector<int> SmallGraph::degrees() const {
    std::vector<int> out(static_cast<std::size_t>(order_));
    for (int v = 0; v < order_; ++v) out[v] = degree(v);
    return out;
}

DegreeSequence SmallGraph::degree_sequence() const { return DegreeSequence(degrees()); }

SmallGraph SmallGraph::induced(VertexMask subset) const {
    const auto vs = mask_vertices(subset & all());
    SmallGraph g(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (has_edge(vs[i], vs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

void for_each_subset(int order, int size, const std::function<bool(VertexMask)>& fn) {
    if (size < 0 || size > order) return;
    if (size == 0) {
        fn(0);
        return;
    }
    const VertexMask limit = order == 64 ? 0 : VertexMask{1} << order;
    VertexMask m = (size == 64) ? ~VertexMask{0} : (VertexMask{1} << size) - 1;
    while (true) {
        if (!fn(m)) return;
        // Gosper's hack: next mask with the same popcount.
        const VertexMask c = m & (~m + 1);
        const VertexMask r = m + c;
        if (r == 0) return;
        m = (((r ^ m) >> 2) / c) | r;
        if (limit != 0 && m >= limit) return;
    }
}

SmallGraph complete_graph(int k) {
    SmallGraph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

SmallGraph empty_graph(int k) { return SmallGraph(k); }

SmallGraph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    SmallGraph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

SmallGraph path_graph(int k) {
    if (k < 1) throw std::invalid_argument("a path needs at least 1 vertex");
    SmallGraph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

SmallGraph complete_bipartite(int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("part sizes must be nonnegative");
    check_order(r + s);
    SmallGraph g(r + s);
    for (int u = 0; u < r; ++u)
        for (int v = r; v < r + s; ++v) g.add_edge(u, v);
    return g;
}

SmallGraph complete_split(int r, int t) {
    if (r < 0 || t < 0) throw std::invalid_argument("part sizes must be nonnegative");
    return join(complete_graph(r), empty_graph(t));
}

SmallGraph double_star(int b1, int b2) {
    if (b1 < 0 || b2 < 0) throw std::invalid_argument("leaf counts must be nonnegative");
    check_order(b1 + b2 + 2);
    SmallGraph g(b1 + b2 + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < b1; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < b2; ++i) g.add_edge(1, 2 + b1 + i);
    return g;
}

SmallGraph friendship_graph(int t) {
    if (t < 1) throw std::invalid_argument("friendship graph needs at least one triangle");
    check_order(2 * t + 1);
    SmallGraph g(2 * t + 1);
    for (int i = 0; i < t; ++i) {
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
        g.add_edge(2 * i + 1, 2 * i + 2);
    }
    return g;
}

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b) {
    check_order(a.order() + b.order());
    SmallGraph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

SmallGraph join(const SmallGraph& a, const SmallGraph& b) {
    SmallGraph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

SmallGraph complement(const SmallGraph& g) {
    SmallGraph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

bool is_complete(const SmallGraph& g) noexcept {
    const int k = g.order();
    return g.edge_count() == k * (k - 1) / 2;
}

namespace {

// Branch and bound over candidate masks. `best` holds the best set found,
// compared by size and then lexicographically by sorted vertex list.
void mis_search(const SmallGraph& g, VertexMask chosen, VertexMask candidates, VertexMask& best) {
    if (candidates == 0) {
        const int c = std::popcount(chosen), b = std::popcount(best);
        if (c > b || (c == b && mask_vertices(chosen) < mask_vertices(best))) best = chosen;
        return;
    }
    if (std::popcount(chosen) + std::popcount(candidates) < std::popcount(best)) return;
    const int v = lowest(candidates);
    const VertexMask bit = VertexMask{1} << v;
    mis_search(g, chosen | bit, candidates & ~bit & ~g.neighbors(v), best);
    // Excluding v only helps if v has a neighbor among the candidates;
    // otherwise v belongs to every maximal extension.
    if (g.neighbors(v) & candidates) mis_search(g, chosen, candidates & ~bit, best);
}

} // namespace

VertexMask maximum_independent_set(const SmallGraph& g) {
    VertexMask best = 0;
    mis_search(g, 0, g.all(), best);
    return best;
}

int independence_number(const SmallGraph& g) { return popcount(maximum_independent_set(g)); }

int nabla(const SmallGraph& h, int i) {
    check_enumerable(h);
    const int alpha = independence_number(h);
    if (i < alpha + 1 || i > h.order())
        throw std::out_of_range("nabla index " + std::to_string(i) + " outside [" +
                                std::to_string(alpha + 1) + ", " + std::to_string(h.order()) + "]");
    int best = h.order();
    for_each_subset(h.order(), i, [&](VertexMask m) {
        best = std::min(best, h.max_degree_within(m));
        return best > 1; // an i-subset with i > alpha always has an edge
    });
    return best;
}

std::vector<VertexMask> nabla_subsets(const SmallGraph& h, int i) {
    const int target = nabla(h, i);
    std::vector<VertexMask> out;
    for_each_subset(h.order(), i, [&](VertexMask m) {
        if (h.max_degree_within(m) == target) out.push_back(m);
        return true;
    });
    return out;
}

std::vector<DeletedMember> deleted_family(const SmallGraph& h, int t, bool dedup) {
    check_enumerable(h);
    if (t < 0 || t >= h.order()) throw std::out_of_range("deletion count out of range");
    std::vector<DeletedMember> out;
    for_each_subset(h.order(), h.order() - t, [&](VertexMask m) {
        SmallGraph f = h.induced(m);
        if (dedup && std::any_of(out.begin(), out.end(),
                                 [&](const DeletedMember& d) { return are_isomorphic(d.graph, f); }))
            return true;
        out.push_back({m, std::move(f)});
        return true;
    });
    return out;
}

namespace {

/// Pattern vertices ordered for backtracking: highest degree first, then
/// greedily the vertex with the most already-placed neighbors.
std::vector<int> search_order(const SmallGraph& p) {
    const int k = p.order();
    std::vector<int> order;
    VertexMask placed = 0;
    for (int step = 0; step < k; ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if ((placed >> v) & 1U) continue;
            const int conn = std::popcount(p.neighbors(v) & placed);
            const int deg = p.degree(v);
            if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed |= VertexMask{1} << best;
    }
    return order;
}

struct MatchState {
    const SmallGraph& pattern;
    const SmallGraph& host;
    VertexMask host_subset;
    bool induced;  // adjacency must match both ways (isomorphism)
    std::vector<int> order;
    std::vector<int> image;
    VertexMask used = 0;
    std::function<bool(const std::vector<int>&)> on_match;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return on_match(image);
        const int pv = order[depth];
        VertexMask cand = host_subset & ~used;
        for (std::size_t j = 0; j < depth; ++j) {
            const int q = order[j];
            if (pattern.has_edge(pv, q))
                cand &= host.neighbors(image[q]);
            else if (induced)
                cand &= ~host.neighbors(image[q]);
        }
        const int need = pattern.degree(pv);
        for (; cand; cand &= cand - 1) {
            const int hv = lowest(cand);
            if (induced ? host.degree(hv) != need : host.degree(hv) < need) continue;
            image[pv] = hv;
            used |= VertexMask{1} << hv;
            if (extend(depth + 1)) return true;
            used &= ~(VertexMask{1} << hv);
        }
        image[pv] = -1;
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_embedding(const SmallGraph& pattern, const SmallGraph& host,
                                               VertexMask host_subset) {
    host_subset &= host.all();
    if (pattern.order() > popcount(host_subset)) return std::nullopt;
    if (pattern.order() == 0) return std::vector<int>{};
    std::optional<std::vector<int>> found;
    MatchState st{pattern, host, host_subset, false, search_order(pattern),
                  std::vector<int>(static_cast<std::size_t>(pattern.order()), -1), 0,
                  [&](const std::vector<int>& img) {
                      found = img;
                      return true;
                  }};
    st.extend(0);
    return found;
}

std::optional<std::vector<int>> find_embedding(const SmallGraph& pattern, const SmallGraph& host) {
    return find_embedding(pattern, host, host.all());
}

bool spanning_subgraph_of(const SmallGraph& h, const SmallGraph& host) {
    if (h.order() != host.order())
        throw std::invalid_argument("spanning containment needs equal orders");
    if (h.edge_count() > host.edge_count()) return false;
    return find_embedding(h, host).has_value();
}

bool are_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    bool found = false;
    MatchState st{a, b, b.all(), true, search_order(a),
                  std::vector<int>(static_cast<std::size_t>(a.order()), -1), 0,
                  [&](const std::vector<int>&) { return found = true; }};
    st.extend(0);
    return found;
}

std::vector<std::vector<int>> automorphisms(const SmallGraph& g) {
    std::vector<std::vector<int>> out;
    MatchState st{g, g, g.all(), true, search_order(g),
                  std::vector<int>(static_cast<std::size_t>(g.order()), -1), 0,
                  [&](const std::vector<int>& img) {
                      out.push_back(img);
                      return false;
                  }};
    st.extend(0);
    std::vector<int> id(static_cast<std::size_t>(g.order()));
    std::iota(id.begin(), id.end(), 0);
    auto it = std::find(out.begin(), out.end(), id);
    if (it != out.end()) std::iter_swap(out.begin(), it);
    return out;
}

std::optional<VertexMask> find_one_edge_set(const SmallGraph& h, int size) {
    check_enumerable(h);
    std::optional<VertexMask> found;
    for_each_subset(h.order(), size, [&](VertexMask m) {
        if (h.edge_count_within(m) == 1) found = m;
        return !found;
    });
    return found;
}

bool one_edge_set_exists(const SmallGraph& h, int size) {
    return find_one_edge_set(h, size).has_value();
}

SmallGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<SmallGraph> g;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "n") {
            int k = -1;
            if (g) throw ParseError("duplicate 'n' line", line_start);
            if (!(ls >> k) || k < 0) throw ParseError("expected vertex count after 'n'", line_start);
            if (k > SmallGraph::max_order) throw CapExceeded("graph file order exceeds cap");
            g.emplace(k);
        } else if (tag == "e") {
            if (!g) throw ParseError("'e' line before 'n' line", line_start);
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError("expected two endpoints after 'e'", line_start);
            if (u < 1 || v < 1 || u > g->order() || v > g->order() || u == v)
                throw ParseError("bad edge endpoints", line_start);
            g->add_edge(u - 1, v - 1);
        } else {
            throw ParseError("unknown line tag '" + tag + "'", line_start);
        }
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens", line_start);
    }
    if (!g) throw ParseError("missing 'n' line", 0);
    return *g;
}

std::string format_edge_list(const SmallGraph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

} // namespace potstab
