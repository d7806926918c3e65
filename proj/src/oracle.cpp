#include "potstab/oracle.hpp"

#include "potstab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace potstab {

std::vector<std::pair<int, int>> canonical_realization_edges(const DegreeSequence& seq) {
    if (!is_graphic(seq)) throw std::invalid_argument("sequence is not graphic");
    const int n = static_cast<int>(seq.size());
    std::vector<int> remaining = seq.terms();
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> edges;

    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!done[u] && (v < 0 || remaining[u] > remaining[v])) v = u;
        if (remaining[v] == 0) break;
        done[v] = 1;

        order.clear();
        for (int u = 0; u < n; ++u)
            if (!done[u]) order.push_back(u);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return remaining[a] > remaining[b]; });
        for (int j = 0; j < remaining[v]; ++j) {
            const int u = order[static_cast<std::size_t>(j)];
            if (remaining[u] == 0) throw InvariantViolation("Havel-Hakimi ran out of partners");
            --remaining[u];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        remaining[v] = 0;
    }
    return edges;
}

Realization canonical_realization(const DegreeSequence& seq) {
    if (seq.size() > static_cast<std::size_t>(SmallGraph::max_order))
        throw CapExceeded("canonical_realization limited to " + std::to_string(SmallGraph::max_order) +
                          " vertices");
    SmallGraph g(static_cast<int>(seq.size()));
    for (auto [u, v] : canonical_realization_edges(seq)) g.add_edge(u, v);
    return {std::move(g), seq};
}

Realization two_switch(const Realization& g, std::pair<int, int> ab, std::pair<int, int> cd) {
    const auto [a, b] = ab;
    const auto [c, d] = cd;
    const int n = g.graph.order();
    for (int v : {a, b, c, d})
        if (v < 0 || v >= n) throw std::invalid_argument("two_switch vertex out of range");
    if (a == c || b == d || a == d || b == c || a == b || c == d)
        throw std::invalid_argument("two_switch endpoints must be distinct");
    if (!g.graph.has_edge(a, b) || !g.graph.has_edge(c, d))
        throw std::invalid_argument("two_switch needs ab and cd to be edges");
    if (g.graph.has_edge(a, c) || g.graph.has_edge(b, d))
        throw std::invalid_argument("two_switch needs ac and bd to be non-edges");
    Realization out = g;
    out.graph.remove_edge(a, b);
    out.graph.remove_edge(c, d);
    out.graph.add_edge(a, c);
    out.graph.add_edge(b, d);
    return out;
}

namespace {

/// Finds a graph with the given degree demands that avoids `forbidden`
/// edges. Processes the largest demand first and joins it to a subset of the
/// other open vertices; failed demand vectors are memoized.
class ResidualSolver {
public:
    ResidualSolver(std::vector<int> demand, std::vector<VertexMask> forbidden)
        : demand_(std::move(demand)), forbidden_(std::move(forbidden)) {}

    bool solve() { return search(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::vector<int> demand_;
    std::vector<VertexMask> forbidden_;
    std::vector<std::pair<int, int>> edges_;
    std::unordered_set<std::string> failed_;
    std::uint64_t nodes_ = 0;

    VertexMask open() const {
        VertexMask m = 0;
        for (std::size_t v = 0; v < demand_.size(); ++v)
            if (demand_[v] > 0) m |= VertexMask{1} << v;
        return m;
    }

    bool feasible(VertexMask open_set) const {
        std::vector<int> d;
        for (VertexMask m = open_set; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const VertexMask partners = open_set & ~forbidden_[v] & ~(VertexMask{1} << v);
            if (std::popcount(partners) < demand_[v]) return false;
            d.push_back(demand_[v]);
        }
        std::sort(d.begin(), d.end(), std::greater<>{});
        return is_graphic(std::span<const int>(d));
    }

    std::string key() const { return std::string(demand_.begin(), demand_.end()); }

    bool search() {
        ++nodes_;
        const VertexMask open_set = open();
        if (open_set == 0) return true;
        if (!feasible(open_set)) return false;
        std::string k = key();
        if (failed_.count(k)) return false;

        int v = -1;
        for (VertexMask m = open_set; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (v < 0 || demand_[u] > demand_[v]) v = u;
        }
        std::vector<int> cands;
        for (VertexMask m = open_set & ~forbidden_[v] & ~(VertexMask{1} << v); m; m &= m - 1)
            cands.push_back(std::countr_zero(m));
        std::stable_sort(cands.begin(), cands.end(),
                         [&](int a, int b) { return demand_[a] > demand_[b]; });

        const int need = demand_[v];
        demand_[v] = 0;
        std::vector<int> pick;
        if (choose(v, cands, 0, need, pick)) return true;
        demand_[v] = need;
        failed_.insert(std::move(k));
        return false;
    }

    bool choose(int v, const std::vector<int>& cands, std::size_t from, int left, std::vector<int>& pick) {
        if (left == 0) {
            for (int u : pick) {
                --demand_[u];
                edges_.emplace_back(v, u);
            }
            if (search()) return true;
            for (int u : pick) {
                ++demand_[u];
                edges_.pop_back();
            }
            return false;
        }
        // Candidates with equal demand and equal forbidden rows are
        // interchangeable; skip repeats of a rejected choice.
        for (std::size_t i = from; i + static_cast<std::size_t>(left) <= cands.size(); ++i) {
            if (i > from && demand_[cands[i]] == demand_[cands[i - 1]] &&
                forbidden_[cands[i]] == forbidden_[cands[i - 1]])
                continue;
            pick.push_back(cands[i]);
            if (choose(v, cands, i + 1, left - 1, pick)) return true;
            pick.pop_back();
        }
        return false;
    }
};

void check_caps(const DegreeSequence& seq, const SmallGraph& h, const OracleConfig& cfg) {
    if (static_cast<int>(seq.size()) > cfg.cap_n)
        throw CapExceeded("sequence length " + std::to_string(seq.size()) + " exceeds oracle cap " +
                          std::to_string(cfg.cap_n));
    if (h.order() > cfg.cap_k)
        throw CapExceeded("graph order " + std::to_string(h.order()) + " exceeds oracle cap " +
                          std::to_string(cfg.cap_k));
    if (cfg.cap_n > SmallGraph::max_order) throw CapExceeded("oracle cap above 64 vertices");
}

std::optional<SmallGraph> solve_placement(const DegreeSequence& seq, const SmallGraph& h,
                                          const std::vector<int>& place, SearchStats& stats) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> demand = seq.terms();
    std::vector<VertexMask> forbidden(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : h.edges()) {
        const int a = place[u], b = place[v];
        forbidden[a] |= VertexMask{1} << b;
        forbidden[b] |= VertexMask{1} << a;
        if (--demand[a] < 0 || --demand[b] < 0) return std::nullopt;
    }
    ResidualSolver solver(std::move(demand), std::move(forbidden));
    const bool ok = solver.solve();
    stats.residual_nodes += solver.nodes();
    if (!ok) return std::nullopt;

    SmallGraph g(n);
    for (auto [u, v] : h.edges()) g.add_edge(place[u], place[v]);
    for (auto [u, v] : solver.edges()) g.add_edge(u, v);
    return g;
}

} // namespace

std::optional<SmallGraph> realize_with_placement(const DegreeSequence& seq, const SmallGraph& h,
                                                 const std::vector<int>& embedding, SearchStats* stats) {
    if (!is_graphic(seq)) throw std::invalid_argument("sequence is not graphic");
    if (embedding.size() != static_cast<std::size_t>(h.order()))
        throw std::invalid_argument("placement size differs from graph order");
    if (seq.size() > static_cast<std::size_t>(SmallGraph::max_order))
        throw CapExceeded("placement search limited to 64 vertices");
    SearchStats local;
    auto g = solve_placement(seq, h, embedding, stats ? *stats : local);
    return g;
}

PotentialCertificate potentially(const DegreeSequence& seq, const SmallGraph& h, const OracleConfig& cfg) {
    if (!is_graphic(seq)) throw std::invalid_argument("sequence is not graphic");
    check_caps(seq, h, cfg);

    PotentialCertificate cert;
    const int n = static_cast<int>(seq.size());
    const int k = h.order();
    if (k == 0) {
        cert.answer = true;
        cert.embedding = std::vector<int>{};
        cert.realization = canonical_realization(seq).graph;
        return cert;
    }
    if (k > n || !degree_sufficient(seq, h.degree_sequence())) return cert;

    // Equal terms are interchangeable labels, so a placement is determined by
    // the class (distinct degree value) each H vertex lands in.
    struct DegreeClass {
        int value, start, size;
    };
    std::vector<DegreeClass> classes;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && seq.terms()[j] == seq.terms()[i]) ++j;
        classes.push_back({seq.terms()[i], i, j - i});
        i = j;
    }
    const auto autos = automorphisms(h);
    const auto hdeg = h.degrees();

    std::vector<int> cls(static_cast<std::size_t>(k), -1);
    std::vector<int> load(classes.size(), 0);

    auto canonical = [&] {
        for (std::size_t a = 1; a < autos.size(); ++a) {
            const auto& sigma = autos[a];
            for (int v = 0; v < k; ++v) {
                const int image = cls[sigma[v]];
                if (image < cls[v]) return false;
                if (image > cls[v]) break;
            }
        }
        return true;
    };

    std::function<bool(int)> assign = [&](int v) -> bool {
        if (v == k) {
            if (!canonical()) return false;
            ++cert.stats.placements_tried;
            std::vector<int> place(static_cast<std::size_t>(k));
            std::vector<int> used(classes.size(), 0);
            for (int u = 0; u < k; ++u) place[u] = classes[cls[u]].start + used[cls[u]]++;
            if (auto g = solve_placement(seq, h, place, cert.stats)) {
                cert.answer = true;
                cert.embedding = std::move(place);
                cert.realization = std::move(*g);
                return true;
            }
            return false;
        }
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (classes[c].value < hdeg[v]) break;
            if (load[c] == classes[c].size) continue;
            cls[v] = static_cast<int>(c);
            ++load[c];
            const bool found = assign(v + 1);
            --load[c];
            if (found) return true;
        }
        return false;
    };
    assign(0);
    return cert;
}

bool yin_li_kk(const DegreeSequence& seq, int k) {
    if (k <= 0) return true;
    const auto d = [&](int i) { return seq.d_or_zero(static_cast<std::size_t>(i)); };
    if (static_cast<int>(seq.size()) < k || d(k) < k - 1) return false;
    bool first = true;
    for (int i = 1; i <= k - 2; ++i)
        if (d(i) < 2 * (k - 1) - i) first = false;
    if (first) return true;
    return d(2 * k) >= k - 2;
}

PotentialCertificate potentially_split(const DegreeSequence& seq, int r, int t, const OracleConfig& cfg) {
    if (r < 0 || t < 0) throw std::invalid_argument("split parts must be nonnegative");
    if (!is_graphic(seq)) throw std::invalid_argument("sequence is not graphic");
    const SmallGraph split = complete_split(r, t);
    check_caps(seq, split, cfg);
    PotentialCertificate cert;
    if (r + t > static_cast<int>(seq.size())) return cert;
    std::vector<int> place(static_cast<std::size_t>(r + t));
    std::iota(place.begin(), place.end(), 0);
    cert.stats.placements_tried = 1;
    if (auto g = solve_placement(seq, split, place, cert.stats)) {
        cert.answer = true;
        cert.embedding = std::move(place);
        cert.realization = std::move(*g);
    }
    return cert;
}

void for_each_graphic_sequence(int n, int total, const std::function<void(const DegreeSequence&)>& fn) {
    if (n <= 0 || total < 0 || total % 2 != 0) {
        if (n == 0 && total == 0) fn(DegreeSequence{});
        return;
    }
    std::vector<int> terms(static_cast<std::size_t>(n), 0);
    std::function<void(int, int, int)> rec = [&](int pos, int cap, int left) {
        if (pos == n) {
            if (left == 0 && is_graphic(std::span<const int>(terms))) fn(DegreeSequence(terms));
            return;
        }
        const int slots = n - pos;
        for (int v = std::min(cap, left); v >= 0; --v) {
            if (static_cast<long long>(v) * slots < left) break;
            terms[pos] = v;
            rec(pos + 1, v, left - v);
        }
    };
    rec(0, n - 1, total);
}

std::vector<DegreeSequence> graphic_sequences(int n, int total) {
    std::vector<DegreeSequence> out;
    for_each_graphic_sequence(n, total, [&](const DegreeSequence& s) { out.push_back(s); });
    return out;
}

SigmaExact sigma_exact(const SmallGraph& h, int n, const OracleConfig& cfg, int threads) {
    if (n > cfg.cap_n)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds oracle cap " + std::to_string(cfg.cap_n));
    if (h.order() > cfg.cap_k) throw CapExceeded("graph order exceeds oracle cap");
    if (n < h.order()) throw std::invalid_argument("sigma_exact needs n >= k");
    threads = std::max(1, threads);

    SigmaExact out;
    out.n = n;
    int top = n * (n - 1);
    for (int s = top; s >= 0; s -= 2) {
        const auto seqs = graphic_sequences(n, s);
        std::vector<char> potential(seqs.size(), 0);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < seqs.size();)
                potential[i] = potentially(seqs[i], h, cfg).answer ? 1 : 0;
        };
        if (threads == 1 || seqs.size() < 2) {
            worker();
        } else {
            std::vector<std::thread> pool;
            const int count = std::min<int>(threads, static_cast<int>(seqs.size()));
            for (int t = 0; t < count; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        out.sequences_checked += seqs.size();
        for (std::size_t i = 0; i < seqs.size(); ++i)
            if (!potential[i]) out.extremal_sequences.push_back(seqs[i]);
        if (!out.extremal_sequences.empty()) {
            out.value = s + 2;
            return out;
        }
    }
    throw InvariantViolation("no sequence failed to be potentially H-graphic");
}

} // namespace potstab
