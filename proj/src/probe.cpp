#include "potstab/probe.hpp"

#include "potstab/errors.hpp"
#include "potstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace potstab {

double delta_bound(double epsilon, int k) {
    const double kk = k;
    return epsilon / (16 * kk * kk * kk + 48 * kk * kk + (32 + epsilon) * kk);
}

std::int64_t default_f(int k) {
    std::int64_t binom = 1;
    const int half = k / 2;
    for (int i = 1; i <= half; ++i) binom = binom * (k - half + i) / i;
    return binom * 8 * k * k;
}

std::string to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::FoundH: return "FoundH";
    case VerdictKind::CloseToTarget: return "CloseToTarget";
    case VerdictKind::FoundSplit: return "FoundSplit";
    case VerdictKind::DeclaredPotential: return "DeclaredPotential";
    case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return {};
}

std::string to_string(PotentialReason r) {
    switch (r) {
    case PotentialReason::EarlyExit: return "EarlyExit";
    case PotentialReason::InitGuard: return "InitGuard";
    case PotentialReason::Step4Guard: return "Step4Guard";
    }
    return {};
}

std::string to_string(RefineRoute r) {
    switch (r) {
    case RefineRoute::EdgeInR: return "EdgeInR";
    case RefineRoute::DoubleStarExchange: return "DoubleStarExchange";
    case RefineRoute::ThreeEdgeExchange: return "ThreeEdgeExchange";
    case RefineRoute::SwitchSearch: return "SwitchSearch";
    }
    return {};
}

namespace {

// ---------------------------------------------------------------------------
// Labeled sequences. Every term carries the label of the original vertex so
// the removals can be replayed backwards onto a realization of pi.

struct Term {
    int degree;
    int label;
};

struct Op {
    int vertex = -1;             // laid-off vertex, or -1 for a Step 2 cut
    std::vector<int> neighbors;  // lay-off targets
    std::vector<std::pair<int, int>> edges;  // cut edges
};

class LabeledState {
public:
    explicit LabeledState(const DegreeSequence& seq) {
        for (std::size_t i = 0; i < seq.size(); ++i)
            terms_.push_back({seq.terms()[i], static_cast<int>(i)});
    }

    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const Term& at(std::size_t i) const { return terms_[i]; }

    DegreeSequence sequence() const {
        std::vector<int> d;
        d.reserve(terms_.size());
        for (const Term& t : terms_) d.push_back(t.degree);
        return DegreeSequence(std::move(d));
    }

    // Lay-off of the term at 0-based position `pos`; returns the replay record.
    Op layoff_at(std::size_t pos) {
        const auto targets = layoff_targets(sequence(), pos + 1);
        Op op;
        op.vertex = terms_[pos].label;
        for (std::size_t j : targets) {
            Term& t = terms_[j - 1];
            if (--t.degree < 0) throw InvariantViolation("lay-off drove a labeled term negative");
            op.neighbors.push_back(t.label);
        }
        terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(pos));
        sort();
        return op;
    }

    // Step 2: keep v1 and its neighbors in the canonical realization.
    Op cut_nonneighbors(int& removed) {
        const auto edges = canonical_realization_edges(sequence());
        const std::size_t m = terms_.size();
        std::vector<char> keep(m, 0);
        keep[0] = 1;
        for (auto [a, b] : edges) {
            if (a == 0) keep[static_cast<std::size_t>(b)] = 1;
            if (b == 0) keep[static_cast<std::size_t>(a)] = 1;
        }
        Op op;
        std::vector<int> kept_degree(m, 0);
        for (auto [a, b] : edges) {
            const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
            if (keep[ua] && keep[ub]) {
                ++kept_degree[ua];
                ++kept_degree[ub];
            } else {
                op.edges.emplace_back(terms_[ua].label, terms_[ub].label);
            }
        }
        std::vector<Term> next;
        removed = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (keep[i]) next.push_back({kept_degree[i], terms_[i].label});
            else ++removed;
        }
        terms_ = std::move(next);
        sort();
        return op;
    }

private:
    void sort() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
            return a.degree != b.degree ? a.degree > b.degree : a.label < b.label;
        });
    }

    std::vector<Term> terms_;
};

// Replays `ops` backwards on top of `base` (edges between labels).
SmallGraph join_back(int n, const std::vector<std::pair<int, int>>& base, const std::vector<Op>& ops) {
    SmallGraph g(n);
    for (auto [a, b] : base) g.add_edge(a, b);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->vertex >= 0) {
            for (int u : it->neighbors) g.add_edge(it->vertex, u);
        } else {
            for (auto [a, b] : it->edges) g.add_edge(a, b);
        }
    }
    return g;
}

// Realization edges of the current state, in labels, with the embedding of
// `pattern` (pattern vertex -> label) when one is requested.
struct StateRealization {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> pattern_labels;
};

StateRealization state_edges(const LabeledState& st) {
    StateRealization r;
    for (auto [a, b] : canonical_realization_edges(st.sequence()))
        r.edges.emplace_back(st.at(static_cast<std::size_t>(a)).label, st.at(static_cast<std::size_t>(b)).label);
    return r;
}

std::optional<StateRealization> state_edges_with(const LabeledState& st, const SmallGraph& pattern,
                                                 const OracleConfig& cfg) {
    const auto cert = potentially(st.sequence(), pattern, cfg);
    if (!cert.answer) return std::nullopt;
    StateRealization r;
    for (auto [a, b] : cert.realization->edges())
        r.edges.emplace_back(st.at(static_cast<std::size_t>(a)).label, st.at(static_cast<std::size_t>(b)).label);
    for (int v : *cert.embedding) r.pattern_labels.push_back(st.at(static_cast<std::size_t>(v)).label);
    return r;
}

bool oracle_covers(int n, int k, const ProbeConfig& cfg) {
    return cfg.oracle_fallback && n <= cfg.oracle.cap_n && k <= cfg.oracle.cap_k;
}

void check_embedding(const SmallGraph& g, const DegreeSequence& seq, const SmallGraph& pattern,
                     const std::vector<int>& emb) {
    if (g.degree_sequence() != seq || g.degrees() != seq.terms())
        throw InvariantViolation("join-back realization does not realize the input sequence");
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    for (int v : emb) {
        if (v < 0 || v >= g.order() || used[static_cast<std::size_t>(v)])
            throw InvariantViolation("embedding is not injective");
        used[static_cast<std::size_t>(v)] = 1;
    }
    for (auto [a, b] : pattern.edges())
        if (!g.has_edge(emb[static_cast<std::size_t>(a)], emb[static_cast<std::size_t>(b)]))
            throw InvariantViolation("embedding misses an edge of the pattern");
}

// Embeds H into clique labels `clique` joined to `side` where H minus a
// maximum independent set goes to the clique.
std::vector<int> embed_over_split(const SmallGraph& h, const std::vector<int>& clique,
                                  const std::vector<int>& side) {
    const VertexMask indep = maximum_independent_set(h);
    std::vector<int> emb(static_cast<std::size_t>(h.order()), -1);
    std::size_t ci = 0, si = 0;
    for (int v = 0; v < h.order(); ++v) {
        if ((indep >> v) & 1U) emb[static_cast<std::size_t>(v)] = side.at(si++);
        else emb[static_cast<std::size_t>(v)] = clique.at(ci++);
    }
    return emb;
}

std::string label_edge(int a, int b) {
    return "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}";
}

} // namespace

// ---------------------------------------------------------------------------

RefineResult type2_refine(const Realization& g, const std::vector<int>& q, const std::vector<int>& r,
                          const SmallGraph& h, int switch_depth) {
    const int k = h.order();
    const int alpha = independence_number(h);
    const int n = g.graph.order();
    if (static_cast<int>(q.size()) != k - alpha - 1 || static_cast<int>(r.size()) != alpha + 1)
        throw std::invalid_argument("Q must have k-alpha-1 vertices and R alpha+1 vertices");
    VertexMask qm = 0, rm = 0;
    for (int v : q) {
        if (v < 0 || v >= n) throw std::invalid_argument("Q vertex out of range");
        qm |= VertexMask{1} << v;
    }
    for (int v : r) {
        if (v < 0 || v >= n) throw std::invalid_argument("R vertex out of range");
        rm |= VertexMask{1} << v;
    }
    if (popcount(qm) != static_cast<int>(q.size()) || popcount(rm) != static_cast<int>(r.size()) || (qm & rm))
        throw std::invalid_argument("Q and R must be disjoint sets of distinct vertices");
    for (int v : q) {
        const VertexMask need = (qm | rm) & ~(VertexMask{1} << v);
        if ((g.graph.neighbors(v) & need) != need)
            throw std::invalid_argument("Q must be a clique joined to every vertex of R");
    }

    RefineResult res;
    const DegreeSequence& seq = g.sequence;
    const auto ka = static_cast<std::size_t>(k - alpha);
    res.certificates.d_k_minus_alpha = seq.d_or_zero(ka);
    res.certificates.max_degree_bound = res.certificates.d_k_minus_alpha < 2 * k * k;
    const std::size_t far = ka + 8 * static_cast<std::size_t>(k) * k * k * k;
    res.certificates.d_far = seq.d_or_zero(far);
    res.certificates.few_big_degrees = res.certificates.d_far <= k - alpha - 1;

    const VertexMask qr = qm | rm;
    auto finish = [&](const Realization& cur, VertexMask within, RefineRoute route) {
        auto emb = find_embedding(h, cur.graph, within);
        if (!emb) return false;
        res.embedding = std::move(emb);
        res.realization = cur;
        res.route = route;
        return true;
    };

    if (g.graph.edge_count_within(rm) > 0) {
        if (finish(g, qr, RefineRoute::EdgeInR)) return res;
    }

    // Double-star exchange: move b2 leaves from v_p onto r0 through W_p.
    if (g.graph.edge_count_within(rm) == 0 && k - alpha - 2 >= 0) {
        if (const auto cover = double_star_cover(h)) {
            const int r0 = r[0];
            for (std::size_t p = 0; p < q.size(); ++p) {
                const int vp = q[p];
                VertexMask w = g.graph.neighbors(r0) & ~qr & ~g.graph.neighbors(vp) & ~(VertexMask{1} << vp);
                if (popcount(w) < cover->b2) continue;
                if (!res.w_index) res.w_index = static_cast<int>(p);
                const auto ws = mask_vertices(w);
                Realization cur = g;
                std::vector<std::string> log;
                for (int i = 0; i < cover->b2; ++i) {
                    const int x = ws[static_cast<std::size_t>(i)];
                    const int ri = r[static_cast<std::size_t>(i) + 1];
                    cur = two_switch(cur, {x, r0}, {vp, ri});
                    log.push_back(label_edge(x, r0) + label_edge(vp, ri) + " -> " + label_edge(x, vp) +
                                  label_edge(r0, ri));
                }
                if (finish(cur, qr, RefineRoute::DoubleStarExchange)) {
                    res.exchanges = std::move(log);
                    return res;
                }
            }
        }
    }

    // Three-edge exchange planting the single edge uv inside R.
    if (g.graph.edge_count_within(rm) == 0) {
        const VertexMask outside_q = g.graph.all() & ~qm;
        auto distances = [&](int src) {
            std::vector<int> dist(static_cast<std::size_t>(n), -1);
            std::deque<int> bfs{src};
            dist[static_cast<std::size_t>(src)] = 0;
            while (!bfs.empty()) {
                const int x = bfs.front();
                bfs.pop_front();
                for (int y : mask_vertices(g.graph.neighbors(x) & outside_q)) {
                    if (dist[static_cast<std::size_t>(y)] < 0) {
                        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                        bfs.push_back(y);
                    }
                }
            }
            return dist;
        };
        auto far_from = [](const std::vector<int>& dist, int w) {
            const int d = dist[static_cast<std::size_t>(w)];
            return d < 0 || d >= 3;
        };
        for (std::size_t i = 0; i < r.size(); ++i) {
            for (std::size_t j = i + 1; j < r.size(); ++j) {
                const int u = r[i], v = r[j];
                for (int a1 : mask_vertices(g.graph.neighbors(u) & ~qr)) {
                    const auto d1 = distances(a1);
                    for (int a2 : mask_vertices(g.graph.neighbors(v) & ~qr)) {
                        const auto d2 = distances(a2);
                        for (int w : mask_vertices(outside_q)) {
                            if (!far_from(d1, w) || !far_from(d2, w)) continue;
                            for (int x : mask_vertices(g.graph.neighbors(w) & outside_q)) {
                                if (g.graph.has_edge(x, a2) || x == a2) continue;
                                Realization cur = g;
                                cur.graph.remove_edge(u, a1);
                                cur.graph.remove_edge(v, a2);
                                cur.graph.remove_edge(w, x);
                                cur.graph.add_edge(u, v);
                                cur.graph.add_edge(w, a1);
                                cur.graph.add_edge(x, a2);
                                if (cur.graph.degrees() != g.graph.degrees())
                                    throw InvariantViolation("three-edge exchange changed a degree");
                                if (finish(cur, qr, RefineRoute::ThreeEdgeExchange)) {
                                    res.exchanges.push_back(label_edge(u, a1) + label_edge(v, a2) + label_edge(w, x) +
                                                            " -> " + label_edge(u, v) + label_edge(w, a1) +
                                                            label_edge(x, a2));
                                    return res;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // Bounded breadth-first search over two-switches anywhere in the graph.
    struct Node {
        Realization g;
        std::vector<std::string> log;
        int depth;
    };
    constexpr std::size_t node_limit = 20000;
    std::set<std::vector<std::pair<int, int>>> seen{g.graph.edges()};
    std::deque<Node> frontier{{g, {}, 0}};
    while (!frontier.empty()) {
        Node cur = std::move(frontier.front());
        frontier.pop_front();
        if (cur.depth > 0 && finish(cur.g, cur.g.graph.all(), RefineRoute::SwitchSearch)) {
            res.exchanges = std::move(cur.log);
            return res;
        }
        if (cur.depth >= switch_depth) continue;
        const auto edges = cur.g.graph.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            for (std::size_t f = e + 1; f < edges.size(); ++f) {
                const auto [a, b] = edges[e];
                for (auto cd : {edges[f], std::pair{edges[f].second, edges[f].first}}) {
                    const auto [c, d] = cd;
                    if (a == c || a == d || b == c || b == d) continue;
                    if (cur.g.graph.has_edge(a, c) || cur.g.graph.has_edge(b, d)) continue;
                    Realization next = two_switch(cur.g, {a, b}, {c, d});
                    if (!seen.insert(next.graph.edges()).second) continue;
                    if (seen.size() > node_limit) {
                        res.exchanges.push_back("switch search stopped at " + std::to_string(node_limit) +
                                                " realizations");
                        return res;
                    }
                    auto log = cur.log;
                    log.push_back(label_edge(a, b) + label_edge(c, d) + " -> " + label_edge(a, c) + label_edge(b, d));
                    frontier.push_back({std::move(next), std::move(log), cur.depth + 1});
                }
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------

namespace {

struct ProbeRun {
    const DegreeSequence& seq;
    const SmallGraph& h;
    const ProbeConfig& cfg;
    PotentialProfile prof;
    ProbeResult out;
    int n = 0;
    int k = 0;

    ProbeVerdict& verdict() { return out.verdict; }
    ProbeTrace& trace() { return out.trace; }

    // Confirms a DeclaredPotential verdict with the oracle when possible.
    void declare_potential(PotentialReason reason, const std::string& note) {
        ProbeVerdict& v = verdict();
        v.kind = VerdictKind::DeclaredPotential;
        v.reason = reason;
        v.note = note;
        if (!oracle_covers(n, k, cfg)) return;
        const auto cert = potentially(seq, h, cfg.oracle);
        v.verified = cert.answer;
        if (cert.answer) {
            v.embedding = cert.embedding;
            v.realization = cert.realization;
        } else {
            v.kind = VerdictKind::Inconclusive;
            v.note = note + "; the exact oracle refutes this at n = " + std::to_string(n);
        }
    }

    void inconclusive(const std::string& why) {
        verdict() = ProbeVerdict{};
        verdict().note = why;
    }

    // Records a found structure: `pattern` embedded via `emb` into the
    // join-back realization, if n allows an explicit graph.
    void found(VerdictKind kind, const SmallGraph& pattern, const std::vector<std::pair<int, int>>& base,
               const std::vector<Op>& ops, const std::vector<int>& emb, const std::string& note) {
        ProbeVerdict& v = verdict();
        v.kind = kind;
        v.note = note;
        if (n > SmallGraph::max_order) {
            v.note += "; n exceeds the explicit-graph limit, no embedding constructed";
            return;
        }
        SmallGraph g = join_back(n, base, ops);
        check_embedding(g, seq, pattern, emb);
        v.embedding = emb;
        v.realization = std::move(g);
        v.verified = true;
    }
};

} // namespace

ProbeResult run_probe(const DegreeSequence& seq, const SmallGraph& h, const ProbeConfig& cfg) {
    if (!is_graphic(seq)) throw std::invalid_argument("run_probe needs a graphic sequence");
    if (!(cfg.epsilon > 0 && cfg.epsilon < 0.5)) throw std::invalid_argument("epsilon must lie in (0, 1/2)");

    ProbeRun run{seq, h, cfg, profile(h), {}, static_cast<int>(seq.size()), h.order()};
    const PotentialProfile& prof = run.prof;
    const int n = run.n;
    const int k = run.k;
    const int alpha = prof.alpha;
    const int b = prof.b_h;
    const int limit = k - alpha - b;
    ProbeTrace& tr = run.trace();

    const double bound = delta_bound(cfg.epsilon, k);
    const double delta = cfg.delta.value_or(bound / 2);
    if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
    if (k * delta >= 1) throw std::invalid_argument("delta must be below 1/k");
    if (cfg.f_override && *cfg.f_override < 0) throw std::invalid_argument("f must be nonnegative");
    tr.epsilon = cfg.epsilon;
    tr.delta = delta;
    tr.f = cfg.f_override.value_or(default_f(k));
    tr.f_overridden = cfg.f_override.has_value();
    tr.delta_within_bound = delta < bound;
    if (!tr.delta_within_bound)
        tr.warnings.push_back("delta is not below epsilon/(16k^3+48k^2+(32+epsilon)k)");
    tr.n = n;
    tr.final_record.iteration_limit = limit;

    const std::int64_t sigma = sum(seq);
    tr.precondition_met = static_cast<double>(sigma) >= (prof.sigma_tilde - delta) * n;
    if (!tr.precondition_met) tr.warnings.push_back("sigma(pi) < (sigma~(H) - delta) n");

    // The clique check runs first: it needs no bookkeeping and settles K_k.
    if (seq.d_or_zero(2 * static_cast<std::size_t>(k)) >= k - 1) {
        tr.init.early_exit = true;
        tr.n_ell = n;
        run.declare_potential(PotentialReason::EarlyExit, "d_{2k} >= k-1, so pi is potentially K_k-graphic");
        return run.out;
    }

    LabeledState st(seq);
    std::vector<Op> ops;

    // Initialization.
    tr.init.threshold = n == 0 ? 0 : static_cast<int>((sigma + 2 * n - 1) / (2 * n));
    tr.init.guard = 2 * delta * n / (1 + delta);
    while (!st.empty() && st.at(st.size() - 1).degree < tr.init.threshold) {
        tr.init.laid_off_sum += st.at(st.size() - 1).degree;
        ops.push_back(st.layoff_at(st.size() - 1));
        ++tr.init.laid_off;
    }
    tr.counted_removals = static_cast<int>(tr.init.laid_off);
    if (static_cast<double>(tr.init.laid_off) > tr.init.guard) {
        tr.n_ell = static_cast<int>(st.size());
        run.declare_potential(PotentialReason::InitGuard,
                              "more than 2 delta n/(1+delta) terms fall below ceil(sigma/2n)");
        return run.out;
    }

    const int nabla_star = prof.nabla.at(prof.i_star);
    int t = 0;
    for (;; ++t) {
        IterationRecord rec;
        rec.t = t;
        rec.n_t = static_cast<int>(st.size());
        rec.pi_t = st.sequence();
        rec.sum = sum(rec.pi_t);
        rec.sum_bound = (prof.sigma_tilde - (t + 1) * delta - 2.0 * t) * rec.n_t;
        rec.sum_bound_holds = static_cast<double>(rec.sum) >= rec.sum_bound;

        // Step 1.
        if (t == limit) rec.halting_reason = "iteration_limit";
        else if (st.empty()) rec.halting_reason = "sequence_exhausted";
        else if (rec.pi_t.max() < rec.n_t - tr.f) rec.halting_reason = "max_degree_below_n_minus_f";
        if (!rec.halting_reason.empty()) {
            tr.iterations.push_back(std::move(rec));
            break;
        }

        // Step 2.
        ops.push_back(st.cut_nonneighbors(rec.removed_nonneighbors));
        // Step 3: the dominating vertex.
        if (st.at(0).degree != static_cast<int>(st.size()) - 1)
            throw InvariantViolation("Step 3 expected a dominating vertex");
        ops.push_back(st.layoff_at(0));
        rec.laid_off_step3 = 1;
        // Step 4.
        const double inner = (nabla_star - 1 - (t + 1) * delta) / 2.0;
        rec.step4_threshold = k - prof.i_star + static_cast<int>(std::ceil(inner)) - (t + 1);
        rec.step4_guard = (t + 3) * delta * rec.n_t / (1 - k * delta);
        while (!st.empty() && st.at(st.size() - 1).degree < rec.step4_threshold) {
            ops.push_back(st.layoff_at(st.size() - 1));
            ++rec.laid_off_step4;
        }
        tr.counted_removals += rec.removed_nonneighbors + rec.laid_off_step3 + rec.laid_off_step4;
        const bool guard = rec.laid_off_step4 >= rec.step4_guard;
        if (guard) rec.halting_reason = "step4_guard";
        tr.iterations.push_back(std::move(rec));
        if (guard) {
            tr.final_record.ell = t + 1;
            tr.n_ell = static_cast<int>(st.size());
            run.declare_potential(PotentialReason::Step4Guard,
                                  "Step 4 laid off at least (t+3) delta n_t/(1-k delta) terms");
            return run.out;
        }
    }

    const int ell = t;
    FinalRecord& fin = tr.final_record;
    fin.ell = ell;
    const int n_ell = static_cast<int>(st.size());
    tr.n_ell = n_ell;
    if (n - n_ell != tr.counted_removals) throw InvariantViolation("removal accounting does not match n - n_ell");
    {
        // Instantiated removal bound and the asymptotic form.
        const double threshold = 16.0 * k * (static_cast<double>(k) * tr.f + k) / cfg.epsilon;
        tr.asymptotic_bound_applicable = n > threshold;
        if (tr.asymptotic_bound_applicable)
            tr.asymptotic_bound_holds = (n - n_ell) < cfg.epsilon / (8.0 * k) * n;
    }

    std::vector<int> clique_labels;
    // Dominating vertices are the Step 3 lay-offs, in iteration order.
    {
        std::size_t idx = tr.init.laid_off;
        for (const auto& rec : tr.iterations) {
            if (rec.laid_off_step3 == 0) break;
            ++idx;  // the Step 2 cut
            clique_labels.push_back(ops[idx].vertex);
            idx += 1 + static_cast<std::size_t>(rec.laid_off_step4);
        }
    }
    std::vector<int> state_labels;
    for (std::size_t i = 0; i < st.size(); ++i) state_labels.push_back(st.at(i).label);

    const std::string& reason = tr.iterations.back().halting_reason;
    if (reason == "sequence_exhausted") {
        run.inconclusive("the sequence was exhausted before Step 1 could halt");
        return run.out;
    }

    auto take = [](const std::vector<int>& v, std::size_t from, std::size_t count) {
        return std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(from),
                                v.begin() + static_cast<std::ptrdiff_t>(from + count));
    };

    if (ell == limit) {
        const int side = alpha + b;
        if (n_ell < side) {
            run.inconclusive("iteration limit reached with fewer than alpha + b_H remaining terms");
            return run.out;
        }
        const auto base = state_edges(st).edges;
        const auto side_labels = take(state_labels, 0, static_cast<std::size_t>(side));
        if (prof.type == GraphType::Type1) {
            run.found(VerdictKind::FoundH, h, base, ops, embed_over_split(h, clique_labels, side_labels),
                      "k - alpha dominating vertices joined to the remaining terms");
        } else {
            std::vector<int> emb = clique_labels;
            emb.insert(emb.end(), side_labels.begin(), side_labels.end());
            run.found(VerdictKind::FoundSplit, complete_split(k - alpha - 1, alpha + 1), base, ops, emb,
                      "k - alpha - 1 dominating vertices joined to the remaining terms");
            if (cfg.refine_split && run.verdict().realization) {
                Realization real{*run.verdict().realization, seq};
                tr.refinement = type2_refine(real, clique_labels, side_labels, h);
            }
        }
        return run.out;
    }

    // Halted by the maximum-degree test.
    const int required_min = k - ell - alpha - b;
    fin.min_term_required = required_min;
    if (st.empty() || st.at(st.size() - 1).degree < required_min) {
        run.inconclusive("minimum term of pi^(l) is below k - l - alpha - b_H");
        return run.out;
    }

    auto oracle_found = [&](VerdictKind kind, const SmallGraph& pattern, auto&& make_embedding,
                            const std::string& note) {
        if (!oracle_covers(n_ell, k, cfg) || n > SmallGraph::max_order) {
            run.verdict().kind = kind;
            run.verdict().note = note + "; not confirmed at this size";
            return;
        }
        const auto r = state_edges_with(st, pattern, cfg.oracle);
        if (!r) {
            run.inconclusive(note + ", but the exact oracle finds no such realization of pi^(l)");
            return;
        }
        run.found(kind, h, r->edges, ops,
                  make_embedding(r->pattern_labels), note);
    };

    const int s_clique = required_min;
    const int s_side = alpha + b;
    fin.s_ell_clique = s_clique;
    fin.s_ell_independent = s_side;
    const SmallGraph s_ell = complete_split(s_clique, s_side);
    fin.degree_sufficient_s_ell = n_ell >= s_clique + s_side && degree_sufficient(st.sequence(), s_ell.degree_sequence());
    if (*fin.degree_sufficient_s_ell) {
        const std::string note = "pi^(l) is degree-sufficient for S_l and d_1 < n_l - f";
        if (prof.type == GraphType::Type1) {
            oracle_found(VerdictKind::FoundH, s_ell,
                         [&](const std::vector<int>& pl) {
                             std::vector<int> cl = clique_labels;
                             cl.insert(cl.end(), pl.begin(), pl.begin() + s_clique);
                             return embed_over_split(h, cl, take(pl, static_cast<std::size_t>(s_clique),
                                                                 static_cast<std::size_t>(s_side)));
                         },
                         note);
        } else {
            // Embedding of K_{k-alpha-1} v Kbar_{alpha+1}, clique first.
            if (!oracle_covers(n_ell, k, cfg) || n > SmallGraph::max_order) {
                run.verdict().kind = VerdictKind::FoundSplit;
                run.verdict().note = note + "; not confirmed at this size";
                return run.out;
            }
            const auto r = state_edges_with(st, s_ell, cfg.oracle);
            if (!r) {
                run.inconclusive(note + ", but the exact oracle finds no such realization of pi^(l)");
                return run.out;
            }
            std::vector<int> emb = clique_labels;
            emb.insert(emb.end(), r->pattern_labels.begin(), r->pattern_labels.end());
            run.found(VerdictKind::FoundSplit, complete_split(k - alpha - 1, alpha + 1), r->edges, ops, emb, note);
            if (cfg.refine_split && run.verdict().realization) {
                Realization real{*run.verdict().realization, seq};
                tr.refinement = type2_refine(real, take(emb, 0, static_cast<std::size_t>(k - alpha - 1)),
                                             take(emb, static_cast<std::size_t>(k - alpha - 1),
                                                  static_cast<std::size_t>(alpha + 1)),
                                             h);
            }
        }
        return run.out;
    }

    // p and F_{k-l-p}.
    int p = 0;
    const DegreeSequence pi_ell = st.sequence();
    for (std::size_t j = 1; j <= pi_ell.size(); ++j)
        if (pi_ell.d(j) >= k - ell - 1) p = static_cast<int>(j);
    fin.p = p;
    {
        std::vector<int> eta(static_cast<std::size_t>(ell), n_ell + ell - 1);
        for (int d : pi_ell.terms()) eta.push_back(d + ell);
        fin.eta = DegreeSequence(std::move(eta));
    }
    const int j = k - ell - p;
    if (j < alpha + 1 || j > k) {
        run.inconclusive("k - l - p = " + std::to_string(j) + " lies outside alpha+1..k");
        return run.out;
    }
    fin.f_order = j;
    const auto candidates = nabla_subsets(h, j);
    VertexMask chosen = candidates.front();
    for (VertexMask x : candidates) {
        if (independence_number(h.induced(x)) == alpha) {
            chosen = x;
            break;
        }
    }
    fin.f_vertices = mask_vertices(chosen);
    const SmallGraph f_graph = h.induced(chosen);
    const SmallGraph kp_f = join(complete_graph(p), f_graph);
    fin.degree_sufficient_kp_f = n_ell >= p + j && degree_sufficient(pi_ell, kp_f.degree_sequence());
    if (*fin.degree_sufficient_kp_f) {
        oracle_found(VerdictKind::FoundH, kp_f,
                     [&](const std::vector<int>& pl) {
                         std::vector<int> emb(static_cast<std::size_t>(k), -1);
                         std::vector<int> cl = clique_labels;
                         cl.insert(cl.end(), pl.begin(), pl.begin() + p);
                         std::size_t ci = 0, fi = 0;
                         for (int v = 0; v < k; ++v) {
                             if ((chosen >> v) & 1U)
                                 emb[static_cast<std::size_t>(v)] = pl[static_cast<std::size_t>(p) + fi++];
                             else
                                 emb[static_cast<std::size_t>(v)] = cl.at(ci++);
                         }
                         return emb;
                     },
                     "pi^(l) is degree-sufficient for K_p v F");
        return run.out;
    }

    fin.target_index = j;
    if (prof.sigma_tilde_i.at(j) != prof.sigma_tilde) {
        run.inconclusive("pi~_" + std::to_string(j) + "(H, n) is not in P(H, n)");
        return run.out;
    }
    if (n < target_min_n(prof, j)) {
        run.inconclusive("n is too small for pi~_" + std::to_string(j) + "(H, n)");
        return run.out;
    }
    ProbeVerdict& v = run.verdict();
    v.kind = VerdictKind::CloseToTarget;
    v.target = target_sequence(prof, j, n);
    v.distance = l1_distance(seq, v.target->seq);
    v.note = "pi^(l) is not degree-sufficient for K_p v F";
    return run.out;
}

} // namespace potstab
