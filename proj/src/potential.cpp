#include "potstab/potential.hpp"

#include "potstab/errors.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace potstab {

std::string to_string(GraphType t) { return t == GraphType::Type1 ? "Type1" : "Type2"; }

PotentialProfile profile(const SmallGraph& h) {
    if (h.edge_count() == 0)
        throw std::invalid_argument("profile needs a graph with at least one edge");
    PotentialProfile p;
    p.k = h.order();
    p.alpha = independence_number(h);
    p.degrees = h.degree_sequence();
    p.sigma_tilde = std::numeric_limits<int>::min();
    for (int i = p.alpha + 1; i <= p.k; ++i) {
        const int nab = nabla(h, i);
        const int st = 2 * (p.k - i) + nab - 1;
        p.nabla[i] = nab;
        p.sigma_tilde_i[i] = st;
        if (st > p.sigma_tilde) {
            p.sigma_tilde = st;
            p.i_star = i;
        }
    }
    const int gap = 2 * p.i_star - p.nabla.at(p.i_star);
    if (gap <= 2 * p.alpha) {
        p.type = GraphType::Type1;
        p.b_h = 0;
    } else if (gap == 2 * p.alpha + 1) {
        p.type = GraphType::Type2;
        p.b_h = 1;
        if (p.nabla.at(p.alpha + 1) != 1)
            throw InvariantViolation("Type 2 graph with nabla_{alpha+1} != 1");
    } else {
        throw InvariantViolation("2 i* - nabla_{i*} exceeds 2 alpha + 1");
    }
    return p;
}

int target_min_n(const PotentialProfile& prof, int i) {
    const int nab = prof.nabla.at(i);
    return std::max(prof.k - i + 1, prof.k - i + nab);
}

TargetSequence target_sequence(const PotentialProfile& prof, int i, int n) {
    if (i < prof.alpha + 1 || i > prof.k)
        throw std::out_of_range("target index " + std::to_string(i) + " outside [" +
                                std::to_string(prof.alpha + 1) + ", " + std::to_string(prof.k) + "]");
    if (n < target_min_n(prof, i))
        throw std::out_of_range("n = " + std::to_string(n) + " too small for pi~_" +
                                std::to_string(i) + " (needs n >= " +
                                std::to_string(target_min_n(prof, i)) + ")");
    const int nab = prof.nabla.at(i);
    const int head = prof.k - i;
    const int tail_count = n - head;
    const int tail_value = head + nab - 1;

    std::vector<int> terms(static_cast<std::size_t>(head), n - 1);
    terms.insert(terms.end(), static_cast<std::size_t>(tail_count), tail_value);
    TargetSequence t{i, n, {}, false};
    if (tail_count % 2 == 1 && (nab - 1) % 2 == 1) {
        --terms.back();
        t.parity_adjusted = true;
    }
    t.seq = DegreeSequence(std::move(terms));
    if (!is_graphic(t.seq)) throw InvariantViolation("pi~_" + std::to_string(i) + " is not graphic");
    return t;
}

TargetSequence target_sequence(const SmallGraph& h, int i, int n) {
    return target_sequence(profile(h), i, n);
}

std::vector<TargetSequence> target_family(const PotentialProfile& prof, int n) {
    std::vector<TargetSequence> out;
    for (const auto& [i, st] : prof.sigma_tilde_i)
        if (st == prof.sigma_tilde) out.push_back(target_sequence(prof, i, n));
    return out;
}

std::vector<TargetSequence> target_family(const SmallGraph& h, int n) {
    return target_family(profile(h), n);
}

std::string ExtremalWitness::pattern() const {
    std::string out;
    if (clique > 0) out += "(n-1)^" + std::to_string(clique) + ", ";
    const std::string half = clique == 0 ? "n/2" : "(n+" + std::to_string(clique) + ")/2";
    out += "ceil(" + half + "), floor(" + half + "), ";
    const int offset = tail_count - n;  // tail_count = n - (clique + 2)
    out += std::to_string(tail_value) + "^(n" + (offset == 0 ? "" : std::to_string(offset)) + ")";
    return out;
}

ExtremalWitness rho(const PotentialProfile& prof, int n) {
    if (prof.type != GraphType::Type2) throw std::invalid_argument("rho is defined for Type 2 graphs only");
    const int clique = prof.k - prof.alpha - 2;
    if (clique < 0) throw std::invalid_argument("rho needs k - alpha - 2 >= 0");
    if (n < prof.k + 2) throw std::out_of_range("rho needs n >= k + 2");

    ExtremalWitness w;
    w.n = n;
    w.clique = clique;
    w.tail_value = prof.k - prof.alpha - 1;
    w.tail_count = n - prof.k + prof.alpha;
    w.star_left = (w.tail_count + 1) / 2;
    w.star_right = w.tail_count / 2;

    std::vector<int> terms(static_cast<std::size_t>(clique), n - 1);
    const int middle = n + clique;
    terms.push_back((middle + 1) / 2);
    terms.push_back(middle / 2);
    terms.insert(terms.end(), static_cast<std::size_t>(w.tail_count), w.tail_value);
    w.seq = DegreeSequence(std::move(terms));

    if (sum(w.seq) != rho_sum_closed_form(prof.k, prof.alpha, n))
        throw InvariantViolation("rho sum disagrees with its closed form");
    if (!is_graphic(w.seq)) throw InvariantViolation("rho is not graphic");
    return w;
}

ExtremalWitness rho(const SmallGraph& h, int n) { return rho(profile(h), n); }

std::int64_t rho_sum_closed_form(int k, int alpha, int n) {
    const std::int64_t c = k - alpha - 1;
    return 2 * c * n - (k - alpha) * c;
}

SmallGraph rho_realization(const ExtremalWitness& w) {
    return join(complete_graph(w.clique), double_star(w.star_left, w.star_right));
}

bool asymptotic_degree_sufficient_rho(const PotentialProfile& prof) {
    if (prof.type != GraphType::Type2)
        throw std::invalid_argument("rho is defined for Type 2 graphs only");
    const int bound = prof.k - prof.alpha - 1;
    for (int j = prof.k - prof.alpha + 1; j <= prof.k; ++j)
        if (prof.degrees.d(static_cast<std::size_t>(j)) > bound) return false;
    return true;
}

bool asymptotic_degree_sufficient_rho(const SmallGraph& h) {
    return asymptotic_degree_sufficient_rho(profile(h));
}

DeletedChoice best_deleted_subgraph(const SmallGraph& h, int t) {
    const int alpha = independence_number(h);
    if (t < 0 || t >= h.order() - alpha)
        throw std::out_of_range("deletion count must satisfy 0 <= t < k - alpha");
    std::optional<DeletedChoice> best;
    for (auto& member : deleted_family(h, t)) {
        // alpha(F) <= alpha(H) < |F|, so every member has an edge.
        const int st = profile(member.graph).sigma_tilde;
        if (!best || st < best->sigma_tilde) best = DeletedChoice{std::move(member.graph), member.kept, st};
    }
    return *best;
}

} // namespace potstab
