#include "potstab/stability.hpp"

#include <stdexcept>

namespace potstab {

std::optional<DoubleStarCover> double_star_cover(const SmallGraph& h) {
    const int k = h.order();
    const int alpha = independence_number(h);
    const int clique = k - alpha - 2;
    if (clique < 0) throw std::domain_error("double-star cover needs k - alpha - 2 >= 0");
    for (int b1 = (alpha + 1) / 2; b1 <= alpha; ++b1) {
        const int b2 = alpha - b1;
        if (spanning_subgraph_of(h, join(complete_graph(clique), double_star(b1, b2))))
            return DoubleStarCover{b1, b2};
    }
    return std::nullopt;
}

StabilityVerdict classify_sigma(const SmallGraph& h) {
    const PotentialProfile prof = profile(h);
    StabilityVerdict v;
    if (prof.type == GraphType::Type1) {
        v.status = SigmaStatus::Stable;
        v.theorem = SigmaTheorem::MainLow;
        v.note = "Type 1: 2 i* - nabla_{i*} <= 2 alpha";
        return v;
    }
    if (prof.k - prof.alpha - 2 < 0) {
        v.note = "Type 2 with k - alpha - 2 < 0: the double-star cover question is ill-posed";
        return v;
    }
    const auto cover = double_star_cover(h);
    if (!cover) {
        v.status = SigmaStatus::NotStable;
        v.theorem = SigmaTheorem::NotStable;
        v.witness_pattern = rho(prof, prof.k + 2).pattern();
        v.note = "Type 2 and H is not spanned by K_{k-alpha-2} v S_{b1,b2} for any b1 + b2 = alpha";
        return v;
    }
    if (one_edge_set_exists(h, prof.alpha + 1)) {
        v.status = SigmaStatus::Stable;
        v.theorem = SigmaTheorem::MainHigh;
        v.cover = cover;
        v.note = "Type 2, double-star cover exists, and some (alpha+1)-set induces exactly one edge";
        return v;
    }
    v.note = "Type 2 with a double-star cover but no (alpha+1)-set inducing exactly one edge; "
             "no available theorem decides this case";
    return v;
}

WeakVerdict classify_weak(const SmallGraph& h) {
    WeakVerdict w;
    if (h.edge_count() == 0) throw std::invalid_argument("classify_weak needs a graph with an edge");
    if (h.order() >= 3 && is_complete(h)) {
        w.status = WeakStatus::WeaklyStable;
        w.basis = WeakBasis::CliqueTheorem;
        w.note = "complete graph K_k with k >= 3";
        return w;
    }
    const StabilityVerdict sigma = classify_sigma(h);
    if (sigma.status == SigmaStatus::NotStable && asymptotic_degree_sufficient_rho(h)) {
        w.status = WeakStatus::NotWeaklyStable;
        w.basis = WeakBasis::RhoDegreeSufficient;
        w.witness_pattern = sigma.witness_pattern;
        w.note = "rho(H, n) is degree-sufficient for H and not potentially H-graphic";
        return w;
    }
    if (sigma.status == SigmaStatus::Stable) {
        w.status = WeakStatus::WeaklyStable;
        w.basis = WeakBasis::ImpliedBySigmaStability;
        w.note = "derived from the definitions: weak stability quantifies over a subset of the "
                 "sequences sigma-stability covers";
        return w;
    }
    w.note = sigma.status == SigmaStatus::NotStable
                 ? "not sigma-stable, but rho(H, n) is not degree-sufficient for H"
                 : "sigma-stability undecided";
    return w;
}

std::string to_string(SigmaStatus s) {
    switch (s) {
    case SigmaStatus::Stable: return "Stable";
    case SigmaStatus::NotStable: return "NotStable";
    case SigmaStatus::Unknown: return "Unknown";
    }
    return {};
}

std::string to_string(SigmaTheorem t) {
    switch (t) {
    case SigmaTheorem::None: return "None";
    case SigmaTheorem::MainLow: return "MainLow";
    case SigmaTheorem::MainHigh: return "MainHigh";
    case SigmaTheorem::NotStable: return "NotStable";
    }
    return {};
}

std::string to_string(WeakStatus s) {
    switch (s) {
    case WeakStatus::WeaklyStable: return "WeaklyStable";
    case WeakStatus::NotWeaklyStable: return "NotWeaklyStable";
    case WeakStatus::Unknown: return "Unknown";
    }
    return {};
}

std::string to_string(WeakBasis b) {
    switch (b) {
    case WeakBasis::None: return "None";
    case WeakBasis::CliqueTheorem: return "CliqueWeak";
    case WeakBasis::RhoDegreeSufficient: return "RhoDegreeSufficient";
    case WeakBasis::ImpliedBySigmaStability: return "ImpliedBySigmaStability";
    }
    return {};
}

} // namespace potstab
