#pragma once

#include "potstab/graph.hpp"
#include "potstab/sequence.hpp"

#include <map>
#include <string>
#include <vector>

namespace potstab {

enum class GraphType { Type1, Type2 };

std::string to_string(GraphType t);

/// Potential-function profile of a graph H with at least one edge.
struct PotentialProfile {
    int k = 0;
    int alpha = 0;
    std::map<int, int> nabla;             ///< i -> nabla_i(H), i = alpha+1..k
    std::map<int, int> sigma_tilde_i;     ///< i -> 2(k-i) + nabla_i - 1
    int sigma_tilde = 0;
    int i_star = 0;                       ///< smallest maximizing i
    GraphType type = GraphType::Type1;
    int b_h = 0;                          ///< 0 for Type 1, 1 for Type 2
    DegreeSequence degrees;               ///< degree sequence of H
};

/// Throws std::invalid_argument for an edgeless graph.
PotentialProfile profile(const SmallGraph& h);

/// pi~_i(H, n) = ((n-1)^{k-i}, (k-i+nabla_i-1)^{n-k+i}), with the last term
/// reduced by one when n-k+i and nabla_i-1 are both odd.
struct TargetSequence {
    int i = 0;
    int n = 0;
    DegreeSequence seq;
    bool parity_adjusted = false;
};

TargetSequence target_sequence(const SmallGraph& h, int i, int n);
TargetSequence target_sequence(const PotentialProfile& prof, int i, int n);

/// Smallest n for which pi~_i(H, n) is defined.
int target_min_n(const PotentialProfile& prof, int i);

/// Members of P(H, n), ascending i.
std::vector<TargetSequence> target_family(const SmallGraph& h, int n);
std::vector<TargetSequence> target_family(const PotentialProfile& prof, int n);

/// rho(H, n) = ((n-1)^{k-a-2}, ceil((n+k-a-2)/2), floor((n+k-a-2)/2),
/// (k-a-1)^{n-k+a}) with a = alpha(H). Uniquely realized by
/// K_{k-a-2} v S_{ceil((n-k+a)/2), floor((n-k+a)/2)}.
struct ExtremalWitness {
    DegreeSequence seq;
    int n = 0;
    int clique = 0;       ///< k - alpha - 2
    int star_left = 0;    ///< ceil((n-k+alpha)/2)
    int star_right = 0;   ///< floor((n-k+alpha)/2)
    int tail_value = 0;   ///< k - alpha - 1
    int tail_count = 0;   ///< n - k + alpha

    /// Human-readable parametric form in n.
    std::string pattern() const;
};

/// Throws std::invalid_argument for Type 1 input and std::out_of_range when
/// n < k + 2.
ExtremalWitness rho(const SmallGraph& h, int n);
ExtremalWitness rho(const PotentialProfile& prof, int n);

/// Closed form of sum(rho(H, n)): 2(k-a-1)n - (k-a)(k-a-1).
std::int64_t rho_sum_closed_form(int k, int alpha, int n);

/// The realization K_{k-a-2} v S_{x,y} of rho(H, n).
SmallGraph rho_realization(const ExtremalWitness& w);

/// Whether rho(H, n) is degree-sufficient for H for every large n: positions
/// k-alpha+1.. of rho equal k-alpha-1, the rest grow with n.
bool asymptotic_degree_sufficient_rho(const SmallGraph& h);
bool asymptotic_degree_sufficient_rho(const PotentialProfile& prof);

struct DeletedChoice {
    SmallGraph graph;
    VertexMask kept = 0;
    int sigma_tilde = 0;
};

/// F in D^(t)(H) minimizing sigma~(F). Requires 0 <= t < k - alpha.
DeletedChoice best_deleted_subgraph(const SmallGraph& h, int t);

} // namespace potstab
