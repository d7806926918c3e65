#pragma once

#include "potstab/graph.hpp"
#include "potstab/oracle.hpp"
#include "potstab/potential.hpp"
#include "potstab/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace potstab {

/// Upper bound on delta that the iteration's accounting needs:
/// epsilon / (16k^3 + 48k^2 + (32 + epsilon)k).
double delta_bound(double epsilon, int k);

/// Maximum-degree slack binom(k, floor(k/2)) * 8k^2.
std::int64_t default_f(int k);

struct ProbeConfig {
    double epsilon = 0.25;
    /// Defaults to half of delta_bound(epsilon, k).
    std::optional<double> delta;
    /// Replaces default_f(k); the default exceeds any desk-scale n, so Step 1
    /// would always halt at t = 0.
    std::optional<std::int64_t> f_override;
    /// Confirm guard-based and degree-sufficiency conclusions with the exact
    /// oracle when the sequence fits its cap.
    bool oracle_fallback = true;
    OracleConfig oracle;
    /// Run type2_refine on FoundSplit realizations.
    bool refine_split = true;
};

enum class VerdictKind { FoundH, CloseToTarget, FoundSplit, DeclaredPotential, Inconclusive };
enum class PotentialReason { EarlyExit, InitGuard, Step4Guard };

struct ProbeVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    /// FoundH: H vertex -> realization vertex. FoundSplit: vertices of
    /// K_{k-alpha-1} v Kbar_{alpha+1} (clique first) -> realization vertex.
    std::optional<std::vector<int>> embedding;
    /// Realization of the input sequence (vertex i has degree d_{i+1}).
    std::optional<SmallGraph> realization;
    std::optional<TargetSequence> target;
    std::optional<std::int64_t> distance;
    std::optional<PotentialReason> reason;
    /// Oracle confirmation; empty when the oracle was not consulted.
    std::optional<bool> verified;
    std::string note;
};

struct InitRecord {
    int threshold = 0;
    std::size_t laid_off = 0;
    std::int64_t laid_off_sum = 0;
    double guard = 0;  ///< 2 delta n / (1 + delta)
    bool early_exit = false;
};

struct IterationRecord {
    int t = 0;
    int n_t = 0;
    DegreeSequence pi_t;
    std::int64_t sum = 0;
    double sum_bound = 0;  ///< (sigma~ - (t+1) delta - 2t) n_t
    bool sum_bound_holds = false;
    int removed_nonneighbors = 0;
    int laid_off_step3 = 0;
    int laid_off_step4 = 0;
    int step4_threshold = 0;
    double step4_guard = 0;  ///< (t+3) delta n_t / (1 - k delta)
    std::string halting_reason;  ///< empty when the loop continued
};

struct RefineCertificates {
    int d_k_minus_alpha = 0;
    bool max_degree_bound = false;  ///< d_{k-alpha} < 2k^2
    int d_far = 0;                  ///< d_{k-alpha+8k^4}, zero past the end
    bool few_big_degrees = false;   ///< d_{k-alpha+8k^4} <= k-alpha-1
};

enum class RefineRoute { EdgeInR, DoubleStarExchange, ThreeEdgeExchange, SwitchSearch };

struct RefineResult {
    std::optional<std::vector<int>> embedding;  ///< H vertex -> vertex of `realization`
    std::optional<Realization> realization;
    std::optional<RefineRoute> route;
    std::optional<int> w_index;  ///< Q position p with |W_p| >= b2, if any
    std::vector<std::string> exchanges;
    RefineCertificates certificates;
};

/// Tries to turn a realization that contains K_{k-alpha-1} v Kbar_{alpha+1}
/// on Q (clique) and R (independent side) into one containing H: an edge
/// already inside R, the double-star exchange through W_p, the three-edge
/// exchange that plants one edge inside R, then a bounded two-switch
/// search. Throws std::invalid_argument for a malformed Q/R.
RefineResult type2_refine(const Realization& g, const std::vector<int>& q, const std::vector<int>& r,
                          const SmallGraph& h, int switch_depth = 2);

struct FinalRecord {
    int ell = 0;
    int iteration_limit = 0;  ///< k - alpha - b_H
    std::optional<int> min_term_required;
    std::optional<int> s_ell_clique;
    std::optional<int> s_ell_independent;
    std::optional<bool> degree_sufficient_s_ell;
    std::optional<int> p;
    std::optional<int> f_order;
    std::optional<std::vector<int>> f_vertices;  ///< vertices of H inducing F
    std::optional<bool> degree_sufficient_kp_f;
    std::optional<DegreeSequence> eta;
    std::optional<int> target_index;
};

struct ProbeTrace {
    double epsilon = 0;
    double delta = 0;
    std::int64_t f = 0;
    bool f_overridden = false;
    bool delta_within_bound = true;
    bool precondition_met = true;  ///< sigma(pi) >= (sigma~ - delta) n
    std::vector<std::string> warnings;
    InitRecord init;
    std::vector<IterationRecord> iterations;
    FinalRecord final_record;
    std::optional<RefineResult> refinement;
    int n = 0;
    int n_ell = 0;
    /// init + per-iteration (Step 2 + Step 3 + Step 4) removals.
    int counted_removals = 0;
    bool asymptotic_bound_applicable = false;
    std::optional<bool> asymptotic_bound_holds;  ///< n - n_ell < (epsilon / 8k) n
};

struct ProbeResult {
    ProbeVerdict verdict;
    ProbeTrace trace;
};

ProbeResult run_probe(const DegreeSequence& seq, const SmallGraph& h, const ProbeConfig& cfg = {});

std::string to_string(VerdictKind k);
std::string to_string(PotentialReason r);
std::string to_string(RefineRoute r);

} // namespace potstab
