#pragma once

#include "potstab/graph.hpp"
#include "potstab/sequence.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace potstab {

/// Desk-scale limits for the exhaustive searches. Exceeding either is a
/// CapExceeded error.
struct OracleConfig {
    int cap_n = 10;
    int cap_k = 8;
};

/// A graph whose vertex i (0-based) has degree sequence.terms()[i].
struct Realization {
    SmallGraph graph;
    DegreeSequence sequence;
};

/// Havel–Hakimi edges for any length: the highest remaining degree (lowest
/// index on ties) is joined to the next highest remaining degrees. Vertex 0
/// ends up adjacent to 1..d_1. Throws std::invalid_argument when not
/// graphic.
std::vector<std::pair<int, int>> canonical_realization_edges(const DegreeSequence& seq);
Realization canonical_realization(const DegreeSequence& seq);

/// Replaces edges ab, cd by ac, bd. Vertices are 0-based. Throws
/// std::invalid_argument when ab or cd is missing, ac or bd is present, or
/// the endpoints are not distinct as required.
Realization two_switch(const Realization& g, std::pair<int, int> ab, std::pair<int, int> cd);

struct SearchStats {
    std::uint64_t placements_tried = 0;
    std::uint64_t residual_nodes = 0;
};

struct PotentialCertificate {
    bool answer = false;
    /// H vertex v -> realization vertex, when answer is true.
    std::optional<std::vector<int>> embedding;
    std::optional<SmallGraph> realization;
    SearchStats stats;
};

/// Exact decision: does some realization of `seq` contain `h` as a subgraph.
/// Throws std::invalid_argument for non-graphic input.
PotentialCertificate potentially(const DegreeSequence& seq, const SmallGraph& h,
                                 const OracleConfig& cfg = {});

/// Realization of `seq` containing the edges of `h` under the fixed
/// placement `embedding` (h vertex -> sequence position, 0-based), if any.
std::optional<SmallGraph> realize_with_placement(const DegreeSequence& seq, const SmallGraph& h,
                                                 const std::vector<int>& embedding,
                                                 SearchStats* stats = nullptr);

/// Yin–Li sufficient conditions for K_k. False means "not decided".
bool yin_li_kk(const DegreeSequence& seq, int k);

/// K_r v Kbar_t search restricted to the clique on positions 1..r and the
/// independent set on r+1..r+t.
PotentialCertificate potentially_split(const DegreeSequence& seq, int r, int t,
                                       const OracleConfig& cfg = {});

/// Calls `fn` on each graphic sequence of length n with terms <= n-1 and the
/// given sum, in lexicographically decreasing order.
void for_each_graphic_sequence(int n, int total, const std::function<void(const DegreeSequence&)>& fn);
std::vector<DegreeSequence> graphic_sequences(int n, int total);

struct SigmaExact {
    int n = 0;
    int value = 0;
    /// Non-potentially-H-graphic sequences of sum value-2.
    std::vector<DegreeSequence> extremal_sequences;
    std::uint64_t sequences_checked = 0;
};

/// sigma(H, n) by exhaustive search over sums, highest first. `threads`
/// parallelizes the checks at one sum; results do not depend on it.
SigmaExact sigma_exact(const SmallGraph& h, int n, const OracleConfig& cfg = {}, int threads = 1);

} // namespace potstab
