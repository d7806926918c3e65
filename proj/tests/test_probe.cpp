#include "potstab/errors.hpp"
#include "potstab/probe.hpp"
#include "potstab/report.hpp"

#include <doctest.h>
#include <stdexcept>

using namespace potstab;

namespace {

ProbeConfig with_f(std::int64_t f) {
    ProbeConfig c;
    c.f_override = f;
    return c;
}

void check_embedding(const DegreeSequence& seq, const SmallGraph& pattern, const ProbeVerdict& v) {
    REQUIRE(v.embedding);
    REQUIRE(v.realization);
    CHECK(v.realization->degrees() == seq.terms());
    for (auto [a, b] : pattern.edges())
        CHECK(v.realization->has_edge((*v.embedding)[static_cast<std::size_t>(a)],
                                      (*v.embedding)[static_cast<std::size_t>(b)]));
}

} // namespace

TEST_CASE("constants") {
    CHECK(default_f(3) == 3 * 8 * 9);
    CHECK(default_f(4) == 6 * 8 * 16);
    CHECK(delta_bound(0.25, 3) == doctest::Approx(0.25 / (16 * 27 + 48 * 9 + 32.25 * 3)));
}

TEST_CASE("star with the triangle reaches the split conclusion") {
    const DegreeSequence star{7, 1, 1, 1, 1, 1, 1, 1};
    const auto r = run_probe(star, complete_graph(3), with_f(4));
    CHECK(r.verdict.kind == VerdictKind::FoundSplit);
    check_embedding(star, complete_split(1, 2), r.verdict);
    CHECK(r.trace.init.laid_off == 0);
    REQUIRE(r.trace.iterations.size() == 2);
    CHECK(r.trace.iterations[0].removed_nonneighbors == 0);
    CHECK(r.trace.iterations[0].laid_off_step3 == 1);
    CHECK(r.trace.final_record.ell == 1);
    CHECK(r.trace.iterations[1].halting_reason == "iteration_limit");
    CHECK(potentially(star, complete_split(1, 2)).answer);
    // No exchange can produce a triangle: the star has no second edge pair.
    REQUIRE(r.trace.refinement);
    CHECK_FALSE(r.trace.refinement->embedding);
    CHECK(r.trace.refinement->certificates.max_degree_bound);
}

TEST_CASE("clique target with K4") {
    // pi~_2(K4, 10) is its own target. It realizes K_2 v Kbar_8, which
    // contains K_2 v Kbar_2, so the split conclusion is what the iteration
    // reaches; the distance to the family member is zero.
    const DegreeSequence t{9, 9, 2, 2, 2, 2, 2, 2, 2, 2};
    for (std::int64_t f : {0, 1, 2}) {
        const auto r = run_probe(t, complete_graph(4), with_f(f));
        CAPTURE(f);
        CHECK(r.verdict.kind == VerdictKind::FoundSplit);
        check_embedding(t, complete_split(2, 2), r.verdict);
    }
    CHECK(l1_distance(t, target_family(complete_graph(4), 10).front().seq) == 0);
}

TEST_CASE("early exit for a padded clique") {
    const DegreeSequence s{5, 5, 5, 5, 5, 5, 0, 0};
    const auto r = run_probe(s, complete_graph(3));
    CHECK(r.verdict.kind == VerdictKind::DeclaredPotential);
    CHECK(r.verdict.reason == PotentialReason::EarlyExit);
    CHECK(r.verdict.verified == true);
    CHECK(r.trace.init.early_exit);
    check_embedding(s, complete_graph(3), r.verdict);
}

TEST_CASE("close-to-target conclusion") {
    // (7,1^7) with f = 0 halts at t = 0; S_0 = K_1 v Kbar_2 needs d_1 >= 2
    // and min >= 1, which holds, so the split comes from the oracle.
    const DegreeSequence star{7, 1, 1, 1, 1, 1, 1, 1};
    const auto r = run_probe(star, complete_graph(3), with_f(0));
    CHECK(r.verdict.kind == VerdictKind::FoundSplit);
    CHECK(r.trace.final_record.degree_sufficient_s_ell == true);

    // K_{2,3} next to pi~_4(K_{2,3}, 9) = (8,2^8).
    const SmallGraph h = complete_bipartite(2, 3);
    const DegreeSequence s{8, 3, 3, 2, 2, 2, 2, 2, 2};
    for (std::int64_t f : {0, 3, 5}) {
        const auto q = run_probe(s, h, with_f(f));
        CAPTURE(f);
        REQUIRE(q.verdict.kind == VerdictKind::CloseToTarget);
        REQUIRE(q.verdict.target);
        CHECK(q.verdict.target->i == 4);
        CHECK(q.verdict.target->seq == DegreeSequence{8, 2, 2, 2, 2, 2, 2, 2, 2});
        CHECK(q.verdict.distance == 2);
        bool member = false;
        for (const auto& m : target_family(h, 9)) member = member || m.seq == q.verdict.target->seq;
        CHECK(member);
    }
}

TEST_CASE("trace bookkeeping") {
    const DegreeSequence s{6, 5, 4, 3, 3, 2, 2, 2, 1};
    for (std::int64_t f : {1, 3, 5}) {
        const auto r = run_probe(s, cycle_graph(5), with_f(f));
        CAPTURE(f);
        const auto& tr = r.trace;
        int counted = static_cast<int>(tr.init.laid_off);
        for (const auto& it : tr.iterations)
            counted += it.removed_nonneighbors + it.laid_off_step3 + it.laid_off_step4;
        CHECK(counted == tr.counted_removals);
        const auto p = profile(cycle_graph(5));
        CHECK(tr.final_record.ell <= p.k - p.alpha - p.b_h);
        for (const auto& it : tr.iterations) {
            CHECK(it.sum == sum(it.pi_t));
            CHECK(it.sum_bound_holds == (static_cast<double>(it.sum) >= it.sum_bound));
        }
        // Trace lines are valid JSON, one record per line.
        const std::string lines = trace_json_lines(r);
        std::size_t count = 0, start = 0;
        while (start < lines.size()) {
            const std::size_t end = lines.find('\n', start);
            const std::string line = lines.substr(start, end - start);
            CHECK(Json::accept(line));
            ++count;
            start = end + 1;
        }
        CHECK(count == tr.iterations.size() + 3);
    }
}

TEST_CASE("configuration errors") {
    const DegreeSequence s{2, 2, 2};
    ProbeConfig c;
    c.epsilon = 0.5;
    CHECK_THROWS_AS(run_probe(s, complete_graph(3), c), std::invalid_argument);
    c = {};
    c.delta = 0;
    CHECK_THROWS_AS(run_probe(s, complete_graph(3), c), std::invalid_argument);
    c = {};
    c.delta = 0.5;
    CHECK_THROWS_AS(run_probe(s, complete_graph(3), c), std::invalid_argument);
    CHECK_THROWS_AS(run_probe(DegreeSequence{3, 1}, complete_graph(3)), std::invalid_argument);

    c = {};
    c.delta = 0.01;
    const auto r = run_probe(DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1}, complete_graph(3), c);
    CHECK_FALSE(r.trace.delta_within_bound);
    CHECK_FALSE(r.trace.warnings.empty());
}

TEST_CASE("type2_refine") {
    const SmallGraph k3 = complete_graph(3);

    SUBCASE("star cannot produce a triangle") {
        const auto star = canonical_realization(DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1});
        const auto r = type2_refine(star, {0}, {1, 2}, k3);
        CHECK_FALSE(r.embedding);
        CHECK(r.certificates.max_degree_bound);
        CHECK(r.certificates.few_big_degrees);
    }
    SUBCASE("edge inside R embeds immediately") {
        const auto g = canonical_realization(DegreeSequence{3, 3, 2, 2, 2});
        REQUIRE(g.graph.has_edge(1, 2));
        const auto r = type2_refine(g, {0}, {1, 2}, k3);
        REQUIRE(r.embedding);
        CHECK(r.route == RefineRoute::EdgeInR);
    }
    SUBCASE("K_{2,3} realization of (3,3,2,2,2) needs an exchange") {
        Realization g{complete_bipartite(2, 3), DegreeSequence{3, 3, 2, 2, 2}};
        // Vertex 0 is a center; 2 and 3 are leaves on the other side.
        const auto r = type2_refine(g, {0}, {2, 3}, k3);
        REQUIRE(r.embedding);
        REQUIRE(r.realization);
        CHECK(r.realization->graph.degrees() == g.graph.degrees());
        CHECK_FALSE(r.exchanges.empty());
        for (auto [a, b] : k3.edges())
            CHECK(r.realization->graph.has_edge((*r.embedding)[static_cast<std::size_t>(a)],
                                                (*r.embedding)[static_cast<std::size_t>(b)]));
    }
    SUBCASE("malformed Q and R") {
        const auto g = canonical_realization(DegreeSequence{3, 3, 2, 2, 2});
        CHECK_THROWS_AS(type2_refine(g, {0, 1}, {2, 3}, k3), std::invalid_argument);
        CHECK_THROWS_AS(type2_refine(g, {0}, {0, 2}, k3), std::invalid_argument);
        CHECK_THROWS_AS(type2_refine(g, {4}, {1, 2}, k3), std::invalid_argument);
    }
}
