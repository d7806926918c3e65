#include "brute.hpp"
#include "corpus.hpp"
#include "potstab/oracle.hpp"
#include "potstab/potential.hpp"
#include "potstab/stability.hpp"

#include <doctest.h>
#include <stdexcept>

using namespace potstab;

TEST_CASE("profiles") {
    const auto k3 = profile(complete_graph(3));
    CHECK(k3.alpha == 1);
    CHECK(k3.nabla.at(2) == 1);
    CHECK(k3.nabla.at(3) == 2);
    CHECK(k3.sigma_tilde == 2);
    CHECK(k3.i_star == 2);
    CHECK(k3.type == GraphType::Type2);
    CHECK(k3.b_h == 1);

    CHECK(profile(complete_split(2, 3)).type == GraphType::Type1);
    CHECK(profile(complete_bipartite(2, 3)).type == GraphType::Type1);

    const auto c5 = profile(cycle_graph(5));
    CHECK(c5.alpha == 2);
    CHECK(c5.nabla.at(3) == 1);
    CHECK(c5.i_star == 3);
    CHECK(2 * c5.i_star - c5.nabla.at(3) == 5);
    CHECK(c5.type == GraphType::Type2);

    const auto k4 = profile(complete_graph(4));
    CHECK(k4.sigma_tilde_i == std::map<int, int>{{2, 4}, {3, 3}, {4, 2}});

    CHECK_THROWS_AS(profile(empty_graph(3)), std::invalid_argument);
}

TEST_CASE("profile invariants over the corpus and friends") {
    auto graphs = corpus::graphs();
    graphs.push_back({"C7", cycle_graph(7)});
    graphs.push_back({"K5-P3", [] {
                          SmallGraph g = complete_graph(5);
                          g.remove_edge(0, 1);
                          g.remove_edge(1, 2);
                          return g;
                      }()});
    for (const auto& [name, h] : graphs) {
        CAPTURE(name);
        const auto p = profile(h);
        int best = -1;
        for (auto [i, v] : p.sigma_tilde_i) {
            CHECK(v == 2 * (p.k - i) + p.nabla.at(i) - 1);
            best = std::max(best, v);
        }
        CHECK(p.sigma_tilde == best);
        CHECK(p.sigma_tilde_i.at(p.i_star) == best);
        for (auto [i, v] : p.sigma_tilde_i)
            if (i < p.i_star) CHECK(v < best);
        const int score = 2 * p.i_star - p.nabla.at(p.i_star);
        CHECK(score <= 2 * p.alpha + 1);
        CHECK((p.type == GraphType::Type1) == (score <= 2 * p.alpha));
        if (p.type == GraphType::Type2) CHECK(p.nabla.at(p.alpha + 1) == 1);
    }
}

TEST_CASE("target sequences") {
    auto t = target_sequence(complete_graph(3), 2, 8);
    CHECK(t.seq == DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1});
    CHECK_FALSE(t.parity_adjusted);

    t = target_sequence(complete_graph(4), 2, 8);
    CHECK(t.seq == DegreeSequence{7, 7, 2, 2, 2, 2, 2, 2});

    t = target_sequence(path_graph(3), 3, 7);
    CHECK(t.seq == DegreeSequence{1, 1, 1, 1, 1, 1, 0});
    CHECK(t.parity_adjusted);

    CHECK_THROWS_AS(target_sequence(complete_graph(3), 1, 8), std::out_of_range);
    CHECK_THROWS_AS(target_sequence(complete_graph(3), 4, 8), std::out_of_range);
    CHECK_THROWS_AS(target_sequence(complete_graph(4), 2, 2), std::out_of_range);
}

TEST_CASE("target family") {
    const auto k3 = target_family(complete_graph(3), 8);
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].seq == DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1});

    const auto k4 = target_family(complete_graph(4), 10);
    REQUIRE(k4.size() == 1);
    CHECK(k4[0].i == 2);

    SmallGraph k5p3 = complete_graph(5);
    k5p3.remove_edge(0, 1);
    k5p3.remove_edge(1, 2);
    CHECK(target_family(k5p3, 10).size() >= 2);
}

TEST_CASE("target sequences are graphic and not potentially H-graphic") {
    for (const auto& [name, h] : corpus::graphs()) {
        const auto p = profile(h);
        for (int n = p.k + 2; n <= 8; ++n) {
            for (int i = p.alpha + 1; i <= p.k; ++i) {
                if (n < target_min_n(p, i)) continue;
                CAPTURE(name);
                CAPTURE(i);
                CAPTURE(n);
                const auto t = target_sequence(p, i, n);
                CHECK(is_graphic(t.seq));
                CHECK_FALSE(potentially(t.seq, h).answer);
            }
        }
    }
}

TEST_CASE("rho") {
    const auto k3 = rho(complete_graph(3), 8);
    CHECK(k3.seq == DegreeSequence{4, 4, 1, 1, 1, 1, 1, 1});
    CHECK(sum(k3.seq) == 14);

    const auto c5 = rho(cycle_graph(5), 9);
    CHECK(c5.seq == DegreeSequence{8, 5, 5, 2, 2, 2, 2, 2, 2});
    CHECK(sum(c5.seq) == 30);

    CHECK_THROWS_AS(rho(complete_split(2, 3), 9), std::invalid_argument);
    CHECK_THROWS_AS(rho(complete_graph(3), 4), std::out_of_range);

    // Summing the construction term by term gives
    // 2(k-a-1)n - (k-a)(k-a-1).
    for (const auto& [name, h] : corpus::graphs()) {
        const auto p = profile(h);
        if (p.type != GraphType::Type2) continue;
        for (int n = p.k + 2; n <= 9; ++n) {
            const auto w = rho(p, n);
            CAPTURE(name);
            CAPTURE(n);
            CHECK(sum(w.seq) == rho_sum_closed_form(p.k, p.alpha, n));
            CHECK(is_graphic(w.seq));
            const SmallGraph g = rho_realization(w);
            CHECK(g.degree_sequence() == w.seq);
        }
    }
}

TEST_CASE("rho is not potentially H-graphic and is uniquely realized") {
    for (const auto& [name, h] : corpus::graphs()) {
        const auto p = profile(h);
        // Only graphs without a double-star cover; otherwise rho contains H.
        if (p.type != GraphType::Type2 || double_star_cover(h)) continue;
        for (int n = p.k + 2; n <= std::min(p.k + 3, 8); ++n) {
            const auto w = rho(p, n);
            CAPTURE(name);
            CHECK_FALSE(potentially(w.seq, h).answer);
            if (n <= 7) {
                // Every labeled realization is a copy of the double-star join.
                const SmallGraph model = rho_realization(w);
                const int pairs = n * (n - 1) / 2;
                for (unsigned long long code = 0; code < (1ULL << pairs); ++code) {
                    const SmallGraph g = brute::graph_from_code(n, code);
                    if (g.edge_count() * 2 != sum(w.seq)) continue;
                    if (brute::sorted_degrees(g) != w.seq.terms()) continue;
                    CHECK(are_isomorphic(g, model));
                }
            }
        }
    }
}

TEST_CASE("rho degree sufficiency") {
    CHECK(asymptotic_degree_sufficient_rho(cycle_graph(6)));
    CHECK_FALSE(asymptotic_degree_sufficient_rho(complete_graph(3)));
    CHECK_FALSE(asymptotic_degree_sufficient_rho(complete_graph(4)));
    CHECK_FALSE(degree_sufficient(rho(complete_graph(3), 8).seq, complete_graph(3).degree_sequence()));
    CHECK(degree_sufficient(rho(cycle_graph(6), 12).seq, cycle_graph(6).degree_sequence()));
}

TEST_CASE("best deleted subgraph") {
    auto f = best_deleted_subgraph(complete_graph(4), 1);
    CHECK(are_isomorphic(f.graph, complete_graph(3)));
    CHECK(f.sigma_tilde == 2);

    f = best_deleted_subgraph(cycle_graph(5), 0);
    CHECK(f.graph == cycle_graph(5));
    CHECK(f.sigma_tilde == profile(cycle_graph(5)).sigma_tilde);

    f = best_deleted_subgraph(cycle_graph(5), 1);
    CHECK(are_isomorphic(f.graph, path_graph(4)));
    CHECK(f.sigma_tilde <= profile(cycle_graph(5)).sigma_tilde - 2);

    CHECK_THROWS_AS(best_deleted_subgraph(complete_graph(3), 2), std::out_of_range);
}
