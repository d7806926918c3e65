#include "brute.hpp"
#include "potstab/errors.hpp"
#include "potstab/sequence.hpp"

#include <doctest.h>
#include <stdexcept>

#include <random>

using namespace potstab;

TEST_CASE("sum") {
    CHECK(sum(DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1}) == 14);
    CHECK(sum(DegreeSequence{}) == 0);
    CHECK(sum(DegreeSequence{4, 4, 1, 1, 1, 1, 1, 1}) == 14);
}

TEST_CASE("terms are kept nonincreasing and nonnegative") {
    DegreeSequence s{1, 3, 0, 2};
    CHECK(s.terms() == std::vector<int>{3, 2, 1, 0});
    CHECK(s.d(1) == 3);
    CHECK(s.d_or_zero(9) == 0);
    CHECK_THROWS_AS(DegreeSequence({2, -1}), std::invalid_argument);
}

TEST_CASE("is_graphic examples") {
    CHECK(is_graphic(DegreeSequence{3, 3, 3, 3}));
    CHECK_FALSE(is_graphic(DegreeSequence{3, 3, 1, 1}));
    CHECK(is_graphic(DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(is_graphic(DegreeSequence{}));
    CHECK(is_graphic(DegreeSequence{0, 0}));
    CHECK_FALSE(is_graphic(DegreeSequence{1}));
    CHECK_FALSE(is_graphic(DegreeSequence{3, 1, 1}));
}

TEST_CASE("is_graphic matches graph enumeration for n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        const auto realizable = brute::realizable_sequences(n);
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        // Every nonincreasing sequence with terms in 0..n-1.
        std::function<void(int, int)> rec = [&](int pos, int cap) {
            if (pos == n) {
                CHECK(is_graphic(DegreeSequence(d)) == (realizable.count(d) > 0));
                return;
            }
            for (int v = 0; v <= cap; ++v) {
                d[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1, v);
            }
        };
        rec(0, n - 1);
    }
}

TEST_CASE("layoff examples") {
    CHECK(layoff(DegreeSequence{2, 2, 2, 2}, 4) == DegreeSequence{2, 1, 1});
    CHECK(layoff(DegreeSequence{3, 3, 3, 3}, 1) == DegreeSequence{2, 2, 2});
    CHECK(layoff(DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1}, 1) == DegreeSequence{0, 0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(layoff(DegreeSequence{1, 1}, 3), std::out_of_range);
    CHECK_THROWS_AS(layoff(DegreeSequence{1, 1}, 0), std::out_of_range);
    CHECK_THROWS_AS(layoff(DegreeSequence{2, 0, 0}, 1), std::domain_error);
}

TEST_CASE("layoff preserves graphicality and drops the sum by 2 d_i") {
    std::mt19937 rng(7);
    int graphic_seen = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        std::vector<int> d;
        for (int i = 0; i < n; ++i) d.push_back(static_cast<int>(rng() % static_cast<unsigned>(n)));
        const DegreeSequence s(d);
        const std::size_t i = 1 + rng() % s.size();
        if (!is_graphic(s)) continue;
        ++graphic_seen;
        const DegreeSequence out = layoff(s, i);
        CHECK(is_graphic(out));
        CHECK(sum(out) == sum(s) - 2 * s.d(i));
        CHECK(out.size() == s.size() - 1);
    }
    CHECK(graphic_seen > 100);
}

TEST_CASE("layoff_batch_below") {
    auto r = layoff_batch_below(DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1}, 1);
    CHECK(r.count == 0);
    CHECK(r.laid_off_sum == 0);

    r = layoff_batch_below(DegreeSequence{3, 3, 2, 1, 1}, 2);
    CHECK(r.count == 2);
    CHECK(r.laid_off_sum <= 2);
    CHECK(r.result.min() >= 2);
    CHECK(sum(r.result) == 10 - 2 * r.laid_off_sum);

    r = layoff_batch_below(DegreeSequence{2, 2, 2, 2}, 3);
    CHECK(r.count == 4);
    CHECK(r.result.empty());
    CHECK(r.laid_off_sum == 4);
    CHECK(sum(r.result) == 8 - 2 * r.laid_off_sum);
}

TEST_CASE("layoff_batch_below bookkeeping on random graphic input") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        std::vector<int> d;
        for (int i = 0; i < n; ++i) d.push_back(static_cast<int>(rng() % static_cast<unsigned>(n)));
        const DegreeSequence s(d);
        if (!is_graphic(s)) continue;
        const int threshold = static_cast<int>(rng() % 6);
        const auto r = layoff_batch_below(s, threshold);
        CHECK(sum(r.result) == sum(s) - 2 * r.laid_off_sum);
        CHECK(r.laid_off_sum <= static_cast<std::int64_t>(r.count) * std::max(threshold - 1, 0));
        CHECK(r.count + r.result.size() == s.size());
        CHECK((r.result.empty() || r.result.min() >= threshold));
    }
}

TEST_CASE("l1_distance") {
    CHECK(l1_distance(DegreeSequence{4, 4, 1, 1, 1, 1, 1, 1}, DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1}) == 6);
    CHECK(l1_distance(DegreeSequence{3, 2, 1}, DegreeSequence{3, 2, 1}) == 0);
    CHECK(l1_distance(DegreeSequence{2, 2}, DegreeSequence{2}) == 2);

    std::mt19937 rng(3);
    auto random_seq = [&] {
        std::vector<int> d(rng() % 6);
        for (int& x : d) x = static_cast<int>(rng() % 6);
        return DegreeSequence(d);
    };
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_seq(), b = random_seq(), c = random_seq();
        CHECK(l1_distance(a, b) == l1_distance(b, a));
        CHECK(l1_distance(a, c) <= l1_distance(a, b) + l1_distance(b, c));
        // Zero padding makes trailing zeros invisible to the metric.
        const bool same_padded = l1_distance(a, b) == 0;
        std::vector<int> ta = a.terms(), tb = b.terms();
        while (!ta.empty() && ta.back() == 0) ta.pop_back();
        while (!tb.empty() && tb.back() == 0) tb.pop_back();
        CHECK(same_padded == (ta == tb));
    }
}

TEST_CASE("degree_sufficient") {
    CHECK(degree_sufficient(DegreeSequence{3, 3, 3, 3}, DegreeSequence{3, 3, 3, 3}));
    CHECK_FALSE(degree_sufficient(DegreeSequence{4, 4, 1, 1, 1, 1, 1, 1}, DegreeSequence{2, 2, 2}));
    CHECK(degree_sufficient(DegreeSequence{3, 2, 2, 2, 1}, DegreeSequence{2, 2, 2}));
}

TEST_CASE("sequence text round trip") {
    CHECK(parse_sequence("7,1^7") == DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1});
    CHECK(parse_sequence(" 4 , 4 ,1^6 ") == DegreeSequence{4, 4, 1, 1, 1, 1, 1, 1});
    CHECK(parse_sequence("1,3,2") == DegreeSequence{3, 2, 1});
    CHECK(parse_sequence("") == DegreeSequence{});
    CHECK(format_sequence(DegreeSequence{7, 1, 1, 1, 1, 1, 1, 1}) == "7,1^7");
    CHECK(format_sequence(DegreeSequence{4, 4, 1, 1, 1, 1, 1, 1}) == "4,4,1^6");
    CHECK(format_sequence(DegreeSequence{}) == "");
    for (const char* text : {"9,9,2^8", "5^6,0,0", "3", "2,1,1"}) CHECK(format_sequence(parse_sequence(text)) == text);

    CHECK_THROWS_AS(parse_sequence("3,,2"), ParseError);
    CHECK_THROWS_AS(parse_sequence("3,x"), ParseError);
    CHECK_THROWS_AS(parse_sequence("3^0"), ParseError);
    CHECK_THROWS_AS(parse_sequence("-1"), ParseError);
    try {
        parse_sequence("1,2,?");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}
