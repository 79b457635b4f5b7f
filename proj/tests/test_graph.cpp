#include "lrauzy/graph.hpp"

#include "lrauzy/fibnum.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

using namespace lrauzy;

namespace {

WordPrefix fib_for(std::size_t max_factor_len) {
    return fibonacci_prefix(fibonacci_prefix_policy(max_factor_len));
}

// Arc list as (source word, target word, label), order-insensitive.
std::set<std::tuple<Word, Word, Word>> arc_triples(const DirectedGraph& g) {
    std::set<std::tuple<Word, Word, Word>> out;
    for (const Arc& a : g.arcs)
        out.insert({g.vertices[a.from], g.vertices[a.to], a.label});
    return out;
}

// Independent route to the same arc set: every length-(2k−ℓ) factor is one
// arc, from its k-prefix to its k-suffix.
std::set<std::tuple<Word, Word, Word>> arcs_from_labels(const WordPrefix& w,
                                                        std::size_t k,
                                                        std::size_t ell) {
    std::set<std::tuple<Word, Word, Word>> out;
    for (const Word& label : factors(w, 2 * k - ell).factors)
        out.insert({label.substr(0, k), label.substr(k - ell, k), label});
    return out;
}

} // namespace

TEST_CASE("l-rauzy graph of the fibonacci word, k=4, ell=2") {
    DirectedGraph g = build_l_rauzy(fib_for(6), 4, 2);
    CHECK(g.vertices ==
          std::vector<Word>{"0100", "1001", "0010", "0101", "1010"});
    REQUIRE(g.arc_count() == 7);
    std::set<std::tuple<Word, Word, Word>> expected = {
        {"0100", "0010", "010010"}, {"1001", "0101", "100101"},
        {"0010", "1010", "001010"}, {"0101", "0100", "010100"},
        {"1010", "1001", "101001"}, {"1001", "0100", "100100"},
        {"0010", "1001", "001001"},
    };
    CHECK(arc_triples(g) == expected);
}

TEST_CASE("l-rauzy graph of a periodic word is three self-loops") {
    DirectedGraph g = build_l_rauzy(periodic_prefix("010", 30), 4, 1);
    CHECK(g.vertices == std::vector<Word>{"0100", "1001", "0010"});
    REQUIRE(g.arc_count() == 3);
    for (const Arc& a : g.arcs)
        CHECK(a.from == a.to);
    SccResult scc = strongly_connected_components(g);
    CHECK_FALSE(scc.strongly_connected);
    CHECK(scc.component_count == 3);
}

TEST_CASE("2-rauzy graph of order 4 for the thue-morse word") {
    DirectedGraph g = build_l_rauzy(thue_morse_prefix(4096), 4, 2);
    CHECK(g.vertices ==
          std::vector<Word>{"0110", "1101", "1010", "0100", "1001", "0011",
                            "1100", "0010", "0101", "1011"});
    CHECK_FALSE(strongly_connected_components(g).strongly_connected);
}

TEST_CASE("arc labels glue source and target words") {
    WordPrefix words[] = {fib_for(20), thue_morse_prefix(4096),
                          periodic_prefix("0110", 64)};
    for (const WordPrefix& w : words)
        for (std::size_t k : {3u, 4u, 6u})
            for (std::size_t ell = 1; ell <= k - 1; ++ell) {
                DirectedGraph g = build_l_rauzy(w, k, ell);
                std::set<Word> labels;
                for (const Arc& a : g.arcs) {
                    CHECK(a.label.size() == 2 * k - ell);
                    CHECK(a.label.substr(0, k) == g.vertices[a.from]);
                    CHECK(a.label.substr(k - ell, k) == g.vertices[a.to]);
                    // the label really occurs in the word
                    CHECK(!occurrences(w, a.label).positions.empty());
                    CHECK(labels.insert(a.label).second); // pairwise distinct
                }
            }
}

TEST_CASE("pairwise construction matches the factor-driven arc set") {
    WordPrefix f = fib_for(24);
    WordPrefix t = thue_morse_prefix(4096);
    for (std::size_t k = 2; k <= 12; ++k)
        for (std::size_t ell = 1; ell <= k - 1; ++ell) {
            CHECK(arc_triples(build_l_rauzy(f, k, ell)) ==
                  arcs_from_labels(f, k, ell));
            CHECK(arc_triples(build_l_rauzy(t, k, ell)) ==
                  arcs_from_labels(t, k, ell));
        }
}

TEST_CASE("rauzy graph of the fibonacci word") {
    DirectedGraph g = build_rauzy(fib_for(5), 4);
    CHECK(g.vertex_count() == 5);
    CHECK(g.arc_count() == 6);

    DirectedGraph g1 = build_rauzy(fib_for(2), 1);
    CHECK(g1.vertices == std::vector<Word>{"0", "1"});
    std::set<std::tuple<Word, Word, Word>> expected = {
        {"0", "1", "01"}, {"1", "0", "10"}, {"0", "0", "00"}};
    CHECK(arc_triples(g1) == expected);
}

TEST_CASE("rauzy graph equals the l-rauzy graph at ell = k-1") {
    WordPrefix f = fib_for(31);
    for (std::size_t k = 2; k <= 30; ++k)
        CHECK(graph_equal(build_rauzy(f, k), build_l_rauzy(f, k, k - 1)));
}

TEST_CASE("insufficient prefixes are rejected") {
    WordPrefix tiny = fibonacci_prefix(8);
    CHECK_THROWS_AS(build_l_rauzy(tiny, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_l_rauzy(fib_for(6), 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_l_rauzy(fib_for(6), 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_l_rauzy(literal_word("0101"), 4, 2),
                    std::invalid_argument);
}

TEST_CASE("de bruijn graphs") {
    DirectedGraph g2 = build_debruijn(2);
    CHECK(g2.vertex_count() == 4);
    CHECK(g2.arc_count() == 8);
    CHECK(g2.vertices == std::vector<Word>{"00", "01", "10", "11"});

    DirectedGraph g3 = build_debruijn(3);
    CHECK(g3.vertex_count() == 8);
    CHECK(g3.arc_count() == 16);

    for (std::size_t k = 2; k <= 8; ++k) {
        DirectedGraph g = build_debruijn(k);
        DegreeReport rep = degrees(g);
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            CHECK(rep.in_degree[i] == 2);
            CHECK(rep.out_degree[i] == 2);
        }
        // the all-zero word keeps a self-loop
        bool zero_loop = false;
        for (const Arc& a : g.arcs)
            zero_loop |= a.from == 0 && a.to == 0;
        CHECK(zero_loop);
        // shift structure: u[2..k] = v[1..k-1] on every arc
        for (const Arc& a : g.arcs)
            CHECK(g.vertices[a.from].substr(1) ==
                  g.vertices[a.to].substr(0, k - 1));
        CHECK(strongly_connected_components(g).strongly_connected);
    }
    CHECK_THROWS_AS(build_debruijn(1), std::invalid_argument);
}

TEST_CASE("half-range rauzy graphs coincide with l-rauzy at their overlap") {
    WordPrefix f = fib_for(31);
    CHECK(graph_equal(build_hrr(f, 4, HrrVariant::even),
                      build_l_rauzy(f, 4, 2)));
    CHECK(graph_equal(build_hrr(f, 5, HrrVariant::odd_type_one),
                      build_l_rauzy(f, 5, 3)));
    CHECK(graph_equal(build_hrr(f, 5, HrrVariant::odd_type_two),
                      build_l_rauzy(f, 5, 2)));

    CHECK(hrr_overlap(10, HrrVariant::even) == 5);
    CHECK(hrr_overlap(9, HrrVariant::odd_type_one) == 5);
    CHECK(hrr_overlap(9, HrrVariant::odd_type_two) == 4);

    CHECK_THROWS_AS(build_hrr(f, 5, HrrVariant::even), std::invalid_argument);
    CHECK_THROWS_AS(build_hrr(f, 4, HrrVariant::odd_type_one),
                    std::invalid_argument);
}

TEST_CASE("strong connectivity of fibonacci graphs in a small sweep") {
    WordPrefix f = fib_for(24);
    for (std::size_t k = 2; k <= 12; ++k)
        for (std::size_t ell = 1; ell <= k - 1; ++ell) {
            SccResult scc =
                strongly_connected_components(build_l_rauzy(f, k, ell));
            CHECK(scc.strongly_connected);
            CHECK(scc.component_count == 1);
        }
}

TEST_CASE("degree table for fibonacci k=4, ell=2") {
    DirectedGraph g = build_l_rauzy(fib_for(6), 4, 2);
    DegreeReport rep = degrees(g);
    CHECK(rep.out_degree == std::vector<std::size_t>{1, 2, 2, 1, 1});
    CHECK(rep.in_degree == std::vector<std::size_t>{2, 2, 1, 1, 1});
    CHECK(rep.isolated == 0);
    CHECK(rep.min_in == 1);
    CHECK(rep.min_out == 1);

    std::size_t in_sum = 0, out_sum = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        in_sum += rep.in_degree[i];
        out_sum += rep.out_degree[i];
    }
    CHECK(in_sum == g.arc_count());
    CHECK(out_sum == g.arc_count());
}

TEST_CASE("closed-form arc map applicability") {
    CHECK(closed_form_applicable(4, 1));
    CHECK(closed_form_applicable(4, 2));
    CHECK_FALSE(closed_form_applicable(4, 3)); // k-ell = 1 < F_2
    CHECK_FALSE(closed_form_applicable(5, 2)); // 6 is not a fibonacci number
    for (std::size_t ell = 4; ell <= 7; ++ell)
        CHECK(closed_form_applicable(12, ell));
    CHECK_FALSE(closed_form_applicable(12, 3));
    CHECK_FALSE(closed_form_applicable(12, 8));
    CHECK_THROWS_AS(closed_form_arcs(5, 2), std::invalid_argument);
}

TEST_CASE("closed-form arcs for k=4") {
    auto arcs2 = closed_form_arcs(4, 2);
    std::sort(arcs2.begin(), arcs2.end());
    // 1-based: 1→3, 2→4, 3→5, 4→1, 5→2, 2→1, 3→2
    std::vector<IndexArc> expected2 = {{0, 2}, {1, 0}, {1, 3}, {2, 1},
                                       {2, 4}, {3, 0}, {4, 1}};
    CHECK(arcs2 == expected2);

    auto arcs1 = closed_form_arcs(4, 1);
    std::sort(arcs1.begin(), arcs1.end());
    // 1-based: 1→4, 2→5, 3→1, 4→2, 5→3 plus self-loops 1→1, 2→2, 3→3
    std::vector<IndexArc> expected1 = {{0, 0}, {0, 3}, {1, 1}, {1, 4},
                                       {2, 0}, {2, 2}, {3, 1}, {4, 2}};
    CHECK(arcs1 == expected1);
}

TEST_CASE("closed-form arcs equal the built graph") {
    WordPrefix f = fib_for(23);
    for (std::size_t k : {2u, 4u, 7u, 12u})
        for (std::size_t ell = 1; ell <= k - 1; ++ell) {
            if (!closed_form_applicable(k, ell))
                continue;
            DirectedGraph g = build_l_rauzy(f, k, ell);
            std::vector<IndexArc> actual;
            for (const Arc& a : g.arcs)
                actual.push_back({a.from, a.to});
            auto predicted = closed_form_arcs(k, ell);
            std::sort(actual.begin(), actual.end());
            std::sort(predicted.begin(), predicted.end());
            CHECK(actual == predicted);
            std::size_t n = fibonacci_bracket(k);
            CHECK(predicted.size() ==
                  fibonacci_number(n + 1) + (k - ell));
            CHECK(predicted.size() == 2 * k - ell + 1);
        }
}

TEST_CASE("graph equality ignores vertex and arc order") {
    DirectedGraph a = build_l_rauzy(fib_for(6), 4, 2);
    DirectedGraph b = a;
    std::reverse(b.arcs.begin(), b.arcs.end());
    CHECK(graph_equal(a, b));

    // reindex vertices in reverse order
    DirectedGraph c;
    c.vertices = a.vertices;
    std::reverse(c.vertices.begin(), c.vertices.end());
    for (Arc arc : a.arcs) {
        arc.from = c.vertices.size() - 1 - arc.from;
        arc.to = c.vertices.size() - 1 - arc.to;
        c.arcs.push_back(arc);
    }
    CHECK(graph_equal(a, c));

    DirectedGraph d = a;
    d.arcs.pop_back();
    CHECK_FALSE(graph_equal(a, d));
}
