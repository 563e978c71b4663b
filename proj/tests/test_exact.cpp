#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "ccstop/activation.hpp"
#include "ccstop/errors.hpp"
#include "ccstop/exact.hpp"
#include "ccstop/generators.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ccstop;
using namespace ccstop::testing;

namespace {

// Mean CC after the continuation rule, over every order of the inactive vertices.
Rational continuation_by_permutations(std::int64_t n) {
    auto inst = gen_named_family(Family::star_plus_path, {.n = n});
    const Vertex center = inst.marks.at("center").front();
    ActivationState start(inst.graph, nullptr, {.track_neighborhoods = false, .track_witnesses = false});
    for (Vertex v : inst.marks.at("leaves")) start.activate(v);
    std::vector<Vertex> rest{center};
    for (Vertex v : inst.marks.at("path")) rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    std::int64_t total = 0;
    std::int64_t count = 0;
    do {
        auto s = start;
        s.activate(rest[0]);
        if (rest[0] == center) {
            for (std::int64_t i = 1; i <= (n - 1) / 2; ++i) s.activate(rest[static_cast<std::size_t>(i)]);
        }
        total += s.cc();
        ++count;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return Rational(total, count);
}

}  // namespace

TEST_CASE("blind expectation on trees") {
    CHECK(blind_expectation_tree(5, 3) == make_rational(9, 5));
    CHECK(brute_force_blind(path_graph(5), 3) == make_rational(9, 5));
    for (std::int64_t n : {1, 4, 17}) {
        CHECK(blind_expectation_tree(n, 0) == 0);
        CHECK(blind_expectation_tree(n, n) == 1);
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto n = static_cast<Vertex>(1 + seed % 12);
        auto t = random_tree(n, seed);
        for (std::int64_t l = 0; l <= n; ++l) REQUIRE(brute_force_blind(t, l) == blind_expectation_tree(n, l));
    }
}

TEST_CASE("brute-force blind") {
    auto star = gen_named_family(Family::star, {.n = 5}).graph;
    CHECK(brute_force_blind(star, 2) == make_rational(8, 5));
    CHECK(brute_force_blind(gen_named_family(Family::grid, {.d = 2, .side = 3}).graph, 1) == 1);
    CHECK_THROWS_AS(brute_force_blind(path_graph(40), 20), ResourceError);
}

TEST_CASE("blind expectation on k-trees") {
    for (std::int64_t n = 1; n <= 30; ++n)
        for (std::int64_t l = 1; l <= n; ++l) REQUIRE(blind_expectation_ktree(1, n, l) == blind_expectation_tree(n, l));

    auto seq = small_2tree();
    CHECK(blind_expectation_ktree(2, 4, 2) == brute_force_blind(graph_from_construction(seq), 2));
    CHECK(blind_expectation_ktree(2, 4, 2) == make_rational(7, 6));
    for (int k = 1; k <= 5; ++k) CHECK(blind_expectation_ktree(k, 40, 40) == 1);

    for (int k = 1; k <= 3; ++k) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const auto n = static_cast<Vertex>(k + 1 + seed % (10 - k));
            auto g = graph_from_construction(gen_random_ktree(k, n, seed));
            for (std::int64_t l = 0; l <= n; ++l) {
                REQUIRE(blind_expectation_ktree(k, n, l) == brute_force_blind(g, l));
                REQUIRE(blind_expectation_chordal(g, l) == brute_force_blind(g, l));
            }
        }
    }
}

TEST_CASE("witness curve on chordal graphs") {
    auto inst = gen_named_family(Family::two_star_plus_star, {.n = 12, .ratio = make_rational(1, 2)});
    for (std::int64_t l = 0; l <= 12; ++l) CHECK(blind_expectation_chordal(inst.graph, l) == brute_force_blind(inst.graph, l));
    const std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    CHECK_THROWS_AS(blind_expectation_chordal(Graph::from_edges(4, c4), 2), ParameterError);

    WitnessCurve curve(ktree_histogram(1, 4), 4);
    CHECK(curve.argmax() == std::vector<std::int64_t>{2, 3});
    CHECK(curve.value(2) == make_rational(3, 2));
}

TEST_CASE("value table on small paths") {
    auto p3 = solve_dp(path_graph(3), {.exact = true});
    REQUIRE(p3.has_exact());
    CHECK(p3.exact[0] == make_rational(4, 3));
    CHECK(p3.root_value() == doctest::Approx(4.0 / 3.0));
    CHECK(p3.exact[0b101] == 2);
    CHECK(p3.stop(0b101));

    auto p2 = solve_dp(path_graph(2), {.exact = true});
    CHECK(p2.exact[0] == 1);
    CHECK(p2.stop(0b01));
    CHECK(p2.stop(0b10));

    auto p10 = solve_dp(path_graph(10));
    CHECK(p10.root_value() >= 3.0);

    std::ostringstream dump;
    write_value_table(dump, p2);
    CHECK(dump.str() == "0 1 0\n1 1 1\n2 1 1\n3 1 1\n");
}

TEST_CASE("value table recursion and stop flags") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto g = random_tree(9, seed);
        auto table = solve_dp(g, {.exact = true});
        auto approx = solve_dp(g);
        auto masks = adjacency_masks(g);
        const std::uint64_t full = (std::uint64_t{1} << 9) - 1;
        for (std::uint64_t s = 0; s <= full; ++s) {
            const Rational cc = mask_components(masks, s);
            REQUIRE(table.exact[s] >= cc);
            REQUIRE(std::abs(to_double(table.exact[s]) - approx.value[s]) < 1e-12);
            if (s == full) {
                REQUIRE(table.exact[s] == cc);
                continue;
            }
            Rational mean = 0;
            int free = 0;
            for (int v = 0; v < 9; ++v) {
                if (s >> v & 1) continue;
                mean += table.exact[s | (std::uint64_t{1} << v)];
                ++free;
            }
            mean /= free;
            REQUIRE(table.exact[s] == std::max(cc, mean));
            REQUIRE(table.stop(s) == (cc >= mean));
            REQUIRE(approx.stop(s) == table.stop(s));
        }
    }
}

TEST_CASE("dp dominates the catalog") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto inst = gen_named_family(Family::random_tree, {.n = 7, .seed = seed});
        auto dp = bind_strategy(parse_strategy("dp"), inst);
        const Rational best = std::get<DpOptimal>(dp).table->exact[0];
        CHECK(brute_force_strategy_value(inst.graph, nullptr, dp) == best);
        for (const char* text : {"blind:l=3", "blind:l=4", "greedy", "greedy:strict", "twophase:alpha=1/3,gamma=2/3,trigger=0"}) {
            auto spec = bind_strategy(parse_strategy(text), inst);
            CHECK(brute_force_strategy_value(inst.graph, nullptr, spec) <= best);
        }
    }
}

TEST_CASE("brute-force strategy values") {
    auto g = path_graph(3);
    CHECK(brute_force_strategy_value(g, nullptr, BlindThreshold{2}) == make_rational(4, 3));
    auto tree = random_tree(6, 2);
    CHECK(brute_force_strategy_value(tree, nullptr, BlindThreshold{6}) == 1);
    CHECK_THROWS_AS(brute_force_strategy_value(path_graph(10), nullptr, BlindThreshold{2}), ResourceError);
}

TEST_CASE("dp caps") {
    CHECK_THROWS_AS(solve_dp(path_graph(25)), ResourceError);
    CHECK_THROWS_AS(solve_dp(path_graph(13), {.exact = true}), ResourceError);
}

TEST_CASE("continuation example") {
    auto r = continuation_example(101);
    CHECK(r.displayed == make_rational(23, 101));
    for (std::int64_t n : {3, 5, 7}) {
        auto v = continuation_example(n);
        CHECK(v.strategy_expected == continuation_by_permutations(n));
        CHECK(v.strategy_gain == v.strategy_expected - (n + 1));
        CHECK(v.strategy_gain == v.displayed + make_rational(1, n));
    }
    for (std::int64_t n = 11; n <= 61; n += 2) {
        auto v = continuation_example(n);
        CHECK(v.displayed > 0);
        CHECK(v.strategy_gain > 0);
    }
    // The displayed expression is 1/4 - 9/(4n).
    for (std::int64_t n : {3, 101, 501}) CHECK(continuation_example(n).displayed == make_rational(1, 4) - Rational(9, 4 * n));
    CHECK_THROWS_AS(continuation_example(10), ParameterError);
    CHECK_THROWS_AS(continuation_example(1), ParameterError);
}
