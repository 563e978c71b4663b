#include <vector>

#include "ccstop/errors.hpp"
#include "ccstop/generators.hpp"
#include "ccstop/graph.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ccstop;
using namespace ccstop::testing;

TEST_CASE("graph adjacency is sorted and symmetric") {
    const std::vector<Edge> edges{{2, 0}, {0, 1}, {3, 1}};
    auto g = Graph::from_edges(4, edges);
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<Vertex>{1, 2});
    CHECK(g.adjacent(1, 3));
    CHECK(g.adjacent(3, 1));
    CHECK_FALSE(g.adjacent(2, 3));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("graph construction rejects malformed edges") {
    const std::vector<Edge> loop{{1, 1}};
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    const std::vector<Edge> range{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(3, dup), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(3, range), ValidationError);
}

TEST_CASE("component counts and forests") {
    auto p = path_graph(5);
    CHECK(count_components(p) == 1);
    const std::vector<char> members{1, 0, 1, 0, 1};
    CHECK(count_components(p, members) == 3);
    const std::vector<char> none(5, 0);
    CHECK(count_components(p, none) == 0);
    CHECK(is_forest(p));
    const std::vector<Edge> triangle{{0, 1}, {1, 2}, {0, 2}};
    CHECK_FALSE(is_forest(Graph::from_edges(3, triangle)));
}

TEST_CASE("named families") {
    SUBCASE("path on two vertices is a single edge") {
        auto g = path_graph(2);
        CHECK(g.n() == 2);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("star_plus_path counts") {
        auto inst = gen_named_family(Family::star_plus_path, {.n = 3});
        CHECK(inst.graph.n() == 7);
        CHECK(inst.graph.edge_count() == 6);
        CHECK(inst.marks.at("leaves").size() == 4);
        CHECK(inst.marks.at("path").size() == 2);
        CHECK(gen_named_family(Family::star_plus_path, {.n = 101}).graph.n() == 203);
    }
    SUBCASE("k_star joins every later vertex to the initial clique") {
        auto inst = gen_named_family(Family::k_star, {.n = 5, .k = 2});
        CHECK(inst.graph.edge_count() == 7);
        for (Vertex v = 2; v < 5; ++v) {
            CHECK(inst.graph.adjacent(v, 0));
            CHECK(inst.graph.adjacent(v, 1));
        }
        REQUIRE(inst.sequence);
        CHECK(is_ktree(*inst.sequence, inst.graph));
    }
    SUBCASE("star has center 0") {
        auto g = gen_named_family(Family::star, {.n = 5}).graph;
        CHECK(g.degree(0) == 4);
        CHECK(g.edge_count() == 4);
    }
    SUBCASE("two_star_plus_star") {
        auto inst = gen_named_family(Family::two_star_plus_star, {.n = 1000});
        const auto& g = inst.graph;
        CHECK(g.n() == 1000);
        // 2-star on 999 vertices (2*999-3 edges), star on 1 vertex, one bridge.
        CHECK(g.edge_count() == 2 * 999 - 3 + 0 + 1);
        CHECK(inst.marks.at("initial_clique") == std::vector<Vertex>{0, 1});
        CHECK(count_components(g) == 1);
        const Vertex center = inst.marks.at("star_center").front();
        CHECK(g.adjacent(2, center));
        CHECK_FALSE(g.adjacent(0, center));
        CHECK_FALSE(g.adjacent(1, center));

        auto half = gen_named_family(Family::two_star_plus_star, {.n = 20, .ratio = make_rational(1, 2), .attach = 5});
        CHECK(half.graph.edge_count() == (2 * 10 - 3) + 9 + 1);
        CHECK(half.graph.adjacent(5, 10));
    }
    SUBCASE("grid") {
        auto g = gen_named_family(Family::grid, {.d = 2, .side = 3}).graph;
        CHECK(g.n() == 9);
        CHECK(g.edge_count() == 12);
        auto cube = gen_named_family(Family::grid, {.d = 3, .side = 2}).graph;
        CHECK(cube.edge_count() == 12);
    }
    SUBCASE("random_tree is a spanning tree and deterministic") {
        auto a = random_tree(200, 9);
        CHECK(a.edge_count() == 199);
        CHECK(is_forest(a));
        CHECK(count_components(a) == 1);
        CHECK(a == random_tree(200, 9));
    }
    SUBCASE("unknown family and bad parameters") {
        CHECK_THROWS_AS(parse_family("wheel"), ParameterError);
        CHECK(parse_family("star_plus_path") == Family::star_plus_path);
        CHECK(family_name(Family::grid) == "grid");
        CHECK_THROWS_AS(gen_named_family(Family::path, {}), ParameterError);
        CHECK_THROWS_AS(gen_named_family(Family::two_star_plus_star, {.n = 1000, .attach = 0}), ParameterError);
    }
}
