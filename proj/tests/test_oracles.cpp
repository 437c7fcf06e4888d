#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bandwidthkit/enumerate.hpp"
#include "bandwidthkit/oracles.hpp"
#include "bandwidthkit/pathwidth.hpp"

using namespace bwkit;

TEST_CASE("brute force bandwidth of known families") {
    CHECK(exact_bandwidth_bruteforce(Tree::single_vertex()).bandwidth == 0);
    CHECK(exact_bandwidth_bruteforce(Tree::path(8)).bandwidth == 1);
    CHECK(exact_bandwidth_bruteforce(Tree::star(3)).bandwidth == 2);
    CHECK(exact_bandwidth_bruteforce(Tree::star(4)).bandwidth == 2);
    CHECK(exact_bandwidth_bruteforce(Tree::star(5)).bandwidth == 3);
    // complete binary tree of height 2 (7 vertices) has bandwidth 2? verify
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int v = 1; v < 7; ++v) e.emplace_back((v - 1) / 2, v);
    ExactResult r = exact_bandwidth_bruteforce(Tree::from_edges(7, e));
    CHECK(r.bandwidth == 2);
    CHECK(bandwidth_of_layout(Tree::from_edges(7, e), r.layout) == r.bandwidth);
}

TEST_CASE("brute force returns an optimal witness") {
    for (int n = 1; n <= 7; ++n)
        for (const Tree& t : all_free_trees(n)) {
            ExactResult r = exact_bandwidth_bruteforce(t);
            r.layout.validate();
            CHECK(bandwidth_of_layout(t, r.layout) == r.bandwidth);
        }
}

TEST_CASE("saxe decision agrees with brute force on all small trees") {
    for (int n = 2; n <= 8; ++n)
        for (const Tree& t : all_free_trees(n)) {
            int exact = exact_bandwidth_bruteforce(t).bandwidth;
            for (int b = 1; b <= 4; ++b) {
                auto w = saxe_decide(t, b);
                CHECK(w.has_value() == (exact <= b));
                if (w) {
                    w->validate();
                    CHECK(bandwidth_of_layout(t, *w) <= b);
                }
            }
        }
}

TEST_CASE("scale guards raise instead of hanging") {
    CHECK_THROWS_AS(exact_bandwidth_bruteforce(Tree::path(11)), TooLargeError);
    CHECK_THROWS_AS(saxe_decide(Tree::path(11), 5), TooLargeError);
    CHECK_NOTHROW(saxe_decide(Tree::path(40), 2));
}

TEST_CASE("local density on paths and stars") {
    DensityWitness p = local_density(Tree::path(9));
    CHECK(p.density == Rational{1, 1});
    DensityWitness s = local_density(Tree::star(4));
    CHECK(s.density == Rational{2, 1});  // 5 vertices in diameter 2
    CHECK(s.density.ceil() == 2);
}

TEST_CASE("edge-centered balls matter: the double star") {
    // two centers joined by an edge, 3 leaves each: the edge ball of
    // radius 1 holds all 8 vertices within diameter 3
    std::vector<std::pair<Vertex, Vertex>> e{{0, 1}};
    for (int i = 0; i < 3; ++i) {
        e.emplace_back(0, 2 + i);
        e.emplace_back(1, 5 + i);
    }
    Tree t = Tree::from_edges(8, e);
    DensityWitness w = local_density(t);
    CHECK(w.density == Rational{7, 3});
    CHECK(w.ball_size == 8);
    CHECK(w.ball_diameter == 3);
    CHECK(w.density.ceil() == 3);
    CHECK(exact_bandwidth_bruteforce(t).bandwidth >= 3);
}

TEST_CASE("lower bounds never exceed the exact bandwidth") {
    for (int n = 1; n <= 8; ++n)
        for (const Tree& t : all_free_trees(n)) {
            int exact = exact_bandwidth_bruteforce(t).bandwidth;
            LowerBounds lb = lower_bounds_report(t);
            CHECK(lb.density_bound <= exact);
            CHECK(lb.pathwidth_bound <= exact);
            CHECK(lb.best() <= exact);
            CHECK(lb.pathwidth_bound == pathwidth(t));
        }
}
