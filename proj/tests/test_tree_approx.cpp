#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <random>

#include "bandwidthkit/enumerate.hpp"
#include "bandwidthkit/generators.hpp"
#include "bandwidthkit/oracles.hpp"
#include "bandwidthkit/pathwidth.hpp"
#include "bandwidthkit/tree_approx.hpp"

using namespace bwkit;

TEST_CASE("ratio bound saturates instead of overflowing") {
    CHECK(ratio_bound_768(1, 1) == 768);
    CHECK(ratio_bound_768(2, 1) == 768 * 8);
    CHECK(ratio_bound_768(1, 2) == 768LL * 768);
    CHECK(ratio_bound_768(100, 100) == LLONG_MAX);
}

TEST_CASE("tree_alg on a caterpillar reduces to the base case") {
    Tree t = gen_caterpillar(12, 3, 99);
    ApproxResult r = tree_alg(t, 1, 3);
    REQUIRE(r.accepted);
    r.layout.validate();
    CHECK(r.bandwidth <= 768LL * 27);
    CHECK(!r.trace.empty());
    CHECK(r.trace.front().rfind("base", 0) == 0);
}

TEST_CASE("tree_alg requires the pathwidth precondition") {
    // three branching strays around a center: no backbone exists, so the
    // pathwidth is at least 2 and p = 1 is a precondition violation
    Tree t = Tree::from_edges(
        10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}});
    CHECK_THROWS_AS(tree_alg(t, 1, 3), PreconditionError);
    ApproxResult r = tree_alg(t, 2, 3);
    REQUIRE(r.accepted);
    CHECK(r.bandwidth <= r.ratio_bound);
}

TEST_CASE("accepted layouts respect the recursive bound on random trees") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 5 + static_cast<int>(rng() % 80);
        Tree t = gen_tree_bounded_pw(n, 2, rng());
        int p = std::max(1, pathwidth(t));
        for (int b = std::max(1, p); b <= p + 2; ++b) {
            ApproxResult r = tree_alg(t, p, b);
            if (!r.accepted) continue;
            r.layout.validate();
            CHECK(bandwidth_of_layout(t, r.layout) == r.bandwidth);
            CHECK(r.bandwidth <= ratio_bound_768(b, p));
        }
    }
}

TEST_CASE("tighten never worsens the reported ratio bound") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 10; ++iter) {
        Tree t = gen_tree_bounded_pw(40, 2, rng());
        int p = std::max(1, pathwidth(t)) + 1;  // deliberately loose p
        ApproxResult loose = tree_alg(t, p, 4, false);
        ApproxResult tight = tree_alg(t, p, 4, true);
        REQUIRE(loose.accepted);
        REQUIRE(tight.accepted);
        CHECK(tight.ratio_bound <= loose.ratio_bound);
        CHECK(tight.bandwidth <= tight.ratio_bound);
    }
}

TEST_CASE("driver: accepted b never exceeds a quantity the oracle approves") {
    // on every small tree, the smallest accepted b is at most the exact
    // bandwidth (acceptance is guaranteed once b >= bw)
    for (int n = 1; n <= 8; ++n)
        for (const Tree& t : all_free_trees(n)) {
            DriverResult r = approximate_bandwidth(t);
            r.layout.validate();
            CHECK(r.bandwidth == bandwidth_of_layout(t, r.layout));
            CHECK(r.bandwidth <= r.ratio_bound);
            int exact = exact_bandwidth_bruteforce(t).bandwidth;
            CHECK(r.b_star <= std::max(exact, r.p));
        }
}

TEST_CASE("driver handles the single vertex") {
    DriverResult r = approximate_bandwidth(Tree::single_vertex());
    CHECK(r.bandwidth == 0);
    CHECK(r.layout.rank == std::vector<int>{1});
}
