#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "bandwidthkit/enumerate.hpp"
#include "bandwidthkit/pathwidth.hpp"
#include "bandwidthkit/tree.hpp"

using namespace bwkit;

namespace {

// Independent oracle: pathwidth equals the vertex separation number, the
// minimum over all vertex orders of the maximum number of already-placed
// vertices with a neighbor still to come. Brute force over permutations.
int vertex_separation_bruteforce(const Tree& t) {
    int n = t.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<int> at(n);
        for (int i = 0; i < n; ++i) at[order[i]] = i;
        int worst = 0;
        for (int i = 0; i + 1 < n; ++i) {
            int boundary = 0;
            for (int j = 0; j <= i; ++j) {
                Vertex v = order[j];
                bool later = false;
                for (Vertex w : t.neighbors(v)) later |= at[w] > i;
                boundary += later ? 1 : 0;
            }
            worst = std::max(worst, boundary);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

Tree complete_binary(int h) {
    int n = (1 << (h + 1)) - 1;
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int v = 1; v < n; ++v) e.emplace_back((v - 1) / 2, v);
    return Tree::from_edges(n, e);
}

}  // namespace

TEST_CASE("pathwidth of basic families") {
    CHECK(pathwidth(Tree::single_vertex()) == 0);
    CHECK(pathwidth(Tree::path(2)) == 1);
    CHECK(pathwidth(Tree::path(100)) == 1);
    CHECK(pathwidth(Tree::star(3)) == 1);
    CHECK(pathwidth(Tree::star(10)) == 1);
}

TEST_CASE("complete binary trees climb in pathwidth") {
    CHECK(pathwidth(complete_binary(1)) == 1);
    CHECK(pathwidth(complete_binary(2)) == 1);
    CHECK(pathwidth(complete_binary(3)) == 2);
    CHECK(pathwidth(complete_binary(4)) == 2);
    CHECK(pathwidth(complete_binary(5)) == 3);
}

TEST_CASE("pathwidth matches the vertex separation oracle on all small trees") {
    for (int n = 1; n <= 7; ++n)
        for (const Tree& t : all_free_trees(n)) {
            int exact = vertex_separation_bruteforce(t);
            CHECK(pathwidth(t) == exact);
            CHECK(pathwidth_le(t, exact));
            if (exact > 0) CHECK(!pathwidth_le(t, exact - 1));
        }
}

TEST_CASE("pathwidth_le is monotone in p") {
    Tree t = complete_binary(4);
    int pw = pathwidth(t);
    for (int p = 0; p <= pw + 2; ++p) CHECK(pathwidth_le(t, p) == (p >= pw));
}

TEST_CASE("caterpillars have pathwidth 1, spiders with long legs have 2") {
    // backbone of 5 with a leaf on every backbone vertex
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < 5; ++i) e.emplace_back(i, i + 1);
    for (int i = 0; i < 5; ++i) e.emplace_back(i, 5 + i);
    CHECK(pathwidth(Tree::from_edges(10, e)) == 1);

    // three legs of two edges each from a center: three branches of width 1
    std::vector<std::pair<Vertex, Vertex>> s;
    int id = 1;
    for (int leg = 0; leg < 3; ++leg) {
        s.emplace_back(0, id);
        s.emplace_back(id, id + 1);
        id += 2;
    }
    CHECK(pathwidth(Tree::from_edges(id, s)) == 2);
}
