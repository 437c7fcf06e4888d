#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "bandwidthkit/decomposition.hpp"
#include "bandwidthkit/enumerate.hpp"
#include "bandwidthkit/pathwidth.hpp"

using namespace bwkit;

namespace {

void check_partition(const Tree& t, const RecursivePathDecomposition& d) {
    std::vector<int> seen(t.size(), 0);
    for (Vertex v : d.path) ++seen[v];
    for (const auto& s : d.subtrees) {
        for (Vertex v : s.verts) ++seen[v];
        CHECK(std::count(d.path.begin(), d.path.end(), s.attach_path) == 1);
        CHECK(std::count(s.verts.begin(), s.verts.end(), s.attach_subtree) == 1);
        // exactly one edge between the subtree and the path
        std::set<Vertex> inside(s.verts.begin(), s.verts.end());
        int crossing = 0;
        for (Vertex v : s.verts)
            for (Vertex w : t.neighbors(v))
                if (!inside.count(w)) ++crossing;
        CHECK(crossing == 1);
        Tree sub = t.induced(s.verts);
        CHECK(pathwidth_le(sub, d.p - 1));
    }
    for (int c : seen) CHECK(c == 1);
    // the path is a path in the tree
    for (std::size_t i = 0; i + 1 < d.path.size(); ++i)
        CHECK(t.distance(d.path[i], d.path[i + 1]) == 1);
}

}  // namespace

TEST_CASE("decomposition of a star at p = 1") {
    Tree t = Tree::star(4);
    RecursivePathDecomposition d = recursive_path_decomposition(t, 1);
    check_partition(t, d);
    // the path passes through the center; the remaining leaves are
    // singleton subtrees of pathwidth 0
    CHECK(d.path.size() == 3);
    CHECK(d.subtrees.size() == 2);
    for (const auto& s : d.subtrees) CHECK(s.verts.size() == 1);
}

TEST_CASE("decomposition rejects trees of too-large pathwidth") {
    std::vector<std::pair<Vertex, Vertex>> e;
    int id = 1;
    for (int leg = 0; leg < 3; ++leg) {
        e.emplace_back(0, id);
        e.emplace_back(id, id + 1);
        id += 2;
    }
    Tree spider = Tree::from_edges(id, e);
    CHECK(pathwidth(spider) == 2);
    CHECK_THROWS_AS(recursive_path_decomposition(spider, 1), PreconditionError);
    check_partition(spider, recursive_path_decomposition(spider, 2));
}

TEST_CASE("decomposition verified on every small tree") {
    for (int n = 2; n <= 8; ++n)
        for (const Tree& t : all_free_trees(n)) {
            int p = std::max(1, pathwidth(t));
            check_partition(t, recursive_path_decomposition(t, p));
            check_partition(t, recursive_path_decomposition(t, p + 1));
        }
}

TEST_CASE("write_decomposition serializes path and subtrees") {
    Tree t = Tree::star(3);
    RecursivePathDecomposition d = recursive_path_decomposition(t, 1);
    std::ostringstream out;
    write_decomposition(out, d);
    CHECK(out.str().find("P:") == 0);
    CHECK(out.str().find("attach=") != std::string::npos);
}

TEST_CASE("caterpillar view of a bare path") {
    Tree t = Tree::path(6);
    CaterpillarView v = caterpillar_view(t);
    CHECK(v.backbone.size() == 6);
    CHECK(v.strays.empty());
    CHECK(v.backbone.front() < v.backbone.back());
}

TEST_CASE("caterpillar view of a star uses the longest dangles as backbone") {
    Tree t = Tree::star(4);
    CaterpillarView v = caterpillar_view(t);
    CHECK(v.backbone.size() == 3);
    CHECK(v.strays.size() == 2);
    for (const auto& s : v.strays) {
        CHECK(s.verts.size() == 1);
        CHECK(s.pos == 2);
        CHECK(s.attach == v.backbone[1]);
    }
}

TEST_CASE("caterpillar view covers every vertex once, strays sorted by position") {
    // backbone 0-1-2-3-4 with a 2-path stray at 1 and leaves at 2 and 3
    Tree t = Tree::from_edges(9, {{0, 1},
                                  {1, 2},
                                  {2, 3},
                                  {3, 4},
                                  {1, 5},
                                  {5, 6},
                                  {2, 7},
                                  {3, 8}});
    CaterpillarView v = caterpillar_view(t);
    std::vector<int> seen(t.size(), 0);
    for (Vertex b : v.backbone) ++seen[b];
    for (const auto& s : v.strays) {
        for (Vertex p : s.verts) ++seen[p];
        CHECK(s.attach == v.backbone[s.pos - 1]);
        // stray vertices ordered by distance from the attachment
        for (std::size_t i = 0; i < s.verts.size(); ++i)
            CHECK(t.distance(s.attach, s.verts[i]) == static_cast<int>(i) + 1);
    }
    for (int c : seen) CHECK(c == 1);
    for (std::size_t i = 1; i < v.strays.size(); ++i)
        CHECK(v.strays[i - 1].pos <= v.strays[i].pos);
}

TEST_CASE("caterpillar view rejects a tree with a branching stray") {
    // center 0 joined to three vertices 1,2,3, each with two leaves: the
    // degree-3 vertices do not lie on a common path
    Tree t = Tree::from_edges(
        10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}});
    CHECK_THROWS_AS(caterpillar_view(t), NotACaterpillarError);
}

TEST_CASE("simplified instance replaces subtrees by pendant paths") {
    // path 0-1-2-3-4 with a 3-star hanging off 2
    Tree t = Tree::from_edges(9, {{0, 1},
                                  {1, 2},
                                  {2, 3},
                                  {3, 4},
                                  {2, 5},
                                  {5, 6},
                                  {5, 7},
                                  {5, 8}});
    RecursivePathDecomposition d = recursive_path_decomposition(t, 2);
    SimplifiedInstance si = simplified_instance(t, d);
    CHECK(si.tree.size() == t.size());
    CHECK(si.mapping.size() == d.subtrees.size());
    // the simplified instance is a caterpillar: every pendant path hangs
    // off the decomposition path
    CHECK_NOTHROW(caterpillar_view(si.tree));
    for (std::size_t i = 0; i < si.mapping.size(); ++i) {
        CHECK(si.mapping[i].size() == d.subtrees[i].verts.size());
        for (std::size_t j = 0; j < si.mapping[i].size(); ++j)
            CHECK(si.tree.distance(d.subtrees[i].attach_path, si.mapping[i][j]) ==
                  static_cast<int>(j) + 1);
    }
}
