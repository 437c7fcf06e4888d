#include "bandwidthkit/enumerate.hpp"

#include <string>
#include <unordered_set>

#include "bandwidthkit/errors.hpp"

namespace bwkit {

namespace {

Tree from_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> deg(n, 1);
    for (int v : seq) ++deg[v];
    std::vector<std::pair<Vertex, Vertex>> edges;
    // standard decode: repeatedly join the smallest leaf to the next code entry
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--deg[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Tree::from_edges(n, edges);
}

}  // namespace

std::vector<Tree> all_free_trees(int n) {
    if (n < 1) throw ParameterError("all_free_trees requires n >= 1");
    if (n == 1) return {Tree::single_vertex()};
    if (n == 2) return {Tree::path(2)};
    if (n > 10) throw TooLargeError("free tree enumeration limited to n <= 10");

    std::vector<Tree> out;
    std::unordered_set<std::string> seen;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        Tree t = from_pruefer(seq, n);
        if (seen.insert(t.canonical_form()).second) out.push_back(std::move(t));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

}  // namespace bwkit
