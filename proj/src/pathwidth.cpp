#include "bandwidthkit/pathwidth.hpp"

namespace bwkit {

namespace {

// pw(t) <= 1: no vertex has 3 or more branches containing an edge
// (branch = directed subtree of size >= 2).
bool pathwidth_le_1(const Tree& t) {
    for (int v = 0; v < t.size(); ++v) {
        int big = 0;
        for (Vertex u : t.neighbors(v))
            if (t.directed_subtree_size(v, u) >= 2) ++big;
        if (big >= 3) return false;
    }
    return true;
}

}  // namespace

bool pathwidth_le(const Tree& t, int p) {
    if (t.size() == 1) return true;
    if (p <= 0) return t.size() == 1;
    if (p == 1) return pathwidth_le_1(t);
    // pw <= p (p >= 2) iff no vertex has >= 3 branches of pathwidth >= p.
    for (int v = 0; v < t.size(); ++v) {
        if (t.degree(v) < 3) continue;
        int heavy = 0;
        for (Vertex u : t.neighbors(v)) {
            if (t.directed_subtree_size(v, u) <= p) continue;  // pw(B) <= |B|-1 <= p-1
            Tree branch = t.induced(t.directed_subtree(v, u));
            if (!pathwidth_le(branch, p - 1)) ++heavy;
            if (heavy >= 3) return false;
        }
    }
    return true;
}

int pathwidth(const Tree& t) {
    if (t.size() == 1) return 0;
    for (int p = 1;; ++p)
        if (pathwidth_le(t, p)) return p;
}

}  // namespace bwkit
