#pragma once

#include <iosfwd>
#include <vector>

#include "bandwidthkit/tree.hpp"

namespace bwkit {

/// A path P in the tree plus the components of T - P, each of pathwidth
/// <= p-1 and attached to P by exactly one edge.
struct RecursivePathDecomposition {
    std::vector<Vertex> path;  // ordered along the tree
    struct Subtree {
        std::vector<Vertex> verts;   // sorted
        Vertex attach_path;          // endpoint of the attachment edge on P
        Vertex attach_subtree;       // endpoint inside the subtree
    };
    std::vector<Subtree> subtrees;
    int p = 0;
};

/// Finds a p-recursive path decomposition. Throws PreconditionError when
/// pw(t) > p. The output always satisfies: path + subtrees partition V,
/// each subtree attaches by one edge and has pathwidth <= p-1 (verified).
RecursivePathDecomposition recursive_path_decomposition(const Tree& t, int p);

/// Serialization: line "P: v1 v2 ...", then one line per subtree
/// "Ti: attach=<u>-<v> verts=<list>".
void write_decomposition(std::ostream& out, const RecursivePathDecomposition& d);

/// Caterpillar structure: a maximized backbone plus its strays.
struct CaterpillarView {
    std::vector<Vertex> backbone;  // b_1 .. b_l
    struct Stray {
        std::vector<Vertex> verts;  // p_1 .. p_k ordered by distance from the backbone
        int pos;                    // 1-based index i of the attachment vertex b_i
        Vertex attach;              // b_pos, the backbone vertex the stray hangs from
    };
    std::vector<Stray> strays;      // sorted by (pos, first vertex id)
};

/// Computes a maximized backbone (core path through all degree>=3 vertices,
/// extended by the longest dangling path at each end) and the strays.
/// Throws NotACaterpillarError when no backbone exists.
CaterpillarView caterpillar_view(const Tree& t);

/// The simplified instance T_S: backbone P plus one pendant path per
/// subtree with the same vertex count, attached at N(T^i). Vertex ids are
/// preserved; mapping[i] lists subtree i's pendant path ids in order of
/// distance from P (1..|T^i|).
struct SimplifiedInstance {
    Tree tree;
    std::vector<std::vector<Vertex>> mapping;
};

SimplifiedInstance simplified_instance(const Tree& t, const RecursivePathDecomposition& d);

}  // namespace bwkit
