#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bandwidthkit/errors.hpp"

namespace bwkit {

using Vertex = int;

/// Undirected tree over dense 0-based vertex ids. Validated on construction:
/// connected, n-1 edges, no self loops, no duplicate edges.
class Tree {
public:
    static Tree from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
    static Tree path(int n);
    static Tree star(int leaves);
    static Tree single_vertex() { return path(1); }

    int size() const { return static_cast<int>(adj_.size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_vertex(Vertex v) const { return v >= 0 && v < size(); }

    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Hop distances from src to every vertex.
    std::vector<int> bfs_distances(Vertex src) const;
    int distance(Vertex u, Vertex v) const;
    int diameter() const;
    /// A longest path, deterministic: double BFS with smallest-id tie-breaks.
    std::vector<Vertex> diameter_path() const;
    /// The unique path between two vertices.
    std::vector<Vertex> path_between(Vertex u, Vertex v) const;

    /// Connected components of the tree minus `removed` (removed[v] == true drops v).
    std::vector<std::vector<Vertex>> components_without(const std::vector<char>& removed) const;

    /// Induced subtree on `verts` as a standalone Tree; out_index maps
    /// local id -> original id.
    Tree induced(const std::vector<Vertex>& verts, std::vector<Vertex>* out_index = nullptr) const;

    /// Size of the directed subtree D(from -> to): the component of T - from
    /// containing to. Precomputed table lookup, O(1) after first call.
    int directed_subtree_size(Vertex from, Vertex to) const;
    /// Vertices of D(from -> to).
    std::vector<Vertex> directed_subtree(Vertex from, Vertex to) const;

    /// AHU canonical encoding; equal strings iff isomorphic trees.
    std::string canonical_form() const;

    bool operator==(const Tree& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    mutable std::vector<std::vector<int>> dsub_size_;  // lazily built, parallel to adj_
    void build_subtree_sizes() const;
};

/// A tree plus the original input labels (edge-list files may use arbitrary
/// string labels; they are remapped to dense ids on ingestion).
struct LabeledTree {
    Tree tree;
    std::vector<std::string> labels;  // labels[v] = original label of dense id v

    const std::string& label(Vertex v) const { return labels[v]; }
    int id_of(const std::string& label) const;  // -1 if absent
};

LabeledTree make_labeled(Tree t);  // labels are "0".."n-1"

/// Edge-list text format: first line "n m"; then m lines "u v".
LabeledTree parse_edge_list(std::istream& in);
LabeledTree parse_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const LabeledTree& t);

/// FNV-1a digest of the canonical edge list, for run records.
std::uint64_t tree_digest(const Tree& t);

}  // namespace bwkit
