#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bandwidthkit/tree.hpp"

namespace bwkit {

/// Bijection vertex -> rank in 1..n.
struct Layout {
    std::vector<int> rank;  // rank[v] in 1..n

    int size() const { return static_cast<int>(rank.size()); }
    static Layout identity(int n);
    /// Throws InvalidLayoutError unless rank is a bijection onto 1..n.
    void validate() const;
};

/// Injective vertex -> integer map (sparse ordering).
struct SparseLayout {
    std::vector<std::int64_t> pos;

    int size() const { return static_cast<int>(pos.size()); }
    /// Throws InvalidLayoutError on duplicate positions.
    void validate() const;
};

long long bandwidth_of_layout(const Tree& t, const Layout& l);
long long bandwidth_of_layout(const Tree& t, const SparseLayout& s);

/// Rank-order bijection of a sparse ordering; order-isomorphic, never
/// increases bandwidth.
Layout compress(const SparseLayout& s);

Layout reverse_layout(const Layout& l);

/// Right fold around v: interleaves the two sides of v, then
/// compresses. v ends up at rank 1; bandwidth at most doubles.
Layout right_fold(const Tree& t, const Layout& a, Vertex v);

/// BFS level-order layout from smallest-id root (benchmark baseline).
Layout bfs_layout(const Tree& t);

/// Layout text format: n lines "vertex rank".
Layout parse_layout(std::istream& in, const LabeledTree& t);
Layout parse_layout_file(const std::string& path, const LabeledTree& t);
void write_layout(std::ostream& out, const LabeledTree& t, const Layout& l);

}  // namespace bwkit
