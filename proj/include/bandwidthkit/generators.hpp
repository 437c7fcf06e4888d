#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bandwidthkit/tree.hpp"

namespace bwkit {

using BigInt = boost::multiprecision::cpp_int;

/// Skewed comb S(b, k): S(b, 1) is a single edge; S(b, k) joins two copies
/// of S(b, k-1) by a path with one internal vertex v carrying a pendant
/// path Q of exactly 2(b-1)d vertices, d being the maximum distance from v
/// to the end-to-end backbone. bw(S(b, k)) grows with k; S(b+1, b+1) has
/// bandwidth > b.
struct CombBuild {
    Tree tree;
    Vertex end_x = 0;
    Vertex end_y = 0;
    struct Level {  // one entry per join, deepest first
        Vertex v;               // internal path vertex carrying the stray
        Vertex x, y;            // end vertices of the joined construction
        std::vector<Vertex> q;  // stray vertices, attachment end first
    };
    std::vector<Level> levels;
};
/// `slack` multiplies every stray length (1 = the minimum valid comb).
CombBuild gen_skewed_comb(int b, int k, int slack = 1);

/// Re-derives d for every recorded join from tree distances and checks
/// |Q| >= 2(b-1)d. Throws Error on violation.
void validate_skewed_comb(const CombBuild& comb, int b);

/// Random caterpillar: backbone of `backbone` vertices, each carrying a
/// stray of uniform length in [0, max_stray].
Tree gen_caterpillar(int backbone, int max_stray, std::uint64_t seed);

/// Random tree with pathwidth <= p and exactly n vertices: a spine with
/// recursively generated components of pathwidth <= p-1 hanging off it.
Tree gen_tree_bounded_pw(int n, int p, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Hardness-reduction construction: clique instance (G, k) -> tree instance
// (T, b) with b = 4k + 16. The tree is a long main path divided into nine
// sectors (walls, wastelands, gatelands, selector, validator) plus k thread
// paths and two filler paths.
// ---------------------------------------------------------------------------

struct CliqueInstance {
    int n = 0;                                  // vertices, 0-based ids
    std::vector<std::pair<int, int>> edges;     // simple, undirected
};

/// Exact component sizes of the reduction, in arbitrary precision.
struct ReductionSizes {
    BigInt b, p, m1, m2, m3;
    BigInt main_path;                    // b^2 (2b+1) m3 + 1 vertices
    BigInt wall_leaves;                  // both walls together
    BigInt gate_k_count, gate_k_leaves_each;
    BigInt gate_k1_count, gate_k1_leaves_each;
    BigInt hole_count, hole_leaves_each; // leaves per hole (both centers)
    BigInt thread_count, thread_path_each;  // new vertices per thread
    BigInt knots_per_thread, knot_leaves_each;
    BigInt nonneighbor_leaves_each;      // per thread
    BigInt filler1, filler2;
    BigInt total;
    std::vector<std::string> warnings;
};
ReductionSizes reduction_sizes(int n, int m, int k);

struct ReductionOptions {
    long long cap = -1;               // >0: demo scale, repeat counts capped
    long long max_vertices = 2'000'000;
};

struct ReductionBuild {
    LabeledTree tree;
    std::vector<Vertex> main_path;  // in path order
    struct Sector {
        std::string name;
        std::size_t first, last;  // indices into main_path; shared boundaries
    };
    std::vector<Sector> sectors;
    std::vector<Vertex> high_degree_whitelist;  // the only allowed deg >= 3 vertices
    std::vector<std::pair<std::string, long long>> census;  // role -> count
};
/// Builds the reduction tree. Honest counts unless opts.cap > 0; throws
/// TooLargeError (carrying the exact total) when the result would exceed
/// opts.max_vertices.
ReductionBuild materialize_reduction(const CliqueInstance& g, int k,
                                     const ReductionOptions& opts = {});

/// Structural checks on a build: sector spans ordered and contiguous, all
/// deg >= 3 vertices whitelisted, census consistent with the tree, every
/// sector fragment of pathwidth <= 2. Throws Error on violation.
void validate_reduction(const ReductionBuild& build);

}  // namespace bwkit
