#pragma once

#include <cstdint>
#include <vector>

#include "bandwidthkit/decomposition.hpp"
#include "bandwidthkit/layout.hpp"

namespace bwkit {

/// depth[i] pairs with view.strays[i].
using DepthFunction = std::vector<int>;

/// Indices (into view.strays) of the strays west resp. east of stray q that
/// are long enough to matter at bound b. All comparisons use positions and
/// lengths scaled by 2b so everything stays integral.
struct NeighborSets {
    std::vector<int> west;  // X_Q
    std::vector<int> east;  // Y_Q
};
NeighborSets neighbor_sets(const CaterpillarView& view, int q, int b);

struct SccResult {
    DepthFunction depth;
    bool deep_comb = false;  // some stray reached depth b+1
    int increments = 0;
};
/// Fixpoint depth computation: start at 2 for strays of length >= 4b, then
/// repeatedly bump any lifted stray (max depth over X_Q equals max depth
/// over Y_Q, both >= its current depth). Stops early once depth b+1 is
/// reached, which certifies bw > b.
SccResult find_scc(const CaterpillarView& view, int b);

struct StrayInterval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    int stray = -1;      // index into view.strays
    bool west = false;   // orientation
};
/// The directional stray graph: one interval per stray, pointing west when
/// the stray is pushed west under `depth` and east otherwise.
std::vector<StrayInterval> stray_intervals(const CaterpillarView& view,
                                           const DepthFunction& depth, int b);

struct IntervalColoring {
    std::vector<int> color;  // color[i] in 1..chi, indexed like the input
    int chi = 0;
};
/// Greedy left-to-right coloring; optimal for interval graphs.
IntervalColoring color_intervals(const std::vector<StrayInterval>& intervals);

struct CatResult {
    enum class Reject { none, chromatic, deep_comb };
    bool accepted = false;
    Reject reason = Reject::none;
    int chi = 0;        // chromatic number of the stray graph (when computed)
    int comb_depth = 0; // deepest certified comb depth
    Layout layout;      // meaningful iff accepted
    int bandwidth = 0;  // of layout, <= 48 b^3
};

/// Either a layout of bandwidth <= 48 b^3, or the correct conclusion that
/// bw(t) > b. Throws NotACaterpillarError for non-caterpillar input.
CatResult cat_alg(const Tree& t, int b);

}  // namespace bwkit
