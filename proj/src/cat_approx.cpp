#include "bandwidthkit/cat_approx.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <unordered_set>

namespace bwkit {

namespace {

std::int64_t cube48(int b) { return 48LL * b * b * b; }
std::int64_t sq12(int b) { return 12LL * b * b; }

}  // namespace

NeighborSets neighbor_sets(const CaterpillarView& view, int q, int b) {
    NeighborSets out;
    const auto& strays = view.strays;
    // scale positions by 2b so the |P|/2b terms stay integral
    std::int64_t sq = 2LL * b * strays[q].pos;
    std::int64_t lq = static_cast<std::int64_t>(strays[q].verts.size());
    for (int p = 0; p < static_cast<int>(strays.size()); ++p) {
        if (p == q) continue;
        std::int64_t sp = 2LL * b * strays[p].pos;
        std::int64_t lp = static_cast<std::int64_t>(strays[p].verts.size());
        if (sp + lp < sq && sq - lq <= sp - lp) out.west.push_back(p);
        if (sq < sp - lp && sp + lp <= sq + lq) out.east.push_back(p);
    }
    return out;
}

namespace {

// x_Q resp. y_Q: max depth over the west resp. east neighbor set (0 if empty)
std::pair<int, int> side_maxima(const NeighborSets& ns, const DepthFunction& depth) {
    int x = 0, y = 0;
    for (int p : ns.west) x = std::max(x, depth[p]);
    for (int p : ns.east) y = std::max(y, depth[p]);
    return {x, y};
}

}  // namespace

SccResult find_scc(const CaterpillarView& view, int b) {
    SccResult res;
    int s = static_cast<int>(view.strays.size());
    res.depth.assign(s, 0);
    for (int q = 0; q < s; ++q)
        if (static_cast<std::int64_t>(view.strays[q].verts.size()) >= 4LL * b) {
            res.depth[q] = 2;
            if (b + 1 <= 2) {  // b = 1: the initial promise is already deep
                res.deep_comb = true;
                return res;
            }
        }

    std::vector<NeighborSets> ns(s);
    for (int q = 0; q < s; ++q) ns[q] = neighbor_sets(view, q, b);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int q = 0; q < s; ++q) {
            if (res.depth[q] == 0) continue;  // too short to carry a comb
            auto [x, y] = side_maxima(ns[q], res.depth);
            if (x == y && x >= res.depth[q]) {
                ++res.depth[q];
                ++res.increments;
                if (res.depth[q] >= b + 1) {
                    res.deep_comb = true;
                    return res;
                }
                changed = true;
                break;  // rescan from the first stray
            }
        }
    }
    return res;
}

std::vector<StrayInterval> stray_intervals(const CaterpillarView& view,
                                           const DepthFunction& depth, int b) {
    std::vector<StrayInterval> out;
    int s = static_cast<int>(view.strays.size());
    for (int q = 0; q < s; ++q) {
        auto [x, y] = side_maxima(neighbor_sets(view, q, b), depth);
        StrayInterval iv;
        iv.stray = q;
        iv.west = x < y;  // pushed west
        std::int64_t base = view.strays[q].pos * cube48(b);
        std::int64_t len = sq12(b) * static_cast<std::int64_t>(view.strays[q].verts.size());
        iv.lo = iv.west ? base - len : base;
        iv.hi = iv.west ? base : base + len;
        out.push_back(iv);
    }
    return out;
}

IntervalColoring color_intervals(const std::vector<StrayInterval>& intervals) {
    IntervalColoring res;
    res.color.assign(intervals.size(), 0);
    std::vector<int> order(intervals.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int c) {
        const auto& A = intervals[a];
        const auto& C = intervals[c];
        if (A.lo != C.lo) return A.lo < C.lo;
        if (A.hi != C.hi) return A.hi < C.hi;
        return A.stray < C.stray;
    });
    // active intervals by right endpoint; freed colors reused smallest-first
    using Act = std::pair<std::int64_t, int>;  // (hi, color)
    std::priority_queue<Act, std::vector<Act>, std::greater<>> active;
    std::priority_queue<int, std::vector<int>, std::greater<>> free_colors;
    for (int i : order) {
        while (!active.empty() && active.top().first < intervals[i].lo) {
            free_colors.push(active.top().second);
            active.pop();
        }
        int c;
        if (!free_colors.empty()) {
            c = free_colors.top();
            free_colors.pop();
        } else {
            c = ++res.chi;
        }
        res.color[i] = c;
        active.emplace(intervals[i].hi, c);
    }
    return res;
}

CatResult cat_alg(const Tree& t, int b) {
    if (b < 1) throw ParameterError("cat_alg requires b >= 1");
    CatResult res;
    CaterpillarView view = caterpillar_view(t);
    int n = t.size();

    SccResult scc = find_scc(view, b);
    if (scc.deep_comb) {
        res.reason = CatResult::Reject::deep_comb;
        res.comb_depth = b + 1;
        return res;
    }
    res.comb_depth = 0;
    for (int d : scc.depth) res.comb_depth = std::max(res.comb_depth, d);

    auto intervals = stray_intervals(view, scc.depth, b);
    auto coloring = color_intervals(intervals);
    res.chi = coloring.chi;
    if (coloring.chi >= sq12(b)) {
        res.reason = CatResult::Reject::chromatic;
        return res;
    }

    SparseLayout sparse;
    sparse.pos.assign(n, 0);
    std::int64_t unit = cube48(b);
    for (size_t i = 0; i < view.backbone.size(); ++i)
        sparse.pos[view.backbone[i]] = unit * (n + static_cast<std::int64_t>(i) + 1);
    for (size_t q = 0; q < view.strays.size(); ++q) {
        const auto& stray = view.strays[q];
        std::int64_t au = sparse.pos[stray.attach];
        std::int64_t c = coloring.color[q];
        for (size_t i = 0; i < stray.verts.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(i) + 1;  // 1-based distance
            sparse.pos[stray.verts[i]] =
                intervals[q].west ? au + c - d * sq12(b) : au + c + (d - 1) * sq12(b);
        }
    }
    sparse.validate();  // injectivity: backbone == 0, strays == color (mod 12b^2)
    assert(bandwidth_of_layout(t, sparse) <= unit);

    res.layout = compress(sparse);
    res.bandwidth = static_cast<int>(bandwidth_of_layout(t, res.layout));
    if (res.bandwidth > unit) throw Error("internal: compressed layout exceeds 48b^3");
    res.accepted = true;
    return res;
}

}  // namespace bwkit
