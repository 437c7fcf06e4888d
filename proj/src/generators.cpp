#include "bandwidthkit/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <unordered_set>

#include "bandwidthkit/pathwidth.hpp"

namespace bwkit {

namespace {

struct CombBuilder {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<CombBuild::Level> levels;
    int next = 0;
    int b;
    int slack = 1;

    Vertex fresh() { return next++; }

    // returns (x, y, backbone vertex count)
    std::tuple<Vertex, Vertex, long long> rec(int k) {
        if (k == 1) {
            Vertex a = fresh(), c = fresh();
            edges.emplace_back(a, c);
            return {a, c, 2};
        }
        auto [x, y, len] = rec(k - 1);
        auto [x2, y2, len2] = rec(k - 1);
        (void)len2;
        Vertex v = fresh();
        edges.emplace_back(y, v);
        edges.emplace_back(v, x2);
        long long d = len;  // distance from v to either end of the new backbone
        CombBuild::Level lvl;
        lvl.v = v;
        lvl.x = x;
        lvl.y = y2;
        Vertex prev = v;
        for (long long i = 0; i < 2LL * (b - 1) * d * slack; ++i) {
            Vertex q = fresh();
            edges.emplace_back(prev, q);
            lvl.q.push_back(q);
            prev = q;
        }
        levels.push_back(std::move(lvl));
        return {x, y2, 2 * len + 1};
    }
};

}  // namespace

CombBuild gen_skewed_comb(int b, int k, int slack) {
    if (b < 1 || k < 1 || k > b)
        throw ParameterError("skewed comb requires 1 <= k <= b");
    if (slack < 1) throw ParameterError("slack must be >= 1");
    CombBuilder builder;
    builder.b = b;
    builder.slack = slack;
    auto [x, y, len] = builder.rec(k);
    (void)len;
    CombBuild out;
    out.tree = Tree::from_edges(builder.next, builder.edges);
    out.end_x = x;
    out.end_y = y;
    out.levels = std::move(builder.levels);
    return out;
}

void validate_skewed_comb(const CombBuild& comb, int b) {
    for (const auto& lvl : comb.levels) {
        auto dist = comb.tree.bfs_distances(lvl.v);
        long long d = std::max(dist[lvl.x], dist[lvl.y]);
        if (static_cast<long long>(lvl.q.size()) < 2 * (b - 1) * d)
            throw Error("comb stray too short: " + std::to_string(lvl.q.size()) +
                        " < " + std::to_string(2 * (b - 1) * d));
        for (size_t i = 0; i < lvl.q.size(); ++i)
            if (dist[lvl.q[i]] != static_cast<int>(i) + 1)
                throw Error("comb stray is not a pendant path");
    }
}

Tree gen_caterpillar(int backbone, int max_stray, std::uint64_t seed) {
    if (backbone < 1 || max_stray < 0) throw ParameterError("bad caterpillar shape");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> stray_len(0, max_stray);
    std::vector<std::pair<Vertex, Vertex>> edges;
    int next = 0;
    Vertex prev = next++;
    std::vector<Vertex> spine{prev};
    for (int i = 1; i < backbone; ++i) {
        Vertex v = next++;
        edges.emplace_back(prev, v);
        spine.push_back(v);
        prev = v;
    }
    for (Vertex s : spine) {
        int len = stray_len(rng);
        Vertex at = s;
        for (int i = 0; i < len; ++i) {
            Vertex v = next++;
            edges.emplace_back(at, v);
            at = v;
        }
    }
    return Tree::from_edges(next, edges);
}

namespace {

void build_bounded_pw(int n, int p, std::mt19937_64& rng, int base,
                      std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n == 1) return;
    std::uniform_int_distribution<int> spine_dist(std::max(1, n / 2), n);
    int spine = p == 1 ? spine_dist(rng) : std::uniform_int_distribution<int>(1, n)(rng);
    for (int i = 1; i < spine; ++i) edges.emplace_back(base + i - 1, base + i);
    int used = spine;
    while (used < n) {
        int rest = n - used;
        int sz = p == 1 ? 1 : std::uniform_int_distribution<int>(1, rest)(rng);
        int attach = std::uniform_int_distribution<int>(0, spine - 1)(rng);
        edges.emplace_back(base + attach, base + used);
        build_bounded_pw(sz, std::max(1, p - 1), rng, base + used, edges);
        used += sz;
    }
}

}  // namespace

Tree gen_tree_bounded_pw(int n, int p, std::uint64_t seed) {
    if (n < 1 || p < 1) throw ParameterError("gen_tree_bounded_pw requires n, p >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    build_bounded_pw(n, p, rng, 0, edges);
    Tree t = Tree::from_edges(n, edges);
    if (!pathwidth_le(t, p)) throw Error("internal: generated tree exceeds pathwidth bound");
    return t;
}

// ---------------------------------------------------------------------------
// The reduction
// ---------------------------------------------------------------------------

ReductionSizes reduction_sizes(int n, int m, int k) {
    if (n < 1 || k < 1 || m < 0) throw ParameterError("reduction needs n >= 1, k >= 1, m >= 0");
    ReductionSizes s;
    BigInt N = n, M = m, K = k;
    s.b = 4 * K + 16;
    s.p = 4 * N + 3;
    BigInt b = s.b, p = s.p;
    s.m1 = p * N * K + 2;
    s.m2 = (2 * b + 1) * s.m1 + (2 * b + 1) * (p * (N - 1) + 3);
    s.m3 = (2 * b + 1) * s.m2 + (2 * b + 1) * (2 * N - 1) * (4 * N + 3);
    s.main_path = b * b * (2 * b + 1) * s.m3 + 1;
    s.wall_leaves = 2 * (2 * b - 1);
    s.gate_k_count = b * (s.m1 + s.m2 + s.m3);
    s.gate_k_leaves_each = 2 * (b - K) - 2;
    s.gate_k1_count = (N - 1) * (p - 3) / 2 + b * (p * (N - 1) + 3) +
                      b * (2 * N - 1) * (4 * N + 3);
    s.gate_k1_leaves_each = 2 * (b - K - 1) - 2;
    s.hole_count = 2 * N;
    s.hole_leaves_each = 2 * (3 * b / 4 - K - 2);
    s.thread_count = K;
    s.thread_path_each =
        (2 * b + 1) * s.m2 + (2 * N - 1) * (4 * N + 3) - 3 + b * (2 * b + 1) * s.m3;
    s.knots_per_thread = N + 1;
    s.knot_leaves_each = 3 * b / 2 - K - 2;
    s.nonneighbor_leaves_each = N * N - N - 2 * M;
    s.filler1 = (N - K) * (3 * b / 2 - K - 2) + (2 * b + 1) * (p * (N - 1) + 3);
    s.filler2 = (b - 1) * (4 * N + 3) * (2 * N - 1) + 2 * b * (4 * N + 3) * (2 * N - 1) -
                (K * (2 * N - 1) * (4 * N + 3) +
                 K * (N * (3 * b / 2 - K - 2) + N * N - N - 2 * M) +
                 2 * N * (3 * b / 4 - K - 2));
    s.total = s.main_path + s.wall_leaves + s.gate_k_count * s.gate_k_leaves_each +
              s.gate_k1_count * s.gate_k1_leaves_each + s.hole_count * s.hole_leaves_each +
              s.thread_count * (s.thread_path_each +
                                s.knots_per_thread * s.knot_leaves_each +
                                s.nonneighbor_leaves_each) +
              s.filler1 + s.filler2;

    if (k > n) s.warnings.push_back("k exceeds |V(G)|: no clique of that size can exist");
    if (s.nonneighbor_leaves_each < 0)
        s.warnings.push_back("G has more edges than a simple graph allows");
    if (s.filler1 < 0) s.warnings.push_back("first filler length is negative");
    if (s.filler2 < 0) s.warnings.push_back("second filler length is negative");
    return s;
}

namespace {

long long capped(const BigInt& x, long long cap) {
    BigInt v = x < 0 ? BigInt(0) : x;
    if (cap > 0 && v > cap) return cap;
    if (v > std::numeric_limits<long long>::max())
        throw TooLargeError("count exceeds 64-bit range", v.str());
    return static_cast<long long>(v);
}

struct RedBuilder {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::string> labels;
    std::vector<Vertex> path;  // main-path dense ids in order
    std::vector<Vertex> whitelist;
    std::map<std::string, long long> census;

    Vertex fresh(const std::string& label) {
        labels.push_back(label);
        return static_cast<Vertex>(labels.size() - 1);
    }

    Vertex advance(long long count) {  // extend the main path
        Vertex cur = path.back();
        for (long long i = 0; i < count; ++i) {
            Vertex v = fresh("u" + std::to_string(path.size() + 1));
            edges.emplace_back(cur, v);
            path.push_back(v);
            cur = v;
        }
        census["main-path"] += count;
        return cur;
    }

    void leaves(Vertex at, long long count, const std::string& role) {
        for (long long i = 0; i < count; ++i) {
            Vertex v = fresh(role + std::to_string(labels.size()));
            edges.emplace_back(at, v);
        }
        census[role] += count;
    }

    void gates(long long count, long long leaves_each) {
        for (long long i = 0; i < count; ++i) {
            advance(1);
            Vertex center = path.back();
            whitelist.push_back(center);
            leaves(center, leaves_each, "gate-leaf");
            advance(1);
        }
    }

    void hole(long long leaves_per_center) {
        for (int side = 0; side < 2; ++side) {
            advance(1);
            Vertex center = path.back();
            whitelist.push_back(center);
            leaves(center, leaves_per_center, "hole-leaf");
        }
        advance(1);
    }

    Vertex chain(Vertex from, long long count, const std::string& role,
                 const std::string& tag) {
        Vertex cur = from;
        for (long long i = 0; i < count; ++i) {
            Vertex v = fresh(tag + "." + std::to_string(i + 1));
            edges.emplace_back(cur, v);
            cur = v;
        }
        census[role] += count;
        return cur;
    }
};

}  // namespace

ReductionBuild materialize_reduction(const CliqueInstance& g, int k,
                                     const ReductionOptions& opts) {
    int n = g.n;
    int m = static_cast<int>(g.edges.size());
    ReductionSizes s = reduction_sizes(n, m, k);
    if (s.nonneighbor_leaves_each < 0)
        throw ParameterError("clique instance is not a simple graph");
    std::set<std::pair<int, int>> adj;
    for (auto [u, v] : g.edges) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw ParameterError("bad edge in clique instance");
        adj.emplace(std::min(u, v), std::max(u, v));
    }
    if (static_cast<int>(adj.size()) != m)
        throw ParameterError("duplicate edge in clique instance");

    long long b = 4LL * k + 16;
    long long p = 4LL * n + 3;
    long long cap = opts.cap;

    // repeat counts, honest or demo-capped
    long long wl1 = capped(s.m1 - 1, cap);
    long long gl1 = capped(s.b * s.m1, cap);
    long long sel_tail = capped(s.b * (s.p * (n - 1) + 3), cap);
    long long gl2 = capped(s.b * s.m2, cap);
    long long val_tail = capped(s.b * (2 * n - 1) * (4 * n + 3), cap);
    long long gl3 = capped(s.b * s.m3, cap);
    long long wl2 = std::max<long long>(
        1, capped((s.b * s.b - 1) * (2 * s.b + 1) * s.m3 + 1, cap));
    long long ext = std::max<long long>(1, capped(s.b * (2 * s.b + 1) * s.m3, cap));
    long long f1 = capped(s.filler1, cap);
    long long f2 = capped(s.filler2, cap);

    long long gate_k_lv = 2 * (b - k) - 2;
    long long gate_k1_lv = 2 * (b - k - 1) - 2;
    long long hole_lv = 3 * b / 4 - k - 2;   // per center, (k+1)-hole
    long long knot_lv = 3 * b / 2 - k - 2;   // (k+1)-knot
    long long wall_lv = 2 * b - 1;           // path neighbor is the 2b'th leaf

    // structural spans
    long long sel_holes_span = p * (n - 1) + 3;
    long long zones = 2LL * n - 1;
    long long zone_span = 4LL * n + 3;

    // demo-consistent totals, checked before building anything
    long long main_len = 1 + wl1 + 2 * gl1 + sel_holes_span + 2 * sel_tail + 2 * gl2 +
                         zones * zone_span + 2 * val_tail + 2 * gl3 + wl2;
    long long sel_start = 1 + wl1 + 2 * gl1;
    long long val_start = sel_start + sel_holes_span + 2 * sel_tail + 2 * gl2;
    long long blocks_start = val_start + (n - 1) * zone_span;  // thread index
    long long thread_end = blocks_start + static_cast<long long>(n) * zone_span - 1 + ext;
    long long k1_gates = static_cast<long long>(n - 1) * ((p - 3) / 2) + sel_tail + val_tail;
    long long nn_leaves = static_cast<long long>(n) * n - n - 2 * m;
    if (cap <= 0 && s.total > opts.max_vertices)
        throw TooLargeError("reduction tree has " + s.total.str() +
                                " vertices, over the limit of " +
                                std::to_string(opts.max_vertices),
                            s.total.str());
    long long total = main_len + 2 * wall_lv + (gl1 + gl2 + gl3) * gate_k_lv +
                      k1_gates * gate_k1_lv + 2LL * n * 2 * hole_lv +
                      static_cast<long long>(k) *
                          (thread_end - 2 + (n + 1) * knot_lv + nn_leaves) +
                      f1 + f2;
    if (total > opts.max_vertices)
        throw TooLargeError("reduction tree has " + std::to_string(total) +
                                " vertices, over the limit of " +
                                std::to_string(opts.max_vertices),
                            std::to_string(total));

    RedBuilder rb;
    ReductionBuild out;
    std::size_t mark = 0;
    auto sector = [&](const std::string& name) {
        out.sectors.push_back({name, mark, rb.path.size() - 1});
        mark = rb.path.size() - 1;
    };

    // first wall
    Vertex u1 = rb.fresh("u1");
    rb.path.push_back(u1);
    rb.census["main-path"] = 1;
    rb.whitelist.push_back(u1);
    rb.leaves(u1, wall_lv, "wall-leaf");
    sector("first-wall");

    // first wasteland: u2 .. u_{m1}
    rb.advance(wl1);
    Vertex u2 = rb.path[1];  // thread attachment
    rb.whitelist.push_back(u2);
    sector("first-wasteland");

    // first gateland
    rb.gates(gl1, gate_k_lv);
    sector("first-gateland");

    // selector: n holes with (p-3)/2 gates between, then the gate tail
    Vertex f1_attach = rb.path.back();  // first filler attachment
    rb.whitelist.push_back(f1_attach);
    for (int i = 0; i < n; ++i) {
        if (i) rb.gates((p - 3) / 2, gate_k1_lv);
        rb.hole(hole_lv);
    }
    rb.gates(sel_tail, gate_k1_lv);
    sector("selector");

    // middle gateland
    rb.gates(gl2, gate_k_lv);
    sector("middle-gateland");

    // validator: n-1 neutral zones, validation zone, n-1 neutral zones, tail
    Vertex f2_attach = rb.path.back();  // second filler attachment
    rb.whitelist.push_back(f2_attach);
    rb.advance((n - 1) * zone_span);
    rb.advance(n + 3);  // plain head of the validation zone
    for (int i = 0; i < n; ++i) rb.hole(hole_lv);
    rb.advance((n - 1) * zone_span);
    rb.gates(val_tail, gate_k1_lv);
    sector("validator");

    // last gateland
    rb.gates(gl3, gate_k_lv);
    sector("last-gateland");

    // last wasteland + last wall
    rb.advance(wl2);
    sector("last-wasteland");
    Vertex wall2 = rb.path.back();
    rb.whitelist.push_back(wall2);
    rb.leaves(wall2, wall_lv, "wall-leaf");
    sector("last-wall");

    if (static_cast<long long>(rb.path.size()) != main_len)
        throw Error("internal: main path length mismatch");

    // threads: features at fixed indices along each thread
    std::map<long long, int> knot_at;     // thread index -> 1 (knot)
    std::map<long long, int> leaf_at;     // thread index -> 1 (non-neighbor leaf)
    knot_at[sel_start + 1] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            long long middle = blocks_start + (i - 1) * zone_span + (n + 3) + 3 * (j - 1) + 1;
            if (i == j)
                knot_at[middle] = 1;
            else if (!adj.count({std::min(i, j) - 1, std::max(i, j) - 1}))
                leaf_at[middle] = 1;
        }
    long long tips = 0;
    for (int ti = 1; ti <= k; ++ti) {
        Vertex cur = u2;
        for (long long idx = 3; idx <= thread_end; ++idx) {
            Vertex v = rb.fresh("t" + std::to_string(ti) + "." + std::to_string(idx));
            rb.edges.emplace_back(cur, v);
            rb.census["thread"] += 1;
            cur = v;
            if (knot_at.count(idx)) {
                rb.whitelist.push_back(v);
                rb.leaves(v, knot_lv, "knot-leaf");
            } else if (leaf_at.count(idx)) {
                rb.whitelist.push_back(v);
                rb.leaves(v, 1, "nonneighbor-leaf");
            }
        }
        ++tips;
    }

    // fillers
    if (f1 > 0) {
        rb.chain(f1_attach, f1, "filler", "f1");
        ++tips;
    }
    if (f2 > 0) {
        rb.chain(f2_attach, f2, "filler", "f2");
        ++tips;
    }

    rb.census["leaf-expectation"] =
        rb.census["wall-leaf"] + rb.census["gate-leaf"] + rb.census["hole-leaf"] +
        rb.census["knot-leaf"] + rb.census["nonneighbor-leaf"] + tips;

    out.tree.tree = Tree::from_edges(static_cast<int>(rb.labels.size()), rb.edges);
    out.tree.labels = std::move(rb.labels);
    out.main_path = std::move(rb.path);
    out.high_degree_whitelist = std::move(rb.whitelist);
    for (auto& [role, count] : rb.census) out.census.emplace_back(role, count);
    return out;
}

void validate_reduction(const ReductionBuild& build) {
    const Tree& t = build.tree.tree;
    long long census_total = 0;
    long long leaf_expect = -1;
    for (auto& [role, count] : build.census) {
        if (role == "leaf-expectation") {
            leaf_expect = count;
            continue;
        }
        census_total += count;
    }
    if (census_total != t.size()) throw Error("census does not add up to the vertex count");

    long long leaves = 0;
    for (Vertex v = 0; v < t.size(); ++v)
        if (t.degree(v) == 1) ++leaves;
    if (leaf_expect >= 0 && leaves != leaf_expect)
        throw Error("leaf count mismatch: " + std::to_string(leaves) + " vs expected " +
                    std::to_string(leaf_expect));

    std::unordered_set<Vertex> allowed(build.high_degree_whitelist.begin(),
                                       build.high_degree_whitelist.end());
    for (Vertex v = 0; v < t.size(); ++v)
        if (t.degree(v) >= 3 && !allowed.count(v))
            throw Error("unexpected high-degree vertex " + build.tree.label(v));

    // sector spans must chain: each sector starts where the previous ended
    if (build.sectors.empty() || build.sectors.front().first != 0 ||
        build.sectors.back().last + 1 != build.main_path.size())
        throw Error("sector spans do not cover the main path");
    for (size_t i = 0; i + 1 < build.sectors.size(); ++i)
        if (build.sectors[i].last != build.sectors[i + 1].first)
            throw Error("sector " + build.sectors[i + 1].name + " does not follow " +
                        build.sectors[i].name);

    // every sector fragment (path segment plus its leaves) is a caterpillar
    for (const auto& sec : build.sectors) {
        std::vector<Vertex> frag(build.main_path.begin() + sec.first,
                                 build.main_path.begin() + sec.last + 1);
        for (size_t i = sec.first; i <= sec.last; ++i)
            for (Vertex u : t.neighbors(build.main_path[i]))
                if (t.degree(u) == 1) frag.push_back(u);
        std::sort(frag.begin(), frag.end());
        frag.erase(std::unique(frag.begin(), frag.end()), frag.end());
        Tree sub = t.induced(frag);
        if (!pathwidth_le(sub, 2))
            throw Error("sector " + sec.name + " fragment has pathwidth > 2");
    }
}

}  // namespace bwkit
