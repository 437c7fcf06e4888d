#include "bandwidthkit/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <queue>
#include <unordered_set>
#include <vector>

#include "bandwidthkit/pathwidth.hpp"

namespace bwkit {

namespace {

struct Guards {
    int brute = 10;
    int saxe = 4;
};

Guards read_guards() {
    Guards g;
    const char* env = std::getenv("BANDWIDTHKIT_GUARDS");
    if (!env) return g;
    for (const char* p = env; *p;) {
        int val;
        if (std::sscanf(p, "brute=%d", &val) == 1) g.brute = val;
        if (std::sscanf(p, "saxe=%d", &val) == 1) g.saxe = val;
        const char* comma = std::strchr(p, ',');
        if (!comma) break;
        p = comma + 1;
    }
    return g;
}

struct BruteState {
    const Tree* t;
    int n;
    int best;
    std::vector<int> best_rank;
    std::vector<int> rank;     // 0 = unplaced, else 1..n
    std::vector<Vertex> order; // order[i] = vertex at rank i+1

    void dfs(int placed, int cur_max) {
        if (cur_max >= best) return;  // can only stay or grow
        if (placed == n) {
            best = cur_max;
            best_rank = rank;
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (rank[v]) continue;
            int m = cur_max;
            bool ok = true;
            for (Vertex u : t->neighbors(v)) {
                if (!rank[u]) continue;
                int stretch = placed + 1 - rank[u];
                if (stretch >= best) {
                    ok = false;
                    break;
                }
                m = std::max(m, stretch);
            }
            if (!ok) continue;
            rank[v] = placed + 1;
            dfs(placed + 1, m);
            rank[v] = 0;
        }
    }
};

}  // namespace

ExactResult exact_bandwidth_bruteforce(const Tree& t) {
    Guards g = read_guards();
    if (t.size() > g.brute)
        throw TooLargeError("brute force limited to n <= " + std::to_string(g.brute),
                            std::to_string(t.size()));
    ExactResult res;
    if (t.size() == 1) {
        res.layout.rank = {1};
        return res;
    }
    BruteState s;
    s.t = &t;
    s.n = t.size();
    Layout seed = bfs_layout(t);
    s.best = static_cast<int>(bandwidth_of_layout(t, seed));
    s.best_rank = seed.rank;
    s.rank.assign(s.n, 0);
    s.dfs(0, 0);
    res.bandwidth = s.best;
    res.layout.rank = s.best_rank;
    return res;
}

namespace {

struct SaxeKey {
    std::uint64_t placed;
    std::uint64_t window;  // up to 4 vertex ids packed 16 bits each, oldest first
    bool operator==(const SaxeKey& o) const {
        return placed == o.placed && window == o.window;
    }
};

struct SaxeKeyHash {
    std::size_t operator()(const SaxeKey& k) const {
        std::uint64_t h = k.placed * 0x9e3779b97f4a7c15ULL;
        h ^= k.window + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

struct SaxeSearch {
    const Tree* t;
    int n, b;
    std::unordered_set<SaxeKey, SaxeKeyHash> dead;
    std::vector<Vertex> order;

    static std::uint64_t pack(const std::vector<Vertex>& w) {
        std::uint64_t x = 0;
        for (size_t i = 0; i < w.size(); ++i)
            x |= (static_cast<std::uint64_t>(w[i]) + 1) << (16 * i);
        return x;
    }

    bool dfs(std::uint64_t placed, std::vector<Vertex>& window) {
        int placed_cnt = static_cast<int>(order.size());
        if (placed_cnt == n) return true;
        SaxeKey key{placed, pack(window)};
        if (dead.count(key)) return false;

        for (Vertex v = 0; v < n; ++v) {
            if (placed >> v & 1) continue;
            bool ok = true;
            for (Vertex u : t->neighbors(v))
                if ((placed >> u & 1) &&
                    std::find(window.begin(), window.end(), u) == window.end()) {
                    ok = false;  // a placed neighbor already slid out of reach
                    break;
                }
            if (!ok) continue;
            Vertex out = -1;
            if (static_cast<int>(window.size()) == b) {
                out = window.front();
                for (Vertex u : t->neighbors(out))
                    if (u != v && !(placed >> u & 1)) {
                        ok = false;  // out's unplaced neighbor would stretch past b
                        break;
                    }
                if (!ok) continue;
            }
            order.push_back(v);
            std::vector<Vertex> next = window;
            if (out >= 0) next.erase(next.begin());
            next.push_back(v);
            if (dfs(placed | (1ULL << v), next)) return true;
            order.pop_back();
        }
        dead.insert(key);
        return false;
    }
};

}  // namespace

std::optional<Layout> saxe_decide(const Tree& t, int b) {
    Guards g = read_guards();
    if (b < 1) throw ParameterError("saxe_decide requires b >= 1");
    if (b > g.saxe)
        throw TooLargeError("window search limited to b <= " + std::to_string(g.saxe),
                            std::to_string(b));
    if (t.size() > 64)
        throw TooLargeError("window search limited to n <= 64", std::to_string(t.size()));
    if (4 * b > 64) throw TooLargeError("window packing limited to b <= 4", std::to_string(b));

    SaxeSearch s;
    s.t = &t;
    s.n = t.size();
    s.b = b;
    std::vector<Vertex> window;
    if (!s.dfs(0, window)) return std::nullopt;
    Layout l;
    l.rank.assign(s.n, 0);
    for (int i = 0; i < s.n; ++i) l.rank[s.order[i]] = i + 1;
    l.validate();
    return l;
}

DensityWitness local_density(const Tree& t) {
    DensityWitness best;
    best.density = {0, 1};
    int n = t.size();
    auto consider = [&](Vertex cu, Vertex cv, int radius, const std::vector<int>& du,
                        const std::vector<int>& dv) {
        std::vector<Vertex> ball;
        for (Vertex w = 0; w < n; ++w) {
            int d = cv < 0 ? du[w] : std::min(du[w], dv[w]);
            if (d <= radius) ball.push_back(w);
        }
        if (ball.size() < 2) return;
        Tree h = t.induced(ball);
        int diam = h.diameter();
        Rational dens{static_cast<long long>(ball.size()) - 1, diam};
        if (best.density < dens) {
            best.density = dens;
            best.center_u = cu;
            best.center_v = cv;
            best.radius = radius;
            best.ball_size = static_cast<int>(ball.size());
            best.ball_diameter = diam;
        }
    };
    int diam = t.diameter();
    for (Vertex v = 0; v < n; ++v) {
        auto dv = t.bfs_distances(v);
        for (int r = 1; r <= diam; ++r) consider(v, -1, r, dv, dv);
    }
    for (auto [u, v] : t.edges()) {
        auto du = t.bfs_distances(u);
        auto dv = t.bfs_distances(v);
        for (int r = 0; r <= diam; ++r) consider(u, v, r, du, dv);
    }
    // normalize
    long long g = std::gcd(best.density.num, best.density.den);
    if (g > 1) {
        best.density.num /= g;
        best.density.den /= g;
    }
    return best;
}

LowerBounds lower_bounds_report(const Tree& t) {
    LowerBounds lb;
    if (t.size() > 1) lb.density_bound = local_density(t).density.ceil();
    lb.pathwidth_bound = pathwidth(t);
    return lb;
}

}  // namespace bwkit
