#include "bandwidthkit/decomposition.hpp"

#include <algorithm>
#include <ostream>
#include <queue>

#include "bandwidthkit/pathwidth.hpp"

namespace bwkit {

namespace {

// heavy[v][j] <=> the branch D(v -> adj(v)[j]) has pathwidth >= p
std::vector<std::vector<char>> heavy_branches(const Tree& t, int p) {
    std::vector<std::vector<char>> heavy(t.size());
    for (int v = 0; v < t.size(); ++v) {
        const auto& nb = t.neighbors(v);
        heavy[v].assign(nb.size(), 0);
        for (int j = 0; j < static_cast<int>(nb.size()); ++j) {
            if (t.directed_subtree_size(v, nb[j]) <= p) continue;  // pw <= size-1 <= p-1
            Tree branch = t.induced(t.directed_subtree(v, nb[j]));
            heavy[v][j] = !pathwidth_le(branch, p - 1);
        }
    }
    return heavy;
}

bool is_heavy(const Tree& t, const std::vector<std::vector<char>>& heavy, Vertex v, Vertex u) {
    const auto& nb = t.neighbors(v);
    auto it = std::lower_bound(nb.begin(), nb.end(), u);
    return heavy[v][it - nb.begin()];
}

// every off-path branch of every path vertex must be light
bool path_is_valid(const Tree& t, const std::vector<std::vector<char>>& heavy,
                   const std::vector<Vertex>& path) {
    std::vector<char> on(t.size(), 0);
    for (Vertex v : path) on[v] = 1;
    for (Vertex v : path)
        for (Vertex u : t.neighbors(v))
            if (!on[u] && is_heavy(t, heavy, v, u)) return false;
    return true;
}

// follow heavy branches from `start` until none remain; returns the walk
std::vector<Vertex> heavy_walk(const Tree& t, const std::vector<std::vector<char>>& heavy,
                               Vertex start) {
    std::vector<Vertex> walk{start};
    Vertex prev = -1, cur = start;
    for (;;) {
        Vertex next = -1;
        const auto& nb = t.neighbors(cur);
        for (int j = 0; j < static_cast<int>(nb.size()); ++j)
            if (nb[j] != prev && heavy[cur][j]) {
                next = nb[j];
                break;  // neighbors sorted, smallest id wins
            }
        if (next < 0) break;
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    return walk;
}

// farthest vertex reachable from src without touching `blocked` (src excepted);
// returns the path src..farthest (smallest-id tie-break)
std::vector<Vertex> deepest_dangle(const Tree& t, Vertex src, const std::vector<char>& blocked) {
    std::vector<int> dist(t.size(), -1);
    std::vector<Vertex> parent(t.size(), -1);
    std::queue<Vertex> q;
    dist[src] = 0;
    q.push(src);
    Vertex best = src;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        if (dist[u] > dist[best]) best = u;
        for (Vertex v : t.neighbors(u))
            if (!blocked[v] && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                q.push(v);
            }
    }
    std::vector<Vertex> path;
    for (Vertex x = best; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;  // starts with src
}

}  // namespace

RecursivePathDecomposition recursive_path_decomposition(const Tree& t, int p) {
    if (p < 1) throw ParameterError("recursive_path_decomposition requires p >= 1");
    if (!pathwidth_le(t, p))
        throw PreconditionError("pathwidth exceeds p = " + std::to_string(p));

    auto heavy = heavy_branches(t, p);

    // start at a vertex with the most heavy out-branches (<= 2 since pw <= p)
    Vertex start = 0;
    int best_cnt = -1;
    for (int v = 0; v < t.size(); ++v) {
        int cnt = 0;
        for (char h : heavy[v]) cnt += h;
        if (cnt > best_cnt) {
            best_cnt = cnt;
            start = v;
        }
    }
    auto phase1 = heavy_walk(t, heavy, start);
    auto path = heavy_walk(t, heavy, phase1.back());

    if (!path_is_valid(t, heavy, path)) {
        // exhaustive endpoint fallback; a valid path exists since pw(t) <= p
        bool found = false;
        for (Vertex a = 0; a < t.size() && !found; ++a)
            for (Vertex b = a; b < t.size() && !found; ++b) {
                auto cand = t.path_between(a, b);
                if (path_is_valid(t, heavy, cand)) {
                    path = std::move(cand);
                    found = true;
                }
            }
        if (!found) throw Error("internal: no valid decomposition path despite pw <= p");
    }

    // extend both endpoints into the deepest dangling branches
    std::vector<char> on(t.size(), 0);
    for (Vertex v : path) on[v] = 1;
    auto front_ext = deepest_dangle(t, path.front(), on);
    for (size_t i = 1; i < front_ext.size(); ++i) on[front_ext[i]] = 1;
    auto back_ext = deepest_dangle(t, path.back(), on);
    std::vector<Vertex> full;
    for (auto it = front_ext.rbegin(); it != front_ext.rend(); ++it)
        if (*it != path.front()) full.push_back(*it);
    full.insert(full.end(), path.begin(), path.end());
    for (Vertex v : back_ext)
        if (v != path.back()) full.push_back(v);
    path = std::move(full);

    RecursivePathDecomposition d;
    d.p = p;
    d.path = path;
    std::vector<char> removed(t.size(), 0);
    for (Vertex v : path) removed[v] = 1;
    for (auto& comp : t.components_without(removed)) {
        RecursivePathDecomposition::Subtree s;
        s.verts = comp;
        int attach_edges = 0;
        for (Vertex v : comp)
            for (Vertex u : t.neighbors(v))
                if (removed[u]) {
                    s.attach_subtree = v;
                    s.attach_path = u;
                    ++attach_edges;
                }
        if (attach_edges != 1) throw Error("internal: subtree attachment degree != 1");
        Tree sub = t.induced(comp);
        if (!pathwidth_le(sub, p - 1))
            throw Error("internal: decomposition component of pathwidth >= p");
        d.subtrees.push_back(std::move(s));
    }
    return d;
}

void write_decomposition(std::ostream& out, const RecursivePathDecomposition& d) {
    out << "P:";
    for (Vertex v : d.path) out << " " << v;
    out << "\n";
    for (size_t i = 0; i < d.subtrees.size(); ++i) {
        const auto& s = d.subtrees[i];
        out << "T" << i + 1 << ": attach=" << s.attach_path << "-" << s.attach_subtree
            << " verts=";
        for (size_t j = 0; j < s.verts.size(); ++j) out << (j ? " " : "") << s.verts[j];
        out << "\n";
    }
}

CaterpillarView caterpillar_view(const Tree& t) {
    CaterpillarView view;
    int n = t.size();
    if (n == 1) {
        view.backbone = {0};
        return view;
    }

    std::vector<Vertex> high;  // degree >= 3
    for (int v = 0; v < n; ++v)
        if (t.degree(v) >= 3) high.push_back(v);

    std::vector<Vertex> backbone;
    if (high.empty()) {
        backbone = t.diameter_path();  // the tree is a path
    } else {
        // core = minimal subtree spanning all degree>=3 vertices; prune
        // leaves not in `high` until only the core remains
        std::vector<char> in_high(n, 0);
        for (Vertex v : high) in_high[v] = 1;
        std::vector<int> deg(n);
        std::vector<char> alive(n, 1);
        std::queue<Vertex> q;
        for (int v = 0; v < n; ++v) {
            deg[v] = t.degree(v);
            if (deg[v] == 1 && !in_high[v]) q.push(v);
        }
        while (!q.empty()) {
            Vertex l = q.front();
            q.pop();
            alive[l] = 0;
            for (Vertex u : t.neighbors(l))
                if (alive[u] && --deg[u] == 1 && !in_high[u]) q.push(u);
        }
        std::vector<Vertex> core;
        for (int v = 0; v < n; ++v)
            if (alive[v]) core.push_back(v);
        for (Vertex v : core)
            if (deg[v] > 2)
                throw NotACaterpillarError(
                    "degree->=3 vertices do not lie on a single path (branching at vertex " +
                    std::to_string(v) + ")");
        // order the core as a path
        Vertex e1 = core[0];
        for (Vertex v : core)
            if (deg[v] <= 1) {
                e1 = v;
                break;
            }
        std::vector<Vertex> ordered{e1};
        std::vector<char> used(n, 0);
        used[e1] = 1;
        for (;;) {
            Vertex cur = ordered.back(), next = -1;
            for (Vertex u : t.neighbors(cur))
                if (alive[u] && !used[u]) {
                    next = u;
                    break;
                }
            if (next < 0) break;
            used[next] = 1;
            ordered.push_back(next);
        }
        Vertex e2 = ordered.back();
        // extend with the longest dangling path at each end
        std::vector<char> blocked(n, 0);
        for (Vertex v : ordered) blocked[v] = 1;
        blocked[e1] = 0;
        auto front_ext = deepest_dangle(t, e1, blocked);
        blocked[e1] = 1;
        for (Vertex v : front_ext) blocked[v] = 1;
        blocked[e2] = 0;
        auto back_ext = deepest_dangle(t, e2, blocked);
        for (auto it = front_ext.rbegin(); it != front_ext.rend(); ++it)
            if (*it != e1) backbone.push_back(*it);
        backbone.insert(backbone.end(), ordered.begin(), ordered.end());
        for (Vertex v : back_ext)
            if (v != e2) backbone.push_back(v);
    }
    if (backbone.front() > backbone.back())
        std::reverse(backbone.begin(), backbone.end());
    view.backbone = backbone;

    std::vector<int> backbone_pos(n, 0);  // 1-based, 0 = off backbone
    for (int i = 0; i < static_cast<int>(backbone.size()); ++i) backbone_pos[backbone[i]] = i + 1;

    std::vector<char> removed(n, 0);
    for (Vertex v : backbone) removed[v] = 1;
    for (auto& comp : t.components_without(removed)) {
        CaterpillarView::Stray s;
        Vertex head = -1;
        int attach_edges = 0;
        for (Vertex v : comp)
            for (Vertex u : t.neighbors(v))
                if (removed[u]) {
                    head = v;
                    s.attach = u;
                    ++attach_edges;
                }
        if (attach_edges != 1) throw Error("internal: stray with multiple backbone edges");
        s.pos = backbone_pos[s.attach];
        // walk the stray path outward from the attachment end
        std::vector<char> seen(n, 0);
        Vertex cur = head, prev = s.attach;
        for (;;) {
            s.verts.push_back(cur);
            seen[cur] = 1;
            Vertex next = -1;
            for (Vertex u : t.neighbors(cur))
                if (u != prev && !removed[u]) {
                    if (next >= 0) throw Error("internal: stray is not a path");
                    next = u;
                }
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        if (s.verts.size() != comp.size()) throw Error("internal: stray walk missed vertices");
        view.strays.push_back(std::move(s));
    }
    std::sort(view.strays.begin(), view.strays.end(),
              [](const CaterpillarView::Stray& a, const CaterpillarView::Stray& b) {
                  return a.pos != b.pos ? a.pos < b.pos : a.verts[0] < b.verts[0];
              });
    return view;
}

SimplifiedInstance simplified_instance(const Tree& t, const RecursivePathDecomposition& d) {
    SimplifiedInstance si;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (size_t i = 0; i + 1 < d.path.size(); ++i) edges.emplace_back(d.path[i], d.path[i + 1]);
    for (const auto& s : d.subtrees) {
        std::vector<Vertex> pendant = s.verts;  // sorted; reused ids, same count
        edges.emplace_back(s.attach_path, pendant[0]);
        for (size_t j = 0; j + 1 < pendant.size(); ++j)
            edges.emplace_back(pendant[j], pendant[j + 1]);
        si.mapping.push_back(std::move(pendant));
    }
    si.tree = Tree::from_edges(t.size(), edges);
    return si;
}

}  // namespace bwkit
