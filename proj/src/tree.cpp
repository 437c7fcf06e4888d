#include "bandwidthkit/tree.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

namespace bwkit {

Tree Tree::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n <= 0) throw InvalidTreeError("tree must have at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
        throw InvalidTreeError("edge count " + std::to_string(edges.size()) +
                               " != n-1 = " + std::to_string(n - 1));
    Tree t;
    t.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidTreeError("edge endpoint out of range: " + std::to_string(u) + " " +
                                   std::to_string(v));
        if (u == v) throw InvalidTreeError("self loop at vertex " + std::to_string(u));
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());
    for (int v = 0; v < n; ++v)
        if (std::adjacent_find(t.adj_[v].begin(), t.adj_[v].end()) != t.adj_[v].end())
            throw InvalidTreeError("duplicate edge at vertex " + std::to_string(v));
    // connectivity; n-1 edges + connected => acyclic
    auto dist = t.bfs_distances(0);
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0)
            throw InvalidTreeError("disconnected input: vertex " + std::to_string(v) +
                                   " unreachable");
    return t;
}

Tree Tree::path(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

Tree Tree::star(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return from_edges(leaves + 1, e);
}

std::vector<std::pair<Vertex, Vertex>> Tree::edges() const {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < size(); ++u)
        for (int v : adj_[u])
            if (u < v) e.emplace_back(u, v);
    return e;
}

std::vector<int> Tree::bfs_distances(Vertex src) const {
    std::vector<int> dist(size(), -1);
    std::queue<Vertex> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : adj_[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

int Tree::distance(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) throw InvalidVertexError("distance: vertex not in tree");
    return bfs_distances(u)[v];
}

namespace {
// farthest vertex from src, smallest id on ties
Vertex farthest(const Tree& t, Vertex src) {
    auto d = t.bfs_distances(src);
    Vertex best = src;
    for (int v = 0; v < t.size(); ++v)
        if (d[v] > d[best]) best = v;
    return best;
}
}  // namespace

int Tree::diameter() const {
    Vertex a = farthest(*this, 0);
    auto d = bfs_distances(a);
    return *std::max_element(d.begin(), d.end());
}

std::vector<Vertex> Tree::diameter_path() const {
    Vertex a = farthest(*this, 0);
    Vertex b = farthest(*this, a);
    if (a > b) std::swap(a, b);
    return path_between(a, b);
}

std::vector<Vertex> Tree::path_between(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v))
        throw InvalidVertexError("path_between: vertex not in tree");
    std::vector<Vertex> parent(size(), -1);
    std::vector<char> seen(size(), 0);
    std::queue<Vertex> q;
    seen[u] = 1;
    q.push(u);
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        if (x == v) break;
        for (Vertex y : adj_[x])
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = x;
                q.push(y);
            }
    }
    std::vector<Vertex> path;
    for (Vertex x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<std::vector<Vertex>> Tree::components_without(const std::vector<char>& removed) const {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(size(), 0);
    for (int s = 0; s < size(); ++s) {
        if (removed[s] || seen[s]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            comp.push_back(u);
            for (Vertex v : adj_[u])
                if (!removed[v] && !seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Tree Tree::induced(const std::vector<Vertex>& verts, std::vector<Vertex>* out_index) const {
    std::vector<int> local(size(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u : verts)
        for (Vertex v : adj_[u])
            if (local[v] >= 0 && u < v) e.emplace_back(local[u], local[v]);
    if (out_index) *out_index = verts;
    return from_edges(static_cast<int>(verts.size()), e);
}

void Tree::build_subtree_sizes() const {
    int n = size();
    dsub_size_.assign(n, {});
    for (int v = 0; v < n; ++v) dsub_size_[v].assign(adj_[v].size(), 0);
    // iterative post-order from root 0; size_below[v] = |subtree rooted at v|
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    std::vector<Vertex> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (Vertex v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                stack.push_back(v);
            }
    }
    std::vector<int> below(n, 1);
    for (int i = n - 1; i >= 0; --i) {
        Vertex u = order[i];
        if (parent[u] >= 0) below[parent[u]] += below[u];
    }
    for (int u = 0; u < n; ++u)
        for (int j = 0; j < static_cast<int>(adj_[u].size()); ++j) {
            Vertex v = adj_[u][j];
            dsub_size_[u][j] = (parent[v] == u) ? below[v] : n - below[u];
        }
}

int Tree::directed_subtree_size(Vertex from, Vertex to) const {
    if (dsub_size_.empty()) build_subtree_sizes();
    const auto& nb = adj_[from];
    auto it = std::lower_bound(nb.begin(), nb.end(), to);
    if (it == nb.end() || *it != to)
        throw InvalidVertexError("directed_subtree_size: not an edge");
    return dsub_size_[from][it - nb.begin()];
}

std::vector<Vertex> Tree::directed_subtree(Vertex from, Vertex to) const {
    std::vector<Vertex> verts;
    std::vector<char> seen(size(), 0);
    seen[from] = 1;
    std::vector<Vertex> stack{to};
    seen[to] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        verts.push_back(u);
        for (Vertex v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

namespace {
std::string ahu_encode(const Tree& t, Vertex root, Vertex parent) {
    std::vector<std::string> child_codes;
    for (Vertex v : t.neighbors(root))
        if (v != parent) child_codes.push_back(ahu_encode(t, v, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (auto& c : child_codes) code += c;
    code += ")";
    return code;
}

std::vector<Vertex> tree_centers(const Tree& t) {
    int n = t.size();
    if (n == 1) return {0};
    std::vector<int> deg(n);
    std::vector<Vertex> leaves;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) leaves.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<Vertex> next;
        for (Vertex l : leaves) {
            --remaining;
            for (Vertex u : t.neighbors(l))
                if (--deg[u] == 1) next.push_back(u);
            deg[l] = 0;
        }
        leaves = std::move(next);
    }
    std::sort(leaves.begin(), leaves.end());
    return leaves;
}
}  // namespace

std::string Tree::canonical_form() const {
    auto centers = tree_centers(*this);
    std::string best;
    for (Vertex c : centers) {
        std::string code = ahu_encode(*this, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

int LabeledTree::id_of(const std::string& l) const {
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
        if (labels[v] == l) return v;
    return -1;
}

LabeledTree make_labeled(Tree t) {
    LabeledTree lt{std::move(t), {}};
    lt.labels.reserve(lt.tree.size());
    for (int v = 0; v < lt.tree.size(); ++v) lt.labels.push_back(std::to_string(v));
    return lt;
}

LabeledTree parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        if (!(ss >> n >> m)) {
            std::string tok;
            std::istringstream probe(line);
            if (!(probe >> tok)) continue;  // blank line
            throw ParseError("expected header 'n m'", line_no);
        }
        break;
    }
    if (n < 0) throw ParseError("missing header 'n m'", line_no);
    std::map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        Vertex v = static_cast<Vertex>(labels.size());
        ids.emplace(s, v);
        labels.push_back(s);
        return v;
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    long long read = 0;
    while (read < m && std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string a, b;
        if (!(ss >> a)) continue;  // blank line
        if (!(ss >> b)) throw ParseError("expected 'u v'", line_no);
        edges.emplace_back(intern(a), intern(b));
        ++read;
    }
    if (read < m) throw ParseError("expected " + std::to_string(m) + " edges, got " +
                                   std::to_string(read), line_no);
    if (n == 1 && m == 0 && labels.empty()) labels.push_back("0");
    if (static_cast<long long>(labels.size()) != n)
        throw ParseError("header says n=" + std::to_string(n) + " but " +
                         std::to_string(labels.size()) + " distinct labels appear", line_no);
    LabeledTree lt;
    lt.tree = Tree::from_edges(static_cast<int>(n), edges);
    lt.labels = std::move(labels);
    return lt;
}

LabeledTree parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const LabeledTree& t) {
    out << t.tree.size() << " " << t.tree.size() - 1 << "\n";
    for (auto [u, v] : t.tree.edges()) out << t.labels[u] << " " << t.labels[v] << "\n";
}

std::uint64_t tree_digest(const Tree& t) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(t.size()));
    for (unsigned char c : t.canonical_form()) mix(c);
    return h;
}

}  // namespace bwkit
