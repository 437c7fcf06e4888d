#include "bandwidthkit/layout.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace bwkit {

Layout Layout::identity(int n) {
    Layout l;
    l.rank.resize(n);
    std::iota(l.rank.begin(), l.rank.end(), 1);
    return l;
}

void Layout::validate() const {
    int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        int r = rank[v];
        if (r < 1 || r > n)
            throw InvalidLayoutError("rank " + std::to_string(r) + " of vertex " +
                                     std::to_string(v) + " outside 1.." + std::to_string(n));
        if (seen[r])
            throw InvalidLayoutError("rank " + std::to_string(r) + " assigned twice");
        seen[r] = 1;
    }
}

void SparseLayout::validate() const {
    std::vector<std::int64_t> sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    auto it = std::adjacent_find(sorted.begin(), sorted.end());
    if (it != sorted.end())
        throw InvalidLayoutError("sparse layout has duplicate position " + std::to_string(*it));
}

namespace {
long long pos_of(const Layout& l, Vertex v) { return l.rank[v]; }
long long pos_of(const SparseLayout& l, Vertex v) { return l.pos[v]; }

template <typename L>
long long bandwidth_impl(const Tree& t, const L& l) {
    if (l.size() != t.size())
        throw InvalidLayoutError("layout covers " + std::to_string(l.size()) +
                                 " vertices, tree has " + std::to_string(t.size()));
    long long bw = 0;
    for (int u = 0; u < t.size(); ++u)
        for (Vertex v : t.neighbors(u))
            if (u < v) bw = std::max<long long>(bw, std::llabs(pos_of(l, u) - pos_of(l, v)));
    return bw;
}
}  // namespace

long long bandwidth_of_layout(const Tree& t, const Layout& l) { return bandwidth_impl(t, l); }
long long bandwidth_of_layout(const Tree& t, const SparseLayout& s) { return bandwidth_impl(t, s); }

Layout compress(const SparseLayout& s) {
    s.validate();
    int n = s.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.pos[a] < s.pos[b]; });
    Layout l;
    l.rank.resize(n);
    for (int r = 0; r < n; ++r) l.rank[order[r]] = r + 1;
    return l;
}

Layout reverse_layout(const Layout& l) {
    Layout r;
    int n = l.size();
    r.rank.resize(n);
    for (int v = 0; v < n; ++v) r.rank[v] = n + 1 - l.rank[v];
    return r;
}

Layout right_fold(const Tree& t, const Layout& a, Vertex v) {
    if (!t.has_vertex(v)) throw InvalidVertexError("right_fold: vertex not in tree");
    SparseLayout folded;
    folded.pos.resize(t.size());
    for (int u = 0; u < t.size(); ++u) {
        if (a.rank[u] <= a.rank[v])
            folded.pos[u] = 2ll * (a.rank[v] - a.rank[u]);
        else
            folded.pos[u] = 2ll * (a.rank[u] - a.rank[v]) - 1;
    }
    return compress(folded);
}

Layout bfs_layout(const Tree& t) {
    auto dist = t.bfs_distances(0);
    std::vector<int> order(t.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist[a] < dist[b]; });
    Layout l;
    l.rank.resize(t.size());
    for (int r = 0; r < t.size(); ++r) l.rank[order[r]] = r + 1;
    return l;
}

Layout parse_layout(std::istream& in, const LabeledTree& t) {
    Layout l;
    l.rank.assign(t.tree.size(), 0);
    std::vector<char> set(t.tree.size(), 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string label;
        long long r;
        if (!(ss >> label)) continue;
        if (!(ss >> r)) throw ParseError("expected 'vertex rank'", line_no);
        int v = t.id_of(label);
        if (v < 0) throw ParseError("unknown vertex '" + label + "'", line_no);
        if (set[v]) throw ParseError("vertex '" + label + "' listed twice", line_no);
        set[v] = 1;
        l.rank[v] = static_cast<int>(r);
    }
    for (int v = 0; v < t.tree.size(); ++v)
        if (!set[v])
            throw InvalidLayoutError("layout missing vertex '" + t.labels[v] + "'");
    return l;
}

Layout parse_layout_file(const std::string& path, const LabeledTree& t) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open layout file: " + path);
    return parse_layout(in, t);
}

void write_layout(std::ostream& out, const LabeledTree& t, const Layout& l) {
    for (int v = 0; v < t.tree.size(); ++v) out << t.labels[v] << " " << l.rank[v] << "\n";
}

}  // namespace bwkit
