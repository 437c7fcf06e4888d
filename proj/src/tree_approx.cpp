#include "bandwidthkit/tree_approx.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>

#include "bandwidthkit/pathwidth.hpp"

namespace bwkit {

namespace {

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<long long>::max() / b)
        return std::numeric_limits<long long>::max();
    return a * b;
}

}  // namespace

long long ratio_bound_768(int b, int p) {
    long long base = sat_mul(768, sat_mul(b, sat_mul(b, b)));
    long long r = 1;
    for (int i = 0; i < p; ++i) r = sat_mul(r, base);
    return r;
}

ApproxResult tree_alg(const Tree& t, int p, int b, bool tighten) {
    if (p < 1 || b < 1) throw ParameterError("tree_alg requires p >= 1 and b >= 1");
    if (tighten) p = std::max(1, std::min(p, pathwidth(t)));

    ApproxResult res;
    res.ratio_bound = ratio_bound_768(b, p);
    int n = t.size();

    if (p == 1) {
        CatResult cat;
        try {
            cat = cat_alg(t, b);
        } catch (const NotACaterpillarError&) {
            throw PreconditionError("tree is no caterpillar, so its pathwidth exceeds 1");
        }
        res.trace.push_back("base n=" + std::to_string(n) + " b=" + std::to_string(b) +
                            " chi=" + std::to_string(cat.chi));
        if (!cat.accepted) {
            res.reject_reason = cat.reason == CatResult::Reject::deep_comb
                                    ? "comb of depth " + std::to_string(b + 1)
                                    : "stray graph needs " + std::to_string(cat.chi) + " colors";
            return res;
        }
        res.accepted = true;
        res.layout = cat.layout;
        res.bandwidth = cat.bandwidth;
        return res;
    }

    auto d = recursive_path_decomposition(t, p);
    res.trace.push_back("split n=" + std::to_string(n) + " p=" + std::to_string(p) +
                        " path=" + std::to_string(d.path.size()) +
                        " subtrees=" + std::to_string(d.subtrees.size()));

    std::vector<Layout> alphas;
    std::vector<std::vector<Vertex>> local_to_global;
    for (const auto& s : d.subtrees) {
        std::vector<Vertex> idx;
        Tree sub = t.induced(s.verts, &idx);
        ApproxResult child = tree_alg(sub, p - 1, b, tighten);
        res.trace.insert(res.trace.end(), child.trace.begin(), child.trace.end());
        if (!child.accepted) {
            res.reject_reason = child.reject_reason;
            return res;
        }
        alphas.push_back(std::move(child.layout));
        local_to_global.push_back(std::move(idx));
    }

    SimplifiedInstance si = simplified_instance(t, d);
    CatResult cat = cat_alg(si.tree, 2 * b);
    res.trace.push_back("host n=" + std::to_string(n) + " b=" + std::to_string(2 * b) +
                        " chi=" + std::to_string(cat.chi));
    if (!cat.accepted) {
        res.reject_reason = cat.reason == CatResult::Reject::deep_comb
                                ? "comb of depth " + std::to_string(2 * b + 1)
                                : "stray graph needs " + std::to_string(cat.chi) + " colors";
        return res;
    }

    Layout alpha;
    alpha.rank.assign(n, 0);
    for (Vertex v : d.path) alpha.rank[v] = cat.layout.rank[v];
    std::vector<Layout> betas(d.subtrees.size());
    for (size_t i = 0; i < d.subtrees.size(); ++i) {
        const auto& s = d.subtrees[i];
        const auto& idx = local_to_global[i];
        Vertex local_attach = static_cast<Vertex>(
            std::lower_bound(s.verts.begin(), s.verts.end(), s.attach_subtree) - s.verts.begin());
        Tree sub = t.induced(s.verts);
        Layout beta = right_fold(sub, alphas[i], local_attach);
        if (beta.rank[local_attach] != 1) throw Error("internal: fold pivot not first");
        for (int u = 0; u < sub.size(); ++u) {
            int dist = beta.rank[u];  // distance from the path on the pendant
            alpha.rank[idx[u]] = cat.layout.rank[si.mapping[i][dist - 1]];
        }
        betas[i] = std::move(beta);
    }
    alpha.validate();

    // stretch checks, edge class by edge class
    long long host_bound = 48LL * (2 * b) * (2 * b) * (2 * b);  // 384 b^3
    std::vector<int> owner(n, -1);
    std::vector<int> local_of(n, -1);
    for (size_t i = 0; i < d.subtrees.size(); ++i)
        for (size_t u = 0; u < d.subtrees[i].verts.size(); ++u) {
            owner[d.subtrees[i].verts[u]] = static_cast<int>(i);
            local_of[d.subtrees[i].verts[u]] = static_cast<int>(u);
        }
    for (auto [u, v] : t.edges()) {
        long long stretch = std::llabs(static_cast<long long>(alpha.rank[u]) - alpha.rank[v]);
        if (owner[u] < 0 && owner[v] < 0) {
            if (stretch > host_bound) throw Error("internal: path edge overstretched");
        } else if (owner[u] < 0 || owner[v] < 0) {
            if (stretch > host_bound) throw Error("internal: attachment edge overstretched");
        } else {
            assert(owner[u] == owner[v]);
            int i = owner[u];
            long long child = std::llabs(static_cast<long long>(alphas[i].rank[local_of[u]]) -
                                         alphas[i].rank[local_of[v]]);
            if (stretch > sat_mul(child, 2 * host_bound))
                throw Error("internal: subtree edge overstretched");
        }
    }

    res.accepted = true;
    res.layout = std::move(alpha);
    res.bandwidth = bandwidth_of_layout(t, res.layout);
    if (res.bandwidth > res.ratio_bound) throw Error("internal: ratio bound violated");
    return res;
}

DriverResult approximate_bandwidth(const Tree& t, bool tighten) {
    DriverResult out;
    int n = t.size();
    if (n == 1) {
        out.layout.rank = {1};
        out.ratio_bound = 1;
        return out;
    }
    int pw = pathwidth(t);
    out.p = std::max(1, pw);
    for (int b = std::max(1, pw); b <= n; ++b) {
        ApproxResult r = tree_alg(t, out.p, b, tighten);
        if (r.accepted) {
            out.b_star = b;
            out.layout = std::move(r.layout);
            out.bandwidth = r.bandwidth;
            out.ratio_bound = r.ratio_bound;
            return out;
        }
    }
    throw Error("internal: no b <= n accepted");  // unreachable: bw(t) <= n-1
}

}  // namespace bwkit
