#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "bandwidthkit/cat_approx.hpp"
#include "bandwidthkit/enumerate.hpp"
#include "bandwidthkit/generators.hpp"
#include "bandwidthkit/layout.hpp"
#include "bandwidthkit/oracles.hpp"
#include "bandwidthkit/pathwidth.hpp"
#include "bandwidthkit/tree.hpp"
#include "bandwidthkit/tree_approx.hpp"

using json = nlohmann::json;
using namespace bwkit;

namespace {

constexpr int kExitLayout = 0;
constexpr int kExitError = 1;
constexpr int kExitExceeds = 2;

void emit_layout(const LabeledTree& t, const Layout& l, const std::string& out_path) {
    if (out_path.empty()) {
        write_layout(std::cout, t, l);
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open " + out_path);
        write_layout(out, t, l);
    }
}

int cmd_approx_cat(const std::string& file, int b, const std::string& out_path) {
    LabeledTree t = parse_edge_list_file(file);
    CatResult r = cat_alg(t.tree, b);
    if (!r.accepted) {
        if (r.reason == CatResult::Reject::chromatic)
            std::cerr << "bandwidth exceeds " << b << ": stray graph needs " << r.chi
                      << " >= 12b^2 colors\n";
        else
            std::cerr << "bandwidth exceeds " << b << ": comb of depth " << b + 1
                      << " found\n";
        return kExitExceeds;
    }
    emit_layout(t, r.layout, out_path);
    std::cerr << "bandwidth " << r.bandwidth << " <= " << 48LL * b * b * b << "\n";
    return kExitLayout;
}

int cmd_approx_tree(const std::string& file, int b, bool tighten, bool trace,
                    const std::string& out_path) {
    LabeledTree t = parse_edge_list_file(file);
    Layout layout;
    long long bw = 0, bound = 0;
    std::vector<std::string> trace_lines;
    if (b > 0) {
        int p = std::max(1, pathwidth(t.tree));
        ApproxResult r = tree_alg(t.tree, p, b, tighten);
        trace_lines = std::move(r.trace);
        if (!r.accepted) {
            for (const auto& line : trace_lines)
                if (trace) std::cerr << json{{"event", line}}.dump() << "\n";
            std::cerr << "bandwidth exceeds " << b << ": " << r.reject_reason << "\n";
            return kExitExceeds;
        }
        layout = std::move(r.layout);
        bw = r.bandwidth;
        bound = r.ratio_bound;
    } else {
        DriverResult r = approximate_bandwidth(t.tree, tighten);
        layout = std::move(r.layout);
        bw = r.bandwidth;
        bound = r.ratio_bound;
        trace_lines.push_back("accepted b=" + std::to_string(r.b_star) +
                              " p=" + std::to_string(r.p));
    }
    if (trace)
        for (const auto& line : trace_lines) std::cerr << json{{"event", line}}.dump() << "\n";
    emit_layout(t, layout, out_path);
    std::cerr << "bandwidth " << bw << " <= " << bound << "\n";
    return kExitLayout;
}

int cmd_exact(const std::string& file, const std::string& method, int b,
              const std::string& out_path) {
    LabeledTree t = parse_edge_list_file(file);
    if (method == "brute") {
        ExactResult r = exact_bandwidth_bruteforce(t.tree);
        std::cerr << "bandwidth " << r.bandwidth << "\n";
        emit_layout(t, r.layout, out_path);
        return kExitLayout;
    }
    if (b < 1) throw ParameterError("--method saxe requires --b");
    auto w = saxe_decide(t.tree, b);
    if (!w) {
        std::cerr << "bandwidth exceeds " << b << "\n";
        return kExitExceeds;
    }
    std::cerr << "bandwidth <= " << b << "\n";
    emit_layout(t, *w, out_path);
    return kExitLayout;
}

int cmd_density(const std::string& file) {
    LabeledTree t = parse_edge_list_file(file);
    DensityWitness w = local_density(t.tree);
    std::cout << "density " << w.density.num << "/" << w.density.den << " ("
              << w.density.value() << ")\n";
    std::cout << "ball center " << t.label(w.center_u);
    if (w.center_v >= 0) std::cout << "-" << t.label(w.center_v);
    std::cout << " radius " << w.radius << " size " << w.ball_size << " diameter "
              << w.ball_diameter << "\n";
    return kExitLayout;
}

int cmd_bounds(const std::string& file) {
    LabeledTree t = parse_edge_list_file(file);
    LowerBounds lb = lower_bounds_report(t.tree);
    std::cout << "density-bound " << lb.density_bound << "\n";
    std::cout << "pathwidth " << lb.pathwidth_bound << "\n";
    std::cout << "bandwidth >= " << lb.best() << "\n";
    return kExitLayout;
}

int cmd_verify(const std::string& graph_file, const std::string& layout_file,
               long long max_bw) {
    LabeledTree t = parse_edge_list_file(graph_file);
    Layout l = parse_layout_file(layout_file, t);
    long long bw = bandwidth_of_layout(t.tree, l);
    std::cout << "valid layout, bandwidth " << bw << "\n";
    if (max_bw >= 0 && bw > max_bw) {
        std::cout << "FAIL: exceeds --max " << max_bw << "\n";
        return kExitError;
    }
    if (max_bw >= 0) std::cout << "PASS: within --max " << max_bw << "\n";
    return kExitLayout;
}

void emit_tree(const LabeledTree& t, const std::string& out_path) {
    if (out_path.empty()) {
        write_edge_list(std::cout, t);
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open " + out_path);
        write_edge_list(out, t);
    }
}

std::string big(const BigInt& x) { return x.str(); }

int cmd_reduction_sizes(int n, int k, int m) {
    ReductionSizes s = reduction_sizes(n, m, k);
    json j{{"b", big(s.b)},
           {"p", big(s.p)},
           {"m1", big(s.m1)},
           {"m2", big(s.m2)},
           {"m3", big(s.m3)},
           {"main_path", big(s.main_path)},
           {"wall_leaves", big(s.wall_leaves)},
           {"gate_k", {{"count", big(s.gate_k_count)}, {"leaves_each", big(s.gate_k_leaves_each)}}},
           {"gate_k1",
            {{"count", big(s.gate_k1_count)}, {"leaves_each", big(s.gate_k1_leaves_each)}}},
           {"holes", {{"count", big(s.hole_count)}, {"leaves_each", big(s.hole_leaves_each)}}},
           {"threads",
            {{"count", big(s.thread_count)},
             {"path_each", big(s.thread_path_each)},
             {"knots_each", big(s.knots_per_thread)},
             {"knot_leaves_each", big(s.knot_leaves_each)},
             {"nonneighbor_leaves_each", big(s.nonneighbor_leaves_each)}}},
           {"fillers", {{"first", big(s.filler1)}, {"second", big(s.filler2)}}},
           {"total", big(s.total)},
           {"warnings", s.warnings}};
    std::cout << j.dump(2) << "\n";
    return kExitLayout;
}

CliqueInstance parse_clique_file(const std::string& path, int n) {
    CliqueInstance g;
    g.n = n;
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    int u, v;
    while (in >> u >> v) g.edges.emplace_back(u, v);
    return g;
}

struct BenchRow {
    std::uint64_t digest;
    std::string instance, algorithm, params, outcome;
    int n;
    long long bandwidth, lower_bound;
    double wall_ms;
};

int cmd_bench(const std::string& family, int count, int max_n, int b, std::uint64_t seed,
              const std::string& out_path) {
    std::vector<std::pair<std::string, Tree>> instances;
    if (family == "path") {
        for (int i = 0; i < count; ++i) {
            int n = std::max(2, max_n * (i + 1) / count);
            instances.emplace_back("path-" + std::to_string(n), Tree::path(n));
        }
    } else if (family == "comb") {
        for (int bb = 2; bb <= std::max(2, b); ++bb)
            for (int k = 2; k <= bb; ++k) {
                auto c = gen_skewed_comb(bb, k);
                if (c.tree.size() <= max_n)
                    instances.emplace_back(
                        "comb-" + std::to_string(bb) + "-" + std::to_string(k),
                        std::move(c.tree));
            }
    } else if (family == "caterpillar") {
        for (int i = 0; i < count; ++i) {
            int spine = 2 + static_cast<int>((seed + i) % std::max(1, max_n / 3));
            instances.emplace_back("caterpillar-" + std::to_string(i),
                                   gen_caterpillar(spine, 4, seed + i));
        }
    } else if (family == "tree") {
        for (int i = 0; i < count; ++i)
            instances.emplace_back(
                "tree-" + std::to_string(i),
                gen_tree_bounded_pw(std::max(2, max_n / (i + 1)), 2, seed + i));
    } else {
        throw ParameterError("unknown family " + family);
    }

    std::vector<BenchRow> rows;
    for (auto& [name, tree] : instances) {
        for (std::string algo : {"approx", "bfs"}) {
            BenchRow row;
            row.digest = tree_digest(tree);
            row.instance = name;
            row.algorithm = algo;
            row.n = tree.size();
            row.lower_bound = lower_bounds_report(tree).best();
            auto t0 = std::chrono::steady_clock::now();
            if (algo == "bfs") {
                Layout l = bfs_layout(tree);
                row.bandwidth = bandwidth_of_layout(tree, l);
                row.outcome = "layout";
                row.params = "";
            } else {
                DriverResult r = approximate_bandwidth(tree);
                row.bandwidth = r.bandwidth;
                row.outcome = "layout";
                row.params = "b=" + std::to_string(r.b_star) + ";p=" + std::to_string(r.p);
            }
            auto t1 = std::chrono::steady_clock::now();
            row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& c) {
        if (a.digest != c.digest) return a.digest < c.digest;
        return a.algorithm < c.algorithm;
    });
    std::ostringstream csv;
    csv << "digest,instance,n,algorithm,params,outcome,bandwidth,lower_bound,wall_ms\n";
    for (const auto& r : rows)
        csv << r.digest << "," << r.instance << "," << r.n << "," << r.algorithm << ","
            << r.params << "," << r.outcome << "," << r.bandwidth << "," << r.lower_bound
            << "," << r.wall_ms << "\n";
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open " + out_path);
        out << csv.str();
    }
    return kExitLayout;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bandwidth approximation toolkit for trees and caterpillars"};
    app.require_subcommand(1);

    std::string graph_file, layout_file, out_path, method = "brute", family, edges_file;
    int b = 0, n = 0, k = 0, m = 0, pw = 1, spine = 10, strays = 3, slack = 1;
    int count = 10, max_n = 200;
    long long max_bw = -1, demo_scale = 0;
    std::uint64_t seed = 0;
    bool tighten = false, trace = false;

    auto* cat = app.add_subcommand("approx-cat", "caterpillar layout within 48 b^3");
    cat->add_option("graph", graph_file)->required();
    cat->add_option("--b", b)->required();
    cat->add_option("--out", out_path);

    auto* tr = app.add_subcommand("approx-tree", "tree layout within (768 b^3)^p");
    tr->add_option("graph", graph_file)->required();
    tr->add_option("--b", b);
    tr->add_flag("--tighten-p", tighten);
    tr->add_flag("--trace", trace);
    tr->add_option("--out", out_path);

    auto* ex = app.add_subcommand("exact", "exact bandwidth (small inputs)");
    ex->add_option("graph", graph_file)->required();
    ex->add_option("--method", method)->check(CLI::IsMember({"brute", "saxe"}));
    ex->add_option("--b", b);
    ex->add_option("--out", out_path);

    auto* de = app.add_subcommand("density", "densest-ball lower bound");
    de->add_option("graph", graph_file)->required();

    auto* bo = app.add_subcommand("bounds", "bandwidth lower bounds");
    bo->add_option("graph", graph_file)->required();

    auto* ve = app.add_subcommand("verify", "check a layout file");
    ve->add_option("graph", graph_file)->required();
    ve->add_option("layout", layout_file)->required();
    ve->add_option("--max", max_bw);

    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto* gc = gen->add_subcommand("comb", "skewed comb S(b, k)");
    gc->add_option("--b", b)->required();
    gc->add_option("--k", k)->required();
    gc->add_option("--slack", slack);
    gc->add_option("--out", out_path);
    auto* gcat = gen->add_subcommand("caterpillar", "random caterpillar");
    gcat->add_option("--spine", spine)->required();
    gcat->add_option("--strays", strays)->required();
    gcat->add_option("--seed", seed)->required();
    gcat->add_option("--out", out_path);
    auto* gt = gen->add_subcommand("tree", "random tree of bounded pathwidth");
    gt->add_option("--n", n)->required();
    gt->add_option("--pw", pw)->required();
    gt->add_option("--seed", seed)->required();
    gt->add_option("--out", out_path);
    auto* gs = gen->add_subcommand("reduction-sizes", "exact reduction census");
    gs->add_option("--n", n)->required();
    gs->add_option("--k", k)->required();
    gs->add_option("--m", m)->required();
    auto* gr = gen->add_subcommand("reduction", "materialize the reduction tree");
    gr->add_option("--n", n)->required();
    gr->add_option("--k", k)->required();
    gr->add_option("--edges-file", edges_file)->required();
    gr->add_option("--demo-scale", demo_scale);
    gr->add_option("--out", out_path);

    auto* be = app.add_subcommand("bench", "benchmark against the BFS baseline");
    be->add_option("--family", family)->required();
    be->add_option("--count", count);
    be->add_option("--max-n", max_n);
    be->add_option("--b", b);
    be->add_option("--seed", seed)->required();
    be->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitLayout : kExitError;
    }

    try {
        if (cat->parsed()) return cmd_approx_cat(graph_file, b, out_path);
        if (tr->parsed()) return cmd_approx_tree(graph_file, b, tighten, trace, out_path);
        if (ex->parsed()) return cmd_exact(graph_file, method, b, out_path);
        if (de->parsed()) return cmd_density(graph_file);
        if (bo->parsed()) return cmd_bounds(graph_file);
        if (ve->parsed()) return cmd_verify(graph_file, layout_file, max_bw);
        if (gen->parsed()) {
            if (gc->parsed()) {
                auto c = gen_skewed_comb(b, k, slack);
                validate_skewed_comb(c, b);
                emit_tree(make_labeled(std::move(c.tree)), out_path);
                return kExitLayout;
            }
            if (gcat->parsed()) {
                emit_tree(make_labeled(gen_caterpillar(spine, strays, seed)), out_path);
                return kExitLayout;
            }
            if (gt->parsed()) {
                emit_tree(make_labeled(gen_tree_bounded_pw(n, pw, seed)), out_path);
                return kExitLayout;
            }
            if (gs->parsed()) return cmd_reduction_sizes(n, k, m);
            if (gr->parsed()) {
                ReductionOptions opts;
                if (demo_scale > 0) opts.cap = demo_scale;
                auto build = materialize_reduction(parse_clique_file(edges_file, n), k, opts);
                validate_reduction(build);
                emit_tree(build.tree, out_path);
                return kExitLayout;
            }
        }
        if (be->parsed()) return cmd_bench(family, count, max_n, b, seed, out_path);
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.total.empty()) std::cerr << "exact total: " << e.total << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
