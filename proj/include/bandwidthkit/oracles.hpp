#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bandwidthkit/layout.hpp"
#include "bandwidthkit/tree.hpp"

namespace bwkit {

/// Exact bandwidth with an optimal layout, by branch and bound over rank
/// orders. Guarded to n <= 10 (TooLargeError beyond); the guard is
/// adjustable via the BANDWIDTHKIT_GUARDS env var ("brute=N,saxe=B").
struct ExactResult {
    int bandwidth = 0;
    Layout layout;
};
ExactResult exact_bandwidth_bruteforce(const Tree& t);

/// Decides bw(t) <= b by the sliding-window dynamic program: states are the
/// ordered window of the last min(placed, b) placements, a new vertex may
/// only have placed neighbors inside the window, and the vertex falling out
/// of the window must have all neighbors placed. Returns a witness layout
/// when the answer is yes. Guarded to b <= 4 and n <= 64.
std::optional<Layout> saxe_decide(const Tree& t, int b);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    long long ceil() const { return (num + den - 1) / den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
};

/// Densest ball: (|B|-1) / diam(B) maximized over balls around every vertex
/// and every edge at every radius, with the diameter recomputed on the ball
/// itself. Local density is a lower bound on bandwidth.
struct DensityWitness {
    Rational density;
    Vertex center_u = 0;   // center vertex, or edge (center_u, center_v)
    Vertex center_v = -1;  // -1 for a vertex-centered ball
    int radius = 0;
    int ball_size = 1;
    int ball_diameter = 0;
};
DensityWitness local_density(const Tree& t);

struct LowerBounds {
    long long density_bound = 0;  // ceil of the local density
    int pathwidth_bound = 0;      // pw(t) <= bw(t)
    long long best() const { return std::max<long long>(density_bound, pathwidth_bound); }
};
LowerBounds lower_bounds_report(const Tree& t);

}  // namespace bwkit
