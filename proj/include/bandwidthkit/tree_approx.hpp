#pragma once

#include <string>
#include <vector>

#include "bandwidthkit/cat_approx.hpp"
#include "bandwidthkit/layout.hpp"
#include "bandwidthkit/tree.hpp"

namespace bwkit {

/// (768 b^3)^p, saturating at INT64_MAX.
long long ratio_bound_768(int b, int p);

struct ApproxResult {
    bool accepted = false;
    Layout layout;                    // meaningful iff accepted
    long long bandwidth = 0;          // of layout
    long long ratio_bound = 0;        // (768 b^3)^p (saturated)
    std::string reject_reason;        // non-empty iff rejected
    std::vector<std::string> trace;   // one line per recursion event
};

/// Either a layout of bandwidth <= (768 b^3)^p or the correct conclusion
/// that bw(t) > b. Requires pw(t) <= p (PreconditionError otherwise).
/// With tighten set, p is lowered to the actual pathwidth at every level
/// of the recursion, which shrinks the ratio bound.
ApproxResult tree_alg(const Tree& t, int p, int b, bool tighten = false);

struct DriverResult {
    int b_star = 0;      // smallest accepted b
    int p = 0;           // pathwidth used for the recursion depth
    Layout layout;
    long long bandwidth = 0;
    long long ratio_bound = 0;
};

/// Scans b upward from max(1, pw(t)) until tree_alg accepts. The accepted
/// b_star satisfies bw(t) > b_star - 1, so bandwidth <= ratio_bound holds
/// with b_star <= bw(t) whenever b_star > pw(t).
DriverResult approximate_bandwidth(const Tree& t, bool tighten = false);

}  // namespace bwkit
