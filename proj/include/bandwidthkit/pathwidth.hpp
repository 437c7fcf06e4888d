#pragma once

#include "bandwidthkit/tree.hpp"

namespace bwkit {

/// Decision: pw(t) <= p. Uses the classical tree characterization
/// (pw >= p+1 iff some vertex has >= 3 branches of pathwidth >= p),
/// with O(n) fast paths for p <= 1 and an O(n^2) path for p == 2.
bool pathwidth_le(const Tree& t, int p);

/// Exact pathwidth. Agrees with brute-force search on all trees n <= 8.
int pathwidth(const Tree& t);

}  // namespace bwkit
