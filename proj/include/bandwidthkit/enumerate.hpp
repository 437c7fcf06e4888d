#pragma once

#include <vector>

#include "bandwidthkit/tree.hpp"

namespace bwkit {

/// All free trees on n vertices, one representative per isomorphism class
/// (1, 1, 1, 2, 3, 6, 11, 23, 47 for n = 1..9). Enumerates labeled trees
/// via Pruefer sequences and dedups on the canonical form, so it is only
/// meant for small n.
std::vector<Tree> all_free_trees(int n);

}  // namespace bwkit
