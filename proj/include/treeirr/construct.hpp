#pragma once

#include <cstdint>
#include <vector>

#include "treeirr/degseq.hpp"
#include "treeirr/graph.hpp"

namespace treeirr {

/// Star S_n: vertex 0 adjacent to all others. Requires n >= 2.
Tree star(int n);

/// Path P_n on vertices 0..n-1 in chain order. Requires n >= 1.
Tree path(int n);

/// Caterpillar with the given spine target degrees: spine vertices form a
/// path (in list order) and vertex i carries spine_degrees[i] minus its
/// spine-neighbor count pendant leaves. Requires spine length >= 2, internal
/// targets >= 2 and end targets >= 1.
Tree caterpillar(const std::vector<int>& spine_degrees);

/// The caterpillar whose spine vertex for index i in 3..n has degree F_i
/// under the chosen convention (spine in index order; the two ends carry
/// F_i - 1 leaves, internal spine vertices F_i - 2). Requires n >= 4.
Tree fibonacci_caterpillar(int n, FibConvention convention);

/// Uniform random labeled tree from a random Prüfer string; deterministic
/// for a fixed seed.
Tree random_tree(int n, std::uint64_t seed);

/// Decodes a Prüfer string over symbols 0..n-1 (length n-2) into its tree.
Tree prufer_decode(int n, const std::vector<int>& prufer);

}  // namespace treeirr
