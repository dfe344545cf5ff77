#pragma once

#include <string>
#include <vector>

#include "treeirr/graph.hpp"

namespace treeirr {

/// Center of a tree (1 or 2 vertices), found by peeling leaf layers.
std::vector<int> tree_center(const Tree& t);

/// AHU canonical code of the tree rooted at `root`: "()" for a leaf,
/// "(" + sorted child codes + ")" otherwise.
std::string rooted_code(const Tree& t, int root);

/// Label-invariant code: equal for two trees iff they are isomorphic.
/// Rooted at the center; bicentral trees take the lexicographically smaller
/// of the two center-rooted codes.
std::string canonical_code(const Tree& t);

}  // namespace treeirr
