// render.hpp -- text renderings: Graphviz export, cut-structure arrays.
#pragma once

#include <string>

#include "bvtk/diagram.hpp"
#include "bvtk/pairs.hpp"
#include "bvtk/pathspec.hpp"

namespace bvtk {

// Graphviz digraph, one rank per level, edges labeled by ordinal.
std::string to_dot(const Diagram& d);

// One row per level j = rows..1, one column per orbit time in the clipped
// window: '|' when T^m x is minimal into its level-j vertex, '.' otherwise.
// A marker line points at m = 0. Row j is the level-j cut pattern of x.
std::string ascii_array(const Diagram& d, const PathSpec& x, int rows, TimeWindow w);

}  // namespace bvtk
