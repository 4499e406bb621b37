// families.hpp -- constructors for the worked example diagrams and their
// transforms.
//
// The root level is never drawn in the source figures; every constructor
// here attaches a single root edge to each level-1 vertex, which preserves
// proper ordering and simplicity and leaves all checked claims unchanged.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bvtk/diagram.hpp"
#include "bvtk/pathspec.hpp"

namespace bvtk {

// Level j has vertices v{j}_1 .. v{j}_{2j}; consecutive levels are completely
// connected by single edges. The edge from v(n,m) into a level-(n+1) vertex
// has ordinal m, except into v(n+1,2h+1) for 1 <= h <= n-1, where the edges
// from v(n,2h) and v(n,2h+1) swap ordinals.
Diagram gj(int N);  // N >= 2

// Replaces the vertex by v'p (in-edges 1..t) and v'q (the rest); occurrences
// of the vertex as a source at the next level become the adjacent pair.
Diagram split_vertex(const Diagram& d, int level, int index, int t);

// gj(N) with every v(j,2i), 1 <= i < j, split after its first in-edge, so the
// left part carries exactly the block of v(j-1,1).
Diagram gj_modified(int N);  // N >= 3

// One vertex per level with radices[(n-1) % size] parallel edges.
Diagram odometer_single(const std::vector<int>& radices, int N);  // radices >= 2

// counts[(n-1) % size] vertices per level, completely connected, and the
// in-edge of ordinal i always comes from v(n-1,i); every level is strongly
// uniformly ordered.
Diagram odometer_suo(const std::vector<int>& counts, int N);  // counts >= 2

// Period-two levels: pairs {a,b} alternate with quadruples whose codings
// over the previous pair are aa, aaa, abb, bba; the next pair reads
// (1)(3)(2) and (2)(4)(1) over the quadruple.
Diagram fig1_family(int N);  // N >= 3

// gj(N) reordered left-to-right at v(j,2i+1) for j >= 4 and even i, which
// removes exactly the even-index ordinal swaps.
Diagram dm2ww(int N);  // N >= 5

// The fixed bounded-width example: root->{a,b,c}; u:(a,b), v:(a,b), w:(b,c);
// A:(u,w), B:(w,v); AB:(A,B); then single-vertex levels with two parallel
// edges up to depth 8. Vertex b sources two ordinal-2 edges, so the diagram
// is not deterministic.
Diagram kite_nondet();

// Deterministic bounded-width diagram over a nonincreasing width profile
// ending at 1 (shorter profiles are padded with 1s). Each target's in-edges
// rotate through the previous level starting at its own position, so every
// source sees pairwise distinct outgoing ordinals; width-1 runs use two
// parallel edges. Throws when the profile increases.
Diagram kite_deterministic(const std::vector<int>& profile, int N);

// True when level j has exactly 2j vertices and every in-edge list is a
// permutation of the previous level; the shape shared by gj and dm2ww.
bool gj_like(const Diagram& d);

// The canonical same-coding pair of column pair (2k, 2k+1): both start with
// the minimal path into v(k,1), enter the two columns, and stay in them.
std::pair<PathSpec, PathSpec> mc_generator_pair(const Diagram& d, int k);

// True when the path runs inside columns 2k and 2k+1 at every level above k.
bool runs_in_mc(const FinitePath& p, int k);

// CLI-facing parameter bundle; exactly one family is selected by name.
struct FamilyParams {
  std::string family;        // gj | gj-mod | odometer | fig1 | dm2ww | kite | kite-det
  int depth = 0;
  std::vector<int> radices;  // odometer, single-vertex mode
  std::vector<int> counts;   // odometer, uniformly ordered mode
  std::vector<int> profile;  // kite-det widths
};
Diagram make_family(const FamilyParams& params);

}  // namespace bvtk
