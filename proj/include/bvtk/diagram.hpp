// diagram.hpp -- ordered Bratteli diagram truncations: data model, validation,
// path enumeration and ordering, dimensions, extremal paths, telescoping.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bvtk {

using Dim = std::int64_t;

// A vertex at level n >= 1 stores its ordered incoming edges as source-vertex
// indices at level n-1. Position p in the list carries ordinal label p+1.
// Parallel edges are repeated indices.
struct Vertex {
  std::string name;
  std::vector<int> in_edges;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Levels 0..N, where level 0 is the singleton root. The diagram is immutable
// after construction; all operations below are pure.
struct Diagram {
  std::vector<std::vector<Vertex>> levels;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  int width(int level) const;
  const Vertex& at(int level, int index) const;
  int in_degree(int level, int index) const;
  // -1 when no vertex of that name exists at the level.
  int index_of(int level, const std::string& name) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

// One edge of a path: `target` is the vertex index at the edge's upper level,
// `ordinal` its 1-based position among the edges into that vertex.
struct PathEdge {
  int target = 0;
  int ordinal = 1;

  friend bool operator==(const PathEdge&, const PathEdge&) = default;
};

// A root-to-level-n path; edges[i] runs from level i to level i+1.
struct FinitePath {
  std::vector<PathEdge> edges;

  int length() const { return static_cast<int>(edges.size()); }
  int vertex_at(int level) const;  // 0 at level 0
  int end_vertex() const { return vertex_at(length()); }
  FinitePath truncated(int level) const;

  friend bool operator==(const FinitePath&, const FinitePath&) = default;
};

// Source vertex index (at level-1) of an edge into `level`.
int edge_source(const Diagram& d, int level, const PathEdge& e);

// Throws std::invalid_argument on malformed structure: wrong root level,
// empty in-edge lists, out-of-range sources, duplicate names within a level.
void check_structure(const Diagram& d);

struct ValidationReport {
  bool properly_ordered_at_horizon = false;
  bool simplicity_evidence = false;
  std::vector<int> width_profile;
  std::vector<std::string> violations;
};

// Structural problems are reported as violations, not exceptions.
// properly_ordered_at_horizon: the all-minimal edge threads from every
// level-N vertex meet in a single level-1 vertex, and likewise the
// all-maximal threads; this is uniqueness of the minimal/maximal path germs
// visible in the truncation. simplicity_evidence: some chain of level cuts
// 0 = b_0 < b_1 < ... < b_m = N has an all-positive connection count between
// consecutive cuts.
ValidationReport validate(const Diagram& d);

// dims[level][vertex] = number of root-to-vertex paths.
struct DimTable {
  std::vector<std::vector<Dim>> dims;

  const std::vector<Dim>& operator[](int level) const { return dims[level]; }
};
DimTable dimensions(const Diagram& d);
// Paths starting at `base` instead of the root; dims[base][v] = 1.
DimTable dimensions_from(const Diagram& d, int base);
Dim dimension(const Diagram& d, int level, int index);

// cum[level][vertex][p] = paths through in-edges of ordinal <= p; the last
// entry equals the vertex dimension. Shared by rank/unrank and dot indices.
struct RankTable {
  DimTable dims;
  std::vector<std::vector<std::vector<Dim>>> cum;
};
RankTable make_rank_table(const Diagram& d);
RankTable make_rank_table_from(const Diagram& d, int base);

// Rank of a path among the ordered paths into its endpoint (0 = minimal).
Dim path_rank(const RankTable& rt, const FinitePath& p);
// Inverse of path_rank for the vertex `index` at `level`.
FinitePath path_unrank(const Diagram& d, const RankTable& rt, int level, int index, Dim rank);

enum class Extremal { Min, Max };
FinitePath extremal_path_into(const Diagram& d, int level, int index, Extremal which);

// In-place successor/predecessor among paths with the same endpoint: change
// the earliest non-maximal (resp. non-minimal) edge and reset everything
// below it to minimal (resp. maximal). Returns false when already extremal.
bool advance_path(FinitePath& p, const Diagram& d);
bool retreat_path(FinitePath& p, const Diagram& d);

// All root-to-vertex paths, ordered by deepest-difference comparison (the
// edge nearest the endpoint dominates, smaller ordinal first); consecutive
// entries are successor-related.
std::vector<FinitePath> paths_into(const Diagram& d, int level, int index);

// Lazy in-order walk over paths_into; O(depth) memory.
class PathCursor {
 public:
  PathCursor(const Diagram& d, int level, int index);
  const FinitePath& current() const { return cur_; }
  bool done() const { return done_; }
  bool advance();

 private:
  const Diagram* d_;
  FinitePath cur_;
  bool done_ = false;
};

// Collapse to the sublist `levels` (strictly increasing, levels[0] == 0).
// New in-edge lists enumerate the composed segments in deepest-difference
// order, so the path spaces up to the last kept level are in order-preserving
// bijection. Vertex names are retained.
Diagram telescope(const Diagram& d, const std::vector<int>& levels);

// Image of a path under that bijection; p must reach levels.back().
FinitePath telescope_path(const Diagram& d, const std::vector<int>& levels, const FinitePath& p);

}  // namespace bvtk
