// blocks.hpp -- basic blocks, codings by vertices, factor maps, dotted
// blocks, uniform-order and determinism tests.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvtk/diagram.hpp"
#include "bvtk/pathspec.hpp"

namespace bvtk {

// The ordered alphabet of all root-to-level-k paths. A letter id is
// offset(endpoint) + rank(path); ids are consecutive per endpoint, so words
// over A_k stay compact even when dimensions grow factorially.
struct Alphabet {
  int k = 0;
  std::vector<Dim> offsets;  // per level-k vertex
  Dim size = 0;
};
Alphabet make_alphabet(const Diagram& d, int k);
Dim letter_id(const Alphabet& a, const RankTable& rt, const FinitePath& p);
FinitePath letter_path(const Diagram& d, const Alphabet& a, const RankTable& rt, Dim id);
std::string letter_name(const Diagram& d, const Alphabet& a, const RankTable& rt, Dim id);

// A word over A_k (letter ids) or over the vertices of one level (indices).
// Equality is structural.
struct Block {
  int level_tag = 0;
  bool vertex_alphabet = false;
  std::vector<Dim> letters;

  Dim length() const { return static_cast<Dim>(letters.size()); }
  friend bool operator==(const Block&, const Block&) = default;
};

struct DottedBlock {
  Block block;
  Dim dot = 0;  // < length when marking a path's position

  friend bool operator==(const DottedBlock&, const DottedBlock&) = default;
};

// The ordered paths into the vertex, each truncated to level k; length equals
// the vertex dimension.
Block basic_block(const Diagram& d, int level, int index, int k);

// Sources at level j of the ordered level-j-to-vertex path segments.
Block coding_by_vertices(const Diagram& d, int level, int index, int j);

// Letterwise truncation A_k -> A_i; length preserved.
Block factor_block(const Diagram& d, const Block& b, int i);

// (basic_block(v_n(x), k), dot_index(x, n)).
DottedBlock dotted_basic_block(const PathSpec& x, int n, int k, const Diagram& d);

// Shortest P such that every (n-1)-basic block at level n is a power of P.
struct UniformOrder {
  Block period;
  std::vector<Dim> powers;  // per level-n vertex
};
std::optional<UniformOrder> uniform_order_test(const Diagram& d, int n);

// true iff basic_block(v, k) == basic_block(w, k) for v, w at one level > k.
bool k_equivalent_vertices(const Diagram& d, int level, int v, int w, int k);

// Every vertex's outgoing edges must carry pairwise distinct ordinals.
struct DeterminismReport {
  bool deterministic = true;
  // First violation: two out-edges of `source` at `level` share `ordinal`.
  int level = 0;
  std::string source;
  int ordinal = 0;
  std::string target_a;
  std::string target_b;
};
DeterminismReport deterministic_test(const Diagram& d);

}  // namespace bvtk
