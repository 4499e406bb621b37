// dynamics.hpp -- successor/predecessor dynamics, dot indices, coding windows.
//
// Every operation takes an explicit horizon; an orbit leaving the truncation
// is a HorizonExceeded error, never an approximation.
#pragma once

#include <stdexcept>
#include <vector>

#include "bvtk/diagram.hpp"
#include "bvtk/pathspec.hpp"

namespace bvtk {

struct HorizonExceeded : std::runtime_error {
  explicit HorizonExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class Direction { Succ, Pred };

// Successor changes the earliest non-maximal edge to the next ordinal and
// resets everything below to minimal; predecessor is the inverse. Throws
// HorizonExceeded when p is maximal (resp. minimal) through its whole length.
FinitePath step_path(const FinitePath& p, Direction dir, const Diagram& d);

// Same on a PathSpec: the result's prefix is the stepped resolution to the
// horizon (the suffix rule is kept and re-applies beyond it).
PathSpec step(const PathSpec& x, Direction dir, int horizon, const Diagram& d);

// Number of paths into v_n(x) strictly preceding x's prefix; 0 iff minimal.
Dim dot_index(const PathSpec& x, int n, const Diagram& d);
Dim dot_index_path(const FinitePath& p, int n, const RankTable& rt);

// Valid powers m of the successor at the horizon: m in [lo, hi], inclusive.
struct OrbitBounds {
  Dim lo = 0;
  Dim hi = 0;
};
OrbitBounds orbit_bounds(const PathSpec& x, int horizon, const Diagram& d);

// Entry m - m_lo is resolve(T^m x, k). Stepping happens at the diagram's full
// depth and each orbit point is truncated to k.
std::vector<FinitePath> k_coding_window(const PathSpec& x, int k, Dim m_lo, Dim m_hi,
                                        const Diagram& d);

struct OrbitWindow {
  PathSpec center;
  Dim m_lo = 0;
  Dim m_hi = 0;
  std::vector<FinitePath> entries;
};
OrbitWindow orbit_window(const PathSpec& x, int k, Dim m_lo, Dim m_hi, const Diagram& d);

}  // namespace bvtk
