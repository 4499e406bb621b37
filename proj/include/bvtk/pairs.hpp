// pairs.hpp -- pair analysis: shared coding windows, depth witnesses, cuts,
// path equivalence up to a level.
//
// Honesty contract: every negative answer carries the bounds it was checked
// under; nothing here claims an unbounded universal.
#pragma once

#include <optional>
#include <vector>

#include "bvtk/diagram.hpp"
#include "bvtk/dynamics.hpp"
#include "bvtk/pathspec.hpp"

namespace bvtk {

struct TimeWindow {
  Dim lo = 0;
  Dim hi = 0;  // inclusive

  Dim length() const { return hi - lo + 1; }
};

// Largest window inside [lo, hi] both orbits can realize at the horizon.
TimeWindow clip_window(const PathSpec& x, const PathSpec& y, TimeWindow want, int horizon,
                       const Diagram& d);

// true iff resolve(T^m x, k) == resolve(T^m y, k) for every m in the window.
bool same_k_coding_window(const PathSpec& x, const PathSpec& y, int k, TimeWindow w,
                          const Diagram& d);

// Largest k <= K with equal k-codings across the window together with a time
// where the (k+1)-truncations differ. None when the paths agree through
// level K+1 over the whole window, or when the pair is not distinct.
struct DepthWitness {
  int k = 0;
  Dim difference_time = 0;
  TimeWindow window;
};
std::optional<DepthWitness> depth_witness(const PathSpec& x, const PathSpec& y, int K,
                                          TimeWindow w, const Diagram& d);

// Some m with both orbit points minimal into level j. Fast path: when the
// dot indices at j already agree with value v, m = -v is returned without
// search (and may lie outside the window).
std::optional<Dim> find_cut(const PathSpec& x, const PathSpec& y, int j, TimeWindow w,
                            const Diagram& d);

struct LongCutsReport {
  int k = 0;
  int j_lo = 0;
  int j_hi = 0;
  std::vector<std::optional<Dim>> cut_times;  // j_lo..j_hi
  TimeWindow window;

  bool all_found() const;
};
LongCutsReport long_cuts_report(const PathSpec& x, const PathSpec& y, int k, int j_max,
                                TimeWindow w, const Diagram& d);

// true iff the paths agree to level k and share (block, dot) at every level
// in (k, N].
bool k_equivalent_up_to(const PathSpec& x, const PathSpec& y, int k, int N, const Diagram& d);

// Re-checkable record of one claim about a pair, as printed by the CLI.
struct PairEvidence {
  PathSpec x;
  PathSpec y;
  enum class Kind { SameKCoding, Depth, Cut, LongCuts, KEquivalentUpTo } kind = Kind::SameKCoding;
  int k = 0;
  int j = 0;
  bool holds = false;
  std::optional<Dim> time;
  TimeWindow window;
  std::vector<std::optional<Dim>> cut_times;
};

}  // namespace bvtk
