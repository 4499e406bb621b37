// pairs.cpp -- pair analysis over shared orbit windows.

#include "bvtk/pairs.hpp"

#include <algorithm>
#include <stdexcept>

#include "bvtk/blocks.hpp"

namespace bvtk {

namespace {

// T^m applied to a fully resolved path.
FinitePath shifted(FinitePath p, Dim m, const Diagram& d) {
  for (Dim i = 0; i < m; ++i) p = step_path(p, Direction::Succ, d);
  for (Dim i = 0; i > m; --i) p = step_path(p, Direction::Pred, d);
  return p;
}

bool prefixes_equal(const FinitePath& a, const FinitePath& b, int k) {
  return std::equal(a.edges.begin(), a.edges.begin() + k, b.edges.begin());
}

// Deepest level the two paths agree through; 0 when they differ at level 1.
int agreement_level(const FinitePath& a, const FinitePath& b) {
  int l = 0;
  int n = std::min(a.length(), b.length());
  while (l < n && a.edges[l] == b.edges[l]) ++l;
  return l;
}

// A path is minimal into its level-j vertex exactly when its first j edges
// all sit at ordinal 1.
bool minimal_through(const FinitePath& p, int j) {
  for (int i = 0; i < j; ++i)
    if (p.edges[i].ordinal != 1) return false;
  return true;
}

}  // namespace

TimeWindow clip_window(const PathSpec& x, const PathSpec& y, TimeWindow want, int horizon,
                       const Diagram& d) {
  OrbitBounds bx = orbit_bounds(x, horizon, d);
  OrbitBounds by = orbit_bounds(y, horizon, d);
  TimeWindow w;
  w.lo = std::max({want.lo, bx.lo, by.lo});
  w.hi = std::min({want.hi, bx.hi, by.hi});
  return w;
}

bool same_k_coding_window(const PathSpec& x, const PathSpec& y, int k, TimeWindow w,
                          const Diagram& d) {
  int N = d.depth();
  if (k < 0 || k > N) throw std::invalid_argument("same_k_coding_window: level out of range");
  w = clip_window(x, y, w, N, d);
  if (w.lo > w.hi) return true;
  FinitePath px = shifted(resolve(x, N, d), w.lo, d);
  FinitePath py = shifted(resolve(y, N, d), w.lo, d);
  for (Dim m = w.lo;; ++m) {
    if (!prefixes_equal(px, py, k)) return false;
    if (m == w.hi) break;
    px = step_path(px, Direction::Succ, d);
    py = step_path(py, Direction::Succ, d);
  }
  return true;
}

std::optional<DepthWitness> depth_witness(const PathSpec& x, const PathSpec& y, int K,
                                          TimeWindow w, const Diagram& d) {
  int N = d.depth();
  if (K < 0 || K >= N) throw std::invalid_argument("depth_witness: level cap out of range");
  w = clip_window(x, y, w, N, d);
  if (w.lo > w.hi) return std::nullopt;
  FinitePath px = shifted(resolve(x, N, d), w.lo, d);
  FinitePath py = shifted(resolve(y, N, d), w.lo, d);
  // Orbit positions coincide at one time iff they coincide at all times, so
  // equality here means the pair is not distinct and carries no witness.
  if (px == py) return std::nullopt;
  int best = N + 1;
  Dim best_time = w.lo;
  for (Dim m = w.lo;; ++m) {
    int l = agreement_level(px, py);
    if (l < best) {
      best = l;
      best_time = m;
    }
    if (m == w.hi) break;
    px = step_path(px, Direction::Succ, d);
    py = step_path(py, Direction::Succ, d);
  }
  if (best > K) return std::nullopt;
  DepthWitness out;
  out.k = best;
  out.difference_time = best_time;
  out.window = w;
  return out;
}

std::optional<Dim> find_cut(const PathSpec& x, const PathSpec& y, int j, TimeWindow w,
                            const Diagram& d) {
  int N = d.depth();
  if (j < 1 || j > N) throw std::invalid_argument("find_cut: level out of range");
  // Equal dot indices v at level j put both points at their minimal j-prefix
  // after exactly v predecessor steps, so m = -v works without any search
  // (and may lie outside the requested window). Stepping back v times stays
  // within one level-j run, and v never exceeds the dot at the horizon, so
  // the power is always realizable.
  Dim vx = dot_index(x, j, d);
  Dim vy = dot_index(y, j, d);
  if (vx == vy) return -vx;
  w = clip_window(x, y, w, N, d);
  if (w.lo > w.hi) return std::nullopt;
  FinitePath px = shifted(resolve(x, N, d), w.lo, d);
  FinitePath py = shifted(resolve(y, N, d), w.lo, d);
  for (Dim m = w.lo;; ++m) {
    if (minimal_through(px, j) && minimal_through(py, j)) return m;
    if (m == w.hi) break;
    px = step_path(px, Direction::Succ, d);
    py = step_path(py, Direction::Succ, d);
  }
  return std::nullopt;
}

bool LongCutsReport::all_found() const {
  for (const auto& c : cut_times)
    if (!c) return false;
  return true;
}

LongCutsReport long_cuts_report(const PathSpec& x, const PathSpec& y, int k, int j_max,
                                TimeWindow w, const Diagram& d) {
  if (j_max <= k) throw std::invalid_argument("long_cuts_report: need j_max > k");
  LongCutsReport out;
  out.k = k;
  out.j_lo = k + 1;
  out.j_hi = j_max;
  out.window = clip_window(x, y, w, d.depth(), d);
  for (int j = out.j_lo; j <= out.j_hi; ++j) out.cut_times.push_back(find_cut(x, y, j, w, d));
  return out;
}

bool k_equivalent_up_to(const PathSpec& x, const PathSpec& y, int k, int N, const Diagram& d) {
  if (k < 0 || N < k || N > d.depth())
    throw std::invalid_argument("k_equivalent_up_to: levels out of range");
  FinitePath px = resolve(x, N, d);
  FinitePath py = resolve(y, N, d);
  if (!prefixes_equal(px, py, k)) return false;
  RankTable rt = make_rank_table(d);
  for (int n = k + 1; n <= N; ++n) {
    if (dot_index_path(px, n, rt) != dot_index_path(py, n, rt)) return false;
    int vx = px.vertex_at(n);
    int vy = py.vertex_at(n);
    if (vx != vy && !k_equivalent_vertices(d, n, vx, vy, k)) return false;
  }
  return true;
}

}  // namespace bvtk
