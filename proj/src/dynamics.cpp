// dynamics.cpp -- adic successor dynamics on finite truncations.
#include "bvtk/dynamics.hpp"

namespace bvtk {

FinitePath step_path(const FinitePath& p, Direction dir, const Diagram& d) {
  FinitePath q = p;
  bool ok = dir == Direction::Succ ? advance_path(q, d) : retreat_path(q, d);
  if (!ok)
    throw HorizonExceeded(dir == Direction::Succ
                              ? "successor of a maximal path at the horizon"
                              : "predecessor of a minimal path at the horizon");
  return q;
}

PathSpec step(const PathSpec& x, Direction dir, int horizon, const Diagram& d) {
  FinitePath p = resolve(x, horizon, d);
  return PathSpec{step_path(p, dir, d), x.suffix};
}

Dim dot_index_path(const FinitePath& p, int n, const RankTable& rt) {
  if (n > p.length()) throw std::invalid_argument("dot level outside path");
  Dim r = 0;
  for (int level = 1; level <= n; ++level) {
    const PathEdge& e = p.edges[level - 1];
    r += rt.cum[level][e.target][e.ordinal - 1];
  }
  return r;
}

Dim dot_index(const PathSpec& x, int n, const Diagram& d) {
  FinitePath p = resolve(x, n, d);
  RankTable rt = make_rank_table(d);
  return dot_index_path(p, n, rt);
}

OrbitBounds orbit_bounds(const PathSpec& x, int horizon, const Diagram& d) {
  FinitePath p = resolve(x, horizon, d);
  RankTable rt = make_rank_table(d);
  Dim dot = dot_index_path(p, horizon, rt);
  Dim dim = rt.dims[horizon][p.vertex_at(horizon)];
  return OrbitBounds{-dot, dim - 1 - dot};
}

std::vector<FinitePath> k_coding_window(const PathSpec& x, int k, Dim m_lo, Dim m_hi,
                                        const Diagram& d) {
  if (m_lo > m_hi) throw std::invalid_argument("empty window");
  FinitePath base = resolve(x, d.depth(), d);
  std::vector<FinitePath> out(static_cast<size_t>(m_hi - m_lo + 1));
  FinitePath cur = base;
  for (Dim m = 0; m >= m_lo; --m) {
    if (m >= m_lo && m <= m_hi) out[static_cast<size_t>(m - m_lo)] = cur.truncated(k);
    if (m > m_lo && !retreat_path(cur, d))
      throw HorizonExceeded("window reaches before the minimal path");
  }
  cur = base;
  for (Dim m = 0; m <= m_hi; ++m) {
    if (m >= m_lo && m <= m_hi) out[static_cast<size_t>(m - m_lo)] = cur.truncated(k);
    if (m < m_hi && !advance_path(cur, d))
      throw HorizonExceeded("window reaches beyond the maximal path");
  }
  return out;
}

OrbitWindow orbit_window(const PathSpec& x, int k, Dim m_lo, Dim m_hi, const Diagram& d) {
  return OrbitWindow{x, m_lo, m_hi, k_coding_window(x, k, m_lo, m_hi, d)};
}

}  // namespace bvtk
