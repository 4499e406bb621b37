// diagram.cpp -- core diagram operations.
#include "bvtk/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace bvtk {

int Diagram::width(int level) const {
  if (level < 0 || level > depth()) throw std::invalid_argument("level out of range");
  return static_cast<int>(levels[level].size());
}

const Vertex& Diagram::at(int level, int index) const {
  if (level < 0 || level > depth()) throw std::invalid_argument("level out of range");
  const auto& lv = levels[level];
  if (index < 0 || index >= static_cast<int>(lv.size()))
    throw std::invalid_argument("vertex index out of range");
  return lv[index];
}

int Diagram::in_degree(int level, int index) const {
  return static_cast<int>(at(level, index).in_edges.size());
}

int Diagram::index_of(int level, const std::string& name) const {
  if (level < 0 || level > depth()) return -1;
  const auto& lv = levels[level];
  for (int i = 0; i < static_cast<int>(lv.size()); ++i)
    if (lv[i].name == name) return i;
  return -1;
}

int FinitePath::vertex_at(int level) const {
  if (level == 0) return 0;
  if (level < 0 || level > length()) throw std::invalid_argument("level outside path");
  return edges[level - 1].target;
}

FinitePath FinitePath::truncated(int level) const {
  if (level < 0 || level > length()) throw std::invalid_argument("level outside path");
  FinitePath t;
  t.edges.assign(edges.begin(), edges.begin() + level);
  return t;
}

int edge_source(const Diagram& d, int level, const PathEdge& e) {
  const Vertex& v = d.at(level, e.target);
  if (e.ordinal < 1 || e.ordinal > static_cast<int>(v.in_edges.size()))
    throw std::invalid_argument("edge ordinal out of range");
  return v.in_edges[e.ordinal - 1];
}

void check_structure(const Diagram& d) {
  if (d.levels.empty()) throw std::invalid_argument("diagram has no levels");
  if (d.levels[0].size() != 1) throw std::invalid_argument("level 0 must hold exactly the root");
  if (!d.levels[0][0].in_edges.empty()) throw std::invalid_argument("root must have no in-edges");
  for (int n = 0; n <= d.depth(); ++n) {
    std::unordered_set<std::string> names;
    for (const Vertex& v : d.levels[n]) {
      if (!names.insert(v.name).second)
        throw std::invalid_argument("duplicate vertex name at level " + std::to_string(n) + ": " + v.name);
      if (n == 0) continue;
      if (v.in_edges.empty())
        throw std::invalid_argument("vertex without in-edges: " + v.name);
      for (int s : v.in_edges)
        if (s < 0 || s >= d.width(n - 1))
          throw std::invalid_argument("in-edge of " + v.name + " references missing vertex");
    }
    if (d.levels[n].empty()) throw std::invalid_argument("empty level " + std::to_string(n));
  }
}

namespace {

// Follows the extremal thread downward: from each level-N vertex take the
// ordinal-1 (resp. last) in-edge repeatedly; proper order at the horizon
// means all threads meet in one level-1 vertex.
bool unique_extremal_germ(const Diagram& d, Extremal which) {
  int n = d.depth();
  if (n < 1) return true;
  std::set<int> frontier;
  for (int i = 0; i < d.width(n); ++i) frontier.insert(i);
  for (int level = n; level >= 2; --level) {
    std::set<int> next;
    for (int i : frontier) {
      const auto& in = d.at(level, i).in_edges;
      next.insert(which == Extremal::Min ? in.front() : in.back());
    }
    frontier.swap(next);
  }
  return frontier.size() == 1;
}

// coverable[b]: some cut chain from level 0 to b has all-positive connection
// counts between consecutive cuts. Positivity between a and b is full
// reachability of every level-b vertex from every level-a vertex.
bool simplicity_by_cut_chain(const Diagram& d) {
  int n = d.depth();
  std::vector<char> coverable(n + 1, 0);
  coverable[0] = 1;
  for (int b = 1; b <= n; ++b) {
    for (int a = 0; a < b && !coverable[b]; ++a) {
      if (!coverable[a]) continue;
      if (d.width(a) > 64) continue;  // mask width guard; wider bases are skipped
      std::vector<std::uint64_t> reach(d.width(a));
      for (int i = 0; i < d.width(a); ++i) reach[i] = 1ull << i;
      std::uint64_t full = d.width(a) == 64 ? ~0ull : (1ull << d.width(a)) - 1;
      for (int level = a + 1; level <= b; ++level) {
        std::vector<std::uint64_t> next(d.width(level), 0);
        for (int i = 0; i < d.width(level); ++i)
          for (int s : d.at(level, i).in_edges) next[i] |= reach[s];
        reach.swap(next);
      }
      bool positive = true;
      for (std::uint64_t m : reach) positive = positive && (m == full);
      if (positive) coverable[b] = 1;
    }
  }
  return coverable[n] != 0;
}

}  // namespace

ValidationReport validate(const Diagram& d) {
  ValidationReport r;
  try {
    check_structure(d);
  } catch (const std::invalid_argument& e) {
    r.violations.push_back(e.what());
    return r;
  }
  for (int n = 0; n <= d.depth(); ++n) r.width_profile.push_back(d.width(n));
  // Every non-top vertex must feed an edge upward, else its paths are dead ends.
  for (int n = 0; n < d.depth(); ++n) {
    std::vector<char> used(d.width(n), 0);
    for (const Vertex& v : d.levels[n + 1])
      for (int s : v.in_edges) used[s] = 1;
    for (int i = 0; i < d.width(n); ++i)
      if (!used[i]) r.violations.push_back("vertex " + d.at(n, i).name + " is not a source of any edge");
  }
  if (!r.violations.empty()) return r;
  r.properly_ordered_at_horizon =
      unique_extremal_germ(d, Extremal::Min) && unique_extremal_germ(d, Extremal::Max);
  r.simplicity_evidence = simplicity_by_cut_chain(d);
  if (!r.properly_ordered_at_horizon)
    r.violations.push_back("minimal or maximal edge threads do not merge at the horizon");
  if (!r.simplicity_evidence)
    r.violations.push_back("no cut chain with all-positive connection counts");
  return r;
}

DimTable dimensions_from(const Diagram& d, int base) {
  if (base < 0 || base > d.depth()) throw std::invalid_argument("base level out of range");
  DimTable t;
  t.dims.resize(d.depth() + 1);
  for (int n = 0; n <= d.depth(); ++n) t.dims[n].assign(d.width(n), 0);
  for (int i = 0; i < d.width(base); ++i) t.dims[base][i] = 1;
  for (int n = base + 1; n <= d.depth(); ++n)
    for (int i = 0; i < d.width(n); ++i) {
      Dim sum = 0;
      for (int s : d.at(n, i).in_edges) sum += t.dims[n - 1][s];
      t.dims[n][i] = sum;
    }
  return t;
}

DimTable dimensions(const Diagram& d) { return dimensions_from(d, 0); }

Dim dimension(const Diagram& d, int level, int index) {
  d.at(level, index);
  return dimensions(d).dims[level][index];
}

static RankTable rank_table_impl(const Diagram& d, int base) {
  RankTable rt;
  rt.dims = dimensions_from(d, base);
  rt.cum.resize(d.depth() + 1);
  for (int n = 1; n <= d.depth(); ++n) {
    rt.cum[n].resize(d.width(n));
    for (int i = 0; i < d.width(n); ++i) {
      const auto& in = d.at(n, i).in_edges;
      auto& c = rt.cum[n][i];
      c.assign(in.size() + 1, 0);
      for (size_t p = 0; p < in.size(); ++p) c[p + 1] = c[p] + rt.dims[n - 1][in[p]];
    }
  }
  return rt;
}

RankTable make_rank_table(const Diagram& d) { return rank_table_impl(d, 0); }
RankTable make_rank_table_from(const Diagram& d, int base) { return rank_table_impl(d, base); }

Dim path_rank(const RankTable& rt, const FinitePath& p) {
  Dim r = 0;
  for (int level = 1; level <= p.length(); ++level) {
    const PathEdge& e = p.edges[level - 1];
    r += rt.cum[level][e.target][e.ordinal - 1];
  }
  return r;
}

FinitePath path_unrank(const Diagram& d, const RankTable& rt, int level, int index, Dim rank) {
  if (rank < 0 || rank >= rt.dims[level][index]) throw std::invalid_argument("rank out of range");
  FinitePath p;
  p.edges.resize(level);
  int v = index;
  for (int n = level; n >= 1; --n) {
    const auto& c = rt.cum[n][v];
    int o = static_cast<int>(std::upper_bound(c.begin(), c.end(), rank) - c.begin());
    // c[o-1] <= rank < c[o]; the edge of ordinal o contains the residue.
    p.edges[n - 1] = PathEdge{v, o};
    rank -= c[o - 1];
    v = d.at(n, v).in_edges[o - 1];
  }
  return p;
}

FinitePath extremal_path_into(const Diagram& d, int level, int index, Extremal which) {
  d.at(level, index);
  FinitePath p;
  p.edges.resize(level);
  int v = index;
  for (int n = level; n >= 1; --n) {
    const auto& in = d.at(n, v).in_edges;
    int o = which == Extremal::Min ? 1 : static_cast<int>(in.size());
    p.edges[n - 1] = PathEdge{v, o};
    v = in[o - 1];
  }
  return p;
}

bool advance_path(FinitePath& p, const Diagram& d) {
  for (int i = 0; i < p.length(); ++i) {
    PathEdge& e = p.edges[i];
    int level = i + 1;
    if (e.ordinal < d.in_degree(level, e.target)) {
      e.ordinal += 1;
      int src = edge_source(d, level, e);
      // Reset the part below the changed edge to the minimal path into src.
      FinitePath min = extremal_path_into(d, level - 1, src, Extremal::Min);
      std::copy(min.edges.begin(), min.edges.end(), p.edges.begin());
      return true;
    }
  }
  return false;
}

bool retreat_path(FinitePath& p, const Diagram& d) {
  for (int i = 0; i < p.length(); ++i) {
    PathEdge& e = p.edges[i];
    int level = i + 1;
    if (e.ordinal > 1) {
      e.ordinal -= 1;
      int src = edge_source(d, level, e);
      FinitePath max = extremal_path_into(d, level - 1, src, Extremal::Max);
      std::copy(max.edges.begin(), max.edges.end(), p.edges.begin());
      return true;
    }
  }
  return false;
}

std::vector<FinitePath> paths_into(const Diagram& d, int level, int index) {
  std::vector<FinitePath> out;
  PathCursor c(d, level, index);
  while (!c.done()) {
    out.push_back(c.current());
    c.advance();
  }
  return out;
}

PathCursor::PathCursor(const Diagram& d, int level, int index)
    : d_(&d), cur_(extremal_path_into(d, level, index, Extremal::Min)) {}

bool PathCursor::advance() {
  if (done_) return false;
  if (!advance_path(cur_, *d_)) {
    done_ = true;
    return false;
  }
  return true;
}

Diagram telescope(const Diagram& d, const std::vector<int>& levels) {
  if (levels.empty() || levels.front() != 0) throw std::invalid_argument("telescoping must start at level 0");
  if (levels.size() < 2) throw std::invalid_argument("telescoping needs a level above the root");
  for (size_t i = 1; i < levels.size(); ++i)
    if (levels[i] <= levels[i - 1]) throw std::invalid_argument("telescoping levels must increase");
  if (levels.back() > d.depth()) throw std::invalid_argument("telescoping level beyond depth");

  Diagram out;
  out.levels.resize(levels.size());
  out.levels[0] = d.levels[0];
  for (size_t l = 1; l < levels.size(); ++l) {
    int a = levels[l - 1];
    int b = levels[l];
    // Segment starts per vertex, in deepest-difference segment order; the
    // list at level b is exactly the telescoped in-edge list.
    std::vector<std::vector<int>> starts(d.width(a));
    for (int i = 0; i < d.width(a); ++i) starts[i] = {i};
    for (int n = a + 1; n <= b; ++n) {
      std::vector<std::vector<int>> next(d.width(n));
      for (int i = 0; i < d.width(n); ++i) {
        size_t total = 0;
        for (int s : d.at(n, i).in_edges) total += starts[s].size();
        next[i].reserve(total);
        for (int s : d.at(n, i).in_edges)
          next[i].insert(next[i].end(), starts[s].begin(), starts[s].end());
      }
      starts.swap(next);
    }
    out.levels[l].resize(d.width(b));
    for (int i = 0; i < d.width(b); ++i)
      out.levels[l][i] = Vertex{d.at(b, i).name, std::move(starts[i])};
  }
  return out;
}

FinitePath telescope_path(const Diagram& d, const std::vector<int>& levels, const FinitePath& p) {
  if (p.length() < levels.back()) throw std::invalid_argument("path too short for telescoping");
  FinitePath out;
  out.edges.resize(levels.size() - 1);
  for (size_t l = 1; l < levels.size(); ++l) {
    int a = levels[l - 1];
    int b = levels[l];
    RankTable rt = make_rank_table_from(d, a);
    Dim r = 0;
    for (int n = a + 1; n <= b; ++n) {
      const PathEdge& e = p.edges[n - 1];
      r += rt.cum[n][e.target][e.ordinal - 1];
    }
    out.edges[l - 1] = PathEdge{p.vertex_at(b), static_cast<int>(r) + 1};
  }
  return out;
}

}  // namespace bvtk
