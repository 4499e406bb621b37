// families.cpp -- worked example constructors.
#include "bvtk/families.hpp"

#include <numeric>
#include <stdexcept>

namespace bvtk {

namespace {

std::string vname(int level, int index1) {
  return "v" + std::to_string(level) + "_" + std::to_string(index1);
}

Diagram with_root(int N) {
  Diagram d;
  d.levels.resize(static_cast<size_t>(N) + 1);
  d.levels[0] = {Vertex{"root", {}}};
  return d;
}

// Ordinal of the unique edge from `source` into the vertex; requires the
// in-edge list to mention the source exactly once.
int ordinal_from(const Diagram& d, int level, int target, int source) {
  const auto& in = d.at(level, target).in_edges;
  int found = 0;
  int ordinal = 0;
  for (size_t p = 0; p < in.size(); ++p) {
    if (in[p] == source) {
      ++found;
      ordinal = static_cast<int>(p) + 1;
    }
  }
  if (found != 1) throw std::invalid_argument("ordinal_from: edge not unique");
  return ordinal;
}

}  // namespace

Diagram gj(int N) {
  if (N < 2) throw std::invalid_argument("gj: depth must be at least 2");
  Diagram d = with_root(N);
  for (int n = 1; n <= N; ++n) {
    d.levels[n].reserve(2 * n);
    for (int m = 1; m <= 2 * n; ++m) {
      Vertex v{vname(n, m), {}};
      if (n == 1) {
        v.in_edges = {0};
      } else {
        v.in_edges.resize(2 * (n - 1));
        std::iota(v.in_edges.begin(), v.in_edges.end(), 0);
        // Swap the ordinals of v(n-1,2h) and v(n-1,2h+1) into v(n,2h+1).
        int h = (m - 1) / 2;
        if (m % 2 == 1 && h >= 1 && h <= n - 2)
          std::swap(v.in_edges[2 * h - 1], v.in_edges[2 * h]);
      }
      d.levels[n].push_back(std::move(v));
    }
  }
  return d;
}

Diagram split_vertex(const Diagram& d, int level, int index, int t) {
  if (level < 1 || level > d.depth())
    throw std::invalid_argument("split_vertex: level out of range");
  const Vertex& v = d.at(level, index);
  int deg = d.in_degree(level, index);
  if (t < 1 || t >= deg) throw std::invalid_argument("split_vertex: split position out of range");
  Diagram out = d;
  Vertex left{v.name + "p", {v.in_edges.begin(), v.in_edges.begin() + t}};
  Vertex right{v.name + "q", {v.in_edges.begin() + t, v.in_edges.end()}};
  out.levels[level][index] = std::move(left);
  out.levels[level].insert(out.levels[level].begin() + index + 1, std::move(right));
  if (level < d.depth()) {
    for (Vertex& u : out.levels[level + 1]) {
      std::vector<int> in;
      in.reserve(u.in_edges.size() + 1);
      for (int s : u.in_edges) {
        if (s < index) {
          in.push_back(s);
        } else if (s > index) {
          in.push_back(s + 1);
        } else {
          in.push_back(index);
          in.push_back(index + 1);
        }
      }
      u.in_edges = std::move(in);
    }
  }
  return out;
}

Diagram gj_modified(int N) {
  if (N < 3) throw std::invalid_argument("gj_modified: depth must be at least 3");
  Diagram d = gj(N);
  for (int j = 2; j <= N; ++j) {
    for (int i = 1; i <= j - 1; ++i) {
      int idx = d.index_of(j, vname(j, 2 * i));
      d = split_vertex(d, j, idx, 1);
      // The left part keeps exactly the lowest in-edge, so its block is the
      // block of the first vertex one level down.
      if (dimension(d, j, idx) != dimension(d, j - 1, 0))
        throw std::logic_error("gj_modified: split block mismatch");
    }
  }
  return d;
}

Diagram odometer_single(const std::vector<int>& radices, int N) {
  if (N < 1) throw std::invalid_argument("odometer: depth must be at least 1");
  if (radices.empty()) throw std::invalid_argument("odometer: need at least one radix");
  for (int q : radices)
    if (q < 2) throw std::invalid_argument("odometer: radices must be at least 2");
  Diagram d = with_root(N);
  for (int n = 1; n <= N; ++n) {
    int q = radices[(n - 1) % radices.size()];
    d.levels[n] = {Vertex{vname(n, 1), std::vector<int>(q, 0)}};
  }
  return d;
}

Diagram odometer_suo(const std::vector<int>& counts, int N) {
  if (N < 1) throw std::invalid_argument("odometer: depth must be at least 1");
  if (counts.empty()) throw std::invalid_argument("odometer: need at least one vertex count");
  for (int q : counts)
    if (q < 2) throw std::invalid_argument("odometer: vertex counts must be at least 2");
  Diagram d = with_root(N);
  for (int n = 1; n <= N; ++n) {
    int q = counts[(n - 1) % counts.size()];
    int prev = n == 1 ? 1 : counts[(n - 2) % counts.size()];
    std::vector<int> in(prev);
    std::iota(in.begin(), in.end(), 0);
    d.levels[n].reserve(q);
    // Identical in-edge lists put the edge of ordinal i at source v(n-1,i)
    // for every target, the strongly uniformly ordered shape.
    for (int m = 1; m <= q; ++m) d.levels[n].push_back(Vertex{vname(n, m), in});
  }
  return d;
}

Diagram fig1_family(int N) {
  if (N < 3) throw std::invalid_argument("fig1_family: depth must be at least 3");
  Diagram d = with_root(N);
  d.levels[1] = {Vertex{"u", {0}}, Vertex{"v", {0}}};
  for (int n = 2; n <= N; ++n) {
    std::string tag = std::to_string(n);
    if (n % 2 == 0) {
      d.levels[n] = {Vertex{"xx" + tag, {0, 0}}, Vertex{"xxx" + tag, {0, 0, 0}},
                     Vertex{"xyy" + tag, {0, 1, 1}}, Vertex{"yyx" + tag, {1, 1, 0}}};
    } else {
      d.levels[n] = {Vertex{"a" + tag, {0, 2, 1}}, Vertex{"b" + tag, {1, 3, 0}}};
    }
  }
  return d;
}

Diagram dm2ww(int N) {
  if (N < 5) throw std::invalid_argument("dm2ww: depth must be at least 5");
  Diagram d = gj(N);
  for (int j = 4; j <= N; ++j) {
    for (int h = 2; h <= j - 2; h += 2) {
      auto& in = d.levels[j][2 * h].in_edges;  // v(j, 2h+1)
      std::iota(in.begin(), in.end(), 0);
    }
  }
  return d;
}

Diagram kite_nondet() {
  Diagram d = with_root(8);
  d.levels[1] = {Vertex{"a", {0}}, Vertex{"b", {0}}, Vertex{"c", {0}}};
  d.levels[2] = {Vertex{"u", {0, 1}}, Vertex{"v", {0, 1}}, Vertex{"w", {1, 2}}};
  d.levels[3] = {Vertex{"A", {0, 2}}, Vertex{"B", {2, 1}}};
  d.levels[4] = {Vertex{"AB", {0, 1}}};
  for (int n = 5; n <= 8; ++n) d.levels[n] = {Vertex{"t" + std::to_string(n), {0, 0}}};
  return d;
}

Diagram kite_deterministic(const std::vector<int>& profile, int N) {
  if (N < 1) throw std::invalid_argument("kite_deterministic: depth must be at least 1");
  if (profile.empty()) throw std::invalid_argument("kite_deterministic: empty width profile");
  if (static_cast<int>(profile.size()) > N)
    throw std::invalid_argument("kite_deterministic: profile longer than depth");
  std::vector<int> w(profile);
  w.resize(N, 1);
  for (int k : w)
    if (k < 1) throw std::invalid_argument("kite_deterministic: widths must be at least 1");
  for (int n = 1; n < N; ++n)
    if (w[n] > w[n - 1])
      throw std::invalid_argument("kite_deterministic: width profile must not increase");
  if (w[N - 1] != 1) throw std::invalid_argument("kite_deterministic: profile must end at width 1");

  Diagram d = with_root(N);
  for (int n = 1; n <= N; ++n) {
    int k = w[n - 1];
    int kp = n == 1 ? 1 : w[n - 2];
    d.levels[n].reserve(k);
    for (int i = 0; i < k; ++i) {
      Vertex v{"k" + std::to_string(n) + "_" + std::to_string(i + 1), {}};
      if (n == 1) {
        v.in_edges = {0};
      } else if (kp == 1) {
        // Two parallel edges keep the path count growing along width-1 runs.
        v.in_edges = {0, 0};
      } else {
        // Rotation starting at the target's own position: source s gets
        // ordinal ((s - i) mod kp) + 1 into target i, so the ordinals leaving
        // s are pairwise distinct as long as widths never increase.
        v.in_edges.resize(kp);
        for (int t = 0; t < kp; ++t) v.in_edges[t] = (i + t) % kp;
      }
      d.levels[n].push_back(std::move(v));
    }
  }
  return d;
}

bool gj_like(const Diagram& d) {
  if (d.depth() < 2) return false;
  for (int n = 1; n <= d.depth(); ++n) {
    if (d.width(n) != 2 * n) return false;
    int prev = n == 1 ? 1 : 2 * (n - 1);
    for (int i = 0; i < d.width(n); ++i) {
      const auto& in = d.at(n, i).in_edges;
      if (static_cast<int>(in.size()) != prev) return false;
      std::vector<char> seen(prev, 0);
      for (int s : in) {
        if (s < 0 || s >= prev || seen[s]) return false;
        seen[s] = 1;
      }
    }
  }
  return true;
}

std::pair<PathSpec, PathSpec> mc_generator_pair(const Diagram& d, int k) {
  if (!gj_like(d)) throw std::invalid_argument("mc_generator_pair: not a paired-column diagram");
  if (k < 1 || k + 1 > d.depth()) throw std::invalid_argument("mc_generator_pair: level out of range");
  FinitePath base = extremal_path_into(d, k, 0, Extremal::Min);
  PathSpec x;
  PathSpec y;
  x.prefix = base;
  x.prefix.edges.push_back(PathEdge{2 * k - 1, ordinal_from(d, k + 1, 2 * k - 1, 0)});
  x.suffix = SuffixRule{SuffixKind::VertexTrack, {}, {2 * k}};
  y.prefix = base;
  y.prefix.edges.push_back(PathEdge{2 * k, ordinal_from(d, k + 1, 2 * k, 0)});
  y.suffix = SuffixRule{SuffixKind::VertexTrack, {}, {2 * k + 1}};
  return {x, y};
}

bool runs_in_mc(const FinitePath& p, int k) {
  for (int n = k + 1; n <= p.length(); ++n) {
    int v = p.vertex_at(n);
    if (v != 2 * k - 1 && v != 2 * k) return false;
  }
  return true;
}

Diagram make_family(const FamilyParams& p) {
  if (p.family == "gj") return gj(p.depth);
  if (p.family == "gj-mod") return gj_modified(p.depth);
  if (p.family == "odometer") {
    if (!p.counts.empty() && !p.radices.empty())
      throw std::invalid_argument("odometer: give radices or vertex counts, not both");
    if (!p.counts.empty()) return odometer_suo(p.counts, p.depth);
    if (!p.radices.empty()) return odometer_single(p.radices, p.depth);
    throw std::invalid_argument("odometer: need radices or vertex counts");
  }
  if (p.family == "fig1") return fig1_family(p.depth);
  if (p.family == "dm2ww") return dm2ww(p.depth);
  if (p.family == "kite") return kite_nondet();
  if (p.family == "kite-det") return kite_deterministic(p.profile, p.depth);
  throw std::invalid_argument("unknown family: '" + p.family + "'");
}

}  // namespace bvtk
