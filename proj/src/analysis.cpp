// analysis.cpp -- evidence searches and correspondence checks.
#include "bvtk/analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "bvtk/blocks.hpp"
#include "bvtk/families.hpp"

namespace bvtk {

namespace {

std::string path_key(const FinitePath& p) {
  std::string s;
  for (const PathEdge& e : p.edges) {
    s += std::to_string(e.target);
    s += '.';
    s += std::to_string(e.ordinal);
    s += ',';
  }
  return s;
}

void collect_prefixes(const Diagram& d, int bound, FinitePath& cur, std::vector<FinitePath>& out) {
  out.push_back(cur);
  int level = cur.length();
  if (level >= bound) return;
  int from = cur.end_vertex();
  for (int t = 0; t < d.width(level + 1); ++t) {
    const auto& in = d.at(level + 1, t).in_edges;
    for (size_t p = 0; p < in.size(); ++p) {
      if (in[p] != from) continue;
      cur.edges.push_back(PathEdge{t, static_cast<int>(p) + 1});
      collect_prefixes(d, bound, cur, out);
      cur.edges.pop_back();
    }
  }
}

FinitePath shifted(FinitePath p, Dim m, const Diagram& d) {
  for (Dim i = 0; i < m; ++i) p = step_path(p, Direction::Succ, d);
  for (Dim i = 0; i > m; --i) p = step_path(p, Direction::Pred, d);
  return p;
}

int agreement_level(const FinitePath& a, const FinitePath& b) {
  int l = 0;
  int n = std::min(a.length(), b.length());
  while (l < n && a.edges[l] == b.edges[l]) ++l;
  return l;
}

bool minimal_through(const FinitePath& p, int j) {
  for (int i = 0; i < j; ++i)
    if (p.edges[i].ordinal != 1) return false;
  return true;
}

// Truncation of d to depth B; in-edge lists are unchanged.
Diagram truncated_diagram(const Diagram& d, int B) {
  Diagram out;
  out.levels.assign(d.levels.begin(), d.levels.begin() + B + 1);
  return out;
}

}  // namespace

std::vector<SuffixRule> default_suffix_rules(const Diagram& d) {
  int max_deg = 1;
  int max_width = 1;
  for (int n = 1; n <= d.depth(); ++n) {
    max_width = std::max(max_width, d.width(n));
    for (int i = 0; i < d.width(n); ++i) max_deg = std::max(max_deg, d.in_degree(n, i));
  }
  std::vector<SuffixRule> rules;
  rules.push_back(SuffixRule{SuffixKind::AllMinimal, {}, {}});
  rules.push_back(SuffixRule{SuffixKind::AllMaximal, {}, {}});
  for (int c = 1; c <= max_deg; ++c) rules.push_back(SuffixRule{SuffixKind::ConstantOrdinal, {c}, {}});
  for (int i = 1; i <= max_width; ++i) rules.push_back(SuffixRule{SuffixKind::VertexTrack, {}, {i}});
  return rules;
}

std::vector<PathSpec> candidate_specs(const Diagram& d, int horizon, int prefix_bound,
                                      const std::vector<SuffixRule>& rules) {
  if (horizon < 1 || horizon > d.depth())
    throw std::invalid_argument("candidate_specs: horizon out of range");
  int bound = std::min(prefix_bound, horizon);
  std::vector<FinitePath> prefixes;
  FinitePath cur;
  collect_prefixes(d, bound, cur, prefixes);

  std::map<std::string, PathSpec> dedup;
  for (const FinitePath& p : prefixes) {
    if (p.length() == horizon) {
      dedup.emplace(path_key(p), PathSpec{p, SuffixRule{}});
      continue;
    }
    for (const SuffixRule& r : rules) {
      PathSpec s{p, r};
      try {
        dedup.emplace(path_key(resolve(s, horizon, d)), s);
      } catch (const ResolutionError&) {
      }
    }
  }
  std::vector<PathSpec> out;
  out.reserve(dedup.size());
  for (auto& [key, spec] : dedup) out.push_back(std::move(spec));
  return out;
}

EvidenceReport class_evidence(const Diagram& d, const SearchParams& params) {
  int N = params.horizon > 0 ? params.horizon : d.depth();
  if (N < 2 || N > d.depth()) throw std::invalid_argument("class_evidence: bad horizon");
  int K = std::min(params.max_depth, N - 1);
  if (K < 1) throw std::invalid_argument("class_evidence: need max_depth >= 1");
  if (params.window < 1 || params.prefix_bound < 0)
    throw std::invalid_argument("class_evidence: bounds must be positive");

  // A shorter horizon means: analyze the depth-N truncation.
  Diagram trunc;
  const Diagram* wd = &d;
  if (N < d.depth()) {
    trunc = truncated_diagram(d, N);
    wd = &trunc;
  }
  const Diagram& work = *wd;

  EvidenceReport rep;
  rep.max_depth = K;
  rep.horizon = N;
  rep.j_max = N - 1;
  rep.window = params.window;
  rep.prefix_bound = params.prefix_bound;
  rep.witness_counts.assign(K, 0);
  rep.long_cuts_seen.assign(K, 0);
  rep.no_next_cut_witness.assign(K, 0);
  rep.max_cut_level.assign(K, 0);
  rep.cut_seen.resize(K);
  for (int k = 1; k <= K; ++k) rep.cut_seen[k - 1].assign(std::max(rep.j_max - k, 0), 0);

  const std::vector<SuffixRule> rules =
      params.suffix_rules.empty() ? default_suffix_rules(work) : params.suffix_rules;
  std::vector<PathSpec> cands = candidate_specs(work, N, params.prefix_bound, rules);
  rep.candidates = static_cast<int>(cands.size());

  RankTable rt = make_rank_table(work);
  std::vector<FinitePath> fulls(cands.size());
  std::vector<OrbitBounds> bounds(cands.size());
  for (size_t i = 0; i < cands.size(); ++i) {
    fulls[i] = resolve(cands[i], N, work);
    Dim dot = dot_index_path(fulls[i], N, rt);
    bounds[i] = OrbitBounds{-dot, rt.dims[N][fulls[i].end_vertex()] - 1 - dot};
  }

  // Pairs in different level-1 edges at time 0 can never share a 1-coding,
  // so bucket by the first edge before scanning.
  std::map<std::pair<int, int>, std::vector<size_t>> buckets;
  for (size_t i = 0; i < cands.size(); ++i)
    buckets[{fulls[i].edges[0].target, fulls[i].edges[0].ordinal}].push_back(i);

  TimeWindow want{-params.window, params.window};
  std::vector<int> stored(K, 0);
  bool budget_hit = false;

  for (const auto& [edge, members] : buckets) {
    for (size_t a = 0; a < members.size() && !budget_hit; ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        if (++rep.pairs_scanned > params.max_pairs) {
          budget_hit = true;
          break;
        }
        size_t i = members[a];
        size_t jx = members[b];
        TimeWindow w;
        w.lo = std::max({want.lo, bounds[i].lo, bounds[jx].lo});
        w.hi = std::min({want.hi, bounds[i].hi, bounds[jx].hi});
        if (w.lo > w.hi) continue;
        FinitePath px = shifted(fulls[i], w.lo, work);
        FinitePath py = shifted(fulls[jx], w.lo, work);
        int best = N + 1;
        Dim best_time = w.lo;
        for (Dim m = w.lo;; ++m) {
          int l = agreement_level(px, py);
          if (l < best) {
            best = l;
            best_time = m;
            if (best < 1) break;  // depth 0, never a witness
          }
          if (m == w.hi) break;
          px = step_path(px, Direction::Succ, work);
          py = step_path(py, Direction::Succ, work);
        }
        if (best < 1 || best > K) continue;
        int k = best;
        ++rep.witness_counts[k - 1];
        if (stored[k - 1] >= params.witness_cap) continue;
        ++stored[k - 1];

        DepthEvidence ev;
        ev.x = cands[i];
        ev.y = cands[jx];
        ev.k = k;
        ev.difference_time = best_time;
        ev.window = w;
        bool all_cuts = true;
        for (int j = k + 1; j <= rep.j_max; ++j) {
          std::optional<Dim> cut = find_cut(cands[i], cands[jx], j, want, work);
          ev.cut_times.push_back(cut);
          if (cut) {
            rep.cut_seen[k - 1][j - k - 1] = 1;
            rep.max_cut_level[k - 1] = std::max(rep.max_cut_level[k - 1], j);
          } else {
            all_cuts = false;
          }
        }
        ev.all_cuts_found = all_cuts && rep.j_max > k;
        ev.next_cut_found = !ev.cut_times.empty() && ev.cut_times.front().has_value();
        if (ev.all_cuts_found) rep.long_cuts_seen[k - 1] = 1;
        if (!ev.cut_times.empty() && !ev.cut_times.front()) rep.no_next_cut_witness[k - 1] = 1;
        rep.witnesses.push_back(std::move(ev));
      }
    }
    if (budget_hit) break;
  }
  rep.incomplete = budget_hit;

  rep.w_evidence = true;
  rep.w0_evidence = true;
  rep.u0_refuted = false;
  for (int k = 1; k <= K; ++k) {
    bool all_j = !rep.cut_seen[k - 1].empty() || rep.j_max == k;
    for (char seen : rep.cut_seen[k - 1])
      if (!seen) all_j = false;
    if (!all_j || rep.witness_counts[k - 1] == 0) rep.w_evidence = false;
    if (!rep.long_cuts_seen[k - 1]) rep.w0_evidence = false;
    if (rep.long_cuts_seen[k - 1]) rep.ww_good_k.push_back(k);
    if (!rep.cut_seen[k - 1].empty() && rep.cut_seen[k - 1][0]) rep.u0_refuted = true;
  }
  rep.u0_consistent = !rep.u0_refuted;
  return rep;
}

std::optional<U0Certificate> u0_certificate(const Diagram& d) {
  U0Certificate cert;
  cert.depth = d.depth();
  for (int n = 1; n <= d.depth(); ++n) {
    if (d.width(n) != 1) return std::nullopt;
    cert.radices.push_back(d.in_degree(n, 0));
  }
  return cert;
}

std::optional<UoPairWitness> uo_pair_witness(const Diagram& d, int n, TimeWindow w) {
  if (n < 1 || n + 1 > d.depth()) return std::nullopt;
  if (d.width(n + 1) < 2) return std::nullopt;
  if (!uniform_order_test(d, n + 1)) return std::nullopt;

  UoPairWitness out;
  out.n = n;
  SuffixRule col1{SuffixKind::VertexTrack, {}, {1}};
  out.x = PathSpec{extremal_path_into(d, n + 1, 0, Extremal::Min), col1};
  out.y = PathSpec{extremal_path_into(d, n + 1, 1, Extremal::Min), col1};
  try {
    out.window = clip_window(out.x, out.y, w, d.depth(), d);
    std::optional<Dim> cut = find_cut(out.x, out.y, n + 1, w, d);
    if (!cut) return std::nullopt;  // cannot happen: both dots are 0
    out.cut_time = *cut;
    out.same_n_coding = same_k_coding_window(out.x, out.y, n, w, d);
    if (n + 2 <= d.depth()) out.deeper_cut = find_cut(out.x, out.y, n + 2, w, d);

    int N = d.depth();
    FinitePath px = shifted(resolve(out.x, N, d), out.window.lo, d);
    FinitePath py = shifted(resolve(out.y, N, d), out.window.lo, d);
    out.vertex_divergence = true;
    for (Dim m = out.window.lo;; ++m) {
      if (px.vertex_at(n + 1) == py.vertex_at(n + 1)) {
        out.vertex_divergence = false;
        break;
      }
      if (m == out.window.hi) break;
      px = step_path(px, Direction::Succ, d);
      py = step_path(py, Direction::Succ, d);
    }
  } catch (const ResolutionError&) {
    return std::nullopt;
  }
  return out;
}

KiteShapeReport kite_shape_check(const Diagram& d) {
  KiteShapeReport rep;
  rep.nonincreasing = true;
  for (int n = 1; n <= d.depth(); ++n) {
    int w = d.width(n);
    rep.widths.push_back(w);
    if (w > 1) rep.last_multi_level = n;
    if (n > 1 && w > d.width(n - 1)) rep.nonincreasing = false;
  }
  rep.eventually_one = rep.last_multi_level < d.depth();
  return rep;
}

int bracket_level(const std::vector<int>& levels, int n) {
  if (levels.empty() || levels[0] != 0)
    throw std::invalid_argument("bracket_level: levels must start at 0");
  int l = 0;
  for (size_t i = 1; i < levels.size() && levels[i] <= n; ++i) l = static_cast<int>(i);
  return l;
}

TelescopeCheck telescope_correspondence(const Diagram& d, const std::vector<int>& levels,
                                        const PathSpec& x, const PathSpec& y, int k, int j,
                                        TimeWindow w) {
  TelescopeCheck out;
  out.levels = levels;
  out.k = k;
  out.j = j;
  if (levels.size() < 2 || levels[0] != 0)
    throw std::invalid_argument("telescope_correspondence: levels must start at 0");
  int B = levels.back();
  if (B > d.depth()) throw std::invalid_argument("telescope_correspondence: levels exceed depth");
  if (k < 0 || j <= k || j > B)
    throw std::invalid_argument("telescope_correspondence: need 0 <= k < j <= levels.back()");

  // The checked instance is the depth-B truncation, so that the kept top
  // level makes telescoping an order isomorphism of whole path spaces.
  Diagram dd = truncated_diagram(d, B);
  PathSpec xx{resolve(x, B, d), SuffixRule{}};
  PathSpec yy{resolve(y, B, d), SuffixRule{}};

  std::optional<DepthWitness> dw = depth_witness(xx, yy, B - 1, w, dd);
  std::optional<Dim> cut = find_cut(xx, yy, j, w, dd);
  out.pair_verified = dw && dw->k == k && cut.has_value();
  if (!out.pair_verified) return out;
  out.cut_time = *cut;

  out.l_k = bracket_level(levels, k);
  out.l_j = bracket_level(levels, j);
  int L = static_cast<int>(levels.size()) - 1;

  Diagram d2 = telescope(dd, levels);
  FinitePath ix = telescope_path(dd, levels, resolve(xx, B, dd));
  FinitePath iy = telescope_path(dd, levels, resolve(yy, B, dd));
  PathSpec x2{ix, SuffixRule{}};
  PathSpec y2{iy, SuffixRule{}};

  std::optional<DepthWitness> dw2 = depth_witness(x2, y2, L - 1, w, d2);
  out.image_depth = dw2 ? dw2->k : -1;
  out.part1 = out.image_depth == out.l_k;

  if (out.l_j == 0) {
    out.image_cut = out.cut_time;  // every time is minimal through level 0
    out.part2 = true;
  } else {
    out.image_cut = find_cut(x2, y2, out.l_j, w, d2);
    FinitePath sx = shifted(ix, out.cut_time, d2);
    FinitePath sy = shifted(iy, out.cut_time, d2);
    out.part2 =
        out.image_cut.has_value() && minimal_through(sx, out.l_j) && minimal_through(sy, out.l_j);
  }

  if (out.image_depth >= 0) {
    int lo = levels[out.image_depth];
    int hi = out.image_depth + 1 <= L ? levels[out.image_depth + 1]
                                      : std::numeric_limits<int>::max();
    out.part3 = lo <= k && k < hi;
  }

  if (out.image_cut) {
    int lifted = levels[out.l_j];
    FinitePath sx = shifted(resolve(xx, B, dd), *out.image_cut, dd);
    FinitePath sy = shifted(resolve(yy, B, dd), *out.image_cut, dd);
    out.part4 = minimal_through(sx, lifted) && minimal_through(sy, lifted);
  }
  return out;
}

SneReport sne_evidence(const Diagram& d, const SearchParams& params) {
  int N = params.horizon > 0 ? params.horizon : d.depth();
  if (N < 2 || N > d.depth()) throw std::invalid_argument("sne_evidence: bad horizon");
  int K = std::min(params.max_depth, N - 1);
  if (K < 1) throw std::invalid_argument("sne_evidence: need max_depth >= 1");

  Diagram trunc;
  const Diagram* wd = &d;
  if (N < d.depth()) {
    trunc = truncated_diagram(d, N);
    wd = &trunc;
  }
  const Diagram& work = *wd;

  SneReport rep;
  rep.max_k = K;
  rep.horizon = N;
  rep.prefix_bound = params.prefix_bound;
  rep.window = params.window;
  rep.witness_counts.assign(K, 0);

  const std::vector<SuffixRule> rules =
      params.suffix_rules.empty() ? default_suffix_rules(work) : params.suffix_rules;
  std::vector<PathSpec> cands = candidate_specs(work, N, params.prefix_bound, rules);
  rep.candidates = static_cast<int>(cands.size());

  RankTable rt = make_rank_table(work);
  std::vector<FinitePath> fulls(cands.size());
  for (size_t i = 0; i < cands.size(); ++i) fulls[i] = resolve(cands[i], N, work);

  TimeWindow want{-params.window, params.window};

  for (int k = 1; k <= K; ++k) {
    // Block-equivalence classes of the vertices at each level above k.
    std::vector<std::vector<int>> cls(N + 1);
    for (int n = k + 1; n <= N; ++n) {
      cls[n].assign(work.width(n), -1);
      int next = 0;
      for (int v = 0; v < work.width(n); ++v) {
        if (cls[n][v] >= 0) continue;
        cls[n][v] = next;
        for (int u = v + 1; u < work.width(n); ++u)
          if (cls[n][u] < 0 && k_equivalent_vertices(work, n, v, u, k)) cls[n][u] = next;
        ++next;
      }
    }
    // Equal fingerprints are exactly the k-equivalence relation.
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < cands.size(); ++i) {
      std::string fp = path_key(fulls[i].truncated(k));
      fp += '|';
      for (int n = k + 1; n <= N; ++n) {
        fp += std::to_string(dot_index_path(fulls[i], n, rt));
        fp += ':';
        fp += std::to_string(cls[n][fulls[i].vertex_at(n)]);
        fp += ',';
      }
      groups[fp].push_back(i);
    }
    int stored = 0;
    for (const auto& [fp, members] : groups) {
      size_t g = members.size();
      if (g < 2) continue;
      rep.witness_counts[k - 1] += static_cast<long>(g) * static_cast<long>(g - 1) / 2;
      for (size_t t = 1; t < g && stored < params.witness_cap; ++t, ++stored) {
        SneWitness wit;
        wit.x = cands[members[0]];
        wit.y = cands[members[t]];
        wit.k = k;
        wit.verified = k_equivalent_up_to(wit.x, wit.y, k, N, work) &&
                       same_k_coding_window(wit.x, wit.y, k, want, work);
        rep.witnesses.push_back(std::move(wit));
      }
    }
  }

  if (gj_like(work)) {
    rep.generator_checked = true;
    rep.generator_agrees = true;
    std::map<std::string, size_t> keys;
    for (size_t i = 0; i < cands.size(); ++i) keys.emplace(path_key(fulls[i]), i);
    for (int k = 1; k <= K && k + 1 <= work.depth(); ++k) {
      auto [gx, gy] = mc_generator_pair(work, k);
      bool equivalent = k_equivalent_up_to(gx, gy, k, N, work);
      bool in_space = keys.count(path_key(resolve(gx, N, work))) > 0 &&
                      keys.count(path_key(resolve(gy, N, work))) > 0;
      if (!in_space) continue;
      bool found = rep.witness_counts[k - 1] > 0;
      if (equivalent != found) rep.generator_agrees = false;
    }
  }
  return rep;
}

}  // namespace bvtk
