// analysis.hpp -- bounded class-membership evidence, exact narrow
// certificates, telescoping correspondence checks, shape reports.
//
// The class definitions quantify over all infinite paths; a truncation can
// only certify existentials (a found witness, a found cut) exactly. Every
// universal statement below is reported as consistency within the stated
// bounds, never as truth.
#pragma once

#include <optional>
#include <vector>

#include "bvtk/diagram.hpp"
#include "bvtk/dynamics.hpp"
#include "bvtk/pairs.hpp"
#include "bvtk/pathspec.hpp"

namespace bvtk {

struct SearchParams {
  int max_depth = 2;    // largest pair depth K searched for
  int horizon = 0;      // resolution level N; 0 means the diagram depth
  Dim window = 64;      // orbit times scanned: [-window, window], clipped
  int prefix_bound = 3;
  std::vector<SuffixRule> suffix_rules;  // empty: derived default set
  long max_pairs = 5000000;              // pair-scan budget
  int witness_cap = 6;                   // stored + cut-checked witnesses per depth
};

// min | max | const:c for c up to the largest in-degree | track:col:i for i
// up to the largest width. Rules that fail to resolve are skipped later.
std::vector<SuffixRule> default_suffix_rules(const Diagram& d);

// Every prefix of length <= prefix_bound crossed with the suffix rules,
// kept when it resolves to `horizon`, deduplicated by the resolved path.
std::vector<PathSpec> candidate_specs(const Diagram& d, int horizon, int prefix_bound,
                                      const std::vector<SuffixRule>& rules);

// One depth witness with its cut search results.
struct DepthEvidence {
  PathSpec x;
  PathSpec y;
  int k = 0;
  Dim difference_time = 0;
  TimeWindow window;
  std::vector<std::optional<Dim>> cut_times;  // j = k+1 .. j_max
  bool all_cuts_found = false;
  bool next_cut_found = false;  // cut at j = k+1
};

struct EvidenceReport {
  int max_depth = 0;
  int horizon = 0;
  int j_max = 0;  // cuts searched for j in (k, j_max]
  Dim window = 0;
  int prefix_bound = 0;
  int candidates = 0;
  long pairs_scanned = 0;
  bool incomplete = false;  // pair budget exhausted

  std::vector<DepthEvidence> witnesses;      // capped per depth
  std::vector<long> witness_counts;          // [k-1], every pair counted
  std::vector<std::vector<char>> cut_seen;   // [k-1][j-(k+1)], over checked witnesses
  std::vector<char> long_cuts_seen;          // [k-1]
  std::vector<char> no_next_cut_witness;     // [k-1], witness without a (k+1) cut in window
  std::vector<int> max_cut_level;            // [k-1], deepest cut found; 0 when none

  // Derived flags, all relative to the bounds above.
  bool w_evidence = false;    // every k: every tested j has some witness with a j cut
  bool w0_evidence = false;   // every k: one witness carries cuts at all tested j
  std::vector<int> ww_good_k; // the k whose long-cut witness exists
  bool u0_consistent = false; // no checked witness had a (k+1) cut
  bool u0_refuted = false;    // some witness has a (k+1) cut (exact evidence)
};

EvidenceReport class_evidence(const Diagram& d, const SearchParams& params);

// Exact certificate: one vertex per level makes every level a cutoff, since
// distinct points in one column never share a minimal prefix time.
struct U0Certificate {
  int depth = 0;
  std::vector<int> radices;  // in-degree per level
};
std::optional<U0Certificate> u0_certificate(const Diagram& d);

// The constructed pair minimal into distinct vertices of a strongly
// uniformly ordered level n+1: same n-codings, a cut at m = 0, vertices at
// level n+1 differing at every scanned time. Requires width(n+1) > 1 and
// uniform_order_test(n+1); returns none otherwise. The check outcomes are
// reported, not assumed.
struct UoPairWitness {
  int n = 0;
  PathSpec x;
  PathSpec y;
  Dim cut_time = 0;
  TimeWindow window;
  bool same_n_coding = false;
  bool vertex_divergence = false;
  std::optional<Dim> deeper_cut;  // (n+2) cut search result, when n+2 exists
};
std::optional<UoPairWitness> uo_pair_witness(const Diagram& d, int n, TimeWindow w);

struct KiteShapeReport {
  std::vector<int> widths;      // levels 1..N
  int last_multi_level = 0;     // 0 when every level has one vertex
  bool nonincreasing = false;
  bool eventually_one = false;  // a nonempty single-vertex tail exists
};
KiteShapeReport kite_shape_check(const Diagram& d);

// Index l with levels[l] <= n < levels[l+1] (the list is open-ended above).
int bracket_level(const std::vector<int>& levels, int n);

// Re-verifies the pair as a depth-k witness with a j cut, telescopes, and
// checks the four correspondence statements on this instance:
//   1. the image pair has depth bracket(k);
//   2. the image pair has a bracket(j) cut at the original cut time;
//   3. the original depth lies in [levels[k'], levels[k'+1]) for the
//      measured image depth k';
//   4. at the image cut time the original pair is minimal into
//      levels[bracket(j)].
struct TelescopeCheck {
  std::vector<int> levels;
  int k = 0;
  int j = 0;
  int l_k = 0;
  int l_j = 0;
  bool pair_verified = false;  // depth k and j cut confirmed in the original
  Dim cut_time = 0;
  int image_depth = -1;
  std::optional<Dim> image_cut;
  bool part1 = false;
  bool part2 = false;
  bool part3 = false;
  bool part4 = false;
  bool all_parts() const { return part1 && part2 && part3 && part4; }
};
TelescopeCheck telescope_correspondence(const Diagram& d, const std::vector<int>& levels,
                                        const PathSpec& x, const PathSpec& y, int k, int j,
                                        TimeWindow w);

// Equivalence witnesses: pairs agreeing to level k that share block and dot
// at every level in (k, N]. Found by exact fingerprint grouping over the
// candidate space; on paired-column diagrams the canonical generator pair is
// cross-checked against the search.
struct SneWitness {
  PathSpec x;
  PathSpec y;
  int k = 0;
  bool verified = false;  // definition re-checked plus a coding-window scan
};
struct SneReport {
  int max_k = 0;
  int horizon = 0;
  int prefix_bound = 0;
  Dim window = 0;
  int candidates = 0;
  std::vector<long> witness_counts;  // [k-1], pairs in matching groups
  std::vector<SneWitness> witnesses;
  bool generator_checked = false;
  bool generator_agrees = false;  // generator equivalence matches search hits per k
};
SneReport sne_evidence(const Diagram& d, const SearchParams& params);

}  // namespace bvtk
