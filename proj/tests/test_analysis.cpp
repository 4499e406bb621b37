// test_analysis.cpp -- candidate searches, evidence reports, certificates,
// telescoping correspondence.
#include <doctest.h>

#include <map>
#include <string>

#include "bvtk/analysis.hpp"
#include "bvtk/families.hpp"
#include "oracles.hpp"

using namespace bvtk;

namespace {

std::string key_of(const Diagram& d, const PathSpec& s, int horizon) {
  FinitePath p = resolve(s, horizon, d);
  std::string out;
  for (const PathEdge& e : p.edges)
    out += std::to_string(e.target) + "." + std::to_string(e.ordinal) + ",";
  return out;
}

}  // namespace

TEST_CASE("candidate specs resolve and are pairwise distinct") {
  Diagram d = gj(5);
  std::vector<PathSpec> cands = candidate_specs(d, 5, 3, default_suffix_rules(d));
  CHECK(cands.size() > 50);
  std::map<std::string, int> seen;
  for (const PathSpec& s : cands) {
    FinitePath p = resolve(s, 5, d);
    CHECK(p.length() == 5);
    ++seen[key_of(d, s, 5)];
  }
  for (const auto& [k, c] : seen) CHECK(c == 1);
}

TEST_CASE("candidate specs cover the full space when prefixes reach the horizon") {
  Diagram d = odometer_single({2}, 3);
  std::vector<PathSpec> cands = candidate_specs(d, 3, 3, default_suffix_rules(d));
  CHECK(cands.size() == static_cast<size_t>(dimension(d, 3, 0)));
}

TEST_CASE("single-column towers never cut above a witness depth") {
  // Orbit translation fixes the rank difference of a pair, so a depth-k pair
  // has the same agreement level at every time and no level above k can ever
  // be simultaneously minimal.
  Diagram d = odometer_single({2, 3, 2}, 5);
  SearchParams params;
  params.max_depth = 3;
  params.window = 80;
  params.prefix_bound = 3;
  EvidenceReport rep = class_evidence(d, params);
  // Prefixes to level 3 crossed with min / max / ordinal-2 continuations.
  CHECK(rep.candidates == 36);
  CHECK(rep.j_max == 4);
  REQUIRE(rep.witness_counts.size() == 3);
  CHECK(rep.witness_counts[0] > 0);
  CHECK(rep.witness_counts[1] > 0);
  CHECK(rep.witness_counts[2] > 0);
  CHECK(rep.u0_consistent);
  CHECK_FALSE(rep.u0_refuted);
  CHECK_FALSE(rep.w_evidence);
  CHECK_FALSE(rep.w0_evidence);
  CHECK(rep.ww_good_k.empty());
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    CHECK(rep.no_next_cut_witness[k - 1] == 1);
    CHECK(rep.max_cut_level[k - 1] == 0);
  }
  REQUIRE_FALSE(rep.witnesses.empty());
  for (const DepthEvidence& ev : rep.witnesses) {
    CAPTURE(ev.k);
    CHECK_FALSE(ev.next_cut_found);
    CHECK_FALSE(ev.all_cuts_found);
    for (const auto& c : ev.cut_times) CHECK_FALSE(c.has_value());
  }
}

TEST_CASE("identically wired towers cut exactly one level above each witness") {
  // With two identically wired columns per level the candidate pool is the
  // eight paths (v1, v2, t, t, t); rank differences are 2, 10, 14 (depth 1)
  // and 12 (depth 2), which land a cut at k+1 and nothing deeper.
  Diagram d = odometer_suo({2, 2}, 5);
  SearchParams params;
  params.max_depth = 2;
  params.window = 40;
  params.prefix_bound = 2;
  EvidenceReport rep = class_evidence(d, params);
  CHECK(rep.candidates == 8);
  CHECK(rep.pairs_scanned == 12);
  CHECK_FALSE(rep.incomplete);
  REQUIRE(rep.witness_counts.size() == 2);
  CHECK(rep.witness_counts[0] == 8);
  CHECK(rep.witness_counts[1] == 4);
  CHECK(rep.witnesses.size() == 10);  // six stored of the eight depth-1 pairs
  CHECK(rep.u0_refuted);
  CHECK_FALSE(rep.u0_consistent);
  CHECK_FALSE(rep.w_evidence);
  CHECK_FALSE(rep.w0_evidence);
  CHECK(rep.ww_good_k.empty());
  CHECK(rep.max_cut_level == std::vector<int>{2, 3});
  CHECK(rep.cut_seen[0][0] == 1);  // j = 2
  CHECK(rep.cut_seen[0][1] == 0);  // j = 3
  CHECK(rep.cut_seen[0][2] == 0);  // j = 4
  CHECK(rep.cut_seen[1][0] == 1);  // j = 3
  CHECK(rep.cut_seen[1][1] == 0);  // j = 4
  for (const DepthEvidence& ev : rep.witnesses) {
    CAPTURE(ev.k);
    CHECK(ev.next_cut_found);
    CHECK_FALSE(ev.all_cuts_found);
  }
}

TEST_CASE("paired-column towers carry cuts at every level above both depths") {
  // The cap is raised so every witness is cut-checked; the canonical
  // column-pair witnesses are then guaranteed to be among them, and their
  // shared dot indices locate a cut at every level without a window search.
  Diagram d = gj(5);
  SearchParams params;
  params.max_depth = 2;
  params.window = 96;
  params.prefix_bound = 3;
  params.witness_cap = 1000000;
  EvidenceReport rep = class_evidence(d, params);
  CHECK_FALSE(rep.incomplete);
  REQUIRE(rep.witness_counts.size() == 2);
  CHECK(rep.witness_counts[0] > 0);
  CHECK(rep.witness_counts[1] > 0);
  CHECK(rep.w_evidence);
  CHECK(rep.w0_evidence);
  CHECK(rep.ww_good_k == std::vector<int>{1, 2});
  CHECK(rep.u0_refuted);
  CHECK(rep.max_cut_level == std::vector<int>{4, 4});
}

TEST_CASE("the pair budget reports incompleteness instead of truncating silently") {
  Diagram d = gj(5);
  SearchParams params;
  params.max_depth = 2;
  params.window = 8;
  params.prefix_bound = 3;
  params.max_pairs = 10;
  EvidenceReport rep = class_evidence(d, params);
  CHECK(rep.incomplete);
  CHECK(rep.pairs_scanned == 11);
}

TEST_CASE("single-vertex towers certify their cutoff structure exactly") {
  auto cert = u0_certificate(odometer_single({2, 3}, 4));
  REQUIRE(cert.has_value());
  CHECK(cert->depth == 4);
  CHECK(cert->radices == std::vector<int>{2, 3, 2, 3});
  CHECK_FALSE(u0_certificate(odometer_suo({2}, 3)).has_value());
  CHECK_FALSE(u0_certificate(gj(3)).has_value());
}

TEST_CASE("uniformly ordered levels yield the constructed pair") {
  Diagram d = odometer_suo({2, 3}, 6);
  for (int n = 1; n <= 4; ++n) {
    Dim m = 3 * dimension(d, std::min(n + 2, 6), 0);
    auto w = uo_pair_witness(d, n, TimeWindow{-m, m});
    CAPTURE(n);
    REQUIRE(w.has_value());
    CHECK(w->cut_time == 0);
    CHECK(w->same_n_coding);
    CHECK(w->vertex_divergence);
    // A deeper simultaneous minimum would need the next width to divide 1.
    CHECK_FALSE(w->deeper_cut.has_value());
  }
  // Swapped wiring is not uniformly ordered, so no pair is constructed.
  CHECK_FALSE(uo_pair_witness(gj(4), 2, TimeWindow{-50, 50}).has_value());
}

TEST_CASE("shape reports track width profiles") {
  KiteShapeReport r1 = kite_shape_check(kite_nondet());
  CHECK(r1.widths == std::vector<int>{3, 3, 2, 1, 1, 1, 1, 1});
  CHECK(r1.last_multi_level == 3);
  CHECK(r1.nonincreasing);
  CHECK(r1.eventually_one);

  KiteShapeReport r2 = kite_shape_check(gj(4));
  CHECK_FALSE(r2.nonincreasing);
  CHECK_FALSE(r2.eventually_one);
  CHECK(r2.last_multi_level == 4);
}

TEST_CASE("bracket levels index the enclosing kept interval") {
  std::vector<int> levels{0, 2, 4, 6};
  CHECK(bracket_level(levels, 0) == 0);
  CHECK(bracket_level(levels, 1) == 0);
  CHECK(bracket_level(levels, 2) == 1);
  CHECK(bracket_level(levels, 5) == 2);
  CHECK(bracket_level(levels, 6) == 3);
  CHECK(bracket_level(levels, 9) == 3);
  CHECK_THROWS_AS(bracket_level({1, 2}, 1), std::invalid_argument);
}

TEST_CASE("telescoping carries depths and cuts along the bracket map") {
  Diagram d = gj(6);
  for (int k = 1; k <= 3; ++k) {
    auto [x, y] = mc_generator_pair(d, k);
    TelescopeCheck tc =
        telescope_correspondence(d, {0, 2, 4, 6}, x, y, k, 4, TimeWindow{-400, 400});
    CAPTURE(k);
    REQUIRE(tc.pair_verified);
    CHECK(tc.l_k == k / 2);
    CHECK(tc.l_j == 2);
    CHECK(tc.part1);
    CHECK(tc.part2);
    CHECK(tc.part3);
    CHECK(tc.part4);
    CHECK(tc.all_parts());
  }
}

TEST_CASE("telescoping with a dropped top level re-verifies in the truncation") {
  Diagram d = gj(7);
  auto [x, y] = mc_generator_pair(d, 1);
  TelescopeCheck tc = telescope_correspondence(d, {0, 2, 4, 6}, x, y, 1, 3, TimeWindow{-96, 96});
  REQUIRE(tc.pair_verified);
  CHECK(tc.l_j == 1);
  CHECK(tc.all_parts());
}

TEST_CASE("equivalence search finds the canonical pairs and verifies them") {
  Diagram d = gj(5);
  SearchParams params;
  params.max_depth = 2;
  params.window = 48;
  params.prefix_bound = 3;
  SneReport rep = sne_evidence(d, params);
  REQUIRE(rep.witness_counts.size() == 2);
  CHECK(rep.witness_counts[0] > 0);
  CHECK(rep.witness_counts[1] > 0);
  REQUIRE_FALSE(rep.witnesses.empty());
  for (const SneWitness& w : rep.witnesses) {
    CAPTURE(w.k);
    CHECK(w.verified);
  }
  CHECK(rep.generator_checked);
  CHECK(rep.generator_agrees);
}

TEST_CASE("equivalence search on split towers returns nothing") {
  // Candidates must diverge strictly below the horizon for the split to bite:
  // a pair that parts ways at the top level faces no per-level conditions at
  // all, and the split parts still share 1-blocks with each other. One extra
  // level kills every candidate pair.
  Diagram d = gj_modified(5);
  SearchParams params;
  params.max_depth = 2;
  params.window = 24;
  params.prefix_bound = 3;
  SneReport rep = sne_evidence(d, params);
  CHECK(rep.witness_counts == std::vector<long>{0, 0});
  CHECK(rep.witnesses.empty());
  CHECK_FALSE(rep.generator_checked);

  // At depth 4 the same search keeps exactly those horizon-straddling pairs,
  // and they verify: equal dots at the top level and block-equal vertices.
  Diagram shallow = gj_modified(4);
  SneReport edge = sne_evidence(shallow, params);
  CHECK_FALSE(edge.witnesses.empty());
  for (const SneWitness& w : edge.witnesses) CHECK(w.verified);
}
