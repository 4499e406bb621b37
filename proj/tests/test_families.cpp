// test_families.cpp -- the worked example constructors and their invariants.
#include <doctest.h>

#include <numeric>

#include "bvtk/blocks.hpp"
#include "bvtk/families.hpp"
#include "bvtk/pairs.hpp"

using namespace bvtk;

TEST_CASE("paired-column family: shape, swaps, dimensions") {
  Diagram d = gj(8);
  CHECK(validate(d).violations.empty());
  CHECK(validate(d).properly_ordered_at_horizon);
  CHECK(validate(d).simplicity_evidence);

  for (int n = 1; n <= 8; ++n) CHECK(d.width(n) == 2 * n);

  // Path counts double-factorially: 1, 2, 8, 48, 384, 3840, 46080, 645120.
  std::vector<Dim> want{1, 2, 8, 48, 384, 3840, 46080, 645120};
  for (int n = 1; n <= 8; ++n)
    for (int v = 0; v < d.width(n); ++v) CHECK(dimension(d, n, v) == want[n - 1]);

  // The only reordered in-lists sit at odd columns 3..2n-3.
  CHECK(d.at(3, 2).in_edges == std::vector<int>{0, 2, 1, 3});
  CHECK(d.at(3, 0).in_edges == std::vector<int>{0, 1, 2, 3});
  CHECK(d.at(3, 4).in_edges == std::vector<int>{0, 1, 2, 3});
  CHECK(d.at(4, 2).in_edges == std::vector<int>{0, 2, 1, 3, 4, 5});
  CHECK(d.at(4, 4).in_edges == std::vector<int>{0, 1, 2, 4, 3, 5});
  CHECK(d.at(4, 6).in_edges == std::vector<int>{0, 1, 2, 3, 4, 5});

  CHECK(gj_like(d));
  CHECK_THROWS_AS(gj(1), std::invalid_argument);
}

TEST_CASE("vertex splitting rewires the next level to the adjacent pair") {
  Diagram d = gj(3);
  int idx = d.index_of(2, "v2_2");
  Diagram s = split_vertex(d, 2, idx, 1);
  CHECK(validate(s).violations.empty());
  CHECK(s.width(2) == 5);
  CHECK(s.at(2, idx).name == "v2_2p");
  CHECK(s.at(2, idx + 1).name == "v2_2q");
  CHECK(s.at(2, idx).in_edges == std::vector<int>{0});
  CHECK(s.at(2, idx + 1).in_edges == std::vector<int>{1});
  // Level 3 identity list (0,1,2,3) becomes (0,1,2,3,4) with the pair inline.
  CHECK(s.at(3, 0).in_edges == std::vector<int>{0, 1, 2, 3, 4});
  // The swapped list (0,2,1,3) expands the split vertex in place and shifts
  // later sources: 0 -> 0, 2 -> 3, 1 -> (1,2), 3 -> 4.
  CHECK(s.at(3, 2).in_edges == std::vector<int>{0, 3, 1, 2, 4});

  CHECK_THROWS_AS(split_vertex(d, 2, idx, 0), std::invalid_argument);
  CHECK_THROWS_AS(split_vertex(d, 2, idx, 2), std::invalid_argument);
}

TEST_CASE("left split parts carry the block of the first lower vertex") {
  Diagram d = gj_modified(5);
  CHECK(validate(d).violations.empty());
  for (int j = 2; j <= 5; ++j) CHECK(d.width(j) == 3 * j - 1);
  CHECK_FALSE(gj_like(d));

  Diagram g = gj(5);
  for (int j = 3; j <= 5; ++j) {
    for (int i = 1; i <= j - 1; ++i) {
      int p = d.index_of(j, "v" + std::to_string(j) + "_" + std::to_string(2 * i) + "p");
      int q = d.index_of(j, "v" + std::to_string(j) + "_" + std::to_string(2 * i) + "q");
      REQUIRE(p >= 0);
      REQUIRE(q >= 0);
      // Blocks concatenate: B(split left) + B(split right) = B(original).
      Block left = basic_block(d, j, p, 1);
      Block right = basic_block(d, j, q, 1);
      Block orig = basic_block(g, j, 2 * i - 1, 1);
      std::vector<Dim> glued = left.letters;
      glued.insert(glued.end(), right.letters.begin(), right.letters.end());
      CAPTURE(j);
      CAPTURE(i);
      CHECK(glued == orig.letters);
      CHECK(left.length() < orig.length());
    }
  }
}

TEST_CASE("odometer shapes") {
  Diagram d1 = odometer_single({2, 3}, 5);
  CHECK(validate(d1).violations.empty());
  for (int n = 1; n <= 5; ++n) CHECK(d1.width(n) == 1);
  CHECK(dimension(d1, 5, 0) == 2 * 3 * 2 * 3 * 2);

  Diagram d2 = odometer_suo({2, 3}, 4);
  CHECK(validate(d2).violations.empty());
  CHECK(d2.width(1) == 2);
  CHECK(d2.width(2) == 3);
  CHECK(d2.width(3) == 2);
  CHECK(d2.at(3, 0).in_edges == std::vector<int>{0, 1, 2});
  CHECK(d2.at(3, 1).in_edges == std::vector<int>{0, 1, 2});

  CHECK_THROWS_AS(odometer_single({1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(odometer_suo({}, 3), std::invalid_argument);
}

TEST_CASE("alternating family wiring") {
  Diagram d = fig1_family(6);
  CHECK(validate(d).violations.empty());
  CHECK(validate(d).properly_ordered_at_horizon);
  CHECK(d.width(1) == 2);
  CHECK(d.width(2) == 4);
  CHECK(d.width(3) == 2);
  CHECK(d.at(2, 2).in_edges == std::vector<int>{0, 1, 1});
  CHECK(d.at(3, 1).in_edges == std::vector<int>{1, 3, 0});
  CHECK(d.at(4, 3).in_edges == std::vector<int>{1, 1, 0});
  CHECK_FALSE(gj_like(d));
}

TEST_CASE("selective unswapping touches only even pair positions above level 3") {
  Diagram g = gj(6);
  Diagram d = dm2ww(6);
  CHECK(validate(d).violations.empty());
  CHECK(gj_like(d));
  for (int j = 1; j <= 6; ++j) {
    for (int v = 0; v < d.width(j); ++v) {
      bool unswapped = false;
      if (j >= 4 && v % 2 == 0 && v >= 4) {
        int h = v / 2;  // v = 2h in 0-based indexing is column 2h+1
        if (h % 2 == 0 && h <= j - 2) unswapped = true;
      }
      CAPTURE(j);
      CAPTURE(v);
      std::vector<int> identity(d.at(j, v).in_edges.size());
      std::iota(identity.begin(), identity.end(), 0);
      if (unswapped)
        CHECK(d.at(j, v).in_edges == identity);
      else
        CHECK(d.at(j, v).in_edges == g.at(j, v).in_edges);
    }
  }
}

TEST_CASE("bounded-width samples") {
  Diagram k1 = kite_nondet();
  CHECK(validate(k1).violations.empty());
  CHECK(k1.depth() == 8);
  CHECK(k1.width(1) == 3);
  CHECK(k1.width(4) == 1);
  CHECK(k1.width(8) == 1);

  Diagram k2 = kite_deterministic({3, 2, 2, 1}, 8);
  CHECK(validate(k2).violations.empty());
  CHECK(k2.width(1) == 3);
  CHECK(k2.width(2) == 2);
  CHECK(k2.width(3) == 2);
  for (int n = 4; n <= 8; ++n) CHECK(k2.width(n) == 1);
  CHECK(dimension(k2, 8, 0) > 1);

  CHECK_THROWS_AS(kite_deterministic({2, 3, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(kite_deterministic({2, 2}, 2), std::invalid_argument);
}

TEST_CASE("generator pairs live in their columns") {
  Diagram d = gj(6);
  for (int k = 1; k <= 4; ++k) {
    auto [x, y] = mc_generator_pair(d, k);
    FinitePath px = resolve(x, 6, d);
    FinitePath py = resolve(y, 6, d);
    CHECK(px.truncated(k) == extremal_path_into(d, k, 0, Extremal::Min));
    CHECK(px.truncated(k) == py.truncated(k));
    CHECK(runs_in_mc(px, k));
    CHECK(runs_in_mc(py, k));
    for (int n = k + 1; n <= 6; ++n) CHECK(px.vertex_at(n) != py.vertex_at(n));
  }
  CHECK_THROWS_AS(mc_generator_pair(fig1_family(4), 1), std::invalid_argument);
  CHECK_THROWS_AS(mc_generator_pair(d, 6), std::invalid_argument);
}

TEST_CASE("family dispatch by name") {
  FamilyParams p;
  p.family = "gj";
  p.depth = 4;
  CHECK(make_family(p) == gj(4));
  p.family = "odometer";
  p.radices = {2, 3};
  CHECK(make_family(p) == odometer_single({2, 3}, 4));
  p.counts = {2};
  CHECK_THROWS_AS(make_family(p), std::invalid_argument);
  p.radices.clear();
  CHECK(make_family(p) == odometer_suo({2}, 4));
  p.family = "nope";
  CHECK_THROWS_AS(make_family(p), std::invalid_argument);
}
