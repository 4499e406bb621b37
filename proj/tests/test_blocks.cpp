// test_blocks.cpp -- alphabets, blocks, codings, order and determinism tests.
#include <doctest.h>

#include <random>

#include "bvtk/blocks.hpp"
#include "bvtk/dynamics.hpp"
#include "bvtk/families.hpp"
#include "oracles.hpp"

using namespace bvtk;

TEST_CASE("alphabet ids are consecutive per endpoint and invertible") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 20; ++trial) {
    Diagram d = oracle::random_diagram(rng);
    RankTable rt = make_rank_table(d);
    for (int k = 1; k <= d.depth(); ++k) {
      Alphabet a = make_alphabet(d, k);
      Dim total = 0;
      for (int v = 0; v < d.width(k); ++v) total += dimension(d, k, v);
      CHECK(a.size == total);
      for (Dim id = 0; id < a.size; ++id) {
        FinitePath p = letter_path(d, a, rt, id);
        CHECK(letter_id(a, rt, p) == id);
      }
    }
  }
}

TEST_CASE("letter order refines the path order per endpoint") {
  Diagram d = gj(3);
  RankTable rt = make_rank_table(d);
  Alphabet a = make_alphabet(d, 2);
  for (int v = 0; v < d.width(2); ++v) {
    std::vector<FinitePath> all = oracle::paths_into(d, 2, v);
    for (size_t i = 0; i < all.size(); ++i)
      CHECK(letter_id(a, rt, all[i]) == a.offsets[v] + static_cast<Dim>(i));
  }
}

TEST_CASE("basic blocks list truncations of the ordered paths") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 15; ++trial) {
    Diagram d = oracle::random_diagram(rng);
    RankTable rt = make_rank_table(d);
    for (int n = 2; n <= d.depth(); ++n) {
      for (int v = 0; v < d.width(n); ++v) {
        std::vector<FinitePath> all = oracle::paths_into(d, n, v);
        for (int k = 1; k < n; ++k) {
          Alphabet a = make_alphabet(d, k);
          Block b = basic_block(d, n, v, k);
          REQUIRE(b.length() == static_cast<Dim>(all.size()));
          CHECK(b.level_tag == k);
          CHECK_FALSE(b.vertex_alphabet);
          for (size_t i = 0; i < all.size(); ++i) {
            CAPTURE(trial);
            CHECK(b.letters[i] == letter_id(a, rt, all[i].truncated(k)));
          }
        }
      }
    }
  }
}

TEST_CASE("vertex codings list the sources of ordered segments") {
  std::mt19937 rng(778);
  for (int trial = 0; trial < 15; ++trial) {
    Diagram d = oracle::random_diagram(rng);
    for (int n = 2; n <= d.depth(); ++n) {
      for (int v = 0; v < d.width(n); ++v) {
        std::vector<FinitePath> all = oracle::paths_into(d, n, v);
        for (int j = 1; j < n; ++j) {
          Block c = coding_by_vertices(d, n, v, j);
          CHECK(c.vertex_alphabet);
          CHECK(c.level_tag == j);
          // One letter per j-to-v segment: group the full paths by their
          // segment above level j and read the level-j vertex of each group.
          std::vector<Dim> expect;
          size_t i = 0;
          while (i < all.size()) {
            int u = all[i].vertex_at(j);
            expect.push_back(u);
            i += static_cast<size_t>(dimension(d, j, u));
          }
          CHECK(c.letters == expect);
        }
      }
    }
  }
}

TEST_CASE("factoring a block truncates letters") {
  Diagram d = gj(4);
  for (int v = 0; v < d.width(4); ++v) {
    Block b3 = basic_block(d, 4, v, 3);
    for (int i = 1; i <= 3; ++i) {
      CHECK(factor_block(d, b3, i) == basic_block(d, 4, v, i));
    }
  }
  CHECK_THROWS_AS(factor_block(d, coding_by_vertices(d, 4, 0, 2), 1), std::invalid_argument);
}

TEST_CASE("dotted blocks pair the block with the dot index") {
  Diagram d = gj(4);
  PathSpec x = parse_pathspec("prefix=1@v1_2,2@v2_1,1@v3_2;suffix=min", d);
  DottedBlock db = dotted_basic_block(x, 3, 2, d);
  CHECK(db.block == basic_block(d, 3, 1, 2));
  CHECK(db.dot == dot_index(x, 3, d));
  CHECK(db.dot == 1);
  CHECK(db.dot < db.block.length());
}

TEST_CASE("uniform order holds exactly where the shape provides it") {
  SUBCASE("single-vertex odometer levels are powers of the full block") {
    Diagram d = odometer_single({3, 2}, 4);
    for (int n = 2; n <= 4; ++n) {
      auto u = uniform_order_test(d, n);
      REQUIRE(u.has_value());
      CHECK(u->period.length() == dimension(d, n - 1, 0));
      CHECK(u->powers == std::vector<Dim>{n % 2 == 0 ? 2 : 3});
    }
  }
  SUBCASE("identically wired levels share the block outright") {
    Diagram d = odometer_suo({2, 3}, 4);
    for (int n = 2; n <= 4; ++n) {
      auto u = uniform_order_test(d, n);
      REQUIRE(u.has_value());
      for (Dim p : u->powers) CHECK(p == 1);
    }
  }
  SUBCASE("ordinal swaps break uniform order") {
    Diagram d = gj(4);
    CHECK(uniform_order_test(d, 2).has_value());
    CHECK_FALSE(uniform_order_test(d, 3).has_value());
    CHECK_FALSE(uniform_order_test(d, 4).has_value());
  }
}

TEST_CASE("block equivalence of vertices matches block equality") {
  Diagram d = gj(5);
  // The paired columns 2k, 2k+1 carry equal k-blocks at every level above k,
  // and unequal (k+1)-blocks.
  for (int k = 1; k <= 3; ++k) {
    for (int n = k + 1; n <= 5; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(k_equivalent_vertices(d, n, 2 * k - 1, 2 * k, k));
      CHECK(basic_block(d, n, 2 * k - 1, k) == basic_block(d, n, 2 * k, k));
      if (k + 1 < n) {
        CHECK_FALSE(k_equivalent_vertices(d, n, 2 * k - 1, 2 * k, k + 1));
        CHECK_FALSE(basic_block(d, n, 2 * k - 1, k + 1) == basic_block(d, n, 2 * k, k + 1));
      }
    }
  }
  // Every in-list is a permutation of the sources and all 1-blocks agree one
  // level down, so 1-blocks coincide across a whole level; the ordinal swap
  // at v3_3 only shows in the 2-blocks.
  CHECK(k_equivalent_vertices(d, 3, 0, 2, 1));
  CHECK_FALSE(k_equivalent_vertices(d, 3, 0, 2, 2));
}

TEST_CASE("the alternating family pairs its odd levels at depth one") {
  Diagram d = fig1_family(5);
  CHECK(coding_by_vertices(d, 3, 0, 1).letters == std::vector<Dim>{0, 0, 0, 1, 1, 0, 0, 0});
  CHECK(coding_by_vertices(d, 3, 1, 1).letters == std::vector<Dim>{0, 0, 0, 1, 1, 0, 0, 0});
  CHECK(k_equivalent_vertices(d, 3, 0, 1, 1));
  // The next pair level repeats the pattern over its own preceding pair.
  CHECK(coding_by_vertices(d, 5, 0, 3) == coding_by_vertices(d, 5, 1, 3));
}

TEST_CASE("determinism scans outgoing labels above the root") {
  SUBCASE("parallel edges from one vertex are fine") {
    CHECK(deterministic_test(odometer_single({3}, 4)).deterministic);
  }
  SUBCASE("the bounded-width sample collides") {
    DeterminismReport r = deterministic_test(kite_nondet());
    REQUIRE_FALSE(r.deterministic);
    CHECK(r.level == 1);
    std::vector<std::string> pair{r.target_a, r.target_b};
    std::sort(pair.begin(), pair.end());
    CHECK(pair == std::vector<std::string>{"u", "v"});
  }
  SUBCASE("the rotating construction is deterministic") {
    CHECK(deterministic_test(kite_deterministic({3, 2, 2, 1}, 8)).deterministic);
  }
  SUBCASE("identically wired wide levels are not") {
    CHECK_FALSE(deterministic_test(odometer_suo({3}, 3)).deterministic);
    CHECK_FALSE(deterministic_test(gj(3)).deterministic);
  }
}
