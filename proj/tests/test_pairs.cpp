// test_pairs.cpp -- coding windows, depth witnesses, cuts, pair equivalence.
#include <doctest.h>

#include <random>

#include "bvtk/families.hpp"
#include "bvtk/pairs.hpp"
#include "oracles.hpp"

using namespace bvtk;

namespace {

constexpr Dim kBig = 1 << 28;

PathSpec nth_path_spec(const Diagram& d, int v, Dim rank) {
  RankTable rt = make_rank_table(d);
  return spec_from_path(path_unrank(d, rt, d.depth(), v, rank));
}

}  // namespace

TEST_CASE("clip_window intersects the orbit ranges of both sides") {
  Diagram d = odometer_single({2, 3}, 4);  // 36 top paths
  PathSpec x = nth_path_spec(d, 0, 10);
  PathSpec y = nth_path_spec(d, 0, 30);
  TimeWindow w = clip_window(x, y, TimeWindow{-kBig, kBig}, 4, d);
  CHECK(w.lo == -10);  // y allows -30, x only -10
  CHECK(w.hi == 5);    // y allows +5, x +25
  TimeWindow inner = clip_window(x, y, TimeWindow{-2, 3}, 4, d);
  CHECK(inner.lo == -2);
  CHECK(inner.hi == 3);
}

TEST_CASE("depth witnesses match exhaustive search over the shared range") {
  std::mt19937 rng(90210);
  int tested = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Diagram d = oracle::random_diagram(rng, 4, 3, 3);
    int N = d.depth();
    int v = static_cast<int>(rng() % d.width(N));
    std::vector<FinitePath> all = oracle::paths_into(d, N, v);
    if (all.size() < 2) continue;
    for (int rep = 0; rep < 6; ++rep) {
      FinitePath a = all[rng() % all.size()];
      FinitePath b = all[rng() % all.size()];
      PathSpec x = spec_from_path(a);
      PathSpec y = spec_from_path(b);
      auto got = depth_witness(x, y, N - 1, TimeWindow{-kBig, kBig}, d);
      auto want = oracle::depth(d, a, b);
      if (!want || want->k > N - 1) {
        CHECK_FALSE(got.has_value());
        continue;
      }
      ++tested;
      REQUIRE(got.has_value());
      CHECK(got->k == want->k);
      CHECK(got->difference_time == want->time);
      CHECK(got->window.lo == want->lo);
      CHECK(got->window.hi == want->hi);
    }
  }
  CHECK(tested > 30);
}

TEST_CASE("same-coding windows agree with witness depths") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    Diagram d = oracle::random_diagram(rng, 4, 3, 3);
    int N = d.depth();
    int v = static_cast<int>(rng() % d.width(N));
    std::vector<FinitePath> all = oracle::paths_into(d, N, v);
    if (all.size() < 2) continue;
    FinitePath a = all[rng() % all.size()];
    FinitePath b = all[rng() % all.size()];
    if (a == b) continue;
    PathSpec x = spec_from_path(a);
    PathSpec y = spec_from_path(b);
    auto want = oracle::depth(d, a, b);
    REQUIRE(want.has_value());
    TimeWindow full{-kBig, kBig};
    for (int k = 0; k <= N; ++k) {
      // Shared k-codings over the whole range hold exactly up to the depth.
      CHECK(same_k_coding_window(x, y, k, full, d) == (k <= want->k));
    }
  }
}

TEST_CASE("cut search matches exhaustive search, fast path included") {
  std::mt19937 rng(417);
  RankTable rt;
  for (int trial = 0; trial < 40; ++trial) {
    Diagram d = oracle::random_diagram(rng, 4, 3, 3);
    int N = d.depth();
    rt = make_rank_table(d);
    int v = static_cast<int>(rng() % d.width(N));
    std::vector<FinitePath> all = oracle::paths_into(d, N, v);
    if (all.size() < 2) continue;
    FinitePath a = all[rng() % all.size()];
    FinitePath b = all[rng() % all.size()];
    PathSpec x = spec_from_path(a);
    PathSpec y = spec_from_path(b);
    for (int j = 1; j <= N; ++j) {
      TimeWindow w{-4, 4};
      auto got = find_cut(x, y, j, w, d);
      if (dot_index_path(a, j, rt) == dot_index_path(b, j, rt)) {
        // Fast path: the shared dot locates a cut directly, maybe outside
        // the window; verify it instead of comparing search orders.
        REQUIRE(got.has_value());
        CHECK(*got == -dot_index_path(a, j, rt));
        oracle::Orbit oa = oracle::orbit(d, a);
        oracle::Orbit ob = oracle::orbit(d, b);
        CHECK(oracle::minimal_through(oa.at(*got), j));
        CHECK(oracle::minimal_through(ob.at(*got), j));
      } else {
        auto want = oracle::cut(d, a, b, j, w.lo, w.hi);
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("paired columns share coding windows to their depth exactly") {
  Diagram d = gj(5);
  TimeWindow full{-kBig, kBig};
  for (int k = 1; k <= 3; ++k) {
    auto [x, y] = mc_generator_pair(d, k);
    CAPTURE(k);
    CHECK(same_k_coding_window(x, y, k, full, d));
    CHECK_FALSE(same_k_coding_window(x, y, k + 1, full, d));
    auto dw = depth_witness(x, y, 4, full, d);
    REQUIRE(dw.has_value());
    CHECK(dw->k == k);

    LongCutsReport cuts = long_cuts_report(x, y, k, 4, full, d);
    CHECK(cuts.all_found());

    CHECK(k_equivalent_up_to(x, y, k, 5, d));
    CHECK_FALSE(k_equivalent_up_to(x, y, k + 1, 5, d));
  }
}

TEST_CASE("window clipping keeps vacuous claims visible") {
  Diagram d = odometer_single({2}, 3);
  PathSpec x = nth_path_spec(d, 0, 0);
  PathSpec y = nth_path_spec(d, 0, 4);
  // Their shared range is empty below -0 and above 3: asking far away
  // clips to nothing and reports "true over the empty window".
  TimeWindow far{5, 9};
  TimeWindow w = clip_window(x, y, far, 3, d);
  CHECK(w.lo > w.hi);
  CHECK(same_k_coding_window(x, y, 1, far, d));
  CHECK_FALSE(depth_witness(x, y, 2, far, d).has_value());
}
