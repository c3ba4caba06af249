#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dyckal/birkhoff.hpp"
#include "dyckal/heyting.hpp"

using namespace dyckal;

namespace {
const char* kP10 = "uduuuudduddudduududd";
const char* kP16 = "uuuddudduuduuuuddduuddddududuudd";

DyckPath path(const char* w) { return DyckPath::from_word(w); }

IntervalAntichain ac(int n, std::vector<Interval> ivs) {
  return IntervalAntichain::make(n, std::move(ivs));
}

const IntervalAntichain kF10 =
    ac(10, {{2, 4}, {4, 5}, {6, 6}, {8, 8}, {9, 9}});
const IntervalAntichain kF16 =
    ac(16, {{1, 2}, {3, 3}, {5, 5}, {6, 9}, {9, 11}, {15, 15}});
}  // namespace

TEST_CASE("antichain validation") {
  CHECK(ac(4, {{3, 3}, {1, 1}}).intervals ==
        std::vector<Interval>{{1, 1}, {3, 3}});  // sorted by lo
  CHECK(ac(4, {}).intervals.empty());
  CHECK_THROWS_AS(ac(4, {{0, 1}}), std::invalid_argument);   // lo too small
  CHECK_THROWS_AS(ac(4, {{2, 4}}), std::invalid_argument);   // hi too large
  CHECK_THROWS_AS(ac(4, {{3, 2}}), std::invalid_argument);   // reversed
  CHECK_THROWS_AS(ac(4, {{1, 3}, {2, 2}}), std::invalid_argument);  // nested
  CHECK_THROWS_AS(ac(4, {{1, 2}, {1, 2}}), std::invalid_argument);  // equal
}

TEST_CASE("join-irreducible paths") {
  CHECK(join_irreducible(10, {2, 4}).word() == "uduuuuddddududududud");
  CHECK(atom(3, 1).word() == "uuddud");
  CHECK(atom(3, 2).word() == "uduudd");
  CHECK(atom(2, 1).word() == "uudd");
  CHECK(join_irreducible(4, {1, 3}) == DyckPath::top(4));
  CHECK_THROWS_AS(join_irreducible(4, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(join_irreducible(4, {2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(atom(2, 2), std::invalid_argument);
}

TEST_CASE("antichain of the semilength-10 example") {
  CHECK(to_antichain(path(kP10)) == kF10);
  CHECK(from_antichain(kF10) == path(kP10));
}

TEST_CASE("antichain of the semilength-16 example") {
  CHECK(to_antichain(path(kP16)) == kF16);
  CHECK(from_antichain(kF16) == path(kP16));
}

TEST_CASE("antichain edge cases") {
  CHECK(to_antichain(DyckPath::bottom(4)).intervals.empty());
  CHECK(from_antichain(ac(4, {})) == DyckPath::bottom(4));
  CHECK(to_antichain(DyckPath::top(4)) == ac(4, {{1, 3}}));
  CHECK(from_antichain(ac(4, {{1, 1}, {3, 3}})).word() == "uudduudd");
  CHECK(to_antichain(DyckPath::bottom(1)).intervals.empty());
}

TEST_CASE("representation is a bijection") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate(n)) {
      auto f = to_antichain(p);
      CHECK(from_antichain(f) == p);
      // every member interval's join-irreducible sits below the path
      for (const auto& iv : f.intervals)
        CHECK(leq(join_irreducible(n, iv), p));
    }
}

TEST_CASE("antichain join meet and negation on frozen values") {
  CHECK(antichain_join(ac(10, {{2, 4}}), ac(10, {{4, 5}})) ==
        ac(10, {{2, 4}, {4, 5}}));
  CHECK(antichain_meet(ac(10, {{2, 4}}), ac(10, {{4, 5}})) ==
        ac(10, {{4, 4}}));
  CHECK(antichain_meet(kF10, ac(10, {})) == ac(10, {}));
  CHECK(antichain_neg(kF16) == ac(16, {{4, 4}, {12, 14}}));
  CHECK(antichain_neg(kF10) == ac(10, {{1, 1}, {7, 7}}));
  CHECK(antichain_neg(ac(5, {})) == ac(5, {{1, 4}}));
  CHECK_THROWS_AS(antichain_join(kF10, kF16), std::invalid_argument);
}

TEST_CASE("antichain operations mirror path operations") {
  for (int n = 2; n <= 5; ++n) {
    auto all = enumerate(n);
    for (const auto& p : all) {
      CHECK(antichain_neg(to_antichain(p)) ==
            to_antichain(pseudocomplement(p)));
      for (const auto& q : all) {
        CHECK(antichain_join(to_antichain(p), to_antichain(q)) ==
              to_antichain(join(p, q)));
        CHECK(antichain_meet(to_antichain(p), to_antichain(q)) ==
              to_antichain(meet(p, q)));
      }
    }
  }
}

TEST_CASE("partition identity") {
  // the union of p's antichain and the union of ~p's tile [1, n-1]
  auto union_size = [](int n, const IntervalAntichain& f) {
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (const auto& iv : f.intervals)
      for (int v = iv.lo; v <= iv.hi; ++v) in[static_cast<size_t>(v - 1)] = 1;
    int c = 0;
    for (int v = 1; v <= n - 1; ++v) c += in[static_cast<size_t>(v - 1)];
    return c;
  };
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate(n)) {
      auto f = to_antichain(p);
      auto g = to_antichain(pseudocomplement(p));
      CHECK(union_size(n, f) + union_size(n, g) == n - 1);
      // and the two unions are disjoint
      std::vector<char> in(static_cast<size_t>(n), 0);
      bool overlap = false;
      for (const auto& iv : f.intervals)
        for (int v = iv.lo; v <= iv.hi; ++v) in[static_cast<size_t>(v - 1)] = 1;
      for (const auto& iv : g.intervals)
        for (int v = iv.lo; v <= iv.hi; ++v)
          if (in[static_cast<size_t>(v - 1)]) overlap = true;
      CHECK(!overlap);
    }
}

TEST_CASE("geometric statistics of the frozen examples") {
  auto s10 = stats_geometric(path(kP10));
  CHECK(s10 == StatsRecord{6, 1, 14, 3, 1, 1, 2});
  auto s16 = stats_geometric(path(kP16));
  CHECK(s16 == StatsRecord{8, 2, 20, 5, 3, 2, 4});
  CHECK(stats_geometric(DyckPath::bottom(3)) == StatsRecord{3, 3, 3, 3, 1, 1, 0});
  CHECK(stats_geometric(DyckPath::top(4)) == StatsRecord{1, 0, 4, 1, 4, 1, 0});
}

TEST_CASE("formula statistics of the frozen examples") {
  auto f10 = stats_formula(kF10);
  CHECK(f10.stats == StatsRecord{6, 1, 14, 3, 1, 1, 2});
  CHECK(f10.peak_height_sum_union == 13);  // misses the shared endpoint 4

  auto f16 = stats_formula(kF16);
  CHECK(f16.stats == StatsRecord{8, 2, 20, 5, 3, 2, 4});
  CHECK(f16.peak_height_sum_union == 19);  // two overlaps missed
}

TEST_CASE("formula statistics at the bottom path") {
  auto fr = stats_formula(ac(5, {}));
  // peak and hill formulas cannot see the fifth hill...
  CHECK(fr.stats.peak_count == 4);
  CHECK(fr.stats.hill_count == 4);
  CHECK(fr.peak_height_sum_union == 4);
  // ...but the corrected sum and the remaining statistics are exact
  CHECK(fr.stats.peak_height_sum == 5);
  CHECK(fr.stats.return_count == 5);
  CHECK(fr.stats.first_peak_height == 1);
  CHECK(fr.stats.peaks_before_first_return == 1);
  CHECK(fr.stats.duu_count == 0);
}

TEST_CASE("statistics agreement across all paths") {
  for (int n = 1; n <= 6; ++n) {
    auto bot = DyckPath::bottom(n);
    for (const auto& p : enumerate(n)) {
      auto g = stats_geometric(p);
      auto fr = stats_formula(to_antichain(p));
      CHECK(fr.stats.return_count == g.return_count);
      CHECK(fr.stats.peak_height_sum == g.peak_height_sum);
      CHECK(fr.stats.first_peak_height == g.first_peak_height);
      CHECK(fr.stats.peaks_before_first_return == g.peaks_before_first_return);
      CHECK(fr.stats.duu_count == g.duu_count);
      if (p == bot) {
        CHECK(fr.stats.peak_count == g.peak_count - 1);
        CHECK(fr.stats.hill_count == g.hill_count - 1);
      } else {
        CHECK(fr.stats.peak_count == g.peak_count);
        CHECK(fr.stats.hill_count == g.hill_count);
      }
    }
  }
}
