#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dyckal/dyck.hpp"
#include "dyckal/heyting.hpp"

using namespace dyckal;

namespace {
// the worked example pair of semilength 10 and its expected results
const char* kP10 = "uduuuudduddudduududd";
const char* kQ10 = "uuduudududdduuududdd";
const char* kImpP10Q10 = "uuuudduudddduuuudddd";
// the semilength-16 pseudocomplement example
const char* kP16 = "uuuddudduuduuuuddduuddddududuudd";
const char* kNegP16 = "udududuuddududududududuuuuddddud";

DyckPath path(const char* w) { return DyckPath::from_word(w); }
}  // namespace

TEST_CASE("crossing set of the semilength-10 pair") {
  CHECK(crossing_set(path(kP10), path(kQ10)).abscissas ==
        std::vector<int>{0, 5, 7, 11, 13, 20});
}

TEST_CASE("crossing set basics") {
  CHECK(crossing_set(path("uduudd"), path("uuddud")).abscissas ==
        std::vector<int>{0, 3, 5, 6});
  auto p = path("uudduudd");
  CHECK(crossing_set(p, p).abscissas == std::vector<int>{0, 8});
  // comparable pairs never properly cross
  CHECK(crossing_set(DyckPath::bottom(4), DyckPath::top(4)).abscissas ==
        std::vector<int>{0, 8});
  CHECK_THROWS_AS(crossing_set(path("ud"), path("uudd")),
                  std::invalid_argument);
}

TEST_CASE("relative pseudocomplement on the semilength-10 pair") {
  CHECK(rel_pseudocomplement(path(kP10), path(kQ10)).word() == kImpP10Q10);
}

TEST_CASE("relative pseudocomplement basics") {
  CHECK(rel_pseudocomplement(path("uduudd"), path("uuddud")).word() ==
        "uuddud");
  // p <= q forces the top
  CHECK(rel_pseudocomplement(DyckPath::bottom(5), DyckPath::bottom(5)) ==
        DyckPath::top(5));
  CHECK(rel_pseudocomplement(path("uduudd"), DyckPath::top(3)) ==
        DyckPath::top(3));
  // imp(top, q) = q
  for (const auto& q : enumerate(4))
    CHECK(rel_pseudocomplement(DyckPath::top(4), q) == q);
  // the defining adjunction at n = 4, all triples
  for (const auto& x : enumerate(4))
    for (const auto& y : enumerate(4)) {
      auto r = rel_pseudocomplement(x, y);
      for (const auto& z : enumerate(4))
        CHECK(leq(z, r) == leq(meet(x, z), y));
    }
}

TEST_CASE("pseudocomplement of the semilength-16 example") {
  CHECK(pseudocomplement(path(kP16)).word() == kNegP16);
}

TEST_CASE("pseudocomplement basics") {
  CHECK(pseudocomplement(path("uuddud")).word() == "uduudd");
  CHECK(pseudocomplement(path("uduudd")).word() == "uuddud");
  CHECK(pseudocomplement(DyckPath::bottom(5)) == DyckPath::top(5));
  CHECK(pseudocomplement(DyckPath::top(5)) == DyckPath::bottom(5));
  CHECK(pseudocomplement(DyckPath::bottom(1)) == DyckPath::bottom(1));
  // agrees with the crossing-set route through bottom, n <= 5
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate(n))
      CHECK(pseudocomplement(p) ==
            rel_pseudocomplement(p, DyckPath::bottom(n)));
}

TEST_CASE("closure of the semilength-10 example") {
  CHECK(closure(path(kP10)).word() == "uduuuuuudddddduuuddd");
}

TEST_CASE("closure laws") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate(n)) {
      auto c = closure(p);
      CHECK(leq(p, c));
      CHECK(closure(c) == c);
      CHECK(c == pseudocomplement(pseudocomplement(p)));
      CHECK(pseudocomplement(c) == pseudocomplement(p));
      CHECK(is_regular(p) == (c == p));
    }
}

TEST_CASE("regular elements and compositions") {
  CHECK(is_regular(path("uuuddd")));
  CHECK(is_regular(path("ududud")));
  CHECK(is_regular(path("uudduudd")));
  CHECK(!is_regular(path(kP10)));
  CHECK(!is_regular(path("uududd")));  // factor is not a pyramid

  CHECK(regular_to_composition(path("uudduduudd")).parts ==
        std::vector<int>{2, 1, 2});
  CHECK(composition_to_regular({{2, 1, 2}}).word() == "uudduduudd");
  CHECK(composition_to_regular({{4}}) == DyckPath::top(4));
  CHECK_THROWS_AS(regular_to_composition(path("uududd")),
                  std::invalid_argument);
  CHECK_THROWS_AS(composition_to_regular({{}}), std::invalid_argument);
  CHECK_THROWS_AS(composition_to_regular({{2, 0}}), std::invalid_argument);

  for (int n = 1; n <= 7; ++n) {
    long long count = 0;
    for (const auto& p : enumerate(n))
      if (is_regular(p)) {
        ++count;
        auto c = regular_to_composition(p);
        CHECK(c.total() == n);
        CHECK(composition_to_regular(c) == p);
      }
    CHECK(count == (1LL << (n - 1)));
  }
}

TEST_CASE("refinement covers") {
  Composition c1111{{1, 1, 1, 1}}, c211{{2, 1, 1}}, c121{{1, 2, 1}},
      c112{{1, 1, 2}}, c31{{3, 1}}, c22{{2, 2}}, c13{{1, 3}}, c4{{4}};
  CHECK(refinement_covers(c1111, c211));
  CHECK(refinement_covers(c1111, c121));
  CHECK(refinement_covers(c1111, c112));
  CHECK(refinement_covers(c211, c31));
  CHECK(refinement_covers(c211, c22));
  CHECK(refinement_covers(c121, c31));
  CHECK(refinement_covers(c121, c13));
  CHECK(refinement_covers(c112, c22));
  CHECK(refinement_covers(c112, c13));
  CHECK(refinement_covers(c31, c4));
  CHECK(refinement_covers(c22, c4));
  CHECK(refinement_covers(c13, c4));

  CHECK(!refinement_covers(c1111, c31));  // two merges, not one
  CHECK(!refinement_covers(c211, c121));  // not a merge at all
  CHECK(!refinement_covers(c4, c31));     // wrong direction
  CHECK(!refinement_covers(c22, c22));    // irreflexive
  CHECK(!refinement_covers(c1111, c4));
}
