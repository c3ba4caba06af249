#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>

#include "dyckal/dyck.hpp"
#include "dyckal/poset.hpp"

using namespace dyckal;

namespace {
// down-set sanity: closed downward in q
bool is_down_set(const FinitePoset& q, const DownSet& d) {
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (d.contains(a) && q.leq(b, a) && !d.contains(b)) return false;
  return true;
}
}  // namespace

TEST_CASE("building posets from generators") {
  auto p = FinitePoset::from_generators({"a", "b", "c"},
                                        {{"a", "b"}, {"b", "c"}});
  CHECK(p.size() == 3);
  CHECK(p.label(0) == "a");
  CHECK(p.index("c") == 2);
  CHECK(p.leq(0, 2));   // transitive closure
  CHECK(!p.leq(2, 0));
  CHECK(p.leq(1, 1));   // reflexive

  CHECK_THROWS_WITH_AS(FinitePoset::from_generators({}, {}),
                       "poset needs at least one element",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(FinitePoset::from_generators({"a", "a"}, {}),
                       "duplicate element \"a\"", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      FinitePoset::from_generators({"a", "b"}, {{"a", "z"}}),
      "unknown element \"z\"", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      FinitePoset::from_generators({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
      "order cycle between \"a\" and \"b\"", std::invalid_argument);
}

TEST_CASE("stock posets") {
  auto c3 = FinitePoset::chain(3);
  CHECK(c3.size() == 3);
  CHECK(c3.label(0) == "c1");
  CHECK(c3.leq(0, 2));
  CHECK(c3.minimal_elements() == std::vector<int>{0});
  CHECK(c3.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  auto a3 = FinitePoset::antichain(3);
  CHECK(a3.size() == 3);
  CHECK(!a3.leq(0, 1));
  CHECK(a3.minimal_elements() == std::vector<int>{0, 1, 2});
  CHECK(a3.covers().empty());

  auto d = FinitePoset::diamond();
  CHECK(d.size() == 4);
  CHECK(d.label(0) == "bot");
  CHECK(d.leq(d.index("bot"), d.index("top")));
  CHECK(!d.leq(d.index("x"), d.index("y")));
  CHECK(d.covers() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

  CHECK_THROWS_AS(FinitePoset::chain(0), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset::antichain(0), std::invalid_argument);
}

TEST_CASE("posets parse from JSON") {
  auto p = parse_poset(
      R"({"elements": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]})");
  CHECK(p.size() == 3);
  CHECK(p.leq(p.index("a"), p.index("c")));

  // "leq" may be omitted (antichain)
  auto q = parse_poset(R"({"elements": ["x", "y"]})");
  CHECK(!q.leq(0, 1));
  CHECK(!q.leq(1, 0));

  CHECK_THROWS_AS(parse_poset("not json"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_poset(R"({"leq": []})"),
                       "poset JSON needs an \"elements\" array",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_poset(R"({"elements": [1]})"),
                       "poset elements must be strings",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_poset(R"({"elements": ["a"], "leq": [["a"]]})"),
                       "poset \"leq\" entries must be [\"a\",\"b\"] pairs",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_poset(R"({"elements": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]})"),
      "order cycle between \"a\" and \"b\"", std::invalid_argument);
}

TEST_CASE("interval posets order intervals by containment") {
  auto ints2 = intervals_poset(FinitePoset::chain(2));
  REQUIRE(ints2.poset.size() == 3);
  CHECK(ints2.elements ==
        std::vector<IntervalElement>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(ints2.poset.label(0) == "[c1,c1]");
  CHECK(ints2.poset.label(1) == "[c1,c2]");
  CHECK(ints2.poset.label(2) == "[c2,c2]");
  CHECK(ints2.poset.leq(0, 1));
  CHECK(ints2.poset.leq(2, 1));
  CHECK(!ints2.poset.leq(0, 2));

  CHECK(intervals_poset(FinitePoset::chain(3)).poset.size() == 6);
  // an antichain has only the trivial intervals
  auto ia = intervals_poset(FinitePoset::antichain(3));
  CHECK(ia.poset.size() == 3);
  CHECK(ia.poset.covers().empty());
  CHECK(intervals_poset(FinitePoset::diamond()).poset.size() == 9);
}

TEST_CASE("down-set lattices") {
  auto c3 = FinitePoset::chain(3);
  auto dc = downset_lattice(c3);
  CHECK(dc.size() == 4);  // a chain of m elements has m+1 ideals
  CHECK(dc.front().bits == 0);
  CHECK(dc.back().bits == 0b111);

  auto a3 = FinitePoset::antichain(3);
  auto da = downset_lattice(a3);
  CHECK(da.size() == 8);  // every subset of an antichain is an ideal

  // ideals of the interval poset of a 3-chain: the Dyck lattice of
  // semilength 4, hence Catalan(4) = 14 of them
  auto di = downset_lattice(intervals_poset(c3).poset);
  CHECK(di.size() == 14);

  for (const auto& d : di) CHECK(is_down_set(intervals_poset(c3).poset, d));

  // sorted by (size, mask), so sizes are monotone
  for (size_t i = 1; i < di.size(); ++i)
    CHECK(di[i - 1].size() <= di[i].size());

  CHECK_THROWS_WITH_AS(downset_lattice(FinitePoset::chain(65)),
                       "poset has 65 elements; down-set cap is 64",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(downset_lattice(FinitePoset::antichain(17)),
                       "down-set lattice exceeds cap of 100000",
                       std::invalid_argument);
}

TEST_CASE("down-set implication and pseudocomplement") {
  auto c3 = FinitePoset::chain(3);
  CHECK(ds_implies(c3, DownSet{0b011}, DownSet{0b001}) == DownSet{0b001});
  CHECK(ds_implies(c3, DownSet{0b011}, DownSet{0b011}) == DownSet{0b111});
  CHECK(ds_implies(c3, DownSet{0}, DownSet{0}) == DownSet{0b111});
  CHECK(ds_pseudo(c3, DownSet{0b001}) == DownSet{0});
  CHECK(ds_pseudo(c3, DownSet{0}) == DownSet{0b111});

  auto a3 = FinitePoset::antichain(3);
  CHECK(ds_pseudo(a3, DownSet{0b001}) == DownSet{0b110});

  // the defining adjunction, over every ideal triple of the diamond
  auto dia = FinitePoset::diamond();
  auto ideals = downset_lattice(dia);
  CHECK(ideals.size() == 6);
  for (const auto& u : ideals)
    for (const auto& v : ideals) {
      auto imp = ds_implies(dia, u, v);
      CHECK(is_down_set(dia, imp));
      for (const auto& w : ideals) {
        bool meets_inside = DownSet{w.bits & u.bits}.subset_of(v);
        CHECK(meets_inside == w.subset_of(imp));
      }
    }
}

TEST_CASE("atoms of the down-set lattice") {
  CHECK(lattice_atoms(FinitePoset::chain(3)) ==
        std::vector<DownSet>{DownSet{0b001}});
  CHECK(lattice_atoms(FinitePoset::antichain(3)) ==
        std::vector<DownSet>{DownSet{1}, DownSet{2}, DownSet{4}});
  CHECK(lattice_atoms(FinitePoset::diamond()) ==
        std::vector<DownSet>{DownSet{1}});

  // atoms of the ideal lattice of the interval poset of a chain match the
  // atoms of the Dyck lattice: one per minimal (trivial) interval
  auto ints = intervals_poset(FinitePoset::chain(3));
  CHECK(lattice_atoms(ints.poset).size() == 3);
}

TEST_CASE("finite lattices") {
  auto d3 = FiniteLattice::from_dyck(3);
  CHECK(d3.size() == 5);
  CHECK(d3.label(0) == DyckPath::top(3).word());
  CHECK(d3.join_irreducibles().size() == 3);
  CHECK(d3.distributive());

  auto b2 = FiniteLattice::boolean(2);
  CHECK(b2.size() == 4);
  CHECK(b2.label(0) == "{}");
  CHECK(b2.label(3) == "{1,2}");
  CHECK(b2.join_irreducibles() == std::vector<int>{1, 2});
  CHECK(b2.distributive());
  CHECK(b2.join(1, 2) == 3);
  CHECK(b2.meet(1, 2) == 0);
  CHECK(FiniteLattice::boolean(0).size() == 1);
  CHECK_THROWS_AS(FiniteLattice::boolean(21), std::invalid_argument);

  auto ideals = downset_lattice(FinitePoset::chain(2));
  auto l = FiniteLattice::from_downsets(FinitePoset::chain(2), ideals);
  CHECK(l.size() == 3);
  CHECK(l.label(0) == "{}");
  CHECK(l.label(1) == "{c1}");
  CHECK(l.label(2) == "{c1,c2}");
  CHECK(l.leq(0, 2));
}

namespace {
FiniteLattice make_m3() {
  // bot < a, b, c < top with a, b, c pairwise incomparable
  const int m = 5;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) leq[i][i] = true;
  for (int i = 0; i < m; ++i) {
    leq[0][i] = true;
    leq[i][4] = true;
  }
  return FiniteLattice({"bot", "a", "b", "c", "top"}, std::move(leq));
}
}  // namespace

TEST_CASE("the five-element diamond is a non-distributive lattice") {
  auto m3 = make_m3();
  CHECK(m3.join(1, 2) == 4);
  CHECK(m3.meet(1, 2) == 0);
  CHECK(m3.join_irreducibles() == std::vector<int>{1, 2, 3});
  CHECK(!m3.distributive());
}

TEST_CASE("join and meet reject non-lattices") {
  // bowtie: two minimal elements under two maximal ones
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; ++i) leq[i][i] = true;
  leq[0][2] = leq[0][3] = leq[1][2] = leq[1][3] = true;
  FiniteLattice bowtie({"a", "b", "c", "d"}, std::move(leq));
  CHECK_THROWS_WITH_AS(bowtie.join(0, 1),
                       "no least upper bound: not a lattice",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(bowtie.meet(2, 3),
                       "no greatest lower bound: not a lattice",
                       std::invalid_argument);

  // a bare antichain has no bounds at all
  std::vector<std::vector<bool>> id(2, std::vector<bool>(2, false));
  id[0][0] = id[1][1] = true;
  FiniteLattice loose({"a", "b"}, std::move(id));
  CHECK_THROWS_WITH_AS(loose.join(0, 1), "no upper bound: not a lattice",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(loose.meet(0, 1), "no lower bound: not a lattice",
                       std::invalid_argument);
}

namespace {
void check_iso_map(const FiniteLattice& l1, const FiniteLattice& l2,
                   const std::vector<int>& map) {
  REQUIRE(static_cast<int>(map.size()) == l1.size());
  std::vector<bool> hit(static_cast<size_t>(l2.size()), false);
  for (int im : map) {
    REQUIRE(im >= 0);
    REQUIRE(im < l2.size());
    CHECK(!hit[static_cast<size_t>(im)]);
    hit[static_cast<size_t>(im)] = true;
  }
  for (int a = 0; a < l1.size(); ++a)
    for (int b = 0; b < l1.size(); ++b)
      CHECK(l1.leq(a, b) == l2.leq(map[static_cast<size_t>(a)],
                                   map[static_cast<size_t>(b)]));
}
}  // namespace

TEST_CASE("lattice isomorphism") {
  // ideals of the interval poset of a 2-chain form the Dyck lattice of
  // semilength 3
  auto ints = intervals_poset(FinitePoset::chain(2));
  auto l1 = FiniteLattice::from_downsets(ints.poset,
                                         downset_lattice(ints.poset));
  auto l2 = FiniteLattice::from_dyck(3);
  auto iso = is_isomorphic(l1, l2);
  REQUIRE(iso.has_value());
  check_iso_map(l1, l2, *iso);

  // ideals of an antichain form a boolean lattice
  auto ia = intervals_poset(FinitePoset::antichain(3));
  auto lb = FiniteLattice::from_downsets(ia.poset,
                                         downset_lattice(ia.poset));
  auto isob = is_isomorphic(lb, FiniteLattice::boolean(3));
  REQUIRE(isob.has_value());
  check_iso_map(lb, FiniteLattice::boolean(3), *isob);

  // same size, different shape: the 4-element boolean lattice is not a
  // 4-chain
  auto chain4 = FiniteLattice::from_downsets(
      FinitePoset::chain(3), downset_lattice(FinitePoset::chain(3)));
  CHECK(chain4.size() == 4);
  CHECK(!is_isomorphic(FiniteLattice::boolean(2), chain4).has_value());

  // the non-distributive diamond maps onto itself but not onto boolean(2)'s
  // sibling of equal size... and the backtracking path handles it
  auto m3 = make_m3();
  auto self = is_isomorphic(m3, m3);
  REQUIRE(self.has_value());
  check_iso_map(m3, m3, *self);
  CHECK(!is_isomorphic(m3, FiniteLattice::from_dyck(3)).has_value());

  CHECK(is_isomorphic(FiniteLattice::boolean(0),
                      FiniteLattice::from_dyck(1)).has_value());
}
