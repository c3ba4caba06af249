#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <string>

#include "dyckal/birkhoff.hpp"
#include "dyckal/dyck.hpp"
#include "dyckal/heyting.hpp"
#include "dyckal/render.hpp"
#include "dyckal/serialize.hpp"
#include "dyckal/verify.hpp"

using namespace dyckal;

namespace {
// CHECK_THROWS_WITH needs the whole message; these messages end with
// library-supplied detail, so match the stable prefix only.
void expect_invalid_prefix(const std::function<void()>& fn,
                           const std::string& prefix) {
  try {
    fn();
    FAIL_CHECK("expected std::invalid_argument with prefix \"" << prefix
                                                               << "\"");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).substr(0, prefix.size()) == prefix);
  }
}
}  // namespace

TEST_CASE("ascii renderings") {
  CHECK(ascii_path(DyckPath::from_word("ud")) == "/\\\n");
  CHECK(ascii_path(DyckPath::from_word("uduudd")) == "   /\\\n/\\/  \\\n");
  CHECK(ascii_path(DyckPath::from_word("uudd")) == " /\\\n/  \\\n");
  CHECK(ascii_path(DyckPath::bottom(3)) == "/\\/\\/\\\n");

  // every line ends flush with its last step: no trailing spaces
  for (const auto& p : enumerate(5)) {
    auto pic = ascii_path(p);
    CHECK(!pic.empty());
    CHECK(pic.back() == '\n');
    size_t start = 0;
    while (start < pic.size()) {
      size_t nl = pic.find('\n', start);
      REQUIRE(nl != std::string::npos);
      CHECK(nl > start);              // no empty rows
      CHECK(pic[nl - 1] != ' ');
      start = nl + 1;
    }
    // slashes match the word's step counts
    auto count = [&pic](char c) {
      size_t k = 0;
      for (char ch : pic)
        if (ch == c) ++k;
      return k;
    };
    CHECK(count('/') == static_cast<size_t>(p.semilength()));
    CHECK(count('\\') == static_cast<size_t>(p.semilength()));
  }
}

TEST_CASE("dot output lists nodes then lower-to-upper edges") {
  CHECK(dot_hasse("g", {"a", "b"}, {{0, 1}}) ==
        "digraph g {\n"
        "  rankdir=BT;\n"
        "  \"a\";\n"
        "  \"b\";\n"
        "  \"a\" -> \"b\";\n"
        "}\n");
  CHECK(dot_hasse("solo", {"x"}, {}) ==
        "digraph solo {\n  rankdir=BT;\n  \"x\";\n}\n");
}

TEST_CASE("paths round-trip through JSON") {
  auto p = DyckPath::from_word("uduuuudduddudduududd");
  CHECK(path_from_json(to_json(p)) == p);
  // field order does not matter
  CHECK(path_from_json(R"({"word": "uudd", "n": 2})") ==
        DyckPath::from_word("uudd"));

  expect_invalid_prefix([] { path_from_json("{nope"); }, "bad JSON: ");
  CHECK_THROWS_WITH_AS(path_from_json(R"({"n": 2})"),
                       "missing JSON field \"word\"", std::invalid_argument);
  CHECK_THROWS_WITH_AS(path_from_json(R"({"word": "uudd"})"),
                       "missing JSON field \"n\"", std::invalid_argument);
  expect_invalid_prefix(
      [] { path_from_json(R"({"n": "two", "word": "uudd"})"); },
      "bad JSON field \"n\": ");
  CHECK_THROWS_WITH_AS(
      path_from_json(R"({"n": 3, "word": "uudd"})"),
      "JSON path: n=3 does not match word of semilength 2",
      std::invalid_argument);
  // the word itself is validated
  CHECK_THROWS_AS(path_from_json(R"({"n": 2, "word": "uddu"})"),
                  std::invalid_argument);
}

TEST_CASE("compositions round-trip through JSON") {
  Composition c{{2, 1, 2}};
  auto text = to_json(5, c);
  auto back = composition_from_json(text);
  CHECK(back.parts == c.parts);
  CHECK(composition_from_json(R"({"parts": [1, 3], "n": 4})").parts ==
        std::vector<int>{1, 3});

  CHECK_THROWS_WITH_AS(composition_from_json(R"({"n": 2, "parts": [2, 0]})"),
                       "JSON composition: nonpositive part",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(composition_from_json(R"({"n": 5, "parts": [2, 2]})"),
                       "JSON composition: parts sum to 4, not n=5",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(composition_from_json(R"({"parts": [1]})"),
                       "missing JSON field \"n\"", std::invalid_argument);
}

TEST_CASE("crossing sets round-trip through JSON") {
  CrossingSet c{{0, 5, 7, 11, 13, 20}};
  CHECK(crossing_from_json(to_json(c)).abscissas == c.abscissas);
  CHECK_THROWS_WITH_AS(crossing_from_json(R"({"points": [0, 2]})"),
                       "missing JSON field \"abscissas\"",
                       std::invalid_argument);
}

TEST_CASE("antichains round-trip through JSON") {
  auto f = IntervalAntichain::make(
      10, {{2, 4}, {4, 5}, {6, 6}, {8, 8}, {9, 9}});
  auto back = antichain_from_json(to_json(f));
  CHECK(back.n == f.n);
  CHECK(back.intervals == f.intervals);

  auto empty = IntervalAntichain::make(1, {});
  CHECK(antichain_from_json(to_json(empty)).intervals.empty());

  CHECK_THROWS_WITH_AS(
      antichain_from_json(R"({"n": 4, "intervals": [[1]]})"),
      "JSON antichain: each interval needs two entries",
      std::invalid_argument);
  // semantic validation comes from the same gate as the constructor
  CHECK_THROWS_AS(antichain_from_json(R"({"n": 4, "intervals": [[2, 1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      antichain_from_json(R"({"n": 4, "intervals": [[1, 3], [2, 2]]})"),
      std::invalid_argument);
}

TEST_CASE("verification reports serialize with stable fields") {
  VerifyReport r;
  r.suite = "stats";
  r.n = 3;
  r.checked = 5;
  CHECK(to_json(r) == R"({"checked":5,"failures":[],"n":3,"suite":"stats"})");

  r.failures.push_back({"uudd", "x", "y"});
  r.notes.push_back("boundary case");
  CHECK(to_json(r) ==
        R"({"checked":5,"failures":[{"expected":"x","got":"y","input":"uudd"}],)"
        R"("n":3,"notes":["boundary case"],"suite":"stats"})");
}
