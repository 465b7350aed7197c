#include <sstream>

#include "catch_amalgamated.hpp"

#include "bolext/table.hpp"

using namespace bolext;

TEST_CASE("text format round trip is bit exact") {
  const std::string text = "3\n0 1 2\n1 2 0\n2 0 1\n";
  std::istringstream in(text);
  const CayleyTable t = read_cayley_text(in);
  REQUIRE(t.size() == 3);
  CHECK(t(1, 2) == 0);
  CHECK(to_cayley_text(t) == text);
}

TEST_CASE("comments and blank lines are skipped") {
  std::istringstream in("# order two\n2   # n\n\n0 1\n1 0 # last row\n");
  const CayleyTable t = read_cayley_text(in);
  CHECK(t == CayleyTable::from_rows({{0, 1}, {1, 0}}));
}

TEST_CASE("malformed text is rejected") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_cayley_text(in);
  };
  CHECK_THROWS_AS(parse(""), ValidationError);
  CHECK_THROWS_AS(parse("2\n0 1\n1\n"), ValidationError);
  CHECK_THROWS_AS(parse("2\n0 1\n1 x\n"), ValidationError);
  CHECK_THROWS_AS(parse("2\n0 1\n1 2\n"), ValidationError);
  CHECK_THROWS_AS(parse("2\n0 1\n1 -1\n"), ValidationError);
}

TEST_CASE("from_rows checks shape") {
  CHECK_THROWS_AS(CayleyTable::from_rows({{0, 1}, {1}}), ValidationError);
  CHECK_NOTHROW(CayleyTable::from_rows({{0}}));
}

TEST_CASE("latin violations are located") {
  const auto good = CayleyTable::from_rows({{0, 1}, {1, 0}});
  CHECK_FALSE(first_latin_violation(good));
  const auto row_dup = CayleyTable::from_rows({{0, 0}, {1, 1}});
  REQUIRE(first_latin_violation(row_dup));
  CHECK(*first_latin_violation(row_dup) == std::pair<Element, Element>{0, 1});
  const auto col_dup = CayleyTable::from_rows({{0, 1}, {0, 1}});
  CHECK(*first_latin_violation(col_dup) == std::pair<Element, Element>{1, 0});
}

TEST_CASE("relabel and transpose") {
  const auto t = CayleyTable::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  const std::vector<Element> perm{0, 2, 1};
  const auto r = relabel(t, perm);
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) CHECK(r(perm[a], perm[b]) == perm[t(a, b)]);
  const auto nc = CayleyTable::from_rows({{0, 1}, {0, 1}});
  CHECK(nc.transposed() == CayleyTable::from_rows({{0, 0}, {1, 1}}));
  CHECK(nc.transposed().transposed() == nc);
}

TEST_CASE("permutation notation") {
  const std::vector<Element> p{2, 0, 1};
  CHECK(format_permutation(p) == "2 0 1");
  CHECK(parse_permutation("2 0 1") == p);
  CHECK_THROWS_AS(parse_permutation("0 0 1"), ValidationError);
  CHECK_THROWS_AS(parse_permutation("0 3 1"), ValidationError);
}
