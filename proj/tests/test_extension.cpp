#include <random>

#include "catch_amalgamated.hpp"

#include "bolext/bolext.hpp"
#include "oracle.hpp"

using namespace bolext;
using namespace bolext::theta;

namespace {

std::vector<FiniteGroup> groups() {
  return {make_cyclic(4), make_cyclic(6), make_symmetric(3), make_dihedral(8), make_quaternion8()};
}

CayleyTable one_based(const std::vector<std::vector<Element>>& rows) {
  auto r = rows;
  for (auto& row : r)
    for (auto& v : row) --v;
  return CayleyTable::from_rows(r);
}

}  // namespace

TEST_CASE("printed C4 tables are reproduced exactly") {
  const auto c4 = make_cyclic(4);
  const auto first = one_based({{1, 2, 3, 4, 5, 6, 7, 8},
                                {2, 3, 4, 1, 6, 7, 8, 5},
                                {3, 4, 1, 2, 7, 8, 5, 6},
                                {4, 1, 2, 3, 8, 5, 6, 7},
                                {5, 6, 7, 8, 1, 2, 3, 4},
                                {6, 7, 8, 5, 4, 1, 2, 3},
                                {7, 8, 5, 6, 3, 4, 1, 2},
                                {8, 5, 6, 7, 2, 3, 4, 1}});
  const auto second = one_based({{1, 2, 3, 4, 5, 6, 7, 8},
                                 {2, 3, 4, 1, 8, 5, 6, 7},
                                 {3, 4, 1, 2, 7, 8, 5, 6},
                                 {4, 1, 2, 3, 6, 7, 8, 5},
                                 {5, 6, 7, 8, 1, 2, 3, 4},
                                 {6, 7, 8, 5, 2, 3, 4, 1},
                                 {7, 8, 5, 6, 3, 4, 1, 2},
                                 {8, 5, 6, 7, 4, 1, 2, 3}});
  CHECK(build(c4, Tuple::parse("xy,xy,xy,x-y")).table() == first);
  CHECK(build(c4, Tuple::parse("xy,x-y,xy,xy")).table() == second);
}

TEST_CASE("build agrees with the quadrant-rule oracle on every tuple") {
  for (const auto& g : {make_cyclic(4), make_symmetric(3)}) {
    const DeltaTables d(g);
    const auto gp = std::make_shared<const FiniteGroup>(g);
    for (unsigned i = 0; i < 4096; ++i) {
      const Tuple t = Tuple::from_index(i);
      const auto expect = oracle::extension(g.table(), oracle::names(t.str()));
      REQUIRE(build(ExtensionSpec(gp, t), d).table() == expect);
    }
  }
}

TEST_CASE("quadrant layout and the G block") {
  for (const auto& g : groups()) {
    const auto n = static_cast<Element>(g.order());
    for (ThetaMap a : all) {
      const auto t = build(g, Tuple{a, x_y, yx_, y_x_});
      CHECK(has_coset_layout(t));
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) CHECK(t(x, y) == apply_delta(a, x, y, g));
    }
    const auto d = direct_product_c2(g);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) CHECK(d(x, y) == g(x, y));
    CHECK(check_direct(d, IdentityId::associative).holds);
  }
}

TEST_CASE("non-Latin tables are rejected") {
  CHECK_THROWS_AS(MagmaTable(CayleyTable::from_rows({{0, 0}, {1, 1}})), ValidationError);
}

TEST_CASE("Chein loops") {
  const auto s3 = chein(make_symmetric(3));
  CHECK(s3.size() == 12);
  CHECK(check_direct(s3, IdentityId::moufang).holds);
  CHECK_FALSE(check_direct(s3, IdentityId::associative).holds);
  const auto c4 = chein(make_cyclic(4));
  CHECK(check_direct(c4, IdentityId::associative).holds);
  CHECK(chein(make_cyclic(1)).table() == CayleyTable::from_rows({{0, 1}, {1, 0}}));
  for (const auto& g : groups())
    CHECK(chein(g).table() == oracle::extension(g.table(), {"xy", "yx", "xy-", "y-x"}));
}

TEST_CASE("opposite spec builds the transpose") {
  std::mt19937 rng(7);
  for (const auto& g : groups()) {
    const auto gp = std::make_shared<const FiniteGroup>(g);
    for (int k = 0; k < 20; ++k) {
      const ExtensionSpec s(gp, Tuple::from_index(rng() % 4096));
      INFO(g.label() << " " << s.tuple.str());
      CHECK(build(opposite_spec(s)).table() == build(s).table().transposed());
      CHECK(opposite_spec(opposite_spec(s)) == s);
    }
  }
  const ExtensionSpec s(make_cyclic(4), Tuple::parse("xy,xy,xy,x-y"));
  const auto op = opposite_spec(s);
  CHECK(op.beta() == compose(s.gamma(), yx));
  CHECK(op.gamma() == compose(s.beta(), yx));
}

TEST_CASE("expressing over the opposite group reproduces the table") {
  for (const auto& g : {make_cyclic(4), make_symmetric(3), make_dihedral(8)}) {
    const auto gp = std::make_shared<const FiniteGroup>(g);
    for (unsigned i = 0; i < 4096; i += 37) {
      const ExtensionSpec s(gp, Tuple::from_index(i));
      const ExtensionSpec o = express_over_opposite(s);
      CHECK(o.group->table() == g.table().transposed());
      CHECK(build(o).table() == build(s).table());
    }
  }
}

TEST_CASE("inversion isomorphism between tuples") {
  const auto c4 = std::make_shared<const FiniteGroup>(make_cyclic(4));
  const auto [target, w] = lemma_iso_transform(ExtensionSpec(c4, Tuple::parse("xy,xy,xy-,xy-")));
  CHECK(is_isomorphic(build(target), build(*c4, Tuple::parse("xy,x-y,xy,x-y"))));
  CHECK(verify_witness(build(ExtensionSpec(c4, Tuple::parse("xy,xy,xy-,xy-"))), build(target), w.forward));

  const auto s3 = std::make_shared<const FiniteGroup>(make_symmetric(3));
  const auto [t2, w2] = lemma_iso_transform(ExtensionSpec(s3, Tuple::parse("xy,x-y,yx,yx-")));
  CHECK(is_isomorphic(build(t2), chein(*s3)));

  CHECK_THROWS_AS(lemma_iso_transform(ExtensionSpec(c4, Tuple::parse("xy,xy-,xy,xy"))), PreconditionError);
  CHECK_THROWS_AS(lemma_iso_transform(ExtensionSpec(c4, Tuple::parse("xy,xy,x-y,xy"))), PreconditionError);
}

TEST_CASE("partner maps invert through the second argument") {
  // (beta(x,y))^-1 = beta'(x,y^-1) for every listed pair
  const std::vector<std::pair<ThetaMap, ThetaMap>> beta_pairs{{xy, yx_}, {yx, x_y}, {x_y, yx}, {yx_, xy}};
  const std::vector<std::pair<ThetaMap, ThetaMap>> gamma_pairs{{xy, y_x}, {yx, xy_}, {xy_, yx}, {y_x, xy}};
  for (const auto& g : groups())
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y) {
        for (auto [b, b2] : beta_pairs) CHECK(g.inv(apply_delta(b, x, y, g)) == apply_delta(b2, x, g.inv(y), g));
        for (auto [c, c2] : gamma_pairs) CHECK(g.inv(apply_delta(c, x, y, g)) == apply_delta(c2, g.inv(x), y, g));
      }
}

TEST_CASE("every tuple over a test group gives a quasigroup") {
  for (const auto& g : {make_cyclic(6), make_dihedral(8)}) {
    const DeltaTables d(g);
    const auto gp = std::make_shared<const FiniteGroup>(g);
    for (unsigned i = 0; i < 4096; ++i) {
      const auto t = build(ExtensionSpec(gp, Tuple::from_index(i)), d);
      REQUIRE(oracle::latin(t));
    }
  }
}
