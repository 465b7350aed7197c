#include <random>

#include "catch_amalgamated.hpp"

#include "bolext/bolext.hpp"
#include "oracle.hpp"

using namespace bolext;
using namespace bolext::theta;

namespace {

const Tuple clb3 = Tuple::parse("xy,xy,xy,x-y");
const Tuple clb4 = Tuple::parse("xy,x-y,xy,xy");
const Tuple xlb3 = Tuple::parse("xy,x-y,xy,x-y");
const Tuple xlb4 = Tuple::parse("xy,xy,yx,yx");
const Tuple xlb5 = Tuple::parse("xy,xy,xy,x-y");
const Tuple xlb6 = Tuple::parse("xy,xy,yx,yx-");
const Tuple xlb7 = Tuple::parse("xy,x-y,xy,xy");
const Tuple xlb8 = Tuple::parse("xy,x-y,yx,yx");

std::vector<MagmaTable> sample_loops() {
  std::vector<MagmaTable> out;
  for (const auto& g : {make_cyclic(4), make_symmetric(3), make_dihedral(8), make_quaternion8()})
    for (const auto& t : {Tuple{xy, xy, xy, xy}, clb3, clb4, xlb4, xlb6, Tuple{xy, yx, xy_, y_x}})
      out.push_back(build(g, t));
  return out;
}

}  // namespace

TEST_CASE("center sizes over D8") {
  const auto d8 = make_dihedral(8);
  CHECK(profile(build(d8, xlb4)).center_size == 2 * center(d8).size());
  CHECK(profile(build(d8, xlb7)).center_size <= 2);
  CHECK(profile(build(d8, xlb8)).center_size <= 2);
}

TEST_CASE("exponent-2 counts follow the coset formulas") {
  for (const auto& g : {make_dihedral(8), make_quaternion8()}) {
    const std::size_t g2 = torsion_subset(g, 2).size();
    for (const auto& t : {xlb3, xlb5, xlb6}) CHECK(profile(build(g, t)).exponent2_count == g2 + g.order());
    for (const auto& t : {xlb4, xlb7, xlb8}) CHECK(profile(build(g, t)).exponent2_count == 2 * g2);
  }
  CHECK(profile(build(make_dihedral(8), xlb5)).exponent2_count == 14);
  CHECK(profile(build(make_dihedral(8), xlb4)).exponent2_count == 12);
}

TEST_CASE("barred elements have at least the order of their base") {
  const auto c4 = make_cyclic(4);
  const auto t = build(c4, clb4);
  auto order = [&](Element x) {
    Element p = x;
    unsigned k = 1;
    while (p != 0) {
      p = t(x, p);
      ++k;
    }
    return k;
  };
  for (Element x = 0; x < 4; ++x) CHECK(order(4 + x) >= order(x));
}

TEST_CASE("profile rejects non-loops") {
  CHECK_THROWS_AS(profile(build(make_cyclic(4), Tuple{y_x, xy, xy, xy})), PreconditionError);
}

TEST_CASE("distance") {
  const auto c4 = make_cyclic(4);
  const auto direct = build(c4, Tuple{xy, xy, xy, xy});
  CHECK(drapal_distance(build(c4, clb3), direct) == 8);
  CHECK(drapal_distance(build(c4, clb4), direct) == 8);
  CHECK(drapal_distance(direct, direct) == 0);
  CHECK_THROWS_AS(drapal_distance(direct, build(make_cyclic(3), Tuple{xy, xy, xy, xy})), PreconditionError);
  CHECK(drapal_distance(make_cyclic(4), make_cyclic(4)) == 0);
}

TEST_CASE("distance is a metric on random tables of one size") {
  const auto g = make_symmetric(3);
  std::mt19937 rng(11);
  for (int k = 0; k < 50; ++k) {
    const auto a = build(g, Tuple::from_index(rng() % 4096));
    const auto b = build(g, Tuple::from_index(rng() % 4096));
    const auto c = build(g, Tuple::from_index(rng() % 4096));
    CHECK(drapal_distance(a, b) == drapal_distance(b, a));
    CHECK(drapal_distance(a, c) <= drapal_distance(a, b) + drapal_distance(b, c));
    CHECK((drapal_distance(a, b) == 0) == (a == b));
  }
}

TEST_CASE("isomorphism decisions on named loops") {
  const auto c4 = make_cyclic(4);
  CHECK_FALSE(is_isomorphic(build(c4, clb3), build(c4, clb4)));
  CHECK(is_isomorphic(chein(c4), build(c4, Tuple::parse("xy,x-y,xy,x-y"))));
  const auto d8 = make_dihedral(8);
  CHECK_FALSE(is_isomorphic(build(d8, xlb3), build(d8, xlb4)));
  CHECK_FALSE(is_isomorphic(build(d8, xlb7), build(d8, xlb4)));
  CHECK_FALSE(is_isomorphic(build(d8, xlb8), build(d8, xlb4)));
}

TEST_CASE("isomorphism agrees with brute force on order-8 loops") {
  const auto c4 = make_cyclic(4);
  std::vector<MagmaTable> loops;
  for (unsigned i = 0; i < 4096; i += 5) {
    const Tuple t = Tuple::from_index(i);
    if (loop_conditions(t)) loops.push_back(build(c4, t));
  }
  loops.push_back(build(make_dihedral(4), Tuple{xy, xy, xy, xy}));
  for (std::size_t i = 0; i < loops.size(); i += 3)
    for (std::size_t j = i; j < loops.size(); j += 4)
      REQUIRE(is_isomorphic(loops[i], loops[j]).has_value() == oracle::brute_isomorphic(loops[i], loops[j]));
}

TEST_CASE("relabeled copies are recognized and profiles are invariant") {
  std::mt19937 rng(20070101);
  for (const auto& t : sample_loops()) {
    const auto p = profile(t);
    for (int k = 0; k < 50; ++k) {
      auto perm = oracle::random_perm(t.size(), rng);
      const MagmaTable shuffled(relabel(t, perm));
      const auto w = is_isomorphic(t, shuffled);
      REQUIRE(w);
      REQUIRE(verify_witness(t, shuffled, w->forward));
      REQUIRE(profile(shuffled) == p);
    }
  }
}

TEST_CASE("isomorphism classes") {
  const auto c4 = make_cyclic(4);
  const std::vector<MagmaTable> loops{build(c4, clb3), build(c4, clb4), build(c4, Tuple::parse("xy,xy,yx,x-y")),
                                      chein(c4), build(c4, Tuple::parse("xy,x-y,xy,x-y"))};
  const auto cls = isomorphism_classes(loops);
  CHECK(cls == std::vector<std::vector<std::size_t>>{{0, 2}, {1}, {3, 4}});
}
