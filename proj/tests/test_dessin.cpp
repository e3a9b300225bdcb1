#include <doctest.h>

#include "fibercover/dessin.hpp"
#include "fibercover/error.hpp"
#include "support.hpp"

using namespace fibercover;
using fixtures::bp;
using fixtures::sphere_cover;

TEST_CASE("dessin faces close the relation") {
  Dessin d(parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4));
  CHECK(d.sigma_inf() == parse_cycles("(1 4)(2 3)", 4));
  CHECK(valence(d).to_string() == "(2,2;2,2;2,2)");
  CHECK(euler_genus(d) == 0);
  CHECK_THROWS_AS(Dessin(parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)), Error);
  CHECK_THROWS_AS(Dessin(parse_cycles("(1 2)", 2), parse_cycles("(1 2)", 3)), Error);
}

TEST_CASE("cover and dessin round trip") {
  auto k = fixtures::klein_belyi();
  Dessin d = dessin_from_cover(k);
  BranchedCover back = cover_from_dessin(d);
  CHECK(validate(back).ok());
  CHECK(back.branch_points.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(back.branch_points[i].monodromy == k.branch_points[i].monodromy);

  // Unbranched over 1: padded in the cover.
  Dessin line(parse_cycles("(1 2)", 2), Permutation(2));
  auto c = cover_from_dessin(line);
  CHECK(c.branch_points[1].padding);
  CHECK(validate(c).ok());
  CHECK(dessin_from_cover(fixtures::double_cover_01()).sigma_inf().is_identity());
}

TEST_CASE("non-Belyi covers are rejected") {
  auto off = sphere_cover(2, {bp("0", 2, "(1 2)"), bp("2", 2, "(1 2)")});
  CHECK_THROWS_AS(dessin_from_cover(off), Error);
  CHECK_THROWS_AS(dessin_from_cover(fixtures::genus2_unbranched_z2()), Error);
  auto reordered = sphere_cover(4, {bp("1", 4, "(1 3)(2 4)"), bp("0", 4, "(1 2)(3 4)"), bp("inf", 4, "(1 4)(2 3)")});
  REQUIRE(validate(reordered).ok());
  try {
    dessin_from_cover(reordered);
    FAIL("expected not_belyi_pair");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_belyi_pair);
  }
}

TEST_CASE("dessin of the Z7 x Z3 product") {
  auto c1 = fixtures::cyclic(7, {{"0", 1}, {"1", 2}, {"inf", -3}});
  auto c2 = fixtures::cyclic(3, {{"0", 1}, {"1", 1}, {"inf", 1}});
  Dessin d1 = dessin_from_cover(c1), d2 = dessin_from_cover(c2);
  DessinCriteria crit = dessin_criteria(d1, d2);
  CHECK(crit.cond1);
  CHECK(crit.cond2);
  CHECK(crit.predicted_single_dessin);
  auto product = dessin_fiber_product(d1, d2);
  REQUIRE(product.size() == 1);
  CHECK(product[0].edges() == 21);
  CHECK(valence(product[0]).to_string() == "(21;21;21)");
  CHECK(euler_genus(product[0]) == 10);
}

TEST_CASE("dessin products match the fiber engine") {
  fixtures::CoverGenerator gen(29);
  auto labels = std::vector<BranchLabel>{BranchLabel::at(0), BranchLabel::at(1), BranchLabel::infinity()};
  for (int trial = 0; trial < 100; ++trial) {
    auto c1 = gen.random_cover(gen.uniform(1, 7), 0, labels);
    auto c2 = gen.random_cover(gen.uniform(1, 7), 0, labels);
    Dessin d1 = dessin_from_cover(c1), d2 = dessin_from_cover(c2);
    auto dessins = dessin_fiber_product(d1, d2, Execution::serial);
    auto dec = decompose(c1, c2, Execution::serial);
    REQUIRE(dessins.size() == dec.components.size());
    for (std::size_t k = 0; k < dessins.size(); ++k) CHECK(euler_genus(dessins[k]) == dec.components[k].genus);
    if (dessin_criteria(d1, d2).predicted_single_dessin) CHECK(dessins.size() == 1);
  }
}
