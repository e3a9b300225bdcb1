#include <doctest.h>

#include "fibercover/cover.hpp"
#include "fibercover/error.hpp"
#include "fibercover/gaussian_rational.hpp"
#include "fibercover/label.hpp"
#include "support.hpp"

using namespace fibercover;
using fixtures::bp;
using fixtures::sphere_cover;

TEST_CASE("gaussian rationals") {
  auto q = [](const char* s) { return *GaussianRational::parse(s); };
  CHECK(q("1/2") + q("1/3") == q("5/6"));
  CHECK(q("i") * q("i") == q("-1"));
  CHECK((q("1+i") * q("1-i")) == q("2"));
  CHECK(q("3/4-1/2i").inverse() * q("3/4-1/2i") == q("1"));
  CHECK(q("1/2-3/4i").to_string() == "1/2-3/4i");
  CHECK(q("-i").to_string() == "-i");
  CHECK(q("2i").to_string() == "2i");
  CHECK(q("6/4").to_string() == "3/2");
  CHECK_FALSE(GaussianRational::parse("pi").has_value());
  CHECK_FALSE(GaussianRational::parse("1/0").has_value());
  CHECK(GaussianRational::approximate({0.3333333333333, -0.5}, 1000) == q("1/3-1/2i"));
  CHECK(GaussianRational::approximate({-1.0, 0.0}, 1000) == q("-1"));
}

TEST_CASE("labels: identity and canonical order") {
  auto L = [](const char* s) { return BranchLabel::parse(s); };
  CHECK(L("0").same_point(L("0/5")));
  CHECK(L("lambda=1/3").same_point(L("1/3")));
  CHECK(L("lambda=1/3").same_point(L("lambda")));
  CHECK_FALSE(L("lambda").same_point(L("mu")));
  CHECK_FALSE(L("1/3").same_point(L("lambda")));
  CHECK_THROWS_AS(L("a=1").same_point(L("a=2")), Error);
  CHECK(L("inf").is_infinity());
  CHECK(canonical_less(L("-1"), L("0")));
  CHECK(canonical_less(L("0"), L("i")));
  CHECK(canonical_less(L("5"), L("p")));
  CHECK(canonical_less(L("p"), L("inf")));
  CHECK_FALSE(canonical_less(L("inf"), L("inf")));
  CHECK(L("lambda=1/3").to_string() == "lambda=1/3");
  CHECK_THROWS_AS(L("(1"), Error);
}

TEST_CASE("validation catches each violation") {
  auto kinds = [](const BranchedCover& c) {
    std::vector<Violation> v;
    for (const auto& issue : validate(c).issues) v.push_back(issue.kind);
    return v;
  };
  CHECK(validate(fixtures::klein_belyi()).ok());
  CHECK(validate(fixtures::z3_belyi()).ok());

  auto broken = sphere_cover(3, {bp("0", 3, "(1 2)"), bp("1", 3, "(2 3)")});
  auto issues = validate(broken).issues;
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].kind == Violation::relation);
  REQUIRE(issues[0].residual.has_value());
  CHECK(issues[0].residual->to_cycle_string() == "(1 3 2)");

  CHECK(kinds(sphere_cover(2, {bp("0", 2, ""), bp("1", 2, "")})) ==
        std::vector<Violation>{Violation::unflagged_identity, Violation::unflagged_identity,
                               Violation::transitivity});
  CHECK(kinds(sphere_cover(2, {bp("0", 2, "(1 2)"), bp("0", 2, "(1 2)")})) ==
        std::vector<Violation>{Violation::duplicate_label});
  CHECK(kinds(sphere_cover(2, {bp("0", 2, "(1 2)", true), bp("1", 2, "(1 2)")})) ==
        std::vector<Violation>{Violation::padding_not_identity});
  CHECK(kinds(sphere_cover(4, {bp("0", 4, "(1 2)"), bp("1", 4, "(1 2)")})) ==
        std::vector<Violation>{Violation::transitivity});

  BranchedCover bad_shape = fixtures::genus2_unbranched_z2();
  bad_shape.handles.pop_back();
  CHECK(kinds(bad_shape).front() == Violation::shape);
}

TEST_CASE("Riemann-Hurwitz genus") {
  CHECK(genus(fixtures::z3_belyi()) == 1);
  CHECK(genus(fixtures::klein_belyi()) == 0);
  CHECK(genus(fixtures::double_cover_01()) == 0);
  CHECK(genus(fixtures::genus2_unbranched_z2()) == 3);
  CHECK(genus(fixtures::fermat(4)) == 3);
  CHECK(genus(fixtures::cyclic(7, {{"0", 1}, {"1", 2}, {"inf", -3}})) == 3);
  CHECK(genus(trivial_cover(2)) == 2);
  CHECK(euler_characteristic(fixtures::klein_belyi()) == 2);
}

TEST_CASE("local data and regularity") {
  auto k = fixtures::klein_belyi();
  CHECK(local_orders(k, BranchLabel::at(0)).to_string() == "[2,2]");
  CHECK(local_orders(k, BranchLabel::at(7)).is_trivial());
  CHECK(a_lcm(fixtures::z3_belyi(), BranchLabel::infinity()) == 3);
  CHECK(is_regular(k));
  CHECK(is_regular(fixtures::fermat(3)));
  CHECK_FALSE(is_regular(sphere_cover(3, {bp("0", 3, "(1 2)"), bp("1", 3, "(2 3)"), bp("inf", 3, "(1 2 3)")})));
}

TEST_CASE("generators and lookups") {
  auto c = fixtures::genus2_unbranched_z2();
  CHECK(c.generators().size() == 4);
  CHECK(c.relation_residual().is_identity());
  auto k = fixtures::klein_belyi();
  REQUIRE(k.find(BranchLabel::parse("1")) != nullptr);
  CHECK(k.find(BranchLabel::parse("2")) == nullptr);
  CHECK(k.branch_labels().size() == 3);
}

TEST_CASE("random covers are valid and satisfy Riemann-Hurwitz parity") {
  fixtures::CoverGenerator gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    int g0 = static_cast<int>(gen.uniform(0, 2));
    std::size_t n = gen.uniform(1, 8);
    auto labels = gen.labels(gen.uniform(g0 == 0 ? 2 : 0, 5));
    auto c = gen.random_cover(n, g0, labels);
    CHECK(validate(c).ok());
    int g = genus(c);
    CHECK(g >= g0);
  }
}
