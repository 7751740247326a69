#include <doctest.h>

#include <string>

#include "tc/bounds.hpp"

using namespace tc;

namespace {

SpaceDescriptor parse(const std::string& s) {
  return SpaceDescriptor::parse(s);
}

}  // namespace

TEST_CASE("descriptor parsing and canonical text") {
  CHECK(parse("sphere:2").text() == "sphere:2");
  CHECK(parse("  wedge : 2 , 3 ").text() == "wedge_spheres:2,3");
  CHECK(parse("pm2:3").text() == "projective_mod2:3");
  CHECK(parse("circle").text() == "torus:1");
  CHECK(parse("power(sphere:2,3)").text() ==
        "product(sphere:2,sphere:2,sphere:2)");
  CHECK(parse("power(torus:2,1)").text() == "torus:2");
  CHECK(parse("product(surface:3,surface:3)").text() ==
        "product(surface:3,surface:3)");
  CHECK(parse("product(point,product(torus:1,se3))").text() ==
        "product(point,product(torus:1,se3))");
  CHECK(parse("graph:5").text() == "graph:5");

  CHECK_THROWS_AS(parse(""), DescriptorError);
  CHECK_THROWS_AS(parse("sphere"), DescriptorError);
  CHECK_THROWS_AS(parse("sphere:0"), DescriptorError);
  CHECK_THROWS_AS(parse("torus:12"), DescriptorError);
  CHECK_THROWS_AS(parse("surface:14"), DescriptorError);
  CHECK_THROWS_AS(parse("graph:-1"), DescriptorError);
  CHECK_THROWS_AS(parse("blob:1"), DescriptorError);
  CHECK_THROWS_AS(parse("product(sphere:2)"), DescriptorError);
  CHECK_THROWS_AS(parse("power(sphere:2,0)"), DescriptorError);
  CHECK_THROWS_AS(parse("sphere:2x"), DescriptorError);
  CHECK_THROWS_AS(parse("wedge_spheres:2"), DescriptorError);
}

TEST_CASE("descriptor invariants") {
  CHECK(parse("point").dimension() == 0);
  CHECK(parse("sphere:4").dimension() == 4);
  CHECK(parse("sphere:4").connectivity() == 3);
  CHECK(parse("wedge:3,2").dimension() == 2);
  CHECK(parse("wedge:3,2").connectivity() == 1);
  CHECK(parse("surface:3").dimension() == 2);
  CHECK(parse("surface:0").connectivity() == 1);
  CHECK(parse("surface:2").connectivity() == 0);
  CHECK(parse("torus:5").dimension() == 5);
  CHECK(parse("se3").dimension() == 3);
  CHECK(parse("graph:0").dimension() == 0);
  CHECK(parse("graph:7").dimension() == 1);
  CHECK(parse("power(sphere:2,3)").dimension() == 6);
  CHECK(parse("power(sphere:2,3)").connectivity() == 1);

  CHECK(parse("torus:5").betti1() == 5);
  CHECK(parse("graph:7").betti1() == 7);
  CHECK(parse("surface:3").betti1() == 6);
  CHECK(parse("wedge:4,1").betti1() == 4);
  CHECK(parse("product(torus:2,torus:3)").betti1() == 5);

  CHECK(parse("point").contractible());
  CHECK(parse("graph:0").contractible());
  CHECK(parse("product(point,graph:0)").contractible());
  CHECK_FALSE(parse("torus:1").contractible());
}

TEST_CASE("leaf normalization") {
  auto ls = parse("product(point,wedge:1,1,surface:0)").leaves();
  REQUIRE(ls.size() == 2);
  CHECK(ls[0].text() == "torus:1");  // wedge:1,1 -> sphere:1 -> torus:1
  CHECK(ls[1].text() == "sphere:2");  // surface:0 -> sphere:2
  CHECK(parse("surface:1").leaves()[0].text() == "torus:2");
  CHECK(parse("graph:0").leaves().empty());
}

TEST_CASE("bound rule arithmetic") {
  CHECK(tc_lower_from_zdcl(0) == 1);
  CHECK(tc_lower_from_zdcl(4) == 5);
  CHECK(tc_upper_dim(0) == 1);
  CHECK(tc_upper_dim(2) == 5);

  // r = 1 gives d + 1.
  CHECK(tc_upper_conn(2, 1) == 3);
  CHECK(tc_upper_conn(5, 1) == 6);
  CHECK(tc_upper_conn(6, 1) == 7);
  // (m, m-1) gives 3 for every m >= 1 (integer case at m = 1).
  CHECK(tc_upper_conn(1, 0) == 3);
  CHECK(tc_upper_conn(2, 1) == 3);
  CHECK(tc_upper_conn(5, 4) == 3);
  CHECK(tc_upper_conn(0, 0) == 1);
  CHECK(tc_upper_conn(4, 0) == 9);

  CHECK(graph_tc(0) == 1);
  CHECK(graph_tc(1) == 2);
  CHECK(graph_tc(2) == 3);
  CHECK(graph_tc(7) == 3);

  CHECK(product_upper(5, 5) == 9);
  CHECK(product_upper(1, 7) == 7);
  CHECK(product_upper(2, 2) == 3);
  CHECK_THROWS_AS(product_upper(0, 3), BracketError);
}

TEST_CASE("known value table") {
  auto value = [](const std::string& s) {
    auto kv = known_value(SpaceDescriptor::parse(s));
    return kv ? kv->value : -1;
  };
  CHECK(value("point") == 1);
  CHECK(value("graph:0") == 1);
  CHECK(value("se3") == 4);
  CHECK(value("torus:5") == 6);
  CHECK(value("torus:1") == 2);
  CHECK(value("sphere:1") == 2);
  CHECK(value("sphere:3") == 2);
  CHECK(value("sphere:2") == 3);
  CHECK(value("sphere:4") == 3);
  CHECK(value("wedge:1,3") == 2);
  CHECK(value("wedge:1,2") == 3);
  CHECK(value("wedge:1,1") == 2);
  CHECK(value("wedge:2,3") == 3);
  CHECK(value("wedge:5,1") == 3);
  CHECK(value("surface:3") == 5);
  CHECK(value("surface:0") == 3);
  CHECK(value("surface:1") == 3);
  CHECK(value("power(sphere:2,3)") == 7);
  CHECK(value("product(surface:3,surface:3)") == 9);
  CHECK(value("product(torus:2,circle)") == 4);
  CHECK(value("product(point,sphere:2)") == 3);
  CHECK(value("product(torus:1,torus:1)") == 3);

  CHECK(value("projective_mod2:3") == -1);
  CHECK(value("graph:2") == -1);
  CHECK(value("surface:2") == -1);
  CHECK(value("product(sphere:2,torus:1)") == -1);
  CHECK(value("product(sphere:2,sphere:3)") == -1);

  auto kv = known_value(SpaceDescriptor::parse("se3"));
  REQUIRE(kv.has_value());
  CHECK_FALSE(kv->claim.empty());
}

TEST_CASE("bracket of the even sphere") {
  BoundReport r = bracket(parse("sphere:2"));
  REQUIRE(r.lower);
  REQUIRE(r.upper);
  CHECK(r.lower->value == 3);
  CHECK(r.lower->tag == "zdcl");
  CHECK(r.upper->value == 3);
  CHECK(r.upper->tag == "connectivity");
  CHECK(r.exact == 3);
  CHECK(r.exact_tag == "known-value");
  CHECK(r.zdcl_result.length == 2);
  REQUIRE(r.upper_candidates.size() == 2);
  CHECK(r.upper_candidates[0].value == 5);  // dimension
  CHECK(r.upper_candidates[1].value == 3);  // connectivity
  CHECK(r.convention == std::string(kConvention));
}

TEST_CASE("bracket of surfaces") {
  BoundReport r = bracket(parse("surface:3"));
  CHECK(r.lower->value == 5);
  CHECK(r.upper->value == 5);
  CHECK(r.upper->tag == "dimension");  // 2d+1 = 5 listed first among the 5s
  CHECK(r.exact == 5);
  CHECK(r.exact_tag == "known-value");
  CHECK(r.zdcl_result.length == 4);
}

TEST_CASE("bracket of SE(3)") {
  BoundReport r = bracket(parse("se3"));
  CHECK(r.lower->value == 4);
  CHECK(r.upper->value == 7);  // dimension rule on the compact model
  CHECK(r.exact == 4);
  CHECK(r.exact_tag == "known-value");
  CHECK(r.zdcl_result.length == 3);
  CHECK(r.algebra_label == "projective_mod2(3)");
  CHECK(r.space == "se3");
}

TEST_CASE("bracket of graphs") {
  const int b1[] = {0, 1, 2, 5};
  const int expect_tc[] = {1, 2, 3, 3};
  const int expect_zdcl[] = {0, 1, 2, 2};
  for (int i = 0; i < 4; ++i) {
    BoundReport r = bracket(parse("graph:" + std::to_string(b1[i])));
    INFO("b1 = ", b1[i]);
    CHECK(r.lower->value == expect_tc[i]);
    CHECK(r.upper->value == expect_tc[i]);
    CHECK(r.exact == expect_tc[i]);
    CHECK(r.zdcl_result.length == expect_zdcl[i]);
  }
  // The circle as a graph: the graph formula is the binding upper rule.
  BoundReport c = bracket(parse("graph:1"));
  CHECK(c.upper->tag == "graph-formula");
}

TEST_CASE("bracket of the circle and tori") {
  BoundReport c = bracket(parse("circle"));
  CHECK(c.lower->value == 2);
  CHECK(c.upper->value == 2);
  CHECK(c.upper->tag == "graph-formula");
  CHECK(c.exact == 2);
  CHECK(c.exact_tag == "known-value");

  BoundReport t = bracket(parse("torus:3"));
  CHECK(t.lower->value == 4);
  CHECK(t.exact == 4);
  CHECK(t.zdcl_result.length == 3);

  BoundReport p = bracket(parse("product(torus:2,torus:1)"));
  CHECK(p.lower->value == 4);
  CHECK(p.upper->value == 4);
  CHECK(p.upper->tag == "product-composition");
  CHECK(p.exact == 4);
}

TEST_CASE("bracket of sphere powers") {
  BoundReport r = bracket(parse("power(sphere:2,2)"));
  CHECK(r.zdcl_result.length == 4);
  CHECK(r.lower->value == 5);
  CHECK(r.upper->value == 5);
  CHECK(r.upper->tag == "connectivity");
  CHECK(r.exact == 5);
  CHECK(r.exact_tag == "known-value");
  bool saw_product_rule = false;
  for (const auto& cand : r.upper_candidates)
    if (cand.tag == "product-composition") {
      saw_product_rule = true;
      CHECK(cand.value == 5);
    }
  CHECK(saw_product_rule);
}

TEST_CASE("brackets that stay open") {
  BoundReport r = bracket(parse("projective_mod2:2"));
  CHECK(r.lower->value == 4);  // zdcl 3 over F2
  CHECK(r.upper->value == 5);  // dimension/connectivity at d = 2
  CHECK_FALSE(r.exact.has_value());
  CHECK(r.exact_tag.empty());

  BoundReport p3 = bracket(parse("projective_mod2:3"));
  CHECK(p3.lower->value == 4);
  CHECK(p3.upper->value == 7);
  CHECK_FALSE(p3.exact.has_value());
}

TEST_CASE("algebra-only brackets") {
  auto alg = GradedAlgebra::validated(parse("sphere:2").algebra());
  BoundReport no_dims = bracket(alg);
  CHECK(no_dims.lower->value == 3);
  CHECK_FALSE(no_dims.upper.has_value());
  CHECK_FALSE(no_dims.exact.has_value());

  BoundReport with_dims = bracket(alg, BracketOptions{2, 1});
  CHECK(with_dims.upper->value == 3);
  CHECK(with_dims.exact == 3);
  CHECK(with_dims.exact_tag == "connectivity");  // no table without descriptor
}

TEST_CASE("bracket contradictions raise errors") {
  // Forcing dimension 1 on the genus-3 surface caps TC at 3 < zdcl bound 5.
  CHECK_THROWS_AS(bracket(parse("surface:3"), BracketOptions{1, {}}),
                  BracketError);
}
