#include <doctest.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tc/presets.hpp"
#include "tc/zero_divisors.hpp"

using namespace tc;

namespace {

GradedAlgebra make(const Presentation& p) {
  return GradedAlgebra::validated(p);
}

TensorElement bar_of(const TensorSquare& t, const std::string& name) {
  auto i = t.base().index_of(name);
  REQUIRE(i.has_value());
  return t.barred(t.base().basis_element(*i));
}

// Test-local row reduction over base-algebra elements, used to rank the
// image of the cup map independently of the tracked kernel elimination.
std::size_t element_rank(const std::vector<Element>& rows, const Field& f) {
  std::map<std::uint32_t, Element> pivots;
  for (Element r : rows) {
    while (!r.is_zero()) {
      auto it = pivots.find(r.terms.front().first);
      if (it == pivots.end()) break;
      r = add_scaled(r, -r.terms.front().second, it->second, f);
    }
    if (r.is_zero()) continue;
    r = scaled(r, f.inverse(r.terms.front().second), f);
    pivots.emplace(r.terms.front().first, std::move(r));
  }
  return pivots.size();
}

// Straight-from-the-definition chain: L1 = ker(cup), L_{m+1} spanned by all
// pairwise products of L_m with L1.  No barred-generator shortcut, no degree
// pruning; returns the largest m with L_m != 0.
int zdcl_oracle(const GradedAlgebra& a) {
  TensorSquare t(a);
  std::vector<TensorElement> level = t.kernel_basis();
  const std::vector<TensorElement> first = level;
  if (level.empty()) return 0;
  int length = 1;
  while (true) {
    SparseEchelon next(a.field());
    for (const TensorElement& z : level)
      for (const TensorElement& w : first) next.insert(t.multiply(z, w));
    if (next.empty()) break;
    level = next.rows();
    ++length;
  }
  return length;
}

}  // namespace

TEST_CASE("cup kernel of the even sphere") {
  auto a = make(preset_sphere(2));
  TensorSquare t(a);
  auto kr = t.kernel();
  CHECK(kr.basis.size() == 2);
  CHECK(kr.image_rank == 2);

  TensorElement ubar = bar_of(t, "u");
  CHECK(t.show(ubar) == "1⊗u - u⊗1");
  CHECK(t.cup(ubar).is_zero());

  // The kernel contains exactly 1(x)u - u(x)1 and u(x)u.
  SparseEchelon span(a.field());
  for (const auto& v : kr.basis) span.insert(v);
  CHECK(span.contains(ubar));
  CHECK(span.contains(t.embed(1, 1, 1)));
  CHECK_FALSE(span.contains(t.embed(0, 1, 1)));

  // ubar^2 = -2 u(x)u.
  TensorElement sq = t.multiply(ubar, ubar);
  CHECK(sq == t.embed(1, 1, -2));
  CHECK(t.show(sq) == "-2*u⊗u");
  CHECK(t.multiply(sq, ubar).is_zero());
}

TEST_CASE("odd spheres have square-zero barred classes") {
  auto a = make(preset_sphere(1));
  TensorSquare t(a);
  TensorElement ubar = bar_of(t, "u");
  CHECK(t.multiply(ubar, ubar).is_zero());
  CHECK(zdcl(a).length == 1);

  auto a3 = make(preset_sphere(3));
  CHECK(zdcl(a3).length == 1);
}

TEST_CASE("wedge of circles reaches length two") {
  auto a = make(preset_wedge_spheres(2, 1));
  TensorSquare t(a);
  TensorElement u1 = bar_of(t, "u1"), u2 = bar_of(t, "u2");
  TensorElement prod = t.multiply(u1, u2);
  // u2 (x) u1 - u1 (x) u2, indices u1 = 1, u2 = 2.
  TensorElement expect =
      added(t.embed(2, 1, 1), t.embed(1, 2, -1), a.field());
  CHECK(prod == expect);
  CHECK(zdcl(a).length == 2);
}

TEST_CASE("zero divisor length of the even sphere") {
  auto r = zdcl(make(preset_sphere(2)));
  CHECK(r.length == 2);
  REQUIRE(r.witness_names.size() == 2);
  CHECK(r.witness_names[0] == "bar(u)");
  CHECK(r.witness_names[1] == "bar(u)");
  CHECK(r.powers.size() == 2);
  CHECK(r.powers[0].size() == 2);
  CHECK(r.powers[1].size() == 1);
  CHECK_FALSE(r.certificate.empty());
}

TEST_CASE("zero divisor length of surfaces") {
  auto a = make(preset_surface(3));
  auto r = zdcl(a);
  CHECK(r.length == 4);
  REQUIRE(r.witness_names.size() == 4);
  CHECK(r.witness_names ==
        std::vector<std::string>{"bar(a)", "bar(b)", "bar(c)", "bar(d)"});

  // The witness product is +2 A(x)A; recompute it directly.
  TensorSquare t(a);
  const int iA = *a.index_of("A");
  CHECK(r.witness_product == t.embed(iA, iA, 2));
  TensorElement direct = t.multiply(
      t.multiply(t.multiply(bar_of(t, "a"), bar_of(t, "b")), bar_of(t, "c")),
      bar_of(t, "d"));
  CHECK(direct == r.witness_product);
  CHECK(t.show(direct) == "2*A⊗A");

  CHECK(zdcl(make(preset_surface(2))).length == 4);
  // Genus one is the 2-torus: length 2.
  CHECK(zdcl(make(preset_surface(1))).length == 2);
}

TEST_CASE("zero divisor length of tori") {
  CHECK(zdcl(make(preset_torus(1))).length == 1);
  CHECK(zdcl(make(preset_torus(2))).length == 2);
  auto r = zdcl(make(preset_torus(3)));
  CHECK(r.length == 3);
  // A pure product of the three generator classes is nonzero.
  CHECK_FALSE(r.witness_product.is_zero());
}

TEST_CASE("zero divisor length of mod-2 projective spaces") {
  auto a = make(preset_projective_mod2(3));
  TensorSquare t(a);
  TensorElement ab = bar_of(t, "a");
  // Over F2 the barred class is 1(x)a + a(x)1.
  CHECK(ab == added(t.embed(0, 1, 1), t.embed(1, 0, 1), a.field()));
  TensorElement cube = t.multiply(t.multiply(ab, ab), ab);
  TensorElement expect = t.embed(0, 3, 1);
  expect = added(expect, t.embed(1, 2, 1), a.field());
  expect = added(expect, t.embed(2, 1, 1), a.field());
  expect = added(expect, t.embed(3, 0, 1), a.field());
  CHECK(cube == expect);
  CHECK(t.multiply(cube, ab).is_zero());

  CHECK(zdcl(a).length == 3);
  CHECK(zdcl(make(preset_projective_mod2(2))).length == 3);
  CHECK(zdcl(make(preset_projective_mod2(1))).length == 1);
}

TEST_CASE("zero divisor length of sphere products") {
  auto p2 = make(preset_product(preset_sphere(2), preset_sphere(2)));
  auto r = zdcl(p2);
  CHECK(r.length == 4);
  // Witness is bar(1*u)^2 bar(u*1)^2 = 4 (u*u)(x)(u*u).
  TensorSquare t(p2);
  const int top = *p2.index_of("u*u");
  CHECK(r.witness_product == t.embed(top, top, 4));

  auto p3 = make(preset_product(
      preset_product(preset_sphere(2), preset_sphere(2)), preset_sphere(2)));
  CHECK(zdcl(p3).length == 6);
}

TEST_CASE("point and trivial cases") {
  auto r = zdcl(make(preset_point()));
  CHECK(r.length == 0);
  CHECK(r.witness.empty());
  CHECK_FALSE(r.certificate.empty());
}

TEST_CASE("barred classes require homogeneous positive degree") {
  auto a = make(preset_torus(2));
  TensorSquare t(a);
  CHECK(t.barred(Element{}).is_zero());
  CHECK_THROWS_AS(t.barred(a.unit_element()), AlgebraError);
  Element mixed = added(a.basis_element(1), a.basis_element(3), a.field());
  CHECK_THROWS_AS(t.barred(mixed), AlgebraError);
}

TEST_CASE("kernel is exactly the cup kernel on every preset") {
  for (const Presentation& p :
       {preset_point(), preset_sphere(1), preset_sphere(2),
        preset_wedge_spheres(3, 2), preset_surface(2), preset_torus(3),
        preset_projective_mod2(4),
        preset_product(preset_sphere(1), preset_sphere(2))}) {
    auto a = make(p);
    TensorSquare t(a);
    auto kr = t.kernel();
    INFO("preset ", p.label);

    // Every reported kernel vector really cups to zero.
    for (const auto& v : kr.basis) CHECK(t.cup(v).is_zero());
    // Rank-nullity across the whole tensor square.
    CHECK(kr.basis.size() + kr.image_rank ==
          static_cast<std::size_t>(a.dim()) * a.dim());
    // The image rank matches an independently computed rank of the span of
    // all pairwise products.
    std::vector<Element> products;
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) products.push_back(a.product(i, j));
    CHECK(kr.image_rank == element_rank(products, a.field()));
    // Kernel vectors are linearly independent.
    SparseEchelon span(a.field());
    for (const auto& v : kr.basis) CHECK(span.insert(v));
  }
}

TEST_CASE("chain computation agrees with the definitional oracle") {
  for (const Presentation& p :
       {preset_point(), preset_sphere(1), preset_sphere(2), preset_sphere(3),
        preset_wedge_spheres(2, 1), preset_wedge_spheres(1, 3),
        preset_wedge_spheres(3, 2), preset_surface(0), preset_surface(1),
        preset_surface(2), preset_torus(2), preset_torus(3),
        preset_projective_mod2(2), preset_projective_mod2(3),
        preset_projective_mod2(4),
        preset_product(preset_sphere(2), preset_sphere(2)),
        preset_product(preset_sphere(1), preset_sphere(2))}) {
    auto a = make(p);
    INFO("preset ", p.label);
    auto r = zdcl(a);
    CHECK(r.length == zdcl_oracle(a));

    // The witness multiplies out to a nonzero product of the right arity.
    if (r.length > 0) {
      CHECK(r.witness.size() == static_cast<std::size_t>(r.length));
      TensorSquare t(a);
      TensorElement prod = t.unit();
      for (const auto& f : r.witness) {
        CHECK(t.cup(f).is_zero());  // every factor is a zero-divisor
        prod = t.multiply(prod, f);
      }
      CHECK(prod == r.witness_product);
      CHECK_FALSE(prod.is_zero());
    }
  }
}

TEST_CASE("echelon membership handles overlapping supports") {
  Field q = Field::rationals();
  SparseEchelon e(q);
  auto vec = [&](std::vector<std::pair<std::uint64_t, mpq_class>> t) {
    return sparse_from_terms(std::move(t), q);
  };
  CHECK(e.insert(vec({{1, 1}, {2, 1}})));
  CHECK(e.insert(vec({{2, 1}, {3, 1}})));
  CHECK_FALSE(e.insert(vec({{1, 1}, {3, -1}})));  // difference of the two
  CHECK(e.contains(vec({{1, 2}, {2, 1}, {3, -1}})));
  CHECK_FALSE(e.contains(vec({{1, 1}})));
  CHECK(e.rank() == 2);
}
