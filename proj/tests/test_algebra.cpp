#include <doctest.h>

#include <string>

#include "tc/algebra.hpp"
#include "tc/presentation_io.hpp"
#include "tc/presets.hpp"

using namespace tc;

namespace {

// Returns the message of the AlgebraError thrown by f (empty if none).
template <typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const AlgebraError& e) {
    return e.what();
  } catch (const PresentationError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

Element named(const GradedAlgebra& a, const std::string& name) {
  auto i = a.index_of(name);
  REQUIRE(i.has_value());
  return a.basis_element(*i);
}

}  // namespace

TEST_CASE("sparse vectors canonicalize") {
  Field q = Field::rationals();
  auto v = sparse_from_terms<std::uint32_t>(
      {{3, mpq_class(1)}, {1, mpq_class(2)}, {3, mpq_class(-1)}}, q);
  CHECK(v.size() == 1);
  CHECK(v.coeff(1) == 2);
  CHECK(v.coeff(3) == 0);

  auto w = add_scaled(v, mpq_class(1, 2), v, q);
  CHECK(w.coeff(1) == 3);
  CHECK(add_scaled(v, mpq_class(-1), v, q).is_zero());
}

TEST_CASE("point algebra is the unit alone") {
  auto a = GradedAlgebra::validated(preset_point());
  CHECK(a.dim() == 1);
  CHECK(a.top_degree() == 0);
  CHECK(a.multiply(a.unit_element(), a.unit_element()) == a.unit_element());
}

TEST_CASE("sphere algebra truncates at the fundamental class") {
  auto s2 = GradedAlgebra::validated(preset_sphere(2));
  CHECK(s2.dim() == 2);
  CHECK(s2.degree(1) == 2);
  Element u = named(s2, "u");
  CHECK(s2.multiply(u, u).is_zero());
  CHECK(s2.multiply(s2.unit_element(), u) == u);

  auto s1 = GradedAlgebra::validated(preset_sphere(1));
  Element v = named(s1, "u");
  CHECK(s1.multiply(v, v).is_zero());
}

TEST_CASE("wedge of spheres has trivial products") {
  auto w = GradedAlgebra::validated(preset_wedge_spheres(2, 1));
  CHECK(w.dim() == 3);
  CHECK(w.multiply(named(w, "u1"), named(w, "u2")).is_zero());
  CHECK(w.multiply(named(w, "u1"), named(w, "u1")).is_zero());
}

TEST_CASE("surface algebra pairs handles into the orientation class") {
  auto s = GradedAlgebra::validated(preset_surface(3));
  CHECK(s.dim() == 8);
  Element a = named(s, "a"), b = named(s, "b"), c = named(s, "c"),
          d = named(s, "d"), A = named(s, "A");
  CHECK(s.multiply(a, b) == A);
  CHECK(s.multiply(b, a) == scaled(A, mpq_class(-1), s.field()));
  CHECK(s.multiply(c, d) == A);
  CHECK(s.multiply(a, c).is_zero());
  CHECK(s.multiply(a, a).is_zero());
  CHECK(s.multiply(a, A).is_zero());
  CHECK(s.homogeneous_degree(A) == 2);

  // Genus 0 degenerates to the sphere algebra in degree 2.
  auto s0 = GradedAlgebra::validated(preset_surface(0));
  CHECK(s0.dim() == 2);
  CHECK(s0.degree(1) == 2);
}

TEST_CASE("torus algebra is the exterior algebra on n generators") {
  auto t2 = GradedAlgebra::validated(preset_torus(2));
  CHECK(t2.dim() == 4);
  CHECK(t2.basis(3).name == "e1e2");
  CHECK(t2.multiply(named(t2, "e1"), named(t2, "e2")) == named(t2, "e1e2"));
  CHECK(t2.multiply(named(t2, "e2"), named(t2, "e1")) ==
        scaled(named(t2, "e1e2"), mpq_class(-1), t2.field()));
  CHECK(t2.multiply(named(t2, "e1"), named(t2, "e1e2")).is_zero());

  auto t3 = GradedAlgebra::validated(preset_torus(3));
  CHECK(t3.dim() == 8);
  CHECK(t3.top_degree() == 3);
  CHECK(t3.multiply(named(t3, "e1"), named(t3, "e2e3")) ==
        named(t3, "e1e2e3"));
  CHECK(t3.multiply(named(t3, "e2"), named(t3, "e1e3")) ==
        scaled(named(t3, "e1e2e3"), mpq_class(-1), t3.field()));
  CHECK(t3.multiply(named(t3, "e1e2"), named(t3, "e1e3")).is_zero());
  // Order within a degree is lexicographic on the generator lists.
  CHECK(t3.basis(4).name == "e1e2");
  CHECK(t3.basis(5).name == "e1e3");
  CHECK(t3.basis(6).name == "e2e3");
}

TEST_CASE("mod-2 projective space algebra is a truncated polynomial ring") {
  auto p = GradedAlgebra::validated(preset_projective_mod2(3));
  CHECK(p.field().characteristic == 2);
  CHECK(p.dim() == 4);
  Element a = named(p, "a");
  Element a2 = p.multiply(a, a);
  CHECK(a2 == named(p, "a^2"));
  CHECK(p.multiply(a, a2) == named(p, "a^3"));
  CHECK(p.multiply(a2, a2).is_zero());
}

TEST_CASE("tensor algebra applies the sign rule") {
  auto s1 = GradedAlgebra::validated(preset_sphere(1));
  auto t = tensor_algebra(s1, s1);
  CHECK(t.dim() == 4);
  CHECK(t.basis(0).name == "1*1");
  CHECK(t.basis(3).name == "u*u");
  CHECK(t.degree(3) == 2);
  Element ux = named(t, "u*1"), xu = named(t, "1*u"), uu = named(t, "u*u");
  CHECK(t.multiply(ux, xu) == uu);
  CHECK(t.multiply(xu, ux) == scaled(uu, mpq_class(-1), t.field()));
  CHECK(t.multiply(ux, ux).is_zero());
  CHECK(!t.homogeneous_degree(added(ux, uu, t.field())).has_value());

  auto p = GradedAlgebra::validated(
      preset_product(preset_sphere(2), preset_sphere(2)));
  CHECK(p.dim() == 4);
  CHECK(p.label() == "product(sphere(2),sphere(2))");
  CHECK(p.multiply(named(p, "u*1"), named(p, "1*u")) == named(p, "u*u"));
  // Even-degree factors commute without a sign.
  CHECK(p.multiply(named(p, "1*u"), named(p, "u*1")) == named(p, "u*u"));
}

TEST_CASE("validation rejects malformed presentations") {
  Field q = Field::rationals();

  Presentation no_unit{q, {{"x", 1}}, {}, ""};
  CHECK(contains(error_of([&] { GradedAlgebra::validated(no_unit); }),
                 "unit"));

  Presentation two_units{q, {{"1", 0}, {"e", 0}}, {{{0, 0}, {}}}, ""};
  CHECK(contains(error_of([&] { GradedAlgebra::validated(two_units); }),
                 "degree-0"));

  Presentation dup{q, {{"1", 0}, {"x", 1}, {"x", 1}}, {}, ""};
  CHECK(contains(error_of([&] { GradedAlgebra::validated(dup); }),
                 "duplicate"));

  // x*x lands in degree 1 instead of 2.
  Presentation bad_degree = preset_sphere(1);
  bad_degree.products[{1, 1}] =
      sparse_from_terms<std::uint32_t>({{1, mpq_class(1)}}, q);
  CHECK(contains(error_of([&] { GradedAlgebra::validated(bad_degree); }),
                 "degree additivity"));

  // Both orientations given with the wrong relative sign.
  Presentation bad_sign = preset_surface(1);
  bad_sign.products[{2, 1}] =
      sparse_from_terms<std::uint32_t>({{3, mpq_class(1)}}, q);
  CHECK(contains(error_of([&] { GradedAlgebra::validated(bad_sign); }),
                 "commutativity"));

  // Unit row missing for one element.
  Presentation no_row = preset_sphere(2);
  no_row.products.erase({0, 1});
  CHECK(contains(error_of([&] { GradedAlgebra::validated(no_row); }),
                 "identity"));

  // a*b = c and a*c = d with a*a = 0 breaks associativity on (a, a, b).
  Presentation assoc;
  assoc.field = q;
  assoc.basis = {{"1", 0}, {"a", 1}, {"b", 1}, {"c", 2}, {"d", 3}};
  for (int j = 0; j < 5; ++j)
    assoc.products[{0, j}] =
        sparse_from_terms<std::uint32_t>({{static_cast<std::uint32_t>(j),
                                           mpq_class(1)}}, q);
  assoc.products[{1, 2}] =
      sparse_from_terms<std::uint32_t>({{3, mpq_class(1)}}, q);
  assoc.products[{1, 3}] =
      sparse_from_terms<std::uint32_t>({{4, mpq_class(1)}}, q);
  CHECK(contains(error_of([&] { GradedAlgebra::validated(assoc); }),
                 "associativity"));

  CHECK(contains(error_of([] { preset_sphere(0); }), ">= 1"));
  CHECK(contains(error_of([] { preset_surface(-1); }), ">= 0"));
  CHECK(contains(error_of([] { preset_torus(0); }), ">= 1"));
  CHECK(contains(error_of([] { preset_wedge_spheres(0, 2); }), "at least"));
}

TEST_CASE("odd-degree squares must vanish away from characteristic 2") {
  Presentation p;
  Field q = Field::rationals();
  p.field = q;
  p.basis = {{"1", 0}, {"x", 1}, {"y", 2}};
  for (int j = 0; j < 3; ++j)
    p.products[{0, j}] = sparse_from_terms<std::uint32_t>(
        {{static_cast<std::uint32_t>(j), mpq_class(1)}}, q);
  p.products[{1, 1}] =
      sparse_from_terms<std::uint32_t>({{2, mpq_class(1)}}, q);
  CHECK(contains(error_of([&] { GradedAlgebra::validated(p); }),
                 "commutativity"));

  // The same relation is fine over F2.
  p.field = Field::prime(2);
  CHECK(error_of([&] { GradedAlgebra::validated(p); }).empty());
}

TEST_CASE("presentation text round-trips") {
  for (const Presentation& p :
       {preset_sphere(2), preset_surface(2), preset_torus(3),
        preset_projective_mod2(4),
        preset_product(preset_sphere(2), preset_torus(2))}) {
    const std::string text = serialize_presentation(p);
    Presentation back = parse_presentation_text(text, p.label);
    auto a = GradedAlgebra::validated(p);
    auto b = GradedAlgebra::validated(back);
    CHECK(serialize_presentation(a.presentation()) ==
          serialize_presentation(b.presentation()));
    CHECK(a.dim() == b.dim());
  }
}

TEST_CASE("presentation parser handles coefficients and signs") {
  const std::string text =
      "# exterior-style toy algebra\n"
      "field Q\n"
      "basis 1 0\n"
      "basis x 1\n"
      "basis y 1\n"
      "basis z 2\n"
      "prod 1 1 = 1\n"
      "prod 1 x = x\n"
      "prod 1 y = y\n"
      "prod 1 z = z\n"
      "prod x y = 2*z\n"
      "\n";
  auto a = GradedAlgebra::validated(parse_presentation_text(text, "toy"));
  Element x = a.basis_element(1), y = a.basis_element(2);
  CHECK(a.multiply(x, y) ==
        scaled(a.basis_element(3), mpq_class(2), a.field()));
  CHECK(a.multiply(y, x) ==
        scaled(a.basis_element(3), mpq_class(-2), a.field()));

  const std::string mixed =
      "field Q\n"
      "basis 1 0\n"
      "basis x 1\n"
      "basis y 1\n"
      "basis z 2\n"
      "prod 1 1 = 1\nprod 1 x = x\nprod 1 y = y\nprod 1 z = z\n"
      "prod x y = -1/2*z\n"
      "prod y x = 1/2*z\n";
  auto b = GradedAlgebra::validated(parse_presentation_text(mixed, "toy2"));
  CHECK(b.multiply(b.basis_element(1), b.basis_element(2)) ==
        scaled(b.basis_element(3), mpq_class(-1, 2), b.field()));
}

TEST_CASE("presentation parser reports malformed input") {
  CHECK(contains(
      error_of([] { parse_presentation_text("basis 1 0\n", "t"); }),
      "field"));
  CHECK(contains(error_of([] {
                   parse_presentation_text(
                       "field Q\nbasis 1 0\nprod 1 q = 1\n", "t");
                 }),
                 "unknown"));
  CHECK(contains(error_of([] {
                   parse_presentation_text(
                       "field Q\nbasis 1 0\nbasis x 1\n"
                       "prod x x = 1*\n", "t");
                 }),
                 "term"));
  CHECK(contains(error_of([] {
                   parse_presentation_text("field F 6\nbasis 1 0\n", "t");
                 }),
                 "prime"));
  CHECK(contains(error_of([] {
                   parse_presentation_text(
                       "field Q\nbasis 1 0\nbasis x 1\n"
                       "prod 1 x = x\nprod 1 x = x\n", "t");
                 }),
                 "duplicate"));
  CHECK(contains(error_of([] {
                   parse_presentation_text("field Q\nwibble\n", "t");
                 }),
                 "wibble"));
}
