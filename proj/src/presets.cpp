#include "tc/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace tc {

namespace {

Element mono(int index, long coeff = 1) {
  Element e;
  if (coeff != 0)
    e.terms.emplace_back(static_cast<std::uint32_t>(index), mpq_class(coeff));
  return e;
}

// Every preset presentation lists the unit products explicitly: the text
// format treats omitted pairs as zero, so serialized presets must round-trip.
void add_unit_rows(Presentation& p) {
  for (int j = 0; j < static_cast<int>(p.basis.size()); ++j)
    p.products[{0, j}] = mono(j);
}

}  // namespace

Presentation preset_point(const Field& field) {
  Presentation p;
  p.field = field;
  p.label = "point";
  p.basis = {{"1", 0}};
  add_unit_rows(p);
  return p;
}

Presentation preset_sphere(int m, const Field& field) {
  if (m < 1) throw AlgebraError("sphere dimension must be >= 1");
  Presentation p;
  p.field = field;
  p.label = "sphere(" + std::to_string(m) + ")";
  p.basis = {{"1", 0}, {"u", m}};
  add_unit_rows(p);
  return p;  // u*u omitted = 0 (truncation)
}

Presentation preset_wedge_spheres(int n, int m, const Field& field) {
  if (n < 1) throw AlgebraError("wedge_spheres needs at least one sphere");
  if (m < 1) throw AlgebraError("wedge_spheres sphere dimension must be >= 1");
  Presentation p;
  p.field = field;
  p.label = "wedge_spheres(" + std::to_string(n) + "," + std::to_string(m) + ")";
  p.basis.push_back({"1", 0});
  for (int i = 1; i <= n; ++i) p.basis.push_back({"u" + std::to_string(i), m});
  add_unit_rows(p);
  return p;  // all positive-degree products zero
}

Presentation preset_surface(int g, const Field& field) {
  if (g < 0) throw AlgebraError("surface genus must be >= 0");
  if (g > 13)
    throw AlgebraError(
        "surface genus above 13 exceeds the single-letter generator naming");
  Presentation p;
  p.field = field;
  p.label = "surface(" + std::to_string(g) + ")";
  p.basis.push_back({"1", 0});
  for (int h = 0; h < g; ++h) {
    p.basis.push_back({std::string(1, static_cast<char>('a' + 2 * h)), 1});
    p.basis.push_back({std::string(1, static_cast<char>('a' + 2 * h + 1)), 1});
  }
  const int top = static_cast<int>(p.basis.size());
  p.basis.push_back({"A", 2});
  add_unit_rows(p);
  for (int h = 0; h < g; ++h) {
    const int x = 1 + 2 * h, y = 2 + 2 * h;
    p.products[{x, y}] = mono(top);  // mirror y*x = -A via graded commutativity
  }
  return p;
}

Presentation preset_torus(int n, const Field& field) {
  if (n < 1) throw AlgebraError("torus factor count must be >= 1");
  if (n > 11) throw AlgebraError("torus factor count above 11 unsupported");
  Presentation p;
  p.field = field;
  p.label = "torus(" + std::to_string(n) + ")";

  // Basis = subsets of {1..n} as bitmasks, ordered by (popcount, mask value);
  // within a fixed size the ascending-mask order is lexicographic order on the
  // sorted generator lists.
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<int> index_of_mask(1u << n);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    index_of_mask[masks[i]] = static_cast<int>(i);
    std::string name;
    if (masks[i] == 0) {
      name = "1";
    } else {
      for (int bit = 0; bit < n; ++bit)
        if (masks[i] & (1u << bit)) name += "e" + std::to_string(bit + 1);
    }
    p.basis.push_back({name, __builtin_popcount(masks[i])});
  }

  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i; j < masks.size(); ++j) {
      const unsigned s = masks[i], t = masks[j];
      if (s & t) continue;  // repeated generator: product is zero
      // Sign = parity of the shuffle sorting the concatenation s then t:
      // one inversion for each pair (x in s, y in t) with x > y.
      int inversions = 0;
      for (int x = 0; x < n; ++x)
        if (s & (1u << x))
          inversions += __builtin_popcount(t & ((1u << x) - 1));
      p.products[{static_cast<int>(i), static_cast<int>(j)}] =
          mono(index_of_mask[s | t], inversions % 2 ? -1 : 1);
    }
  return p;
}

Presentation preset_projective_mod2(int n) {
  if (n < 1) throw AlgebraError("projective_mod2 dimension must be >= 1");
  Presentation p;
  p.field = Field::prime(2);
  p.label = "projective_mod2(" + std::to_string(n) + ")";
  p.basis.push_back({"1", 0});
  p.basis.push_back({"a", 1});
  for (int k = 2; k <= n; ++k) p.basis.push_back({"a^" + std::to_string(k), k});
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (i + j <= n) p.products[{i, j}] = mono(i + j);
  return p;
}

Presentation preset_product(const Presentation& a, const Presentation& b) {
  const GradedAlgebra left = GradedAlgebra::validated(a);
  const GradedAlgebra right = GradedAlgebra::validated(b);
  Presentation p = tensor_algebra(left, right).presentation();
  p.label = "product(" + a.label + "," + b.label + ")";
  return p;
}

}  // namespace tc
