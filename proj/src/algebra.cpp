#include "tc/algebra.hpp"

#include <algorithm>

namespace tc {

namespace {

std::string pair_text(const GradedAlgebra& a, int i, int j) {
  return "(" + a.basis(i).name + ", " + a.basis(j).name + ")";
}

}  // namespace

std::string show_scalar(const mpq_class& c) { return c.get_str(); }

void GradedAlgebra::index_degrees() {
  top_degree_ = 0;
  for (const auto& b : basis_) top_degree_ = std::max(top_degree_, b.degree);
  by_degree_.assign(top_degree_ + 1, {});
  for (int i = 0; i < dim(); ++i) by_degree_[basis_[i].degree].push_back(i);
  name_index_.clear();
  for (int i = 0; i < dim(); ++i) name_index_[basis_[i].name] = i;
}

const std::vector<int>& GradedAlgebra::of_degree(int d) const {
  static const std::vector<int> empty;
  if (d < 0 || d > top_degree_) return empty;
  return by_degree_[d];
}

std::optional<int> GradedAlgebra::index_of(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

Element GradedAlgebra::unit_element() const { return basis_element(0); }

Element GradedAlgebra::basis_element(int i) const {
  if (i < 0 || i >= dim()) throw AlgebraError("basis index out of range");
  Element e;
  e.terms.emplace_back(static_cast<std::uint32_t>(i), mpq_class(1));
  return e;
}

Element GradedAlgebra::multiply(const Element& x, const Element& y) const {
  std::vector<std::pair<std::uint32_t, mpq_class>> acc;
  for (const auto& [i, ci] : x.terms)
    for (const auto& [j, cj] : y.terms)
      for (const auto& [k, s] : product(i, j).terms)
        acc.emplace_back(k, ci * cj * s);
  Element out = sparse_from_terms(std::move(acc), field_);
  return out;
}

std::optional<int> GradedAlgebra::homogeneous_degree(const Element& x) const {
  if (x.is_zero()) return std::nullopt;
  int d = degree(static_cast<int>(x.terms.front().first));
  for (const auto& [k, c] : x.terms)
    if (degree(static_cast<int>(k)) != d) return std::nullopt;
  return d;
}

std::string GradedAlgebra::show(const Element& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : x.terms) {
    if (!out.empty()) out += " + ";
    out += show_scalar(c) + "*" + basis(static_cast<int>(k)).name;
  }
  return out;
}

GradedAlgebra GradedAlgebra::validated(const Presentation& p) {
  GradedAlgebra a;
  a.field_ = p.field;
  a.basis_ = p.basis;
  a.label_ = p.label;
  const int n = a.dim();

  if (n == 0) throw AlgebraError("presentation has an empty basis");
  for (int i = 0; i < n; ++i) {
    if (a.basis_[i].name.empty())
      throw AlgebraError("basis entry " + std::to_string(i) + " has no name");
    if (a.basis_[i].degree < 0)
      throw AlgebraError("basis element " + a.basis_[i].name +
                         " has negative degree");
    for (int j = 0; j < i; ++j)
      if (a.basis_[j].name == a.basis_[i].name)
        throw AlgebraError("duplicate basis name " + a.basis_[i].name);
  }
  if (a.basis_[0].degree != 0)
    throw AlgebraError("first basis element " + a.basis_[0].name +
                       " must be the unit in degree 0");
  for (int i = 1; i < n; ++i)
    if (a.basis_[i].degree == 0)
      throw AlgebraError(
          "degree-0 subspace must be spanned by the unit (found " +
          a.basis_[i].name + ")");

  a.index_degrees();

  // Assemble the table; reject out-of-range indices and non-additive degrees.
  a.table_.assign(static_cast<std::size_t>(n) * n, Element{});
  std::vector<char> given(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [key, value] : p.products) {
    auto [i, j] = key;
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw AlgebraError("product entry references a basis index out of range");
    Element v = sparse_from_terms(
        std::vector<std::pair<std::uint32_t, mpq_class>>(value.terms.begin(),
                                                         value.terms.end()),
        a.field_);
    for (const auto& [k, c] : v.terms) {
      if (k >= static_cast<std::uint32_t>(n))
        throw AlgebraError("product " + pair_text(a, i, j) +
                           " references a basis index out of range");
      if (a.degree(static_cast<int>(k)) != a.degree(i) + a.degree(j))
        throw AlgebraError("degree additivity violated: " + pair_text(a, i, j) +
                           " has a term " + a.basis(static_cast<int>(k)).name +
                           " of degree " +
                           std::to_string(a.degree(static_cast<int>(k))) +
                           ", expected " +
                           std::to_string(a.degree(i) + a.degree(j)));
    }
    a.table_[static_cast<std::size_t>(i) * n + j] = std::move(v);
    given[static_cast<std::size_t>(i) * n + j] = 1;
  }

  // Fill missing orientations by graded commutativity, then verify the whole
  // table against the sign rule (this also forces b^2 = 0 for odd degrees in
  // characteristic != 2).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t ij = static_cast<std::size_t>(i) * n + j;
      const std::size_t ji = static_cast<std::size_t>(j) * n + i;
      if (given[ij] && !given[ji]) {
        const int sign = (a.degree(i) * a.degree(j)) % 2 ? -1 : 1;
        a.table_[ji] = scaled(a.table_[ij], mpq_class(sign), a.field_);
        given[ji] = 1;
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const int sign = (a.degree(i) * a.degree(j)) % 2 ? -1 : 1;
      const Element expect = scaled(a.product(j, i), mpq_class(sign), a.field_);
      if (!(a.product(i, j) == expect))
        throw AlgebraError("graded commutativity violated for pair " +
                           pair_text(a, i, j));
    }

  for (int j = 0; j < n; ++j) {
    if (!(a.product(0, j) == a.basis_element(j)) ||
        !(a.product(j, 0) == a.basis_element(j)))
      throw AlgebraError("unit does not act as identity on " +
                         a.basis(j).name);
  }

  // Associativity on basis triples.  Exhaustive up to dim 128; beyond that a
  // deterministic stride keeps construction near-linear (large algebras only
  // arise from tensor_algebra, which is associative by construction anyway).
  const int stride = n <= 128 ? 1 : n / 64;
  for (int i = 0; i < n; i += stride)
    for (int j = 0; j < n; j += stride)
      for (int k = 0; k < n; k += stride) {
        const Element left =
            a.multiply(a.product(i, j), a.basis_element(k));
        const Element right =
            a.multiply(a.basis_element(i), a.product(j, k));
        if (!(left == right))
          throw AlgebraError("associativity violated for triple (" +
                             a.basis(i).name + ", " + a.basis(j).name + ", " +
                             a.basis(k).name + ")");
      }

  return a;
}

Presentation GradedAlgebra::presentation() const {
  Presentation p;
  p.field = field_;
  p.basis = basis_;
  p.label = label_;
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j)
      if (!product(i, j).is_zero()) p.products[{i, j}] = product(i, j);
  // A lower-triangular pair can be nonzero only together with its mirror, so
  // emitting i <= j plus graded commutativity reconstructs the table.
  return p;
}

GradedAlgebra tensor_algebra(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field()))
    throw AlgebraError("tensor_algebra requires matching coefficient fields (" +
                       a.field().name() + " vs " + b.field().name() + ")");
  const long dim = static_cast<long>(a.dim()) * b.dim();
  if (dim > 4096)
    throw AlgebraError("tensor_algebra dimension " + std::to_string(dim) +
                       " exceeds the supported limit of 4096");

  GradedAlgebra t;
  t.field_ = a.field();
  t.label_ = "product(" + (a.label().empty() ? "?" : a.label()) + "," +
             (b.label().empty() ? "?" : b.label()) + ")";
  const int nb = b.dim();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < nb; ++j)
      t.basis_.push_back(BasisEntry{a.basis(i).name + "*" + b.basis(j).name,
                                    a.degree(i) + b.degree(j)});
  t.index_degrees();

  const int n = t.dim();
  t.table_.assign(static_cast<std::size_t>(n) * n, Element{});
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < a.dim(); ++k)
        for (int l = 0; l < nb; ++l) {
          // (b_i (x) b_j) * (b_k (x) b_l) =
          //   (-1)^{|b_j| |b_k|} (b_i b_k) (x) (b_j b_l)
          const Element& left = a.product(i, k);
          const Element& right = b.product(j, l);
          if (left.is_zero() || right.is_zero()) continue;
          const int sign = (b.degree(j) * a.degree(k)) % 2 ? -1 : 1;
          std::vector<std::pair<std::uint32_t, mpq_class>> acc;
          for (const auto& [m, cm] : left.terms)
            for (const auto& [q, cq] : right.terms)
              acc.emplace_back(m * nb + q, mpq_class(sign) * cm * cq);
          t.table_[(static_cast<std::size_t>(i) * nb + j) * n +
                   (static_cast<std::size_t>(k) * nb + l)] =
              sparse_from_terms(std::move(acc), t.field_);
        }
  return t;
}

}  // namespace tc
