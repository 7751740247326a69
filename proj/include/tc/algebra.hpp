#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tc/field.hpp"
#include "tc/sparse.hpp"

namespace tc {

// Sparse vector in the distinguished basis of a GradedAlgebra.
using Element = Sparse<std::uint32_t>;

struct BasisEntry {
  std::string name;
  int degree = 0;
};

// Raw description of a finite-dimensional graded-commutative unital algebra:
// coefficient field, ordered basis (the first entry must be the unit, in
// degree 0), and structure constants for basis pairs.  Pairs may be given in
// either or both orientations; omitted pairs are zero.
struct Presentation {
  Field field;
  std::vector<BasisEntry> basis;
  std::map<std::pair<int, int>, Element> products;
  std::string label;  // e.g. "surface:3"; informational only
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validated graded-commutative algebra with a full structure-constant table.
// Construction via validated() checks, in order: basis well-formedness, the
// degree-0 part being spanned by the unit, degree additivity of every
// structure constant, graded commutativity (b*a = (-1)^{|a||b|} a*b),
// associativity on basis triples, and the unit acting as identity.  The first
// violated axiom is reported with the offending basis names.
//
// The degree-0 restriction is deliberate: it models the cohomology of a
// path-connected space, and it is what guarantees that every zero-divisor has
// positive total degree, hence that iterated products of zero-divisors
// terminate.
class GradedAlgebra {
 public:
  static GradedAlgebra validated(const Presentation& p);

  const Field& field() const { return field_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisEntry& basis(int i) const { return basis_.at(i); }
  int degree(int i) const { return basis_.at(i).degree; }
  const std::string& label() const { return label_; }
  int unit_index() const { return 0; }
  int top_degree() const { return top_degree_; }

  // Basis indices of the given degree, ascending (empty when out of range).
  const std::vector<int>& of_degree(int d) const;

  std::optional<int> index_of(const std::string& name) const;

  // Structure constants: the product of basis elements i and j.
  const Element& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * basis_.size() + j];
  }

  Element multiply(const Element& x, const Element& y) const;

  Element unit_element() const;
  Element basis_element(int i) const;

  // Degree of a homogeneous element; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree(const Element& x) const;

  // Round-trips the algebra back into a presentation (full table, one
  // orientation per pair).
  Presentation presentation() const;

  std::string show(const Element& x) const;  // e.g. "2*a + -1/3*b", "0"

 private:
  friend GradedAlgebra tensor_algebra(const GradedAlgebra&,
                                      const GradedAlgebra&);
  GradedAlgebra() = default;
  void index_degrees();

  Field field_;
  std::vector<BasisEntry> basis_;
  std::vector<Element> table_;  // row-major: table_[i*dim+j] = b_i * b_j
  std::vector<std::vector<int>> by_degree_;
  std::map<std::string, int> name_index_;
  int top_degree_ = 0;
  std::string label_;
};

// Graded tensor product A (x) B with the Koszul sign rule
//   (u1 (x) v1) * (u2 (x) v2) = (-1)^{|v1| |u2|} (u1 u2) (x) (v1 v2).
// The basis is ordered left-major: pair (i, j) gets index i*dim(B)+j and the
// name "<left>*<right>".  Serves both as the tensor square for zero-divisor
// computations and as the Kunneth algebra of a product space.
// Errors: mismatched coefficient fields; dim(A)*dim(B) > 4096 (guard against
// accidental blow-up; every supported construction stays far below it).
GradedAlgebra tensor_algebra(const GradedAlgebra& a, const GradedAlgebra& b);

std::string show_scalar(const mpq_class& c);

}  // namespace tc
