#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tc/algebra.hpp"

namespace tc {

// Element of the tensor square A (x) A, keyed by packed basis pairs
// (left index * dim + right index).  The tensor square of a large algebra is
// never materialized as a multiplication table; products are expanded lazily
// from the base algebra's structure constants with the Koszul sign
//   (b_i (x) b_j)(b_k (x) b_l) = (-1)^{|b_j| |b_k|} (b_i b_k) (x) (b_j b_l).
using TensorElement = Sparse<std::uint64_t>;

class TensorSquare {
 public:
  explicit TensorSquare(const GradedAlgebra& a) : a_(&a) {}

  const GradedAlgebra& base() const { return *a_; }
  const Field& field() const { return a_->field(); }

  std::uint64_t pack(int i, int j) const {
    return static_cast<std::uint64_t>(i) * a_->dim() + j;
  }
  std::pair<int, int> unpack(std::uint64_t key) const {
    return {static_cast<int>(key / a_->dim()),
            static_cast<int>(key % a_->dim())};
  }
  int total_degree(std::uint64_t key) const {
    auto [i, j] = unpack(key);
    return a_->degree(i) + a_->degree(j);
  }
  // Total degree of the largest nonzero component, or nullopt for 0.
  std::optional<int> homogeneous_degree(const TensorElement& x) const;
  int top_degree() const { return 2 * a_->top_degree(); }

  TensorElement embed(int i, int j, const mpq_class& c) const;
  TensorElement unit() const { return embed(0, 0, 1); }
  TensorElement multiply(const TensorElement& x, const TensorElement& y) const;

  // The cup map A (x) A -> A (multiply each pair); an algebra homomorphism.
  Element cup(const TensorElement& x) const;

  // barred(u) = 1 (x) u - u (x) 1, the canonical zero-divisor of a
  // homogeneous positive-degree class (zero maps to zero).
  TensorElement barred(const Element& u) const;

  std::string show(const TensorElement& x) const;

  // Exact basis of ker(cup), computed blockwise per total degree by
  // Gaussian elimination with combination tracking.  Vectors are grouped by
  // ascending total degree; image_rank reports rank(cup) for the rank-nullity
  // cross-check (kernel size + image rank = dim(A)^2).
  struct KernelResult {
    std::vector<TensorElement> basis;
    std::size_t image_rank = 0;
  };
  KernelResult kernel() const;
  std::vector<TensorElement> kernel_basis() const { return kernel().basis; }

 private:
  const GradedAlgebra* a_;
};

// Incremental row echelon over sparse vectors keyed by uint64, used for
// subspace spans.  Rows keep pairwise-distinct minimal keys, so membership
// testing is a forward reduction.
class SparseEchelon {
 public:
  explicit SparseEchelon(const Field& field) : field_(field) {}

  // Reduces v against the stored rows; inserts the normalized remainder if it
  // is nonzero.  Returns true when the vector enlarged the span.
  bool insert(TensorElement v);
  // Forward-reduces v without inserting; empty result means v is in the span.
  TensorElement reduce(TensorElement v) const;
  bool contains(const TensorElement& v) const { return reduce(v).is_zero(); }
  bool empty() const { return rows_.empty(); }
  std::size_t rank() const { return rows_.size(); }
  std::vector<TensorElement> rows() const;

 private:
  Field field_;
  std::map<std::uint64_t, TensorElement> rows_;  // keyed by minimal key
};

// Exact zero-divisor cup-length: the largest L with Z^L != 0, where
// Z^1 = ker(cup) and Z^{m+1} = Z^m * Z^1.  The kernel is the ideal generated
// by the barred classes of the positive-degree basis elements (any kernel
// element sum x_i (x) y_i equals sum (x_i (x) 1) * barred(y_i)), so each
// power step only multiplies a basis of Z^m by the barred generators.
// The witness is a pure product of barred generators, extracted greedily in
// basis order: a prefix p extends to a nonzero length-L product if and only
// if p * Z^{L - len(p)} != 0.
struct ZdclResult {
  int length = 0;
  std::vector<TensorElement> witness;        // factors, each a zero-divisor
  std::vector<std::string> witness_names;    // e.g. "bar(a)"
  TensorElement witness_product;             // nonzero product of the factors
  std::string certificate;                   // why Z^{length+1} = 0
  // powers[m-1] is a basis of Z^m for m = 1..length (powers[0] = kernel).
  std::vector<std::vector<TensorElement>> powers;
};

ZdclResult zdcl(const GradedAlgebra& a);

}  // namespace tc
