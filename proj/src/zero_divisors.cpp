#include "tc/zero_divisors.hpp"

#include <algorithm>
#include <stdexcept>

namespace tc {

std::optional<int> TensorSquare::homogeneous_degree(
    const TensorElement& x) const {
  if (x.is_zero()) return std::nullopt;
  const int d = total_degree(x.terms.front().first);
  for (const auto& [k, c] : x.terms)
    if (total_degree(k) != d) return std::nullopt;
  return d;
}

TensorElement TensorSquare::embed(int i, int j, const mpq_class& c) const {
  return sparse_from_terms(
      std::vector<std::pair<std::uint64_t, mpq_class>>{{pack(i, j), c}},
      field());
}

TensorElement TensorSquare::multiply(const TensorElement& x,
                                     const TensorElement& y) const {
  std::vector<std::pair<std::uint64_t, mpq_class>> acc;
  for (const auto& [kx, cx] : x.terms) {
    const auto [i, j] = unpack(kx);
    for (const auto& [ky, cy] : y.terms) {
      const auto [k, l] = unpack(ky);
      const Element& left = a_->product(i, k);
      if (left.is_zero()) continue;
      const Element& right = a_->product(j, l);
      if (right.is_zero()) continue;
      const int sign = (a_->degree(j) * a_->degree(k)) % 2 ? -1 : 1;
      const mpq_class scale = cx * cy * sign;
      for (const auto& [m, cm] : left.terms)
        for (const auto& [q, cq] : right.terms)
          acc.emplace_back(pack(static_cast<int>(m), static_cast<int>(q)),
                           scale * cm * cq);
    }
  }
  return sparse_from_terms(std::move(acc), field());
}

Element TensorSquare::cup(const TensorElement& x) const {
  std::vector<std::pair<std::uint32_t, mpq_class>> acc;
  for (const auto& [key, c] : x.terms) {
    const auto [i, j] = unpack(key);
    for (const auto& [m, cm] : a_->product(i, j).terms)
      acc.emplace_back(m, c * cm);
  }
  return sparse_from_terms(std::move(acc), field());
}

TensorElement TensorSquare::barred(const Element& u) const {
  if (u.is_zero()) return {};
  const auto degree = a_->homogeneous_degree(u);
  if (!degree || *degree <= 0)
    throw AlgebraError(
        "barred class requires a homogeneous element of positive degree");
  std::vector<std::pair<std::uint64_t, mpq_class>> acc;
  for (const auto& [k, c] : u.terms) {
    acc.emplace_back(pack(0, static_cast<int>(k)), c);
    acc.emplace_back(pack(static_cast<int>(k), 0), -c);
  }
  return sparse_from_terms(std::move(acc), field());
}

std::string TensorSquare::show(const TensorElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : x.terms) {
    const auto [i, j] = unpack(key);
    std::string term;
    if (c == 1) {
      term = "";
    } else if (c == -1) {
      term = "-";
    } else {
      term = c.get_str() + "*";
    }
    term += a_->basis(i).name + "⊗" + a_->basis(j).name;
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

TensorElement SparseEchelon::reduce(TensorElement v) const {
  while (!v.is_zero()) {
    const auto it = rows_.find(v.terms.front().first);
    if (it == rows_.end()) break;
    // Rows are normalized to leading coefficient 1, and every non-leading key
    // of a row is larger than its leading key, so this terminates.
    v = add_scaled(v, -v.terms.front().second, it->second, field_);
  }
  if (v.is_zero()) return v;
  // The minimal key is pivot-free; the remaining terms may still be
  // reducible, which is irrelevant for span membership but kept tidy here so
  // stored rows interact sparsely.
  TensorElement out;
  out.terms.push_back(v.terms.front());
  TensorElement tail;
  tail.terms.assign(v.terms.begin() + 1, v.terms.end());
  while (!tail.is_zero()) {
    const auto it = rows_.find(tail.terms.front().first);
    if (it == rows_.end()) {
      out.terms.push_back(tail.terms.front());
      tail.terms.erase(tail.terms.begin());
    } else {
      tail = add_scaled(tail, -tail.terms.front().second, it->second, field_);
    }
  }
  return out;
}

bool SparseEchelon::insert(TensorElement v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  const mpq_class lead = v.terms.front().second;
  v = scaled(v, field_.inverse(lead), field_);
  rows_.emplace(v.terms.front().first, std::move(v));
  return true;
}

std::vector<TensorElement> SparseEchelon::rows() const {
  std::vector<TensorElement> out;
  out.reserve(rows_.size());
  for (const auto& [key, row] : rows_) out.push_back(row);
  return out;
}

TensorSquare::KernelResult TensorSquare::kernel() const {
  KernelResult result;
  const GradedAlgebra& a = *a_;
  for (int total = 0; total <= top_degree(); ++total) {
    // Columns of this block: pairs (i, j) with deg i + deg j = total, in
    // ascending packed-key order.  Pivot rows live in A's degree-(total)
    // component; tracking vectors record the column combination.
    std::map<std::uint32_t, std::pair<Element, TensorElement>> pivots;
    for (int i = 0; i < a.dim(); ++i) {
      const int dj = total - a.degree(i);
      if (dj < 0 || dj > a.top_degree()) continue;
      for (int j : a.of_degree(dj)) {
        Element image = a.product(i, j);
        TensorElement track = embed(i, j, 1);
        while (!image.is_zero()) {
          const auto it = pivots.find(image.terms.front().first);
          if (it == pivots.end()) break;
          const mpq_class f = -image.terms.front().second;
          image = add_scaled(image, f, it->second.first, field());
          track = add_scaled(track, f, it->second.second, field());
        }
        if (image.is_zero()) {
          const mpq_class lead = track.terms.front().second;
          result.basis.push_back(
              scaled(track, field().inverse(lead), field()));
        } else {
          const mpq_class inv = field().inverse(image.terms.front().second);
          pivots.emplace(image.terms.front().first,
                         std::make_pair(scaled(image, inv, field()),
                                        scaled(track, inv, field())));
        }
      }
    }
    result.image_rank += pivots.size();
  }
  return result;
}

namespace {

struct BarredGenerator {
  TensorElement value;
  int degree = 0;
  std::string name;
};

std::vector<BarredGenerator> barred_generators(const TensorSquare& t) {
  std::vector<BarredGenerator> out;
  const GradedAlgebra& a = t.base();
  for (int g = 0; g < a.dim(); ++g) {
    if (a.degree(g) <= 0) continue;
    out.push_back({t.barred(a.basis_element(g)), a.degree(g),
                   "bar(" + a.basis(g).name + ")"});
  }
  return out;
}

}  // namespace

ZdclResult zdcl(const GradedAlgebra& a) {
  const TensorSquare t(a);
  ZdclResult result;

  const std::vector<TensorElement> kernel = t.kernel_basis();
  if (kernel.empty()) {
    result.length = 0;
    result.certificate =
        "the ideal of zero-divisors is trivial: ker(cup) = 0, so Z^1 = 0";
    return result;
  }

  const std::vector<BarredGenerator> generators = barred_generators(t);
  const int top = t.top_degree();

  result.powers.push_back(kernel);
  while (true) {
    const std::vector<TensorElement>& current = result.powers.back();
    SparseEchelon next(a.field());
    for (const TensorElement& z : current) {
      const int dz = t.total_degree(z.terms.front().first);
      for (const BarredGenerator& g : generators) {
        if (dz + g.degree > top) continue;
        next.insert(t.multiply(z, g.value));
      }
    }
    if (next.empty()) break;
    result.powers.push_back(next.rows());
  }
  result.length = static_cast<int>(result.powers.size());
  result.certificate =
      "Z^" + std::to_string(result.length + 1) +
      " = 0: every product of a Z^" + std::to_string(result.length) +
      " basis vector with a generator of the zero-divisor ideal vanishes";

  // Witness: greedy pure product of barred generators.  A prefix p with
  // r factors still missing extends to a nonzero length-L product exactly
  // when p * Z^r != 0; some generator always works, so no backtracking.
  TensorElement prefix = t.unit();
  for (int step = 0; step < result.length; ++step) {
    const int remaining = result.length - step - 1;
    bool advanced = false;
    for (const BarredGenerator& g : generators) {
      TensorElement cand = t.multiply(prefix, g.value);
      if (cand.is_zero()) continue;
      bool extendable = remaining == 0;
      if (!extendable)
        for (const TensorElement& z : result.powers[remaining - 1])
          if (!t.multiply(cand, z).is_zero()) {
            extendable = true;
            break;
          }
      if (extendable) {
        prefix = std::move(cand);
        result.witness.push_back(g.value);
        result.witness_names.push_back(g.name);
        advanced = true;
        break;
      }
    }
    if (!advanced)
      throw std::logic_error(
          "zdcl witness extraction failed to extend a nonzero product");
  }
  result.witness_product = prefix;
  return result;
}

}  // namespace tc
