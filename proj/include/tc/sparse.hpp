#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "tc/field.hpp"

namespace tc {

// Sparse vector with strictly increasing keys and nonzero coefficients.
// Element (key = basis index) and TensorElement (key = packed index pair) are
// instances of this template.
template <typename Key>
struct Sparse {
  std::vector<std::pair<Key, mpq_class>> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  // Coefficient of `key` (zero if absent).
  mpq_class coeff(Key key) const {
    for (const auto& [k, c] : terms)
      if (k == key) return c;
    return mpq_class(0);
  }

  bool operator==(const Sparse&) const = default;
};

// Builds a canonical sparse vector from unsorted, possibly repeated terms.
template <typename Key>
Sparse<Key> sparse_from_terms(std::vector<std::pair<Key, mpq_class>> terms,
                              const Field& field) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Sparse<Key> out;
  for (auto& [k, c] : terms) {
    if (!out.terms.empty() && out.terms.back().first == k)
      out.terms.back().second += c;
    else
      out.terms.emplace_back(k, std::move(c));
  }
  for (auto& [k, c] : out.terms) c = field.reduce(c);
  std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
  return out;
}

// dst + c * src, all coefficients reduced into the field.
template <typename Key>
Sparse<Key> add_scaled(const Sparse<Key>& dst, const mpq_class& c,
                       const Sparse<Key>& src, const Field& field) {
  Sparse<Key> out;
  out.terms.reserve(dst.terms.size() + src.terms.size());
  std::size_t i = 0, j = 0;
  while (i < dst.terms.size() || j < src.terms.size()) {
    if (j == src.terms.size() ||
        (i < dst.terms.size() && dst.terms[i].first < src.terms[j].first)) {
      out.terms.push_back(dst.terms[i++]);
    } else if (i == dst.terms.size() ||
               src.terms[j].first < dst.terms[i].first) {
      mpq_class v = field.reduce(c * src.terms[j].second);
      if (v != 0) out.terms.emplace_back(src.terms[j].first, std::move(v));
      ++j;
    } else {
      mpq_class v = field.reduce(dst.terms[i].second + c * src.terms[j].second);
      if (v != 0) out.terms.emplace_back(dst.terms[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

template <typename Key>
Sparse<Key> scaled(const Sparse<Key>& x, const mpq_class& c,
                   const Field& field) {
  Sparse<Key> out;
  for (const auto& [k, v] : x.terms) {
    mpq_class w = field.reduce(c * v);
    if (w != 0) out.terms.emplace_back(k, std::move(w));
  }
  return out;
}

template <typename Key>
Sparse<Key> added(const Sparse<Key>& a, const Sparse<Key>& b,
                  const Field& field) {
  return add_scaled(a, mpq_class(1), b, field);
}

}  // namespace tc
