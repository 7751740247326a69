#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tc {

// Exact coefficient field: the rationals (characteristic 0) or a prime field
// F_p.  Scalars are mpq_class everywhere; over F_p they are kept as canonical
// residues n/1 with 0 <= n < p, and every operation that can leave canonical
// form goes through reduce().
struct Field {
  unsigned characteristic = 0;  // 0 = rationals, otherwise a prime

  static Field rationals() { return Field{0}; }
  static Field prime(unsigned p);

  bool operator==(const Field&) const = default;

  bool is_rational() const { return characteristic == 0; }

  // Canonical form of v.  Over F_p a denominator divisible by p has no meaning
  // and is rejected.
  mpq_class reduce(const mpq_class& v) const;

  // Multiplicative inverse; throws on zero.
  mpq_class inverse(const mpq_class& v) const;

  std::string name() const;
};

bool is_prime(unsigned n);

}  // namespace tc
