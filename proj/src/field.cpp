#include "tc/field.hpp"

namespace tc {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  return Field{p};
}

mpq_class Field::reduce(const mpq_class& v) const {
  if (characteristic == 0) return v;  // mpq_class keeps itself canonical
  const mpz_class p(characteristic);
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), v.get_den().get_mpz_t(),
                 p.get_mpz_t()) == 0)
    throw std::domain_error("denominator " + v.get_den().get_str() +
                            " is not invertible in " + name());
  mpz_class r = (v.get_num() * den_inv) % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

mpq_class Field::inverse(const mpq_class& v) const {
  const mpq_class r = reduce(v);
  if (r == 0) throw std::domain_error("division by zero in " + name());
  if (characteristic == 0) return mpq_class(1) / r;
  const mpz_class p(characteristic);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), r.get_num().get_mpz_t(), p.get_mpz_t());
  return mpq_class(inv);
}

std::string Field::name() const {
  return characteristic == 0 ? std::string("Q")
                             : "F" + std::to_string(characteristic);
}

}  // namespace tc
