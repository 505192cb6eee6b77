#include "hsamuel/field.hpp"

namespace hsamuel {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InputError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  Element d = from_mpz(den);
  if (d == 0) {
    throw InputError("denominator " + den.get_str() + " vanishes in " + name());
  }
  return div(from_mpz(num), d);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

RationalField::Element RationalField::from_fraction(const mpz_class& num,
                                                    const mpz_class& den) const {
  if (den == 0) throw InputError("zero denominator");
  Element q(num, den);
  q.canonicalize();
  return q;
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero in q");
  return Element(1) / a;
}

}  // namespace hsamuel
