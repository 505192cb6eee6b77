#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "hsamuel/errors.hpp"

namespace hsamuel {

bool is_prime(std::uint64_t n);

/// Z/pZ for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "fp:" + std::to_string(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_mpz(const mpz_class& v) const;
  /// Throws InputError when the denominator vanishes mod p.
  Element from_fraction(const mpz_class& num, const mpz_class& den) const;

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  /// acc -= a * b
  void sub_mul(Element& acc, Element a, Element b) const { acc = sub(acc, mul(a, b)); }

  /// Uniform nonzero element.
  Element random(std::mt19937_64& rng) const {
    return static_cast<Element>(1 + rng() % (p_ - 1));
  }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t lift(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string to_string(Element a) const { return std::to_string(lift(a)); }
  bool is_negative(Element a) const { return lift(a) < 0; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals with arbitrary precision (GMP).
class RationalField {
 public:
  using Element = mpq_class;

  std::string name() const { return "q"; }
  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_mpz(const mpz_class& v) const { return Element(v); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const;

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return a * inv(b); }
  void sub_mul(Element& acc, const Element& a, const Element& b) const { acc -= a * b; }

  /// Small nonzero integer; keeps coefficient growth in check.
  Element random(std::mt19937_64& rng) const {
    long v = static_cast<long>(rng() % 61) - 30;
    return Element(v == 0 ? 31 : v);
  }

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace hsamuel
