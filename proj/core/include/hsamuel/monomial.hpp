#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hsamuel/errors.hpp"

namespace hsamuel {

constexpr int kMaxVars = 16;
constexpr int kMaxExponent = 127;

/// Exponent vector packed one byte per variable into two 64-bit words, so
/// products, divisibility and lcm are word-parallel.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::vector<int>& exps);

  static Monomial variable(int i, int e = 1);

  int exponent(int i) const {
    return static_cast<int>((w_[i >> 3] >> ((i & 7) * 8)) & 0xff);
  }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  std::vector<int> exponents(int nvars) const;

  /// u | v componentwise.
  bool divides(const Monomial& v) const {
    return (((v.w_[0] | kHigh) - w_[0]) & kHigh) == kHigh &&
           (((v.w_[1] | kHigh) - w_[1]) & kHigh) == kHigh;
  }
  bool coprime(const Monomial& v) const;

  /// Throws ResourceLimit when an exponent would exceed kMaxExponent.
  Monomial operator*(const Monomial& v) const {
    Monomial r;
    r.w_[0] = w_[0] + v.w_[0];
    r.w_[1] = w_[1] + v.w_[1];
    if (((r.w_[0] | r.w_[1]) & kHigh) != 0) overflow();
    r.deg_ = deg_ + v.deg_;
    return r;
  }
  /// Caller guarantees v | *this.
  Monomial operator/(const Monomial& v) const {
    Monomial r;
    r.w_[0] = w_[0] - v.w_[0];
    r.w_[1] = w_[1] - v.w_[1];
    r.deg_ = deg_ - v.deg_;
    return r;
  }
  Monomial lcm(const Monomial& v) const;
  Monomial gcd(const Monomial& v) const;

  /// Index of the highest-numbered variable where the two differ, or -1.
  int last_difference(const Monomial& v) const {
    std::uint64_t x1 = w_[1] ^ v.w_[1];
    if (x1 != 0) return 8 + (63 - std::countl_zero(x1)) / 8;
    std::uint64_t x0 = w_[0] ^ v.w_[0];
    if (x0 != 0) return (63 - std::countl_zero(x0)) / 8;
    return -1;
  }

  std::size_t hash() const {
    std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ULL ^ (w_[1] + 0x632be59bd9b4e019ULL);
    h ^= h >> 29;
    return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ULL);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.w_[0] == b.w_[0] && a.w_[1] == b.w_[1];
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::uint64_t word(int i) const { return w_[i]; }

 private:
  static constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
  [[noreturn]] static void overflow();

  std::uint64_t w_[2] = {0, 0};
  int deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Total orders on monomials. Global orders are well-orders used by the
/// Buchberger engine; kLocalDegRevLex ranks lower degree higher and drives the
/// truncated standard-basis engine.
class TermOrder {
 public:
  enum class Kind { kDegRevLex, kLocalDegRevLex, kElimination };

  static TermOrder degrevlex() { return TermOrder(Kind::kDegRevLex, 0); }
  static TermOrder local_degrevlex() { return TermOrder(Kind::kLocalDegRevLex, 0); }
  /// Block order eliminating the first `block` variables.
  static TermOrder elimination(int block) { return TermOrder(Kind::kElimination, block); }

  Kind kind() const { return kind_; }
  int block() const { return block_; }
  bool is_global() const { return kind_ != Kind::kLocalDegRevLex; }
  std::string name() const;

  /// Negative, zero, positive as u <, =, > v.
  int compare(const Monomial& u, const Monomial& v) const {
    switch (kind_) {
      case Kind::kDegRevLex:
        if (u.degree() != v.degree()) return u.degree() > v.degree() ? 1 : -1;
        return revlex(u, v, 0);
      case Kind::kLocalDegRevLex:
        if (u.degree() != v.degree()) return u.degree() < v.degree() ? 1 : -1;
        return revlex(u, v, 0);
      case Kind::kElimination:
        return compare_block(u, v);
    }
    return 0;
  }
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  TermOrder(Kind k, int block) : kind_(k), block_(block) {}

  /// Reverse-lexicographic tie-break on variables >= from: the monomial with
  /// the smaller exponent in the last differing variable is larger.
  static int revlex(const Monomial& u, const Monomial& v, int from) {
    int i = u.last_difference(v);
    if (i < from) return 0;
    return u.exponent(i) < v.exponent(i) ? 1 : -1;
  }
  int compare_block(const Monomial& u, const Monomial& v) const;

  Kind kind_;
  int block_;
};

/// Checked compare for callers holding explicit exponent vectors.
int compare_exponents(const std::vector<int>& u, const std::vector<int>& v, const TermOrder& o);

}  // namespace hsamuel
