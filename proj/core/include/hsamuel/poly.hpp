#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hsamuel/errors.hpp"
#include "hsamuel/field.hpp"
#include "hsamuel/monomial.hpp"

namespace hsamuel {

template <class K>
class PolyRing {
 public:
  PolyRing(K field, std::vector<std::string> vars, TermOrder order = TermOrder::degrevlex())
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {
    if (vars_.empty()) throw InputError("a ring needs at least one variable");
    if (vars_.size() > static_cast<std::size_t>(kMaxVars)) {
      throw Unsupported("at most " + std::to_string(kMaxVars) + " variables are supported");
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (vars_[i] == vars_[j]) throw InputError("duplicate variable " + vars_[i]);
      }
    }
  }

  const K& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const TermOrder& order() const { return order_; }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return static_cast<int>(i);
    }
    return -1;
  }

  std::shared_ptr<const PolyRing> with_order(TermOrder o) const {
    return std::make_shared<const PolyRing>(field_, vars_, o);
  }

  bool compatible(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }

 private:
  K field_;
  std::vector<std::string> vars_;
  TermOrder order_;
};

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> vars,
                     TermOrder order = TermOrder::degrevlex()) {
  return std::make_shared<const PolyRing<K>>(std::move(field), std::move(vars), order);
}

template <class K>
struct Term {
  Monomial mono;
  typename K::Element coef;
};

/// Sparse polynomial: nonzero terms strictly decreasing in the ring's order.
template <class K>
class Poly {
 public:
  using E = typename K::Element;

  Poly() = default;
  explicit Poly(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr<K> ring, const E& c) {
    Poly p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Poly from_int(RingPtr<K> ring, std::int64_t c) {
    E e = ring->field().from_int(c);
    return constant(std::move(ring), e);
  }
  static Poly monomial(RingPtr<K> ring, const Monomial& m, const E& c) {
    Poly p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static Poly monomial(RingPtr<K> ring, const Monomial& m) {
    E one = ring->field().one();
    return monomial(std::move(ring), m, one);
  }
  static Poly variable(RingPtr<K> ring, int i) {
    return monomial(ring, Monomial::variable(i));
  }
  /// Sorts, merges equal monomials, drops zeros.
  static Poly from_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  const std::vector<Term<K>>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const E& lead_coef() const { return terms_.front().coef; }

  /// Largest total degree of a term; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  /// Smallest total degree of a term (m-adic order); -1 for zero.
  int order() const {
    if (terms_.empty()) return -1;
    int d = terms_[0].mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.mono.degree() != terms_[0].mono.degree()) return false;
    }
    return true;
  }
  E constant_coef() const {
    for (const auto& t : terms_) {
      if (t.mono.is_one()) return t.coef;
    }
    return field().zero();
  }

  Poly operator+(const Poly& b) const { return merge(b, false); }
  Poly operator-(const Poly& b) const { return merge(b, true); }
  Poly operator-() const {
    Poly r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = field().neg(t.coef);
    return r;
  }
  Poly operator*(const Poly& b) const {
    check_ring(b);
    std::vector<Term<K>> out;
    out.reserve(terms_.size() * b.terms_.size());
    const K& k = field();
    for (const auto& s : terms_) {
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, k.mul(s.coef, t.coef)});
    }
    return from_terms(ring_, std::move(out));
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scale(const E& c) const {
    Poly r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field().mul(t.coef, c)});
    return r;
  }
  /// c * m * this; the order is multiplicative so no re-sort is needed.
  Poly mul_term(const Monomial& m, const E& c) const {
    Poly r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coef, c)});
    return r;
  }
  Poly pow(int e) const {
    Poly r = Poly::constant(ring_, field().one());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  Poly monic() const {
    if (is_zero() || field().is_one(lead_coef())) return *this;
    return scale(field().inv(lead_coef()));
  }
  /// Drops all terms of total degree >= n.
  Poly truncate(int n) const {
    Poly r(ring_);
    for (const auto& t : terms_) {
      if (t.mono.degree() < n) r.terms_.push_back(t);
    }
    return r;
  }
  /// The same polynomial viewed in another ring with identical variables.
  Poly in_ring(RingPtr<K> other) const {
    if (other->vars() != ring_->vars() || !(other->field() == ring_->field())) {
      throw RingMismatch("variables or field differ");
    }
    return from_terms(std::move(other), terms_);
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono) return false;
      if (!a.field().equal(a.terms_[i].coef, b.terms_[i].coef)) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  void check_ring(const Poly& b) const {
    if (ring_ == b.ring_) return;
    if (!ring_ || !b.ring_ || !ring_->compatible(*b.ring_)) throw RingMismatch();
  }

 private:
  Poly merge(const Poly& b, bool subtract) const {
    check_ring(b);
    const K& k = field();
    const TermOrder& o = ring_->order();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == terms_.size()) {
        c = -1;
      } else if (j == b.terms_.size()) {
        c = 1;
      } else {
        c = o.compare(terms_[i].mono, b.terms_[j].mono);
      }
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? k.neg(t.coef) : t.coef});
      } else {
        E s = subtract ? k.sub(terms_[i].coef, b.terms_[j].coef)
                       : k.add(terms_[i].coef, b.terms_[j].coef);
        if (!k.is_zero(s)) r.terms_.push_back({terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    const TermOrder& o = ring_->order();
    const K& k = field();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<K>& a, const Term<K>& b) { return o.compare(a.mono, b.mono) > 0; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Term<K> acc = terms_[i];
      std::size_t j = i + 1;
      while (j < terms_.size() && terms_[j].mono == acc.mono) {
        acc.coef = k.add(acc.coef, terms_[j].coef);
        ++j;
      }
      if (!k.is_zero(acc.coef)) terms_[w++] = std::move(acc);
      i = j;
    }
    terms_.resize(w);
  }

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

}  // namespace hsamuel
