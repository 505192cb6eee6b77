#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <optional>
#include <vector>

#include "hsamuel/poly.hpp"

namespace hsamuel {

/// Reduced, monic Gröbner basis for a global term order.
template <class K>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<K> ring, std::vector<Poly<K>> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Poly<K>>& gens() const { return gens_; }
  const TermOrder& order() const { return ring_->order(); }

  /// Minimal generators of the initial ideal.
  std::vector<Monomial> staircase() const {
    std::vector<Monomial> out;
    for (const auto& g : gens_) out.push_back(g.lead_monomial());
    return out;
  }

  Poly<K> normal_form(const Poly<K>& f) const;
  bool is_member(const Poly<K>& f) const { return normal_form(f).is_zero(); }

  /// dim_k P/(ideal) when finite: the number of standard monomials.
  std::optional<long> quotient_dimension() const;
  /// Standard monomials of degree < n.
  long standard_monomials_below(int n) const;

 private:
  RingPtr<K> ring_;
  std::vector<Poly<K>> gens_;
};

namespace detail {

struct GlobalPair {
  int i, j;
  Monomial lcm;
};

/// Full reduction of f by the polynomials in g (any lead divisor allowed).
template <class K>
Poly<K> reduce_full(Poly<K> p, const std::vector<Poly<K>>& g, const std::vector<bool>* alive = nullptr) {
  const K& k = p.field();
  std::vector<Term<K>> rest;
  while (!p.is_zero()) {
    const Monomial lm = p.lead_monomial();
    int hit = -1;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (alive && !(*alive)[i]) continue;
      if (g[i].lead_monomial().divides(lm)) {
        hit = static_cast<int>(i);
        break;
      }
    }
    if (hit < 0) {
      rest.push_back(p.terms().front());
      p = p - Poly<K>::monomial(p.ring(), lm, p.lead_coef());
      continue;
    }
    const Poly<K>& h = g[hit];
    auto c = k.div(p.lead_coef(), h.lead_coef());
    p = p - h.mul_term(lm / h.lead_monomial(), c);
  }
  return Poly<K>::from_terms(p.ring(), std::move(rest));
}

}  // namespace detail

template <class K>
Poly<K> GroebnerBasis<K>::normal_form(const Poly<K>& f) const {
  Poly<K> g = f;
  if (f.ring() != ring_) {
    if (f.ring()->vars() != ring_->vars() || !(f.ring()->field() == ring_->field())) {
      throw RingMismatch();
    }
    g = f.in_ring(ring_);
  }
  return detail::reduce_full(g, gens_);
}

template <class K>
long GroebnerBasis<K>::standard_monomials_below(int n) const {
  const int nv = ring_->nvars();
  long count = 0;
  std::vector<int> e(nv, 0);
  // odometer over all exponent vectors of total degree < n
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nv) {
      Monomial m(e);
      for (const auto& g : gens_) {
        if (g.lead_monomial().divides(m)) return;
      }
      ++count;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[var] = a;
      rec(var + 1, left - a);
    }
    e[var] = 0;
  };
  if (n > 0) rec(0, n - 1);
  return count;
}

template <class K>
std::optional<long> GroebnerBasis<K>::quotient_dimension() const {
  const int nv = ring_->nvars();
  int bound = 0;
  for (int v = 0; v < nv; ++v) {
    int best = -1;
    for (const auto& g : gens_) {
      const Monomial& m = g.lead_monomial();
      if (m.degree() == m.exponent(v)) best = best < 0 ? m.degree() : std::min(best, m.degree());
    }
    if (best < 0) return std::nullopt;
    bound += best;
  }
  return standard_monomials_below(bound + 1);
}

/// Buchberger's algorithm with normal selection and the Gebauer-Möller
/// criteria. Zero generators are ignored.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& input, const TermOrder& order) {
  if (input.empty()) throw InputError("buchberger needs at least one generator");
  if (!order.is_global()) throw Unsupported("buchberger needs a global term order");
  RingPtr<K> ring = input.front().ring()->with_order(order);
  const K& k = ring->field();

  std::vector<Poly<K>> g;
  std::vector<bool> alive;
  std::vector<detail::GlobalPair> pairs;

  auto insert = [&](Poly<K> h) {
    h = h.monic();
    const Monomial lh = h.lead_monomial();
    const int hi = static_cast<int>(g.size());
    // candidate pairs (j, h), chain and product criteria
    std::vector<detail::GlobalPair> cand;
    for (int j = 0; j < hi; ++j) {
      if (!alive[j]) continue;
      cand.push_back({j, hi, g[j].lead_monomial().lcm(lh)});
    }
    std::sort(cand.begin(), cand.end(), [&](const auto& a, const auto& b) {
      return order.compare(a.lcm, b.lcm) < 0;
    });
    std::vector<detail::GlobalPair> kept;
    for (const auto& c : cand) {
      bool drop = false;
      for (const auto& q : kept) {
        if (q.lcm.divides(c.lcm)) {
          drop = true;
          break;
        }
      }
      if (!drop) kept.push_back(c);
    }
    // old pairs made redundant by h
    std::vector<detail::GlobalPair> next;
    for (const auto& p : pairs) {
      if (lh.divides(p.lcm) && g[p.i].lead_monomial().lcm(lh) != p.lcm &&
          g[p.j].lead_monomial().lcm(lh) != p.lcm) {
        continue;
      }
      next.push_back(p);
    }
    for (const auto& c : kept) {
      if (g[c.i].lead_monomial().coprime(lh)) continue;
      next.push_back(c);
    }
    pairs = std::move(next);
    for (int j = 0; j < hi; ++j) {
      if (alive[j] && lh.divides(g[j].lead_monomial())) alive[j] = false;
    }
    g.push_back(std::move(h));
    alive.push_back(true);
  };

  std::vector<Poly<K>> start;
  for (const auto& f : input) {
    if (!f.is_zero()) start.push_back(f.in_ring(ring));
  }
  std::sort(start.begin(), start.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return order.compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  for (auto& f : start) {
    Poly<K> r = detail::reduce_full(f, g, &alive);
    if (!r.is_zero()) insert(std::move(r));
  }
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return order.compare(a.lcm, b.lcm) < 0;
    });
    detail::GlobalPair p = *it;
    pairs.erase(it);
    const Poly<K>& a = g[p.i];
    const Poly<K>& b = g[p.j];
    Poly<K> s = a.mul_term(p.lcm / a.lead_monomial(), k.one()) -
                b.mul_term(p.lcm / b.lead_monomial(), k.one());
    Poly<K> r = detail::reduce_full(s, g, &alive);
    if (!r.is_zero()) insert(std::move(r));
  }

  // reduced basis: minimal leads, tails reduced by the others
  std::vector<Poly<K>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (alive[i]) minimal.push_back(g[i]);
  }
  std::vector<Poly<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Poly<K>& f = minimal[i];
    Poly<K> lead = Poly<K>::monomial(ring, f.lead_monomial(), f.lead_coef());
    Poly<K> tail = detail::reduce_full(f - lead, others);
    reduced.push_back((lead + tail).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return order.compare(a.lead_monomial(), b.lead_monomial()) > 0;
  });
  return GroebnerBasis<K>(ring, std::move(reduced));
}

/// Copy of f in `target`, sending variable i of f's ring to variable where[i].
template <class K>
Poly<K> remap(const Poly<K>& f, const RingPtr<K>& target, const std::vector<int>& where) {
  const int nv = f.ring()->nvars();
  std::vector<Term<K>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<int> e(target->nvars(), 0);
    for (int i = 0; i < nv; ++i) {
      if (where[i] >= 0) {
        e[where[i]] = t.mono.exponent(i);
      } else if (t.mono.exponent(i) != 0) {
        throw InternalInconsistency("remap drops a variable that occurs");
      }
    }
    out.push_back({Monomial(e), t.coef});
  }
  return Poly<K>::from_terms(target, std::move(out));
}

/// Generators of (gens) ∩ k[remaining variables], returned in the input ring.
template <class K>
std::vector<Poly<K>> eliminate(const std::vector<Poly<K>>& gens, const std::vector<int>& vars) {
  if (gens.empty()) throw InputError("eliminate needs at least one generator");
  const RingPtr<K>& ring = gens.front().ring();
  const int nv = ring->nvars();
  std::vector<bool> drop(nv, false);
  for (int v : vars) {
    if (v < 0 || v >= nv) throw InputError("variable index out of range");
    drop[v] = true;
  }
  std::vector<int> where(nv), back(nv);
  std::vector<std::string> names;
  int block = 0;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < nv; ++i) {
      if (drop[i] == (pass == 0)) {
        where[i] = static_cast<int>(names.size());
        names.push_back(ring->vars()[i]);
      }
    }
    if (pass == 0) block = static_cast<int>(names.size());
  }
  for (int i = 0; i < nv; ++i) back[where[i]] = drop[i] ? -1 : i;
  RingPtr<K> er = make_ring(ring->field(), names, TermOrder::elimination(block));
  std::vector<Poly<K>> moved;
  for (const auto& f : gens) moved.push_back(remap(f, er, where));
  GroebnerBasis<K> gb = buchberger(moved, er->order());
  std::vector<Poly<K>> out;
  for (const auto& g : gb.gens()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (int i = 0; i < block; ++i) free = free && t.mono.exponent(i) == 0;
    }
    if (free) out.push_back(remap(g, ring, back));
  }
  return out;
}

/// a ∩ b through an auxiliary variable t: (t·a + (1−t)·b) ∩ P.
template <class K>
std::vector<Poly<K>> intersect_by_elimination(const std::vector<Poly<K>>& a,
                                              const std::vector<Poly<K>>& b) {
  if (a.empty() || b.empty()) throw InputError("intersection needs generators on both sides");
  const RingPtr<K>& ring = a.front().ring();
  const int nv = ring->nvars();
  std::vector<std::string> names{"_t"};
  for (const auto& v : ring->vars()) names.push_back(v);
  RingPtr<K> er = make_ring(ring->field(), names, TermOrder::elimination(1));
  std::vector<int> where(nv), back(nv + 1, -1);
  for (int i = 0; i < nv; ++i) {
    where[i] = i + 1;
    back[i + 1] = i;
  }
  Poly<K> t = Poly<K>::variable(er, 0);
  Poly<K> one_minus_t = Poly<K>::from_int(er, 1) - t;
  std::vector<Poly<K>> gens;
  for (const auto& f : a) gens.push_back(t * remap(f, er, where));
  for (const auto& f : b) gens.push_back(one_minus_t * remap(f, er, where));
  GroebnerBasis<K> gb = buchberger(gens, er->order());
  std::vector<Poly<K>> out;
  for (const auto& g : gb.gens()) {
    bool free = true;
    for (const auto& term : g.terms()) free = free && term.mono.exponent(0) == 0;
    if (free) out.push_back(remap(g, ring, back));
  }
  return out;
}

}  // namespace hsamuel
