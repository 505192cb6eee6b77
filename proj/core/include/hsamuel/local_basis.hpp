#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "hsamuel/monomial_table.hpp"
#include "hsamuel/poly.hpp"

namespace hsamuel {

/// Sparse vector over the monomials of a MonomialTable, indices ascending
/// (so the first entry is the leading term for the local order).
template <class K>
struct SparseRow {
  std::vector<std::uint32_t> idx;
  std::vector<typename K::Element> coef;

  bool empty() const { return idx.empty(); }
  std::size_t size() const { return idx.size(); }
};

/// Standard basis of (gens) in A_N = P/m^N for the local degree order.
///
/// Every polynomial has its lowest-degree part as leading term, so a monomial
/// multiple u*g vanishes in A_N as soon as u*lm(g) does. Hence S-pairs with
/// the generators of m^N never arise and Buchberger's criterion over the
/// finite monomial set suffices. Generators are added one at a time and the
/// basis is completed after each, which also reports which generators were
/// redundant modulo the previous ones.
template <class K>
class LocalBasis {
 public:
  using E = typename K::Element;
  using Row = SparseRow<K>;
  static constexpr std::uint32_t kNone = MonomialTable::kNone;

  LocalBasis(K field, std::shared_ptr<const MonomialTable> table)
      : k_(std::move(field)), t_(std::move(table)), red_(t_->size(), kNone) {}

  const MonomialTable& table() const { return *t_; }
  int bound() const { return t_->bound(); }
  const K& field() const { return k_; }

  /// Adds f and completes the basis. Returns false when f already lies in the
  /// ideal generated so far.
  bool add(const Poly<K>& f) {
    std::vector<E> acc(t_->size(), k_.zero());
    std::uint32_t lo = load(f, acc);
    Row r = reduce(acc, lo);
    if (r.empty()) return false;
    insert(std::move(r));
    complete();
    return true;
  }

  /// Dimension of A_N / ideal.
  std::uint64_t colength() const {
    std::uint64_t c = 0;
    for (auto r : red_) c += (r == kNone);
    return c;
  }
  /// True when every monomial of degree N-1 is a leading monomial, i.e.
  /// m^(N-1) lies in ideal + m^N, so the ideal contains m^(N-1) locally.
  bool certified() const {
    for (std::uint32_t i = t_->degree_start(t_->bound() - 1); i < t_->size(); ++i) {
      if (red_[i] == kNone) return false;
    }
    return true;
  }
  bool is_standard(std::uint32_t i) const { return red_[i] == kNone; }
  std::vector<std::uint32_t> standard_monomials() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < red_.size(); ++i) {
      if (red_[i] == kNone) out.push_back(i);
    }
    return out;
  }
  /// Leading monomials of the non-redundant basis elements.
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (alive_[i]) out.push_back(t_->mono(rows_[i].idx[0]));
    }
    return out;
  }
  std::size_t basis_size() const {
    return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true));
  }

  /// Normal form: the unique combination of standard monomials congruent to f.
  Row normal_form(const Poly<K>& f) const {
    std::vector<E> acc(t_->size(), k_.zero());
    std::uint32_t lo = load(f, acc);
    return reduce(acc, lo);
  }
  Row normal_form(const Row& f) const {
    std::vector<E> acc(t_->size(), k_.zero());
    for (std::size_t j = 0; j < f.size(); ++j) acc[f.idx[j]] = f.coef[j];
    return reduce(acc, f.empty() ? t_->size() : f.idx[0]);
  }
  /// Normal form of g*f where f is given as a row.
  Row normal_form_product(const Poly<K>& g, const Row& f) const {
    std::vector<E> acc(t_->size(), k_.zero());
    std::uint32_t lo = t_->size();
    for (const auto& term : g.terms()) {
      if (term.mono.degree() >= t_->bound()) continue;
      std::uint64_t wk = t_->direct() ? t_->key(term.mono) : 0;
      for (std::size_t j = 0; j < f.size(); ++j) {
        std::uint32_t p = t_->product(term.mono, wk, f.idx[j]);
        if (p == kNone) break;
        acc[p] = k_.add(acc[p], k_.mul(term.coef, f.coef[j]));
        lo = std::min(lo, p);
      }
    }
    return reduce(acc, lo);
  }
  bool contains(const Poly<K>& f) const { return normal_form(f).empty(); }

  Row to_row(const Poly<K>& f) const {
    std::vector<E> acc(t_->size(), k_.zero());
    std::uint32_t lo = load(f, acc);
    Row r;
    for (std::uint32_t i = lo; i < t_->size(); ++i) {
      if (!k_.is_zero(acc[i])) {
        r.idx.push_back(i);
        r.coef.push_back(acc[i]);
      }
    }
    return r;
  }
  Poly<K> to_poly(const Row& r, const RingPtr<K>& ring) const {
    std::vector<Term<K>> terms;
    terms.reserve(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) terms.push_back({t_->mono(r.idx[j]), r.coef[j]});
    return Poly<K>::from_terms(ring, std::move(terms));
  }

 private:
  struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint32_t lcm_index;
  };

  std::uint32_t load(const Poly<K>& f, std::vector<E>& acc) const {
    std::uint32_t lo = t_->size();
    for (const auto& term : f.terms()) {
      std::uint32_t i = t_->index(term.mono);
      if (i == kNone) continue;
      acc[i] = k_.add(acc[i], term.coef);
      lo = std::min(lo, i);
    }
    return lo;
  }

  /// Full reduction of the dense vector acc (zero below lo); acc is left zero.
  Row reduce(std::vector<E>& acc, std::uint32_t lo) const {
    Row out;
    const std::uint32_t m = t_->size();
    const bool direct = t_->direct();
    for (std::uint32_t i = lo; i < m; ++i) {
      if (k_.is_zero(acc[i])) continue;
      std::uint32_t r = red_[i];
      if (r == kNone) {
        out.idx.push_back(i);
        out.coef.push_back(acc[i]);
        acc[i] = k_.zero();
        continue;
      }
      const Row& g = rows_[r];
      E c = acc[i];
      acc[i] = k_.zero();
      const Monomial w = t_->mono(i) / t_->mono(g.idx[0]);
      const std::uint64_t wk = direct ? t_->key(w) : 0;
      for (std::size_t j = 1; j < g.size(); ++j) {
        std::uint32_t p = t_->product(w, wk, g.idx[j]);
        if (p == kNone) break;  // terms are sorted by degree
        k_.sub_mul(acc[p], c, g.coef[j]);
      }
    }
    return out;
  }

  void insert(Row h) {
    if (!k_.is_one(h.coef[0])) {
      E inv = k_.inv(h.coef[0]);
      for (auto& c : h.coef) c = k_.mul(c, inv);
    }
    const std::uint32_t hi = static_cast<std::uint32_t>(rows_.size());
    const std::uint32_t lead = h.idx[0];
    const Monomial lh = t_->mono(lead);
    const bool h_mono = h.size() == 1;
    const int n = t_->bound();

    std::vector<Pair> cand;
    for (std::uint32_t j = 0; j < hi; ++j) {
      if (!alive_[j]) continue;
      if (h_mono && rows_[j].size() == 1) continue;
      Monomial l = t_->mono(rows_[j].idx[0]).lcm(lh);
      if (l.degree() >= n) continue;
      cand.push_back({j, hi, l, t_->index(l)});
    }
    std::sort(cand.begin(), cand.end(), [](const Pair& a, const Pair& b) {
      return a.lcm_index < b.lcm_index;
    });
    std::vector<Pair> kept;
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
    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const auto& p : pairs_) {
      if (lh.divides(p.lcm) && t_->mono(rows_[p.i].idx[0]).lcm(lh) != p.lcm &&
          t_->mono(rows_[p.j].idx[0]).lcm(lh) != p.lcm) {
        continue;
      }
      next.push_back(p);
    }
    for (auto& c : kept) next.push_back(c);
    // pop from the back: largest lcm (lowest degree) first
    std::sort(next.begin(), next.end(), [](const Pair& a, const Pair& b) {
      return a.lcm_index > b.lcm_index;
    });
    pairs_ = std::move(next);

    for (std::uint32_t j = 0; j < hi; ++j) {
      if (alive_[j] && lh.divides(t_->mono(rows_[j].idx[0]))) alive_[j] = false;
    }
    rows_.push_back(std::move(h));
    alive_.push_back(true);
    mark_multiples(lead, hi);
  }

  void mark_multiples(std::uint32_t lead, std::uint32_t row) {
    std::vector<std::uint32_t> stack{lead};
    red_[lead] = row;
    const int nv = t_->nvars();
    while (!stack.empty()) {
      std::uint32_t i = stack.back();
      stack.pop_back();
      for (int v = 0; v < nv; ++v) {
        std::uint32_t j = t_->up(v, i);
        if (j != kNone && red_[j] == kNone) {
          red_[j] = row;
          stack.push_back(j);
        }
      }
    }
  }

  void complete() {
    std::vector<E> acc(t_->size(), k_.zero());
    const bool direct = t_->direct();
    while (!pairs_.empty()) {
      Pair p = pairs_.back();
      pairs_.pop_back();
      for (std::uint32_t side = 0; side < 2; ++side) {
        const Row& g = rows_[side == 0 ? p.i : p.j];
        const Monomial w = p.lcm / t_->mono(g.idx[0]);
        const std::uint64_t wk = direct ? t_->key(w) : 0;
        for (std::size_t j = 0; j < g.size(); ++j) {
          std::uint32_t q = t_->product(w, wk, g.idx[j]);
          if (q == kNone) break;
          acc[q] = side == 0 ? k_.add(acc[q], g.coef[j]) : k_.sub(acc[q], g.coef[j]);
        }
      }
      Row r = reduce(acc, p.lcm_index);
      if (!r.empty()) insert(std::move(r));
    }
  }

  K k_;
  std::shared_ptr<const MonomialTable> t_;
  std::vector<Row> rows_;
  std::vector<bool> alive_;
  std::vector<std::uint32_t> red_;
  std::vector<Pair> pairs_;
};

}  // namespace hsamuel
