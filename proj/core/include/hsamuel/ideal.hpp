#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hsamuel/linalg.hpp"
#include "hsamuel/local_basis.hpp"
#include "hsamuel/ring.hpp"

namespace hsamuel {

/// λ together with the truncation degree N at which it was certified.
struct LengthValue {
  std::uint64_t value = 0;
  int level = 0;
};

/// Monomial ideals given by exponent vectors: minimal generators under
/// divisibility, in local order (lower degree first).
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

/// An ideal of the local ring R = (P/F)_m, represented by ambient generators.
/// Handles are cheap to copy and share one cache of truncated standard bases.
template <class K>
class Ideal {
 public:
  using E = typename K::Element;

  Ideal(RingSpecPtr<K> ring, std::vector<Poly<K>> gens) : s_(std::make_shared<State>()) {
    s_->ring = std::move(ring);
    for (auto& g : gens) {
      g.check_ring(Poly<K>(s_->ring->poly_ring()));
      if (!g.is_zero()) s_->gens.push_back(std::move(g));
    }
    s_->monomial = s_->ring->is_polynomial_ring();
    for (const auto& g : s_->gens) s_->monomial = s_->monomial && g.is_monomial();
  }

  static Ideal unit(RingSpecPtr<K> ring) {
    auto one = Poly<K>::from_int(ring->poly_ring(), 1);
    return Ideal(std::move(ring), {one});
  }
  static Ideal maximal(RingSpecPtr<K> ring) {
    std::vector<Poly<K>> g;
    for (int i = 0; i < ring->nvars(); ++i) g.push_back(ring->variable(i));
    return Ideal(std::move(ring), std::move(g));
  }
  static Ideal from_monomials(RingSpecPtr<K> ring, const std::vector<Monomial>& ms) {
    std::vector<Poly<K>> g;
    for (const auto& m : ms) g.push_back(Poly<K>::monomial(ring->poly_ring(), m));
    return Ideal(std::move(ring), std::move(g));
  }
  static Ideal parse(RingSpecPtr<K> ring, const std::vector<std::string>& gens) {
    std::vector<Poly<K>> g;
    for (const auto& s : gens) g.push_back(ring->parse(s));
    return Ideal(std::move(ring), std::move(g));
  }

  const RingSpecPtr<K>& ring() const { return s_->ring; }
  const RingPtr<K>& poly_ring() const { return s_->ring->poly_ring(); }
  const K& field() const { return s_->ring->field(); }
  const std::vector<Poly<K>>& gens() const { return s_->gens; }
  /// Monomial generators in a polynomial ring: combinatorial fast paths apply.
  bool is_monomial() const { return s_->monomial; }
  std::vector<Monomial> monomial_gens() const {
    std::vector<Monomial> out;
    for (const auto& g : s_->gens) out.push_back(g.lead_monomial());
    return out;
  }
  bool is_unit_generated() const {
    for (const auto& g : s_->gens) {
      if (!field().is_zero(g.constant_coef())) return true;
    }
    return false;
  }
  /// Same generators over another ring with the same polynomial ring
  /// (for instance a quotient R/(x)).
  Ideal in_ring(RingSpecPtr<K> other) const {
    if (!other->poly_ring()->compatible(*poly_ring())) throw RingMismatch();
    return Ideal(std::move(other), s_->gens);
  }

  /// Standard basis at the certified truncation degree.
  std::shared_ptr<const LocalBasis<K>> basis() const {
    std::lock_guard<std::recursive_mutex> lock(s_->mu);
    certify_locked();
    return s_->levels.at(s_->certified).basis;
  }
  /// Standard basis at truncation degree n (not necessarily certified).
  std::shared_ptr<const LocalBasis<K>> basis_at(int n) const {
    std::lock_guard<std::recursive_mutex> lock(s_->mu);
    return level_locked(n).basis;
  }
  int certified_level() const {
    std::lock_guard<std::recursive_mutex> lock(s_->mu);
    certify_locked();
    return s_->certified;
  }
  /// Basis at max(n, certified level); still certified.
  std::shared_ptr<const LocalBasis<K>> certified_basis_at_least(int n) const {
    int c = certified_level();
    return basis_at(std::max(n, c));
  }

  /// λ(R/I). Throws ResourceLimit when no truncation degree up to the ceiling
  /// certifies stabilization.
  LengthValue length() const {
    auto b = basis();
    return {b->colength(), b->bound()};
  }

  bool contains(const Poly<K>& f) const {
    f.check_ring(Poly<K>(poly_ring()));
    return basis()->contains(f);
  }
  /// First generator of b outside this ideal, if any.
  std::optional<Poly<K>> first_not_contained(const Ideal& b) const {
    check_same(b);
    auto base = basis();
    for (const auto& g : b.gens()) {
      if (!base->contains(g)) return g;
    }
    return std::nullopt;
  }
  bool contains(const Ideal& b) const { return !first_not_contained(b).has_value(); }

  /// Generators with redundant ones removed: divisibility for monomial ideals,
  /// otherwise each kept generator lies outside the ideal of F and the
  /// generators kept before it (processed in local order).
  std::vector<Poly<K>> minimal_gens() const {
    std::lock_guard<std::recursive_mutex> lock(s_->mu);
    if (s_->minimal) return *s_->minimal;
    std::vector<Poly<K>> out;
    if (s_->monomial) {
      for (const auto& m : minimalize_monomials(monomial_gens())) {
        out.push_back(Poly<K>::monomial(poly_ring(), m));
      }
    } else {
      certify_locked();
      const Level& lv = s_->levels.at(s_->certified);
      for (std::size_t i = 0; i < lv.order.size(); ++i) {
        if (lv.kept[i]) out.push_back(s_->gens[lv.order[i]]);
      }
    }
    s_->minimal = out;
    return out;
  }

  /// I^n with n >= 0; powers are cached on this handle.
  Ideal power(int n) const {
    if (n < 0) throw InputError("negative power");
    if (n == 0) return unit(ring());
    if (n == 1) return *this;
    std::lock_guard<std::recursive_mutex> lock(s_->mu);
    while (static_cast<int>(s_->powers.size()) < n - 1) {
      Ideal prev = s_->powers.empty() ? *this : s_->powers.back();
      s_->powers.push_back(product(prev, *this));
    }
    return s_->powers[n - 2];
  }

  void check_same(const Ideal& b) const {
    if (ring() == b.ring()) return;
    const auto& r1 = *ring();
    const auto& r2 = *b.ring();
    bool same = r1.poly_ring()->compatible(*r2.poly_ring()) && r1.defining().size() == r2.defining().size();
    if (same) {
      for (std::size_t i = 0; i < r1.defining().size(); ++i) {
        same = same && r1.defining()[i] == r2.defining()[i];
      }
    }
    if (!same) throw RingMismatch("ideals live in different rings");
  }

  static Ideal product(const Ideal& a, const Ideal& b) {
    a.check_same(b);
    if (a.is_monomial() && b.is_monomial()) {
      std::vector<Monomial> out;
      auto ga = minimalize_monomials(a.monomial_gens());
      auto gb = minimalize_monomials(b.monomial_gens());
      for (const auto& u : ga) {
        for (const auto& v : gb) out.push_back(u * v);
      }
      return from_monomials(a.ring(), minimalize_monomials(std::move(out)));
    }
    std::vector<Poly<K>> out;
    auto ga = a.minimal_gens();
    auto gb = b.minimal_gens();
    for (const auto& u : ga) {
      for (const auto& v : gb) out.push_back(u * v);
    }
    return Ideal(a.ring(), std::move(out));
  }

 private:
  struct Level {
    std::shared_ptr<const LocalBasis<K>> basis;
    std::vector<std::size_t> order;  // generator indices in processing order
    std::vector<bool> kept;
  };
  struct State {
    RingSpecPtr<K> ring;
    std::vector<Poly<K>> gens;
    bool monomial = false;
    std::recursive_mutex mu;
    std::map<int, Level> levels;
    int certified = 0;
    std::optional<std::vector<Poly<K>>> minimal;
    std::vector<Ideal> powers;  // powers[i] = I^(i+2)
  };

  const Level& level_locked(int n) const {
    auto it = s_->levels.find(n);
    if (it != s_->levels.end()) return it->second;
    auto table = MonomialTable::get(s_->ring->nvars(), n);
    auto b = std::make_shared<LocalBasis<K>>(field(), table);
    auto lead_index = [&](const Poly<K>& f) {
      std::uint32_t best = MonomialTable::kNone;
      for (const auto& t : f.terms()) best = std::min(best, table->index(t.mono));
      return best;
    };
    std::vector<Poly<K>> defining = s_->ring->defining();
    std::stable_sort(defining.begin(), defining.end(), [&](const Poly<K>& x, const Poly<K>& y) {
      return lead_index(x) < lead_index(y);
    });
    for (const auto& f : defining) b->add(f);
    Level lv;
    lv.order.resize(s_->gens.size());
    for (std::size_t i = 0; i < lv.order.size(); ++i) lv.order[i] = i;
    std::vector<std::uint32_t> leads;
    for (const auto& g : s_->gens) leads.push_back(lead_index(g));
    std::stable_sort(lv.order.begin(), lv.order.end(),
                     [&](std::size_t x, std::size_t y) { return leads[x] < leads[y]; });
    for (std::size_t i : lv.order) lv.kept.push_back(b->add(s_->gens[i]));
    lv.basis = std::move(b);
    return s_->levels.emplace(n, std::move(lv)).first->second;
  }

  void certify_locked() const {
    if (s_->certified) return;
    const int ceiling = s_->ring->limits().truncation_max;
    int maxdeg = 0;
    for (const auto& g : s_->gens) maxdeg = std::max(maxdeg, g.degree());
    for (const auto& g : s_->ring->defining()) maxdeg = std::max(maxdeg, g.degree());
    int n = std::min(std::max(2, maxdeg + 2), ceiling);
    while (true) {
      const Level& lv = level_locked(n);
      if (lv.basis->certified()) break;
      s_->levels.erase(n);
      if (n >= ceiling) {
        throw ResourceLimit("local length did not stabilize below truncation degree " +
                            std::to_string(ceiling) + ": not m-primary or raise --nmax");
      }
      n = std::min(n + 2, ceiling);
    }
    s_->certified = n;
    for (auto it = s_->levels.begin(); it != s_->levels.end();) {
      it = it->first == n ? std::next(it) : s_->levels.erase(it);
    }
  }

  std::shared_ptr<State> s_;
};

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  a.check_same(b);
  std::vector<Poly<K>> g = a.gens();
  for (const auto& f : b.gens()) g.push_back(f);
  return Ideal<K>(a.ring(), std::move(g));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
  return Ideal<K>::product(a, b);
}

template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, int n) {
  return a.power(n);
}

template <class K>
LengthValue local_length(const Ideal<K>& a) {
  return a.length();
}

/// λ(outer/inner); throws NotContained naming a generator of inner outside outer.
template <class K>
LengthValue quotient_length(const Ideal<K>& inner, const Ideal<K>& outer) {
  if (auto bad = outer.first_not_contained(inner)) {
    throw NotContained("generator " + to_string(*bad) + " of the inner ideal is not in the outer ideal");
  }
  LengthValue li = inner.length(), lo = outer.length();
  return {li.value - lo.value, std::max(li.level, lo.level)};
}

/// Equality in the local ring, for m-primary ideals: equal colength plus one
/// containment.
template <class K>
bool ideal_equal_local(const Ideal<K>& a, const Ideal<K>& b) {
  a.check_same(b);
  if (a.length().value != b.length().value) return false;
  return a.contains(b);
}

namespace detail {

/// Monomial intersection: minimal lcms of generator pairs.
inline std::vector<Monomial> intersect_monomials(const std::vector<Monomial>& a,
                                                 const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  for (const auto& u : a) {
    for (const auto& v : b) out.push_back(u.lcm(v));
  }
  return minimalize_monomials(std::move(out));
}

}  // namespace detail

/// (a : b) = {f : f*b ⊆ a} for m-primary a. With c ⊆ (a : b) (default a),
/// the result is c + lifts of the common kernel of the multiplication maps
/// R/c -> R/a by the generators of b. A larger c keeps the linear algebra small.
template <class K>
Ideal<K> ideal_colon(const Ideal<K>& a, const Ideal<K>& b,
                     std::optional<Ideal<K>> inside = std::nullopt) {
  a.check_same(b);
  using E = typename K::Element;
  const K& k = a.field();
  if (a.is_monomial() && b.is_monomial()) {
    auto ga = minimalize_monomials(a.monomial_gens());
    std::optional<std::vector<Monomial>> acc;
    for (const auto& v : minimalize_monomials(b.monomial_gens())) {
      std::vector<Monomial> q;
      for (const auto& u : ga) q.push_back(u / u.gcd(v));
      q = minimalize_monomials(std::move(q));
      acc = acc ? detail::intersect_monomials(*acc, q) : q;
    }
    if (!acc) return Ideal<K>::unit(a.ring());
    return Ideal<K>::from_monomials(a.ring(), *acc);
  }
  Ideal<K> c = inside ? *inside : a;
  c.check_same(a);
  // b need not be m-primary (a principal ideal, say), so fall back to its
  // given generators when they cannot be minimalized
  std::vector<Poly<K>> bgens = b.gens();
  if (bgens.size() > 1) {
    try {
      bgens = b.minimal_gens();
    } catch (const ResourceLimit&) {
    }
  }
  if (inside) {
    for (const auto& g : bgens) {
      for (const auto& h : c.gens()) {
        if (!a.contains(g * h)) {
          throw NotContained("auxiliary ideal is not inside the colon: " + to_string(h));
        }
      }
    }
  }
  const int n = std::max(a.certified_level(), c.certified_level());
  auto base = a.basis_at(n);
  auto small = c.basis_at(n);
  const std::vector<std::uint32_t> sa = base->standard_monomials();
  const std::vector<std::uint32_t> sc = small->standard_monomials();
  std::vector<std::int64_t> pos(base->table().size(), -1);
  for (std::size_t i = 0; i < sa.size(); ++i) pos[sa[i]] = static_cast<std::int64_t>(i);

  // current subspace of R/c, as dense coordinate vectors
  const std::size_t lam = sc.size();
  std::vector<std::vector<E>> space;
  for (std::size_t i = 0; i < lam; ++i) {
    std::vector<E> v(lam, k.zero());
    v[i] = k.one();
    space.push_back(std::move(v));
  }
  auto to_row = [&](const std::vector<E>& v) {
    SparseRow<K> r;
    for (std::size_t i = 0; i < lam; ++i) {
      if (!k.is_zero(v[i])) {
        r.idx.push_back(sc[i]);
        r.coef.push_back(v[i]);
      }
    }
    return r;
  };
  for (const auto& g : bgens) {
    if (space.empty()) break;
    std::vector<std::vector<E>> images;
    for (const auto& v : space) {
      SparseRow<K> img = base->normal_form_product(g, to_row(v));
      std::vector<E> d(sa.size(), k.zero());
      for (std::size_t j = 0; j < img.size(); ++j) d[pos[img.idx[j]]] = img.coef[j];
      images.push_back(std::move(d));
    }
    auto ker = left_kernel(k, std::move(images), sa.size());
    std::vector<std::vector<E>> next;
    for (const auto& coeffs : ker) {
      std::vector<E> v(lam, k.zero());
      for (std::size_t i = 0; i < space.size(); ++i) {
        if (k.is_zero(coeffs[i])) continue;
        for (std::size_t j = 0; j < lam; ++j) {
          if (!k.is_zero(space[i][j])) v[j] = k.add(v[j], k.mul(coeffs[i], space[i][j]));
        }
      }
      next.push_back(std::move(v));
    }
    space = std::move(next);
  }
  std::vector<Poly<K>> gens = c.gens();
  for (const auto& v : space) gens.push_back(small->to_poly(to_row(v), a.poly_ring()));
  return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_colon(const Ideal<K>& a, const Ideal<K>& b, const Ideal<K>& inside) {
  return ideal_colon(a, b, std::optional<Ideal<K>>(inside));
}

/// a ∩ b for m-primary a, b. With c ⊆ a ∩ b (default a*b), the elements
/// u - NF_b(u), u standard for c but not for b, form a basis of b/c; the
/// kernel of b/c -> R/a lifts to a ∩ b.
template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& a, const Ideal<K>& b,
                         std::optional<Ideal<K>> inside = std::nullopt) {
  a.check_same(b);
  using E = typename K::Element;
  const K& k = a.field();
  if (a.is_monomial() && b.is_monomial()) {
    return Ideal<K>::from_monomials(
        a.ring(), detail::intersect_monomials(minimalize_monomials(a.monomial_gens()),
                                              minimalize_monomials(b.monomial_gens())));
  }
  Ideal<K> c = inside ? *inside : Ideal<K>::product(a, b);
  c.check_same(a);
  int n = std::max({a.certified_level(), b.certified_level(), c.certified_level()});
  auto ba = a.basis_at(n);
  auto bb = b.basis_at(n);
  auto bc = c.basis_at(n);
  if (!ba->certified() || !bb->certified() || !bc->certified()) {
    throw InternalInconsistency("certification lost at a higher truncation degree");
  }
  if (auto bad = a.first_not_contained(c)) {
    throw NotContained("auxiliary ideal is not inside the intersection: " + to_string(*bad));
  }
  if (auto bad = b.first_not_contained(c)) {
    throw NotContained("auxiliary ideal is not inside the intersection: " + to_string(*bad));
  }
  const std::vector<std::uint32_t> sa = ba->standard_monomials();
  std::vector<std::int64_t> pos(ba->table().size(), -1);
  for (std::size_t i = 0; i < sa.size(); ++i) pos[sa[i]] = static_cast<std::int64_t>(i);

  std::vector<SparseRow<K>> elems;  // basis of b/c
  for (std::uint32_t u : bc->standard_monomials()) {
    if (bb->is_standard(u)) continue;
    SparseRow<K> unit;
    unit.idx.push_back(u);
    unit.coef.push_back(k.one());
    SparseRow<K> nf = bb->normal_form(unit);
    SparseRow<K> v = unit;
    for (std::size_t j = 0; j < nf.size(); ++j) {
      v.idx.push_back(nf.idx[j]);
      v.coef.push_back(k.neg(nf.coef[j]));
    }
    elems.push_back(std::move(v));
  }
  std::vector<std::vector<E>> images;
  for (const auto& v : elems) {
    SparseRow<K> img = ba->normal_form(v);
    std::vector<E> d(sa.size(), k.zero());
    for (std::size_t j = 0; j < img.size(); ++j) d[pos[img.idx[j]]] = img.coef[j];
    images.push_back(std::move(d));
  }
  auto ker = left_kernel(k, std::move(images), sa.size());
  std::vector<Poly<K>> gens = c.gens();
  for (const auto& coeffs : ker) {
    Poly<K> f(a.poly_ring());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (k.is_zero(coeffs[i])) continue;
      f += bc->to_poly(elems[i], a.poly_ring()).scale(coeffs[i]);
    }
    gens.push_back(f);
  }
  return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& a, const Ideal<K>& b, const Ideal<K>& inside) {
  return ideal_intersect(a, b, std::optional<Ideal<K>>(inside));
}

}  // namespace hsamuel
