#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hsamuel/ideal.hpp"
#include "hsamuel/newton.hpp"

namespace hsamuel {

enum class FiltrationKind { adic, ratliff_rush, closure, quotient };

inline std::string to_string(FiltrationKind k) {
  switch (k) {
    case FiltrationKind::adic: return "adic";
    case FiltrationKind::ratliff_rush: return "ratliff-rush";
    case FiltrationKind::closure: return "closure";
    case FiltrationKind::quotient: return "quotient";
  }
  return "?";
}

/// Ĩ^n together with how it was obtained.
template <class K>
struct RRValue {
  Ideal<K> ideal;
  /// First k with I^(n+k) : I^k = I^(n+k+1) : I^(k+1).
  int stable_k = 0;
  /// Whether Ĩ^n = I^n.
  bool equals_power = false;
};

/// Ĩ^n as the colon chain I^(n+k) : I^k, stopped at the first k where two
/// consecutive values agree. The chain is increasing, so equal colengths
/// mean equal ideals.
template <class K>
RRValue<K> ratliff_rush(const Ideal<K>& I, int n) {
  if (n < 0) throw InputError("negative power");
  if (n == 0) return {Ideal<K>::unit(I.ring()), 0, true};
  const int kmax = I.ring()->limits().colon_chain_max;
  const Ideal<K> In = I.power(n);
  auto step = [&](int k) { return ideal_colon(I.power(n + k), I.power(k), In); };
  Ideal<K> prev = step(1);
  std::uint64_t prev_len = prev.length().value;
  for (int k = 1; k < kmax; ++k) {
    Ideal<K> next = step(k + 1);
    std::uint64_t len = next.length().value;
    if (len == prev_len) {
      return {prev, k, len == In.length().value};
    }
    prev = std::move(next);
    prev_len = len;
  }
  throw ResourceLimit("Ratliff-Rush colon chain did not stabilize within k = " + std::to_string(kmax));
}

namespace detail {

template <class K>
std::vector<std::vector<int>> exponent_vectors(const Ideal<K>& I) {
  if (!I.is_monomial()) {
    throw Unsupported("integral closure is only computed for monomial ideals of a polynomial ring");
  }
  std::vector<std::vector<int>> pts;
  for (const auto& m : minimalize_monomials(I.monomial_gens())) pts.push_back(m.exponents(I.ring()->nvars()));
  return pts;
}

template <class K>
Ideal<K> ideal_from_points(const RingSpecPtr<K>& ring, const std::vector<std::vector<int>>& pts) {
  std::vector<Monomial> ms;
  for (const auto& p : pts) ms.push_back(Monomial(p));
  return Ideal<K>::from_monomials(ring, minimalize_monomials(std::move(ms)));
}

}  // namespace detail

/// Integral closure of a monomial ideal: the monomials in its Newton polyhedron.
template <class K>
Ideal<K> monomial_closure(const Ideal<K>& I) {
  NewtonPolyhedron np(detail::exponent_vectors(I));
  return detail::ideal_from_points(I.ring(), np.minimal_lattice_points());
}

template <class K>
bool is_integrally_closed_monomial(const Ideal<K>& I) {
  Ideal<K> c = monomial_closure(I);
  return I.contains(c);
}

struct AsymptoticNormality {
  /// I^n is closed for every n in [first_index, bound].
  bool closed_at_bound = false;
  /// Smallest such index, 0 when I^bound itself is not closed.
  int first_index = 0;
  int bound = 0;
  bool normal() const { return first_index == 1; }
};

/// Checks I^n for n = 1..bound, using that the Newton polyhedron of I^n is n
/// times that of I.
template <class K>
AsymptoticNormality is_asymptotically_normal_monomial(const Ideal<K>& I, int bound) {
  if (bound < 1) throw InputError("bound must be positive");
  NewtonPolyhedron np(detail::exponent_vectors(I));
  std::vector<bool> closed(static_cast<std::size_t>(bound) + 1, false);
  for (int n = 1; n <= bound; ++n) {
    Ideal<K> c = detail::ideal_from_points(I.ring(), np.scaled(n).minimal_lattice_points());
    closed[n] = I.power(n).contains(c);
  }
  AsymptoticNormality out;
  out.bound = bound;
  out.closed_at_bound = closed[bound];
  if (out.closed_at_bound) {
    int n = bound;
    while (n > 1 && closed[n - 1]) --n;
    out.first_index = n;
  }
  return out;
}

/// A Hilbert filtration F_0 = R ⊇ F_1 ⊇ ... with memoized members.
template <class K>
class Filtration {
 public:
  using Eval = std::function<Ideal<K>(int)>;

  static Filtration adic(Ideal<K> I) {
    return Filtration(FiltrationKind::adic, I.ring(), I, [I](int n) { return I.power(n); });
  }
  static Filtration ratliff_rush(Ideal<K> I) {
    return Filtration(FiltrationKind::ratliff_rush, I.ring(), I,
                      [I](int n) { return hsamuel::ratliff_rush(I, n).ideal; });
  }
  /// n ↦ closure(I^n), for a monomial ideal I of a polynomial ring.
  static Filtration closure(Ideal<K> I) {
    auto np = std::make_shared<const NewtonPolyhedron>(detail::exponent_vectors(I));
    auto ring = I.ring();
    return Filtration(FiltrationKind::closure, ring, I, [np, ring](int n) {
      return detail::ideal_from_points(ring, np->scaled(n).minimal_lattice_points());
    });
  }
  /// n ↦ F_n + (elems) in R/(elems); elems must lie in F_1.
  static Filtration quotient(const Filtration& f, const std::vector<Poly<K>>& elems) {
    if (elems.empty()) return f;
    Ideal<K> f1 = f.at(1);
    for (const auto& e : elems) {
      if (!f1.contains(e)) throw NotContained(to_string(e) + " is not in the first member of the filtration");
    }
    auto ring = f.ring()->quotient(elems);
    return Filtration(FiltrationKind::quotient, ring, f.base().in_ring(ring),
                      [f, ring](int n) { return f.at(n).in_ring(ring); });
  }

  FiltrationKind kind() const { return s_->kind; }
  const RingSpecPtr<K>& ring() const { return s_->ring; }
  /// The ideal the filtration was built from (in this filtration's ring).
  const Ideal<K>& base() const { return s_->base; }

  Ideal<K> at(int n) const {
    if (n < 0) throw InputError("negative filtration index");
    if (n == 0) return Ideal<K>::unit(s_->ring);
    std::lock_guard<std::mutex> lock(s_->mu);
    auto it = s_->memo.find(n);
    if (it != s_->memo.end()) return it->second;
    Ideal<K> v = s_->eval(n);
    s_->memo.emplace(n, v);
    return v;
  }

  /// F_(i+j) ⊇ F_i F_j for 1 <= i <= j, i + j <= upto.
  bool multiplicative_up_to(int upto) const {
    for (int i = 1; 2 * i <= upto; ++i) {
      for (int j = i; i + j <= upto; ++j) {
        if (!at(i + j).contains(ideal_product(at(i), at(j)))) return false;
      }
    }
    return true;
  }

 private:
  struct State {
    State(FiltrationKind k, RingSpecPtr<K> r, Ideal<K> b, Eval e)
        : kind(k), ring(std::move(r)), base(std::move(b)), eval(std::move(e)) {}
    FiltrationKind kind;
    RingSpecPtr<K> ring;
    Ideal<K> base;
    Eval eval;
    std::mutex mu;
    std::map<int, Ideal<K>> memo;
  };

  Filtration(FiltrationKind kind, RingSpecPtr<K> ring, Ideal<K> base, Eval eval)
      : s_(std::make_shared<State>(kind, std::move(ring), std::move(base), std::move(eval))) {}

  std::shared_ptr<State> s_;
};

}  // namespace hsamuel
