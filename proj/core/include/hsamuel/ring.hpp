#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hsamuel/poly.hpp"
#include "hsamuel/poly_io.hpp"

namespace hsamuel {

/// Ceilings shared by every computation in one ring.
struct Limits {
  /// Largest truncation degree N tried when certifying a local length.
  int truncation_max = 40;
  /// Largest k in the Ratliff-Rush colon chain I^(n+k) : I^k.
  int colon_chain_max = 12;
};

/// P = k[vars] with a defining ideal F, localized at the origin; `dim` is the
/// declared Krull dimension of R = (P/F)_m.
template <class K>
class RingSpec {
 public:
  RingSpec(RingPtr<K> ring, std::vector<Poly<K>> defining, int dim, Limits limits = {})
      : ring_(std::move(ring)), defining_(), dim_(dim), limits_(limits) {
    if (dim < 0) throw InputError("dimension must be non-negative");
    for (auto& f : defining) {
      f.check_ring(Poly<K>(ring_));
      if (!ring_->field().is_zero(f.constant_coef())) {
        throw InputError("defining polynomial " + to_string(f) +
                         " has a nonzero constant term, so the origin is not on the variety");
      }
      if (!f.is_zero()) defining_.push_back(f);
    }
    if (limits_.truncation_max < 2) throw InputError("truncation ceiling must be at least 2");
  }

  const RingPtr<K>& poly_ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  int nvars() const { return ring_->nvars(); }
  const std::vector<Poly<K>>& defining() const { return defining_; }
  int dim() const { return dim_; }
  const Limits& limits() const { return limits_; }
  bool is_polynomial_ring() const { return defining_.empty(); }

  Poly<K> variable(int i) const { return Poly<K>::variable(ring_, i); }
  Poly<K> parse(std::string_view text) const { return parse_poly(ring_, text); }

  /// R/(elems) with declared dimension dim - |elems| (elems assumed part of a
  /// system of parameters).
  std::shared_ptr<const RingSpec> quotient(const std::vector<Poly<K>>& elems) const {
    std::vector<Poly<K>> f = defining_;
    for (const auto& e : elems) f.push_back(e);
    int d = dim_ - static_cast<int>(elems.size());
    return std::make_shared<const RingSpec>(ring_, std::move(f), d < 0 ? 0 : d, limits_);
  }
  std::shared_ptr<const RingSpec> with_limits(Limits l) const {
    return std::make_shared<const RingSpec>(ring_, defining_, dim_, l);
  }

 private:
  RingPtr<K> ring_;
  std::vector<Poly<K>> defining_;
  int dim_;
  Limits limits_;
};

template <class K>
using RingSpecPtr = std::shared_ptr<const RingSpec<K>>;

template <class K>
RingSpecPtr<K> make_ring_spec(K field, std::vector<std::string> vars, int dim,
                              const std::vector<std::string>& defining = {}, Limits limits = {}) {
  RingPtr<K> ring = make_ring(std::move(field), std::move(vars));
  std::vector<Poly<K>> f;
  for (const auto& s : defining) f.push_back(parse_poly(ring, s));
  return std::make_shared<const RingSpec<K>>(ring, std::move(f), dim, limits);
}

}  // namespace hsamuel
