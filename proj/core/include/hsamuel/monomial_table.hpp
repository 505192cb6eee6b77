#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hsamuel/monomial.hpp"

namespace hsamuel {

/// All monomials of degree < N in n variables, indexed in decreasing local
/// degrevlex order: index 0 is 1, lower degrees come first and each degree
/// occupies a contiguous range. Provides O(1) index lookup and
/// multiplication/division by a variable.
class MonomialTable {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  MonomialTable(int nvars, int n);

  /// Shared instance; tables are immutable and cached by (nvars, N).
  static std::shared_ptr<const MonomialTable> get(int nvars, int n);

  int nvars() const { return nvars_; }
  int bound() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(monos_.size()); }
  const Monomial& mono(std::uint32_t i) const { return monos_[i]; }
  int degree(std::uint32_t i) const { return deg_[i]; }
  /// First index of degree d (size() when d >= N).
  std::uint32_t degree_start(int d) const { return d >= n_ ? size() : start_[d]; }

  /// kNone when deg(m) >= N.
  std::uint32_t index(const Monomial& m) const {
    if (m.degree() >= n_) return kNone;
    if (direct_) return lut_[key(m)];
    auto it = map_.find(m);
    return it == map_.end() ? kNone : it->second;
  }
  /// Index of w*mono(j) given wkey = key(w); kNone when the degree reaches N.
  std::uint32_t product(const Monomial& w, std::uint64_t wkey, std::uint32_t j) const {
    if (w.degree() + deg_[j] >= n_) return kNone;
    if (direct_) return lut_[wkey + keys_[j]];
    return map_.find(w * monos_[j])->second;
  }
  bool direct() const { return direct_; }
  std::uint64_t key(const Monomial& m) const {
    std::uint64_t k = 0;
    for (int v = nvars_ - 1; v >= 0; --v) k = k * static_cast<std::uint64_t>(n_) + m.exponent(v);
    return k;
  }

  std::uint32_t up(int var, std::uint32_t i) const { return up_[static_cast<std::size_t>(var) * size() + i]; }
  std::uint32_t down(int var, std::uint32_t i) const { return down_[static_cast<std::size_t>(var) * size() + i]; }

 private:
  int nvars_;
  int n_;
  bool direct_ = false;
  std::vector<Monomial> monos_;
  std::vector<std::uint16_t> deg_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> lut_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> map_;
  std::vector<std::uint32_t> up_;
  std::vector<std::uint32_t> down_;
};

}  // namespace hsamuel
