#include "hsamuel/monomial_table.hpp"

#include <algorithm>
#include <list>
#include <mutex>

namespace hsamuel {

namespace {

constexpr std::uint64_t kDirectLimit = 1ULL << 24;

void enumerate_degree(int nvars, int d, std::vector<int>& e, int var, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    e[var] = d;
    out.emplace_back(e);
    e[var] = 0;
    return;
  }
  for (int a = d; a >= 0; --a) {
    e[var] = a;
    enumerate_degree(nvars, d - a, e, var + 1, out);
  }
  e[var] = 0;
}

}  // namespace

MonomialTable::MonomialTable(int nvars, int n) : nvars_(nvars), n_(n) {
  if (nvars < 1 || nvars > kMaxVars) throw Unsupported("bad variable count");
  if (n < 1) throw InputError("truncation degree must be positive");
  if (n - 1 > kMaxExponent) throw ResourceLimit("truncation degree exceeds exponent range");
  const TermOrder local = TermOrder::local_degrevlex();
  std::vector<int> e(nvars, 0);
  for (int d = 0; d < n; ++d) {
    start_.push_back(static_cast<std::uint32_t>(monos_.size()));
    std::vector<Monomial> level;
    enumerate_degree(nvars, d, e, 0, level);
    std::sort(level.begin(), level.end(),
              [&](const Monomial& a, const Monomial& b) { return local.compare(a, b) > 0; });
    for (auto& m : level) monos_.push_back(m);
    if (monos_.size() > 50'000'000) throw ResourceLimit("monomial table too large");
  }
  const std::uint32_t m = size();
  deg_.resize(m);
  keys_.resize(m);
  std::uint64_t span = 1;
  bool fits = true;
  for (int v = 0; v < nvars; ++v) {
    span *= static_cast<std::uint64_t>(n);
    if (span > kDirectLimit) {
      fits = false;
      break;
    }
  }
  direct_ = fits;
  if (direct_) lut_.assign(span, kNone);
  for (std::uint32_t i = 0; i < m; ++i) {
    deg_[i] = static_cast<std::uint16_t>(monos_[i].degree());
    keys_[i] = key(monos_[i]);
    if (direct_) {
      lut_[keys_[i]] = i;
    } else {
      map_.emplace(monos_[i], i);
    }
  }
  up_.assign(static_cast<std::size_t>(nvars) * m, kNone);
  down_.assign(static_cast<std::size_t>(nvars) * m, kNone);
  for (int v = 0; v < nvars; ++v) {
    Monomial x = Monomial::variable(v);
    for (std::uint32_t i = 0; i < m; ++i) {
      if (deg_[i] + 1 < n) {
        std::uint32_t j = index(monos_[i] * x);
        up_[static_cast<std::size_t>(v) * m + i] = j;
        down_[static_cast<std::size_t>(v) * m + j] = i;
      }
    }
  }
}

std::shared_ptr<const MonomialTable> MonomialTable::get(int nvars, int n) {
  static std::mutex mu;
  static std::list<std::pair<std::pair<int, int>, std::shared_ptr<const MonomialTable>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (auto it = cache.begin(); it != cache.end(); ++it) {
    if (it->first == std::make_pair(nvars, n)) {
      cache.splice(cache.begin(), cache, it);
      return cache.front().second;
    }
  }
  auto t = std::make_shared<const MonomialTable>(nvars, n);
  cache.emplace_front(std::make_pair(nvars, n), t);
  while (cache.size() > 6) cache.pop_back();
  return t;
}

}  // namespace hsamuel
