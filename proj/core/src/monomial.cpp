#include "hsamuel/monomial.hpp"

#include <algorithm>

namespace hsamuel {

Monomial::Monomial(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
    throw Unsupported("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < exps.size(); ++i) {
    int e = exps[i];
    if (e < 0) throw InputError("negative exponent");
    if (e > kMaxExponent) overflow();
    w_[i >> 3] |= static_cast<std::uint64_t>(e) << ((i & 7) * 8);
    deg_ += e;
  }
}

Monomial Monomial::variable(int i, int e) {
  std::vector<int> exps(static_cast<std::size_t>(i) + 1, 0);
  exps[i] = e;
  return Monomial(exps);
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> out(nvars);
  for (int i = 0; i < nvars; ++i) out[i] = exponent(i);
  return out;
}

bool Monomial::coprime(const Monomial& v) const {
  for (int i = 0; i < kMaxVars; ++i) {
    if (exponent(i) != 0 && v.exponent(i) != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& v) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = std::max(exponent(i), v.exponent(i));
    r.w_[i >> 3] |= static_cast<std::uint64_t>(e) << ((i & 7) * 8);
    r.deg_ += e;
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& v) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = std::min(exponent(i), v.exponent(i));
    r.w_[i >> 3] |= static_cast<std::uint64_t>(e) << ((i & 7) * 8);
    r.deg_ += e;
  }
  return r;
}

void Monomial::overflow() {
  throw ResourceLimit("exponent exceeds " + std::to_string(kMaxExponent));
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::kDegRevLex:
      return "degrevlex";
    case Kind::kLocalDegRevLex:
      return "local-degrevlex";
    case Kind::kElimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

int TermOrder::compare_block(const Monomial& u, const Monomial& v) const {
  int du = 0, dv = 0;
  for (int i = 0; i < block_; ++i) {
    du += u.exponent(i);
    dv += v.exponent(i);
  }
  if (du != dv) return du > dv ? 1 : -1;
  for (int i = block_ - 1; i >= 0; --i) {
    if (u.exponent(i) != v.exponent(i)) return u.exponent(i) < v.exponent(i) ? 1 : -1;
  }
  int ru = u.degree() - du, rv = v.degree() - dv;
  if (ru != rv) return ru > rv ? 1 : -1;
  int i = u.last_difference(v);
  if (i < 0) return 0;
  return u.exponent(i) < v.exponent(i) ? 1 : -1;
}

int compare_exponents(const std::vector<int>& u, const std::vector<int>& v, const TermOrder& o) {
  if (u.size() != v.size()) {
    throw InputError("arity mismatch: " + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()));
  }
  return o.compare(Monomial(u), Monomial(v));
}

}  // namespace hsamuel
