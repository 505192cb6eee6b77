#pragma once

// Slow, independent reference computations used to check the engine.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "hsamuel/ideal.hpp"

namespace oracle {

using hsamuel::Monomial;
using hsamuel::Poly;

/// Monomials of degree < N in nv variables, indexed densely.
inline std::map<std::vector<int>, std::size_t> truncation_index(int nv, int N) {
  std::map<std::vector<int>, std::size_t> index;
  std::vector<int> e(static_cast<std::size_t>(nv), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nv) {
      index.emplace(e, index.size());
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[static_cast<std::size_t>(var)] = a;
      self(self, var + 1, left - a);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, N - 1);
  return index;
}

/// Rank by plain Gaussian elimination.
template <class K>
std::size_t rank(const K& k, std::vector<std::vector<typename K::Element>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && k.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    auto inv = k.inv(rows[r][c]);
    for (auto& x : rows[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || k.is_zero(rows[i][c])) continue;
      auto f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = k.sub(rows[i][j], k.mul(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}

template <class K>
std::vector<typename K::Element> dense(const Poly<K>& f, const std::map<std::vector<int>, std::size_t>& index,
                                       int nv) {
  const K& k = f.field();
  std::vector<typename K::Element> row(index.size(), k.zero());
  for (const auto& t : f.terms()) {
    auto it = index.find(t.mono.exponents(nv));
    if (it != index.end()) row[it->second] = k.add(row[it->second], t.coef);
  }
  return row;
}

/// u*g truncated below degree N, for all monomials u of degree < N.
template <class K>
std::vector<std::vector<typename K::Element>> span_rows(const std::vector<Poly<K>>& gens, int N) {
  const auto& ring = gens.front().ring();
  const int nv = ring->nvars();
  auto index = truncation_index(nv, N);
  std::vector<std::vector<typename K::Element>> rows;
  for (const auto& [u, i] : index) {
    Monomial mu(u);
    for (const auto& g : gens) rows.push_back(dense(g.mul_term(mu, ring->field().one()), index, nv));
  }
  return rows;
}

/// dim_k P/(I + m^N).
template <class K>
std::uint64_t truncated_colength(const std::vector<Poly<K>>& gens, int N) {
  const int nv = gens.front().ring()->nvars();
  auto total = truncation_index(nv, N).size();
  return total - rank(gens.front().field(), span_rows(gens, N));
}

/// Local length of P_m/I: equal consecutive truncated colengths give
/// m^N ⊆ I + m^(N+1), hence m^N ⊆ I locally by Nakayama.
template <class K>
std::uint64_t local_length(const std::vector<Poly<K>>& gens, int N_max = 24) {
  std::uint64_t prev = truncated_colength(gens, 1);
  for (int N = 2; N <= N_max; ++N) {
    std::uint64_t cur = truncated_colength(gens, N);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw hsamuel::ResourceLimit("oracle: length did not stabilize");
}

/// f ∈ I + m^N (for N past the stabilization point this is local membership).
template <class K>
bool contains(const std::vector<Poly<K>>& gens, const Poly<K>& f, int N) {
  const int nv = gens.front().ring()->nvars();
  auto rows = span_rows(gens, N);
  const K& k = f.field();
  std::size_t before = rank(k, rows);
  rows.push_back(dense(f, truncation_index(nv, N), nv));
  return rank(k, std::move(rows)) == before;
}

/// Generators of I^n by repeated products.
template <class K>
std::vector<Poly<K>> power_gens(const std::vector<Poly<K>>& gens, int n) {
  std::vector<Poly<K>> out{Poly<K>::from_int(gens.front().ring(), 1)};
  for (int i = 0; i < n; ++i) {
    std::vector<Poly<K>> next;
    for (const auto& a : out) {
      for (const auto& g : gens) next.push_back(a * g);
    }
    out = std::move(next);
  }
  return out;
}

/// Monomial u is integral over the monomial ideal I iff u^k ∈ I^k for some k;
/// k <= k_max is tried.
inline bool integral_by_powers(const std::vector<std::vector<int>>& I, const std::vector<int>& u, int k_max) {
  const std::size_t nv = u.size();
  for (int k = 1; k <= k_max; ++k) {
    // sums of k generators, by dynamic programming over the exponent vectors
    std::vector<std::vector<int>> sums{std::vector<int>(nv, 0)};
    for (int step = 0; step < k; ++step) {
      std::vector<std::vector<int>> next;
      for (const auto& s : sums) {
        for (const auto& g : I) {
          std::vector<int> t(nv);
          for (std::size_t i = 0; i < nv; ++i) t[i] = s[i] + g[i];
          next.push_back(std::move(t));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      sums = std::move(next);
    }
    for (const auto& s : sums) {
      bool divides = true;
      for (std::size_t i = 0; i < nv; ++i) divides = divides && s[i] <= k * u[i];
      if (divides) return true;
    }
  }
  return false;
}

}  // namespace oracle
