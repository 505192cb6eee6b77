#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fuzz {

/// Exponent vectors of a random m-primary monomial ideal: one pure power per
/// variable and up to two mixed monomials of degree 1..max_deg.
inline std::vector<std::vector<int>> random_monomial_ideal(std::mt19937_64& rng, int nv, int max_deg) {
  std::vector<std::vector<int>> pts;
  for (int i = 0; i < nv; ++i) {
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    e[static_cast<std::size_t>(i)] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg));
    pts.push_back(e);
  }
  const int extra = static_cast<int>(rng() % 3);
  for (int j = 0; j < extra; ++j) {
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    int left = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg));
    for (int i = 0; i + 1 < nv && left > 0; ++i) {
      int a = static_cast<int>(rng() % static_cast<std::uint64_t>(left + 1));
      e[static_cast<std::size_t>(i)] = a;
      left -= a;
    }
    e[static_cast<std::size_t>(nv - 1)] += left;
    pts.push_back(e);
  }
  return pts;
}

}  // namespace fuzz
