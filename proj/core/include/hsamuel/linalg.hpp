#pragma once

#include <cstddef>
#include <vector>

namespace hsamuel {

/// Basis of the left kernel {a : sum_i a_i * rows[i] = 0} of a dense matrix,
/// by Gaussian elimination on [rows | I].
template <class K>
std::vector<std::vector<typename K::Element>> left_kernel(
    const K& k, std::vector<std::vector<typename K::Element>> rows, std::size_t cols) {
  using E = typename K::Element;
  const std::size_t r = rows.size();
  std::vector<std::vector<E>> comb(r, std::vector<E>(r, k.zero()));
  for (std::size_t i = 0; i < r; ++i) comb[i][i] = k.one();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < r; ++c) {
    std::size_t piv = top;
    while (piv < r && k.is_zero(rows[piv][c])) ++piv;
    if (piv == r) continue;
    std::swap(rows[piv], rows[top]);
    std::swap(comb[piv], comb[top]);
    E inv = k.inv(rows[top][c]);
    for (std::size_t i = top + 1; i < r; ++i) {
      if (k.is_zero(rows[i][c])) continue;
      E f = k.mul(rows[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        if (!k.is_zero(rows[top][j])) k.sub_mul(rows[i][j], f, rows[top][j]);
      }
      for (std::size_t j = 0; j < r; ++j) {
        if (!k.is_zero(comb[top][j])) k.sub_mul(comb[i][j], f, comb[top][j]);
      }
    }
    ++top;
  }
  std::vector<std::vector<E>> out(comb.begin() + static_cast<std::ptrdiff_t>(top), comb.end());
  return out;
}

/// Rank of a dense matrix.
template <class K>
std::size_t matrix_rank(const K& k, std::vector<std::vector<typename K::Element>> rows,
                        std::size_t cols) {
  using E = typename K::Element;
  const std::size_t r = rows.size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < r; ++c) {
    std::size_t piv = top;
    while (piv < r && k.is_zero(rows[piv][c])) ++piv;
    if (piv == r) continue;
    std::swap(rows[piv], rows[top]);
    E inv = k.inv(rows[top][c]);
    for (std::size_t i = top + 1; i < r; ++i) {
      if (k.is_zero(rows[i][c])) continue;
      E f = k.mul(rows[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        if (!k.is_zero(rows[top][j])) k.sub_mul(rows[i][j], f, rows[top][j]);
      }
    }
    ++top;
  }
  return top;
}

}  // namespace hsamuel
