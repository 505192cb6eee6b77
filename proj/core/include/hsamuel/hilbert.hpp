#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsamuel/filtration.hpp"

namespace hsamuel {

/// Generalized binomial coefficient C(x, k) for any integer x and k >= 0.
std::int64_t binomial(std::int64_t x, int k);

/// Σ_j (-1)^j e_j C(n+d-j-1, d-j), with d = e.size() - 1.
std::int64_t hilbert_polynomial(const std::vector<std::int64_t>& e, std::int64_t n);

struct CoefficientFit {
  std::vector<std::int64_t> e;
  /// Smallest n0 with table(n) = P(n) for every tabulated n >= n0.
  int postulation = 0;
};

/// Fits e_0..e_d to the last d+1 entries of table (table[n] = λ(R/F_n)) and
/// walks back to the postulation number. At least `window` entries beyond the
/// d+1 used for the fit must agree, otherwise ResourceLimit.
CoefficientFit fit_coefficients(const std::vector<std::uint64_t>& table, int d, int window = 3);

/// Numerator of the Hilbert series: the d-th difference of the first-difference
/// series with its zero tail trimmed. Requires `window` trailing zeros.
std::vector<std::int64_t> series_numerator(const std::vector<std::uint64_t>& table, int d, int window = 3);

/// f^(j)(1)/j! = Σ_i C(i, j) h_i.
std::int64_t e_from_h(const std::vector<std::int64_t>& h, int j);

/// Coefficients (ε_0..ε_3) of the I^q-adic filtration in dimension 3.
std::vector<std::int64_t> power_transform(const std::vector<std::int64_t>& e, int q);

/// The numerator forced in the equality case for integrally closed ideals:
/// λ(R/I) + (e_0 - λ(R/I) - λ(I²/JI)) t + λ(I²/JI) t².
struct SeriesPrediction {
  std::vector<std::int64_t> h;
  /// False when the middle coefficient is negative, which means the
  /// hypotheses cannot hold for these inputs.
  bool consistent = true;
};
SeriesPrediction equality_case_series(std::int64_t colength, std::int64_t e0, std::int64_t excess);

/// Polynomial in t printed as "5 + 6t^2 - 4t^3 + t^4".
std::string series_to_string(const std::vector<std::int64_t>& h);

struct HilbertData {
  int d = 0;
  /// table[n] = λ(R/F_n) for n = 0..certified_up_to.
  std::vector<std::uint64_t> table;
  std::vector<std::int64_t> e;
  std::vector<std::int64_t> h;
  int postulation = 0;
  int certified_up_to = 0;
};

struct HilbertOptions {
  int window = 3;
  /// Fixed table length (largest n); 0 means grow until the fit and the
  /// series are both confirmed on `window` extra values.
  int table_length = 0;
  /// Ceiling for the adaptive table length.
  int max_length = 40;
};

/// Checks the identities tying the table, e and h together; throws
/// InternalInconsistency on failure.
void check_hilbert_data(const HilbertData& hd);

/// λ(R/F_n) for n = 0..n_max.
template <class K>
std::vector<std::uint64_t> hs_table(const Filtration<K>& f, int n_max) {
  std::vector<std::uint64_t> t{0};
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t v = f.at(n).length().value;
    if (v <= t.back()) {
      throw InternalInconsistency("Hilbert-Samuel table is not strictly increasing at n = " + std::to_string(n));
    }
    t.push_back(v);
  }
  return t;
}

template <class K>
HilbertData hilbert_data(const Filtration<K>& f, const HilbertOptions& opt = {}) {
  if (f.at(1).is_unit_generated()) throw InputError("the unit ideal has no Hilbert-Samuel function");
  HilbertData hd;
  hd.d = f.ring()->dim();
  const int d = hd.d;
  auto attempt = [&](int len) -> bool {
    while (static_cast<int>(hd.table.size()) <= len) {
      if (hd.table.empty()) {
        hd.table.push_back(0);
        continue;
      }
      int n = static_cast<int>(hd.table.size());
      std::uint64_t v = f.at(n).length().value;
      if (v <= hd.table.back()) {
        throw InternalInconsistency("Hilbert-Samuel table is not strictly increasing at n = " +
                                    std::to_string(n));
      }
      hd.table.push_back(v);
    }
    try {
      hd.h = series_numerator(hd.table, d, opt.window);
      auto fit = fit_coefficients(hd.table, d, opt.window);
      hd.e = fit.e;
      hd.postulation = fit.postulation;
    } catch (const ResourceLimit&) {
      return false;
    }
    hd.certified_up_to = len;
    return true;
  };
  if (opt.table_length > 0) {
    if (!attempt(opt.table_length)) {
      throw ResourceLimit("table length " + std::to_string(opt.table_length) +
                          " is too short to confirm the Hilbert polynomial; raise --table");
    }
  } else {
    int len = d + opt.window + 1;
    while (!attempt(len)) {
      if (len >= opt.max_length) {
        throw ResourceLimit("Hilbert series not stabilized by n = " + std::to_string(len) + "; raise --table");
      }
      ++len;
    }
  }
  check_hilbert_data(hd);
  return hd;
}

}  // namespace hsamuel
