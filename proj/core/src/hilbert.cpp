#include "hsamuel/hilbert.hpp"

#include <gmpxx.h>

#include <sstream>

namespace hsamuel {

std::int64_t binomial(std::int64_t x, int k) {
  if (k < 0) return 0;
  mpz_class num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= mpz_class(static_cast<long>(x - i));
    den *= i + 1;
  }
  mpz_class q = num / den;
  return static_cast<std::int64_t>(q.get_si());
}

std::int64_t hilbert_polynomial(const std::vector<std::int64_t>& e, std::int64_t n) {
  const int d = static_cast<int>(e.size()) - 1;
  std::int64_t v = 0;
  for (int j = 0; j <= d; ++j) {
    std::int64_t term = e[j] * binomial(n + d - j - 1, d - j);
    v += (j % 2 == 0) ? term : -term;
  }
  return v;
}

CoefficientFit fit_coefficients(const std::vector<std::uint64_t>& table, int d, int window) {
  if (d < 0) throw InputError("negative dimension");
  const int last = static_cast<int>(table.size()) - 1;
  if (last < d + window + 1) {
    throw ResourceLimit("table too short to fit the Hilbert polynomial: n_max too small");
  }
  // rows n = last-d..last, unknowns e_0..e_d
  const int m = d + 1;
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1));
  for (int r = 0; r < m; ++r) {
    std::int64_t n = last - d + r;
    for (int j = 0; j <= d; ++j) {
      std::int64_t c = binomial(n + d - j - 1, d - j);
      a[r][j] = (j % 2 == 0) ? c : -c;
    }
    a[r][m] = mpz_class(std::to_string(table[n]));
  }
  for (int c = 0; c < m; ++c) {
    int piv = c;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) throw InternalInconsistency("singular system in the Hilbert polynomial fit");
    std::swap(a[piv], a[c]);
    for (int r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (int j = c; j <= m; ++j) a[r][j] -= f * a[c][j];
    }
  }
  CoefficientFit out;
  for (int j = 0; j < m; ++j) {
    mpq_class v = a[j][m] / a[j][j];
    v.canonicalize();
    if (v.get_den() != 1) {
      throw InternalInconsistency("non-integral Hilbert coefficient e_" + std::to_string(j));
    }
    out.e.push_back(v.get_num().get_si());
  }
  int n0 = last - d;
  while (n0 > 0 &&
         hilbert_polynomial(out.e, n0 - 1) == static_cast<std::int64_t>(table[n0 - 1])) {
    --n0;
  }
  out.postulation = n0;
  if (last - n0 + 1 < d + 1 + window) {
    throw ResourceLimit("Hilbert polynomial not confirmed on the verification window: n_max too small");
  }
  return out;
}

std::vector<std::int64_t> series_numerator(const std::vector<std::uint64_t>& table, int d, int window) {
  std::vector<std::int64_t> a;
  for (std::size_t n = 0; n + 1 < table.size(); ++n) {
    a.push_back(static_cast<std::int64_t>(table[n + 1]) - static_cast<std::int64_t>(table[n]));
  }
  for (int k = 0; k < d; ++k) {
    for (std::size_t i = a.size(); i-- > 1;) a[i] -= a[i - 1];
  }
  int zeros = 0;
  while (!a.empty() && a.back() == 0) {
    a.pop_back();
    ++zeros;
  }
  if (zeros < window || a.empty()) throw ResourceLimit("series not stabilized");
  std::int64_t f1 = 0;
  for (auto v : a) f1 += v;
  if (f1 == 0) throw InternalInconsistency("Hilbert series numerator vanishes at 1");
  return a;
}

std::int64_t e_from_h(const std::vector<std::int64_t>& h, int j) {
  if (j < 0) throw InputError("negative coefficient index");
  std::int64_t v = 0;
  for (std::size_t i = 0; i < h.size(); ++i) v += binomial(static_cast<std::int64_t>(i), j) * h[i];
  return v;
}

std::vector<std::int64_t> power_transform(const std::vector<std::int64_t>& e, int q) {
  if (e.size() != 4) throw Unsupported("the power transformation is implemented for d = 3 only");
  if (q < 1) throw InputError("q must be positive");
  const std::int64_t Q = q;
  return {
      e[0] * Q * Q * Q,
      e[0] * Q * Q * (Q - 1) + e[1] * Q * Q,
      e[0] * binomial(Q, 3) + e[1] * binomial(Q, 2) + e[2] * Q,
      e[3],
  };
}

SeriesPrediction equality_case_series(std::int64_t colength, std::int64_t e0, std::int64_t excess) {
  if (colength < 0 || e0 < 0 || excess < 0) throw InputError("lengths must be non-negative");
  SeriesPrediction p;
  p.h = {colength, e0 - colength - excess, excess};
  p.consistent = p.h[1] >= 0;
  while (p.h.size() > 1 && p.h.back() == 0) p.h.pop_back();
  return p;
}

std::string series_to_string(const std::vector<std::int64_t>& h) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::int64_t c = h[i];
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

void check_hilbert_data(const HilbertData& hd) {
  if (static_cast<int>(hd.e.size()) != hd.d + 1) throw InternalInconsistency("coefficient vector has wrong length");
  for (int j = 0; j <= hd.d; ++j) {
    if (e_from_h(hd.h, j) != hd.e[j]) {
      throw InternalInconsistency("e_" + std::to_string(j) + " from the series numerator (" +
                                  std::to_string(e_from_h(hd.h, j)) + ") differs from the fitted value (" +
                                  std::to_string(hd.e[j]) + ")");
    }
  }
  if (hd.table.size() > 1 && hd.h.front() != static_cast<std::int64_t>(hd.table[1])) {
    throw InternalInconsistency("h_0 differs from the colength of F_1");
  }
  if (hd.e.front() < 1) throw InternalInconsistency("multiplicity is not positive");
}

}  // namespace hsamuel
