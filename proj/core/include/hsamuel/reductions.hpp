#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hsamuel/filtration.hpp"

namespace hsamuel {

struct ReductionOptions {
  std::uint64_t seed = 1;
  int r_max = 10;
  int retries = 5;
};

template <class K>
struct ReductionData {
  Ideal<K> J;
  std::vector<Poly<K>> x;
  /// Least n with I^(n+1) = J I^n.
  int r = 0;
  /// λ(I^(n+1)/J I^n) for n = 0..r.
  std::vector<std::uint64_t> lambda_table;
  std::uint64_t seed = 0;
  int attempts = 1;

  /// Σ_{n>=0} λ(I^(n+1)/J I^n).
  std::uint64_t sum() const {
    std::uint64_t s = 0;
    for (auto v : lambda_table) s += v;
    return s;
  }
  /// Σ_{n>=1} n λ(I^(n+1)/J I^n).
  std::uint64_t weighted_sum() const {
    std::uint64_t s = 0;
    for (std::size_t n = 1; n < lambda_table.size(); ++n) s += n * lambda_table[n];
    return s;
  }
  std::uint64_t at(int n) const {
    return n < static_cast<int>(lambda_table.size()) ? lambda_table[n] : 0;
  }
};

/// Dense random k-linear combination of the given polynomials.
template <class K>
Poly<K> random_combination(const std::vector<Poly<K>>& gens, std::mt19937_64& rng) {
  if (gens.empty()) throw InputError("no generators to combine");
  const K& k = gens.front().field();
  Poly<K> f(gens.front().ring());
  for (const auto& g : gens) f += g.scale(k.random(rng));
  return f;
}

namespace detail {

/// The powers of I themselves exceed the limits; new coefficients for J
/// cannot help.
class PowerLimit : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

}  // namespace detail

/// λ(R/J I^n) - λ(R/I^(n+1)) for n = 0..r_max, stopping at the first zero.
/// Returns the reduction number, or nullopt when none is found up to r_max.
template <class K>
std::optional<int> reduction_number(const Ideal<K>& I, const Ideal<K>& J, int r_max,
                                    std::vector<std::uint64_t>* table = nullptr) {
  if (auto bad = I.first_not_contained(J)) {
    throw NotContained("reduction generator " + to_string(*bad) + " is not in the ideal");
  }
  if (table) table->clear();
  for (int n = 0; n <= r_max; ++n) {
    std::uint64_t outer = 0;
    try {
      outer = I.power(n + 1).length().value;
    } catch (const ResourceLimit& e) {
      throw detail::PowerLimit(e.what());
    }
    std::uint64_t inner = ideal_product(J, I.power(n)).length().value;
    if (inner < outer) throw InternalInconsistency("J I^n has smaller colength than I^(n+1)");
    if (table) table->push_back(inner - outer);
    if (inner == outer) return n;
  }
  return std::nullopt;
}

/// The reduction data for a given J = (x_1..x_k).
template <class K>
ReductionData<K> reduction_with(const Ideal<K>& I, std::vector<Poly<K>> x, int r_max) {
  Ideal<K> J(I.ring(), x);
  ReductionData<K> out{J, std::move(x), 0, {}, 0, 1};
  auto r = reduction_number(I, J, r_max, &out.lambda_table);
  if (!r) throw ResourceLimit("reduction not certified; raise --rmax");
  out.r = *r;
  return out;
}

/// d random combinations of the minimal generators of I, certified as a
/// reduction by finding r <= r_max with I^(r+1) = J I^r. Failed attempts are
/// retried with seeds seed+1, seed+2, ...
template <class K>
ReductionData<K> minimal_reduction(const Ideal<K>& I, const ReductionOptions& opt = {}) {
  const int d = I.ring()->dim();
  const auto gens = I.minimal_gens();
  for (int attempt = 0; attempt <= opt.retries; ++attempt) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(attempt);
    std::mt19937_64 rng(seed);
    std::vector<Poly<K>> x;
    for (int i = 0; i < d; ++i) x.push_back(random_combination(gens, rng));
    try {
      auto out = reduction_with(I, std::move(x), opt.r_max);
      out.seed = seed;
      out.attempts = attempt + 1;
      return out;
    } catch (const detail::PowerLimit&) {
      throw;
    } catch (const ResourceLimit&) {
      // not m-primary or no reduction number found: try fresh coefficients
    }
  }
  throw ResourceLimit("reduction not certified; raise --rmax");
}

namespace detail {

/// Basis u - NF_b(u) of b/c, for u standard for c but not for b; both bases
/// at the same truncation degree.
template <class K>
std::vector<SparseRow<K>> quotient_basis(const K& k, const LocalBasis<K>& bb, const LocalBasis<K>& bc) {
  std::vector<SparseRow<K>> out;
  for (std::uint32_t u : bc.standard_monomials()) {
    if (bb.is_standard(u)) continue;
    SparseRow<K> unit;
    unit.idx.push_back(u);
    unit.coef.push_back(k.one());
    SparseRow<K> nf = bb.normal_form(unit);
    SparseRow<K> v = unit;
    for (std::size_t j = 0; j < nf.size(); ++j) {
      v.idx.push_back(nf.idx[j]);
      v.coef.push_back(k.neg(nf.coef[j]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Whether f ∈ I^c with x f ∈ I^n forces f ∈ I^(n-1), i.e. multiplication by
/// x is injective on I^c / I^(n-1) -> R / I^n (n > c).
template <class K>
bool superficial_step(const Ideal<K>& I, const Poly<K>& x, int c, int n) {
  const K& k = I.field();
  Ideal<K> Ic = I.power(c), In1 = I.power(n - 1), In = I.power(n);
  int lv = std::max({Ic.certified_level(), In1.certified_level(), In.certified_level()});
  auto bc = Ic.basis_at(lv);
  auto bn1 = In1.basis_at(lv);
  auto bn = In.basis_at(lv);
  auto elems = detail::quotient_basis(k, *bc, *bn1);
  if (elems.empty()) return true;
  const auto sn = bn->standard_monomials();
  std::vector<std::int64_t> pos(bn->table().size(), -1);
  for (std::size_t i = 0; i < sn.size(); ++i) pos[sn[i]] = static_cast<std::int64_t>(i);
  std::vector<std::vector<typename K::Element>> images;
  for (const auto& v : elems) {
    auto img = bn->normal_form_product(x, v);
    std::vector<typename K::Element> row(sn.size(), k.zero());
    for (std::size_t j = 0; j < img.size(); ++j) row[pos[img.idx[j]]] = img.coef[j];
    images.push_back(std::move(row));
  }
  return matrix_rank(k, std::move(images), sn.size()) == elems.size();
}

template <class K>
struct SuperficialCert {
  Poly<K> x;
  /// (I^n : x) ∩ I^c = I^(n-1) verified for c < n <= n_max.
  int c = 1;
  int n_max = 0;
  std::uint64_t seed = 0;
};

/// The smallest c in 1..c_max for which x passes the test for all c < n <= n_max.
template <class K>
std::optional<int> superficial_witness(const Ideal<K>& I, const Poly<K>& x, int n_max, int c_max = 2) {
  if (!I.contains(x)) throw NotContained(to_string(x) + " is not in the ideal");
  for (int c = 1; c <= c_max; ++c) {
    bool ok = true;
    for (int n = c + 1; n <= n_max && ok; ++n) ok = superficial_step(I, x, c, n);
    if (ok) return c;
  }
  return std::nullopt;
}

template <class K>
SuperficialCert<K> superficial_element(const Ideal<K>& I, std::uint64_t seed, int n_max = 5, int retries = 5) {
  const auto gens = I.minimal_gens();
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    Poly<K> x = random_combination(gens, rng);
    if (auto c = superficial_witness(I, x, n_max)) {
      return {x, *c, n_max, seed + static_cast<std::uint64_t>(attempt)};
    }
  }
  throw ResourceLimit("no superficial element found after retries");
}

enum class DepthMethod { none, vv, vv_cm, huckaba_marley, ratliff_rush };

inline std::string to_string(DepthMethod m) {
  switch (m) {
    case DepthMethod::none: return "none";
    case DepthMethod::vv: return "VV";
    case DepthMethod::vv_cm: return "VV-CM";
    case DepthMethod::huckaba_marley: return "HM";
    case DepthMethod::ratliff_rush: return "RR";
  }
  return "?";
}

/// Bounds for depth gr_I(R). A bound is "exact" when it holds for all n, and
/// "bounded" when it was verified only for n <= certified_up_to.
struct DepthCertificate {
  int d = 0;
  int lower = 0;
  DepthMethod lower_method = DepthMethod::none;
  bool lower_exact = true;
  int upper = 0;
  DepthMethod upper_method = DepthMethod::none;
  /// Largest n for which the partial VV conditions were checked.
  int certified_up_to = 0;
  /// Per level k: whether x_k* passed for every n checked.
  std::vector<bool> levels;

  bool determined() const { return lower == upper && lower_exact; }
};

/// x_k* regular on gr of the image of I in R/(x_1..x_(k-1)), for n <= n_max:
/// λ(R_k/I^(n+1)) = λ(R_(k-1)/I^(n+1)) - λ(R_(k-1)/I^n). Levels pass in order,
/// so the number of passing levels is a lower bound for the depth up to n_max.
/// A ResourceLimit shortens the checked range rather than failing.
template <class K>
std::pair<int, int> vv_levels(const Ideal<K>& I, const std::vector<Poly<K>>& x, int n_max,
                              std::vector<bool>* passed = nullptr) {
  int reached = n_max;
  std::vector<RingSpecPtr<K>> rings{I.ring()};
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::vector<Poly<K>> prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k + 1));
    rings.push_back(I.ring()->quotient(prefix));
  }
  std::vector<Ideal<K>> images;
  for (const auto& r : rings) images.push_back(I.in_ring(r));
  // lengths[k][n] = λ(R_k/I^n)
  std::vector<std::vector<std::uint64_t>> lengths(rings.size(), std::vector<std::uint64_t>{0});
  auto length = [&](std::size_t k, int n) -> std::uint64_t {
    auto& row = lengths[k];
    while (static_cast<int>(row.size()) <= n) {
      row.push_back(images[k].power(static_cast<int>(row.size())).length().value);
    }
    return row[n];
  };
  int depth = 0;
  for (std::size_t k = 1; k < rings.size(); ++k) {
    bool ok = true;
    for (int n = 1; n <= reached && ok; ++n) {
      try {
        ok = length(k, n + 1) + length(k - 1, n) == length(k - 1, n + 1);
      } catch (const ResourceLimit&) {
        reached = n - 1;
        break;
      }
    }
    if (passed) passed->push_back(ok);
    if (!ok) break;
    ++depth;
  }
  return {depth, reached};
}

/// Σ_{n>=0} λ(I^(n+1)/J∩I^(n+1)) and whether J∩I^(n+1) = J I^n for all n.
/// Terms vanish for n >= r since then I^(n+1) = J I^n ⊆ J.
struct IntersectionData {
  std::vector<std::uint64_t> terms;
  bool valabrega_valla = true;
  std::uint64_t sum() const {
    std::uint64_t s = 0;
    for (auto v : terms) s += v;
    return s;
  }
};

template <class K>
IntersectionData intersection_data(const Ideal<K>& I, const ReductionData<K>& red) {
  IntersectionData out;
  for (int n = 0; n < std::max(red.r, 1); ++n) {
    Ideal<K> In1 = I.power(n + 1);
    Ideal<K> JIn = ideal_product(red.J, I.power(n));
    Ideal<K> cap = n == 0 ? red.J : ideal_intersect(red.J, In1, JIn);
    std::uint64_t lcap = cap.length().value;
    std::uint64_t lpow = In1.length().value;
    out.terms.push_back(lcap - lpow);
    if (n > 0 && lcap != JIn.length().value) out.valabrega_valla = false;
  }
  return out;
}

/// J ∩ I² = J I.
template <class K>
bool itoh_huneke_check(const Ideal<K>& I, const Ideal<K>& J) {
  Ideal<K> JI = ideal_product(J, I);
  Ideal<K> cap = ideal_intersect(J, I.power(2), JI);
  return ideal_equal_local(cap, JI);
}

struct RRDepth {
  /// Ĩ^n = I^n for every n <= checked.
  bool positive = true;
  int checked = 0;
  /// First n with Ĩ^n ≠ I^n, 0 if none.
  int first_failure = 0;
};

/// depth gr_I(R) > 0 iff Ĩ^n = I^n for all n; checked for n <= n_max. A
/// failure is a proof of depth 0.
template <class K>
RRDepth rr_depth_positive(const Ideal<K>& I, int n_max) {
  RRDepth out;
  for (int n = 1; n <= n_max; ++n) {
    out.checked = n;
    if (!ratliff_rush(I, n).equals_power) {
      out.positive = false;
      out.first_failure = n;
      break;
    }
  }
  return out;
}

struct DepthOptions {
  int n_max = 0;  // 0: 2r + 3
  int rr_max = 3;
};

/// Combines the partial VV criterion (bounded), the full VV condition for J
/// (exact, Cohen-Macaulay), Huckaba-Marley e_1 = Σ λ(I^(n+1)/JI^n) (exact,
/// depth >= d-1, strict inequality gives depth <= d-2) and Ratliff-Rush
/// closures (a failure proves depth 0).
template <class K>
DepthCertificate depth_certificate(const Ideal<K>& I, const ReductionData<K>& red, std::int64_t e1,
                                   const DepthOptions& opt = {}) {
  const int d = I.ring()->dim();
  DepthCertificate c;
  c.d = d;
  c.upper = d;
  c.lower = 0;
  auto raise_lower = [&](int v, DepthMethod m, bool exact) {
    if (v > c.lower || (v == c.lower && exact && !c.lower_exact)) {
      c.lower = v;
      c.lower_method = m;
      c.lower_exact = exact;
    }
  };
  auto lower_upper = [&](int v, DepthMethod m) {
    if (v < c.upper) {
      c.upper = v;
      c.upper_method = m;
    }
  };

  auto inter = intersection_data(I, red);
  if (inter.valabrega_valla) {
    raise_lower(d, DepthMethod::vv_cm, true);
  } else {
    lower_upper(d - 1, DepthMethod::vv_cm);
  }
  if (d >= 1) {
    if (e1 == static_cast<std::int64_t>(red.sum())) {
      raise_lower(d - 1, DepthMethod::huckaba_marley, true);
    } else {
      lower_upper(d - 2, DepthMethod::huckaba_marley);
    }
  }
  if (c.lower < d) {
    int n_max = opt.n_max > 0 ? opt.n_max : 2 * red.r + 3;
    auto [k, reached] = vv_levels(I, red.x, n_max, &c.levels);
    c.certified_up_to = reached;
    raise_lower(k, DepthMethod::vv, false);
    // a failing level is a witness: for a generic (superficial) sequence,
    // depth >= k forces x_1*..x_k* to be regular
    if (static_cast<int>(c.levels.size()) > k) {
      lower_upper(k, DepthMethod::vv);
    }
  }
  if (c.upper > 0 && !(c.lower >= 1 && c.lower_exact)) {
    auto rr = rr_depth_positive(I, opt.rr_max);
    if (!rr.positive) lower_upper(0, DepthMethod::ratliff_rush);
  }
  if (c.lower > c.upper) {
    throw InternalInconsistency("depth lower bound " + std::to_string(c.lower) + " exceeds upper bound " +
                                std::to_string(c.upper));
  }
  return c;
}

}  // namespace hsamuel
