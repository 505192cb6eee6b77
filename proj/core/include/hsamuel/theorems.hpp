#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hsamuel/hilbert.hpp"
#include "hsamuel/reductions.hpp"

namespace hsamuel {

enum class Hypothesis { holds, fails, assumed, untestable };
enum class Conclusion { holds, fails, inconclusive, not_applicable };

inline std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::holds: return "holds";
    case Hypothesis::fails: return "fails";
    case Hypothesis::assumed: return "assumed-by-flag";
    case Hypothesis::untestable: return "untestable";
  }
  return "?";
}
inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::holds: return "holds";
    case Conclusion::fails: return "fails";
    case Conclusion::inconclusive: return "inconclusive";
    case Conclusion::not_applicable: return "not-applicable";
  }
  return "?";
}

using Quantity = std::variant<std::int64_t, bool, std::string, std::vector<std::int64_t>>;

struct Verdict {
  Verdict() = default;
  explicit Verdict(std::string name) : id(std::move(name)) {}

  std::string id;
  Hypothesis hypothesis = Hypothesis::untestable;
  Conclusion conclusion = Conclusion::not_applicable;
  /// Some part was verified only over a finite range of n.
  bool bounded = false;
  std::vector<std::pair<std::string, Quantity>> quantities;
  std::vector<std::string> notes;

  /// A statement whose hypotheses hold (or are asserted) must not fail.
  bool violation() const {
    return (hypothesis == Hypothesis::holds || hypothesis == Hypothesis::assumed) &&
           conclusion == Conclusion::fails;
  }
  void put(std::string name, Quantity q) { quantities.emplace_back(std::move(name), std::move(q)); }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "northcott",    "e2-upper",  "e2-near-max", "e2-lower-closed", "narita-d2",
      "param-closure", "valla-normal", "e3-nonneg", "e3-zero",         "e4-bound"};
  return ids;
}

struct CheckOptions {
  ReductionOptions reduction;
  HilbertOptions hilbert;
  DepthOptions depth;
  /// The ideal is integrally closed (asserted by the user).
  bool assume_ic = false;
  /// The ideal is normal, i.e. all its powers are integrally closed (asserted).
  bool assume_normal = false;
  /// Powers I^n, n <= power_bound, searched for witnesses and closedness.
  int power_bound = 3;
  /// Range of n for the conclusion of the parameter-ideal closure statement.
  int closure_bound = 4;
};

/// Closedness of an ideal: decided for (locally) monomial ideals of a
/// polynomial ring and for the maximal ideal, otherwise taken from a flag.
enum class Closedness { closed, not_closed, assumed, unknown };

inline std::string to_string(Closedness c) {
  switch (c) {
    case Closedness::closed: return "closed";
    case Closedness::not_closed: return "not-closed";
    case Closedness::assumed: return "assumed";
    case Closedness::unknown: return "unknown";
  }
  return "?";
}

/// The monomial ideal I equals locally, when its standard basis has only
/// monomial-generated initial ideal inside I (polynomial rings only).
template <class K>
std::optional<Ideal<K>> monomial_form(const Ideal<K>& I) {
  if (!I.ring()->is_polynomial_ring()) return std::nullopt;
  if (I.is_monomial()) return I;
  auto leads = I.basis()->leading_monomials();
  for (const auto& m : leads) {
    if (!I.contains(Poly<K>::monomial(I.poly_ring(), m))) return std::nullopt;
  }
  return Ideal<K>::from_monomials(I.ring(), minimalize_monomials(std::move(leads)));
}

template <class K>
bool is_maximal_ideal(const Ideal<K>& I) {
  for (int i = 0; i < I.ring()->nvars(); ++i) {
    if (!I.contains(I.ring()->variable(i))) return false;
  }
  return true;
}

/// Closedness decided without flags.
template <class K>
Closedness tested_closedness(const Ideal<K>& I) {
  if (is_maximal_ideal(I)) return Closedness::closed;
  if (auto m = monomial_form(I)) {
    return is_integrally_closed_monomial(*m) ? Closedness::closed : Closedness::not_closed;
  }
  return Closedness::unknown;
}

inline Hypothesis from_closedness(Closedness c) {
  switch (c) {
    case Closedness::closed: return Hypothesis::holds;
    case Closedness::not_closed: return Hypothesis::fails;
    case Closedness::assumed: return Hypothesis::assumed;
    case Closedness::unknown: return Hypothesis::untestable;
  }
  return Hypothesis::untestable;
}

/// Both hypotheses must hold; the weaker provenance wins.
inline Hypothesis both(Hypothesis a, Hypothesis b) {
  if (a == Hypothesis::fails || b == Hypothesis::fails) return Hypothesis::fails;
  if (a == Hypothesis::untestable || b == Hypothesis::untestable) return Hypothesis::untestable;
  if (a == Hypothesis::assumed || b == Hypothesis::assumed) return Hypothesis::assumed;
  return Hypothesis::holds;
}
/// Either hypothesis suffices; the stronger provenance wins.
inline Hypothesis either(Hypothesis a, Hypothesis b) {
  if (a == Hypothesis::holds || b == Hypothesis::holds) return Hypothesis::holds;
  if (a == Hypothesis::assumed || b == Hypothesis::assumed) return Hypothesis::assumed;
  if (a == Hypothesis::untestable || b == Hypothesis::untestable) return Hypothesis::untestable;
  return Hypothesis::fails;
}

inline Conclusion conclude(bool ok) { return ok ? Conclusion::holds : Conclusion::fails; }

/// Everything the checks need about one ideal, computed on first use.
template <class K>
class Analysis {
 public:
  Analysis(Ideal<K> I, CheckOptions opt) : I_(std::move(I)), opt_(std::move(opt)) {}

  const Ideal<K>& ideal() const { return I_; }
  const CheckOptions& options() const { return opt_; }
  int dim() const { return I_.ring()->dim(); }

  const HilbertData& hilbert() {
    if (!hilbert_) hilbert_ = hilbert_data(Filtration<K>::adic(I_), opt_.hilbert);
    return *hilbert_;
  }
  /// e_j, extended past d through the series numerator.
  std::int64_t e(int j) {
    const auto& hd = hilbert();
    return j <= hd.d ? hd.e[j] : e_from_h(hd.h, j);
  }
  std::int64_t colength() { return static_cast<std::int64_t>(I_.length().value); }

  const ReductionData<K>& reduction() {
    if (!reduction_) reduction_ = minimal_reduction(I_, opt_.reduction);
    return *reduction_;
  }
  const IntersectionData& intersections() {
    if (!intersections_) intersections_ = intersection_data(I_, reduction());
    return *intersections_;
  }
  const DepthCertificate& depth() {
    if (!depth_) depth_ = depth_certificate(I_, reduction(), e(1), opt_.depth);
    return *depth_;
  }

  /// The ring is Cohen-Macaulay: true for polynomial rings, declared otherwise.
  Hypothesis ring_cm() const {
    return I_.ring()->is_polynomial_ring() ? Hypothesis::holds : Hypothesis::assumed;
  }

  Closedness closedness() {
    if (!closed_) {
      Closedness c = tested_closedness(I_);
      if (c == Closedness::unknown && (opt_.assume_ic || opt_.assume_normal)) c = Closedness::assumed;
      closed_ = c;
    }
    return *closed_;
  }
  /// Closedness of I^n without flags.
  Closedness power_closedness(int n) {
    while (static_cast<int>(power_closed_.size()) < n) {
      int k = static_cast<int>(power_closed_.size()) + 1;
      power_closed_.push_back(k == 1 ? tested_closedness(I_) : tested_closedness(I_.power(k)));
    }
    return power_closed_[n - 1];
  }
  /// Normality of I: every I^n closed for n <= power_bound (bounded), or the flag.
  Hypothesis normality(bool* bounded) {
    *bounded = false;
    bool all = true;
    for (int n = 1; n <= opt_.power_bound; ++n) {
      Closedness c = power_closedness(n);
      if (c == Closedness::not_closed) return Hypothesis::fails;
      all = all && c == Closedness::closed;
    }
    if (all) {
      *bounded = true;
      return Hypothesis::holds;
    }
    return opt_.assume_normal ? Hypothesis::assumed : Hypothesis::untestable;
  }
  /// Smallest N <= power_bound with I^n closed for N <= n <= power_bound.
  std::optional<int> asymptotic_index() {
    std::optional<int> first;
    for (int n = opt_.power_bound; n >= 1; --n) {
      if (power_closedness(n) != Closedness::closed) break;
      first = n;
    }
    return first;
  }

 private:
  Ideal<K> I_;
  CheckOptions opt_;
  std::optional<HilbertData> hilbert_;
  std::optional<ReductionData<K>> reduction_;
  std::optional<IntersectionData> intersections_;
  std::optional<DepthCertificate> depth_;
  std::optional<Closedness> closed_;
  std::vector<Closedness> power_closed_;
};

namespace detail {

template <class K>
void put_common(Verdict& v, Analysis<K>& a) {
  v.put("d", static_cast<std::int64_t>(a.dim()));
  v.put("colength", a.colength());
  v.put("e", a.hilbert().e);
}

/// depth gr >= k: holds, fails, or inconclusive from the certificate.
inline Conclusion depth_at_least(const DepthCertificate& c, int k, bool* bounded) {
  if (c.lower >= k) {
    if (!c.lower_exact) *bounded = true;
    return Conclusion::holds;
  }
  if (c.upper < k) return Conclusion::fails;
  return Conclusion::inconclusive;
}

inline void put_depth(Verdict& v, const DepthCertificate& c) {
  v.put("depth_lower", static_cast<std::int64_t>(c.lower));
  v.put("depth_lower_method", to_string(c.lower_method) + (c.lower_exact ? "" : " (bounded)"));
  v.put("depth_upper", static_cast<std::int64_t>(c.upper));
  v.put("depth_upper_method", to_string(c.upper_method));
}

inline std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

/// Minimal reduction of I^n, or nullopt (with a note) when the powers exceed
/// the truncation ceiling.
template <class K>
std::optional<ReductionData<K>> power_reduction(Analysis<K>& a, int n, Verdict& v) {
  if (n == 1) return a.reduction();
  try {
    return minimal_reduction(a.ideal().power(n), a.options().reduction);
  } catch (const ResourceLimit& e) {
    v.bounded = true;
    v.note("powers checked up to I^" + std::to_string(n - 1) + ": " + e.what());
    return std::nullopt;
  }
}

}  // namespace detail

/// λ(R/I) >= e_0 - e_1, with equality iff I² = JI.
template <class K>
Verdict check_northcott(Analysis<K>& a) {
  Verdict v{"northcott"};
  detail::put_common(v, a);
  const auto& red = a.reduction();
  const std::int64_t lam = a.colength(), e0 = a.e(0), e1 = a.e(1);
  v.put("e0_minus_e1", e0 - e1);
  v.put("reduction_number", static_cast<std::int64_t>(red.r));
  v.hypothesis = a.ring_cm();
  const bool bound = lam >= e0 - e1;
  const bool equality_case = (lam == e0 - e1) == (red.r <= 1);
  v.put("inequality", bound);
  v.put("equality_iff_r_le_1", equality_case);
  v.conclusion = conclude(bound && equality_case);
  return v;
}

/// e_2 <= Σ n λ(I^(n+1)/JI^n), with equality iff depth gr >= d-1.
template <class K>
Verdict check_e2_upper(Analysis<K>& a) {
  Verdict v{"e2-upper"};
  detail::put_common(v, a);
  const auto& red = a.reduction();
  const std::int64_t e2 = a.e(2), sum = detail::i64(red.weighted_sum());
  v.put("lambda_table", std::vector<std::int64_t>(red.lambda_table.begin(), red.lambda_table.end()));
  v.put("weighted_sum", sum);
  v.hypothesis = a.ring_cm();
  if (a.dim() < 1) {
    v.conclusion = Conclusion::not_applicable;
    return v;
  }
  const auto& dc = a.depth();
  detail::put_depth(v, dc);
  const bool bound = e2 <= sum;
  v.put("inequality", bound);
  v.put("equality", e2 == sum);
  bool bounded = false;
  Conclusion deep = detail::depth_at_least(dc, a.dim() - 1, &bounded);
  v.bounded = bounded;
  if (!bound) {
    v.conclusion = Conclusion::fails;
  } else if (deep == Conclusion::inconclusive) {
    v.conclusion = Conclusion::inconclusive;
  } else {
    v.conclusion = conclude((e2 == sum) == (deep == Conclusion::holds));
  }
  return v;
}

/// (a) e_2 >= Σ-2 or (b) I closed and e_2 >= Σ-4 give depth gr >= d-2; also
/// e_2 ≠ Σ-1, and e_2 ∉ {Σ-1, Σ-2} for closed I.
template <class K>
Verdict check_e2_near_max(Analysis<K>& a) {
  Verdict v{"e2-near-max"};
  detail::put_common(v, a);
  const auto& red = a.reduction();
  const std::int64_t e2 = a.e(2), sum = detail::i64(red.weighted_sum());
  v.put("weighted_sum", sum);
  const Closedness closed = a.closedness();
  v.put("closedness", to_string(closed));
  const bool branch_a = e2 >= sum - 2;
  const bool branch_b_bound = e2 >= sum - 4;
  v.put("branch_a", branch_a);
  v.put("branch_b_inequality", branch_b_bound);
  Hypothesis ha = both(a.ring_cm(), branch_a ? Hypothesis::holds : Hypothesis::fails);
  Hypothesis hb = both(a.ring_cm(), both(from_closedness(closed),
                                         branch_b_bound ? Hypothesis::holds : Hypothesis::fails));
  v.hypothesis = either(ha, hb);

  // the forbidden values hold unconditionally (closed case: with closedness)
  bool forbidden_ok = e2 != sum - 1;
  bool closed_known = closed == Closedness::closed || closed == Closedness::assumed;
  if (closed_known) forbidden_ok = forbidden_ok && e2 != sum - 2;
  v.put("forbidden_values_avoided", forbidden_ok);
  if (!forbidden_ok) {
    v.hypothesis = closed_known && e2 == sum - 2 ? both(a.ring_cm(), from_closedness(closed)) : a.ring_cm();
    v.conclusion = Conclusion::fails;
    v.note("e_2 takes a value excluded by the near-maximal analysis");
    return v;
  }
  if (v.hypothesis == Hypothesis::fails || v.hypothesis == Hypothesis::untestable) {
    v.conclusion = Conclusion::not_applicable;
    return v;
  }
  const auto& dc = a.depth();
  detail::put_depth(v, dc);
  bool bounded = false;
  v.conclusion = detail::depth_at_least(dc, a.dim() - 2, &bounded);
  v.bounded = bounded;
  return v;
}

/// For closed I: e_2 >= λ(I²/JI); the conditions e_2 = λ(I²/JI), I³ = JI²
/// and λ(R/I) = e_0 - e_1 + λ(I²/JI) are equivalent and force gr to be
/// Cohen-Macaulay with the equality-case series.
template <class K>
Verdict check_e2_lower_closed(Analysis<K>& a) {
  Verdict v{"e2-lower-closed"};
  detail::put_common(v, a);
  const Closedness closed = a.closedness();
  v.put("closedness", to_string(closed));
  v.hypothesis = both(a.ring_cm(), from_closedness(closed));
  if (v.hypothesis == Hypothesis::fails || v.hypothesis == Hypothesis::untestable) {
    v.conclusion = Conclusion::not_applicable;
    if (v.hypothesis == Hypothesis::untestable) v.note("closedness is not decidable here; pass --assume-ic to assert it");
    return v;
  }
  const auto& red = a.reduction();
  const std::int64_t e0 = a.e(0), e1 = a.e(1), e2 = a.e(2), lam = a.colength();
  const std::int64_t l2 = detail::i64(red.at(1));
  v.put("lambda_I2_JI", l2);
  const bool inequality = e2 >= l2;
  const bool ca = e2 == l2;
  const bool cb = red.at(2) == 0;
  const bool cc = lam == e0 - e1 + l2;
  v.put("inequality", inequality);
  v.put("e2_equals_lambda", ca);
  v.put("I3_equals_JI2", cb);
  v.put("colength_identity", cc);
  bool ok = inequality && ca == cb && cb == cc;
  if (ok && ca) {
    auto pred = equality_case_series(lam, e0, l2);
    v.put("predicted_series", series_to_string(pred.h));
    v.put("series", series_to_string(a.hilbert().h));
    const auto& dc = a.depth();
    detail::put_depth(v, dc);
    bool cm = dc.lower == a.dim() && dc.lower_exact;
    v.put("cohen_macaulay", cm);
    ok = pred.consistent && pred.h == a.hilbert().h && cm;
  }
  v.conclusion = conclude(ok);
  return v;
}

/// d = 2: e_2 = 0 iff I^n has reduction number at most one for some n.
template <class K>
Verdict check_narita_d2(Analysis<K>& a) {
  Verdict v{"narita-d2"};
  if (a.dim() != 2) {
    v.hypothesis = Hypothesis::fails;
    v.conclusion = Conclusion::not_applicable;
    v.note("dimension is not two");
    return v;
  }
  detail::put_common(v, a);
  v.hypothesis = a.ring_cm();
  const std::int64_t e2 = a.e(2);
  std::optional<int> witness;
  std::vector<std::int64_t> numbers;
  for (int n = 1; n <= a.options().power_bound && !witness; ++n) {
    auto red = detail::power_reduction(a, n, v);
    if (!red) break;
    numbers.push_back(red->r);
    if (red->r <= 1) witness = n;
  }
  v.put("reduction_numbers_of_powers", numbers);
  v.put("witness", static_cast<std::int64_t>(witness.value_or(0)));
  if (e2 == 0 && !witness) {
    v.conclusion = Conclusion::inconclusive;
    v.bounded = true;
    v.note("e_2 = 0 but no power up to the bound has reduction number one");
  } else if (e2 != 0 && witness) {
    v.conclusion = Conclusion::fails;
  } else {
    v.conclusion = Conclusion::holds;
    v.bounded = !witness;
  }
  return v;
}

/// For a parameter ideal I with λ(R/Ī) = ē_0 - ē_1 + ē_2: closure(I^(n+2)) = I^n closure(I²).
template <class K>
Verdict check_param_closure(Analysis<K>& a) {
  Verdict v{"param-closure"};
  const Ideal<K>& I = a.ideal();
  v.put("d", static_cast<std::int64_t>(a.dim()));
  if (!I.is_monomial()) {
    v.hypothesis = Hypothesis::untestable;
    v.conclusion = Conclusion::not_applicable;
    v.note("closures are computed for monomial ideals of a polynomial ring only");
    return v;
  }
  const auto gens = I.minimal_gens();
  if (static_cast<int>(gens.size()) != a.dim()) {
    v.hypothesis = Hypothesis::fails;
    v.conclusion = Conclusion::not_applicable;
    v.note("not generated by a system of parameters");
    return v;
  }
  auto cf = Filtration<K>::closure(I);
  auto hd = hilbert_data(cf, a.options().hilbert);
  auto ebar = [&](int j) { return j <= hd.d ? hd.e[j] : e_from_h(hd.h, j); };
  const std::int64_t lam = static_cast<std::int64_t>(cf.at(1).length().value);
  v.put("closure_colength", lam);
  v.put("ebar", hd.e);
  const bool hyp = lam == ebar(0) - ebar(1) + ebar(2);
  v.hypothesis = hyp ? Hypothesis::holds : Hypothesis::fails;
  if (!hyp) {
    v.conclusion = Conclusion::not_applicable;
    return v;
  }
  bool ok = true;
  const Ideal<K> c2 = cf.at(2);
  for (int n = 0; n <= a.options().closure_bound && ok; ++n) {
    ok = ideal_equal_local(cf.at(n + 2), ideal_product(I.power(n), c2));
  }
  v.put("checked_up_to", static_cast<std::int64_t>(a.options().closure_bound));
  v.bounded = true;
  v.conclusion = conclude(ok);
  return v;
}

/// Normal I: λ(R/I) = e_0 - e_1 + e_2, I³ = JI² and e_2 = λ(I²/JI) are
/// equivalent and force gr to be Cohen-Macaulay with the equality-case series.
template <class K>
Verdict check_valla_normal(Analysis<K>& a) {
  Verdict v{"valla-normal"};
  detail::put_common(v, a);
  bool bounded = false;
  Hypothesis normal = a.normality(&bounded);
  v.hypothesis = both(a.ring_cm(), normal);
  v.bounded = bounded;
  if (v.hypothesis == Hypothesis::fails || v.hypothesis == Hypothesis::untestable) {
    v.conclusion = Conclusion::not_applicable;
    if (v.hypothesis == Hypothesis::untestable) v.note("normality is not decidable here; pass --assume-normal to assert it");
    return v;
  }
  const auto& red = a.reduction();
  const std::int64_t e0 = a.e(0), e1 = a.e(1), e2 = a.e(2), lam = a.colength();
  const std::int64_t l2 = detail::i64(red.at(1));
  const bool ca = lam == e0 - e1 + e2;
  const bool cb = red.at(2) == 0;
  const bool cc = e2 == l2;
  v.put("colength_identity", ca);
  v.put("I3_equals_JI2", cb);
  v.put("e2_equals_lambda", cc);
  bool ok = ca == cb && cb == cc;
  if (ok && ca) {
    auto pred = equality_case_series(lam, e0, l2);
    v.put("predicted_series", series_to_string(pred.h));
    v.put("series", series_to_string(a.hilbert().h));
    const auto& dc = a.depth();
    detail::put_depth(v, dc);
    bool cm = dc.lower == a.dim() && dc.lower_exact;
    v.put("cohen_macaulay", cm);
    ok = pred.consistent && pred.h == a.hilbert().h && cm;
  }
  v.conclusion = conclude(ok);
  return v;
}

/// d = 3, I^q closed for some q >= n(I): e_3 >= 0, through
/// e_3 = ε_2 - ε_1 + ε_0 - λ(R/I^q).
template <class K>
Verdict check_e3_nonneg(Analysis<K>& a) {
  Verdict v{"e3-nonneg"};
  if (a.dim() != 3) {
    v.hypothesis = Hypothesis::fails;
    v.conclusion = Conclusion::not_applicable;
    v.note("dimension is not three");
    return v;
  }
  detail::put_common(v, a);
  const auto& hd = a.hilbert();
  v.put("postulation", static_cast<std::int64_t>(hd.postulation));
  const int q0 = std::max(1, hd.postulation);
  std::optional<int> q;
  Hypothesis hyp = Hypothesis::untestable;
  for (int c = q0; c <= q0 + a.options().power_bound - 1 && !q; ++c) {
    if (a.power_closedness(c) == Closedness::closed) {
      q = c;
      hyp = Hypothesis::holds;
    }
  }
  if (!q && (a.options().assume_normal)) {
    q = q0;
    hyp = Hypothesis::assumed;
  }
  v.hypothesis = both(a.ring_cm(), hyp);
  if (!q) {
    v.put("e3", a.e(3));
    v.conclusion = Conclusion::not_applicable;
    v.note("no power I^q with q >= n(I) is known to be integrally closed");
    return v;
  }
  v.put("q", static_cast<std::int64_t>(*q));
  auto eps = power_transform(hd.e, *q);
  v.put("epsilon", eps);
  auto direct = hilbert_data(Filtration<K>::adic(a.ideal().power(*q)), a.options().hilbert);
  v.put("epsilon_direct", direct.e);
  const std::int64_t lq = static_cast<std::int64_t>(a.ideal().power(*q).length().value);
  v.put("colength_of_power", lq);
  const std::int64_t identity = eps[2] - eps[1] + eps[0] - lq;
  v.put("identity_value", identity);
  const bool ok = eps == direct.e && identity == hd.e[3] && hd.e[3] >= 0;
  v.conclusion = conclude(ok);
  return v;
}

/// d = 3, I asymptotically normal: e_3 = 0 iff r(I^n) <= 2 for some n. Also
/// records e_2(I^n) for n >= 2.
template <class K>
Verdict check_e3_zero(Analysis<K>& a) {
  Verdict v{"e3-zero"};
  if (a.dim() != 3) {
    v.hypothesis = Hypothesis::fails;
    v.conclusion = Conclusion::not_applicable;
    v.note("dimension is not three");
    return v;
  }
  detail::put_common(v, a);
  auto first = a.asymptotic_index();
  Hypothesis hyp;
  if (first) {
    hyp = Hypothesis::holds;
    v.bounded = true;
    v.put("closed_from", static_cast<std::int64_t>(*first));
  } else if (a.options().assume_normal) {
    hyp = Hypothesis::assumed;
  } else {
    bool any_open = false;
    for (int n = 1; n <= a.options().power_bound; ++n) {
      any_open = any_open || a.power_closedness(n) == Closedness::not_closed;
    }
    hyp = Hypothesis::untestable;
    if (any_open && a.power_closedness(a.options().power_bound) == Closedness::not_closed) {
      v.note("the largest checked power is not integrally closed");
    }
  }
  v.hypothesis = both(a.ring_cm(), hyp);
  const std::int64_t e3 = a.e(3);
  std::vector<std::int64_t> e2_powers;
  for (int n = 2; n <= a.options().power_bound; ++n) e2_powers.push_back(power_transform(a.hilbert().e, n)[2]);
  v.put("e2_of_powers_from_2", e2_powers);
  bool all_positive = true;
  for (auto x : e2_powers) all_positive = all_positive && x > 0;
  v.put("e2_of_powers_positive", all_positive);
  if (!all_positive) v.note("e_2(I^n) > 0 for n >= 2 does not hold on this instance (recorded only)");
  if (v.hypothesis == Hypothesis::fails || v.hypothesis == Hypothesis::untestable) {
    v.conclusion = Conclusion::not_applicable;
    return v;
  }
  std::optional<int> witness;
  std::vector<std::int64_t> numbers;
  for (int n = 1; n <= a.options().power_bound && !witness; ++n) {
    auto red = detail::power_reduction(a, n, v);
    if (!red) break;
    numbers.push_back(red->r);
    if (red->r <= 2) witness = n;
  }
  v.put("reduction_numbers_of_powers", numbers);
  v.put("witness", static_cast<std::int64_t>(witness.value_or(0)));
  if (e3 == 0 && !witness) {
    v.conclusion = Conclusion::inconclusive;
    v.bounded = true;
  } else if (e3 != 0 && witness) {
    v.conclusion = Conclusion::fails;
  } else {
    v.conclusion = Conclusion::holds;
    if (!witness) v.bounded = true;
  }
  return v;
}

/// d = 4: e_4 <= Σ_{n>=4} C(n-1, 3) λ(I^(nN)/J I^(nN-N)) for J a minimal
/// reduction of I^N, N = 1..power_bound.
template <class K>
Verdict check_e4_bound(Analysis<K>& a) {
  Verdict v{"e4-bound"};
  if (a.dim() != 4) {
    v.hypothesis = Hypothesis::fails;
    v.conclusion = Conclusion::not_applicable;
    v.note("dimension is not four");
    return v;
  }
  detail::put_common(v, a);
  auto first = a.asymptotic_index();
  Hypothesis hyp = first ? Hypothesis::holds : (a.options().assume_normal ? Hypothesis::assumed : Hypothesis::untestable);
  v.bounded = first.has_value();
  v.hypothesis = both(a.ring_cm(), hyp);
  if (v.hypothesis == Hypothesis::fails || v.hypothesis == Hypothesis::untestable) {
    v.conclusion = Conclusion::not_applicable;
    return v;
  }
  const int N = first.value_or(1);
  v.put("N", static_cast<std::int64_t>(N));
  auto red = N == 1 ? a.reduction() : minimal_reduction(a.ideal().power(N), a.options().reduction);
  std::int64_t rhs = 0;
  for (int n = 4; n - 1 < static_cast<int>(red.lambda_table.size()); ++n) {
    rhs += binomial(n - 1, 3) * detail::i64(red.lambda_table[n - 1]);
  }
  const std::int64_t e4 = a.e(4);
  v.put("e4", e4);
  v.put("rhs", rhs);
  v.conclusion = conclude(e4 <= rhs);
  return v;
}

template <class K>
Verdict check_theorem_unguarded(Analysis<K>& a, const std::string& id) {
  if (id == "northcott") return check_northcott(a);
  if (id == "e2-upper") return check_e2_upper(a);
  if (id == "e2-near-max") return check_e2_near_max(a);
  if (id == "e2-lower-closed") return check_e2_lower_closed(a);
  if (id == "narita-d2") return check_narita_d2(a);
  if (id == "param-closure") return check_param_closure(a);
  if (id == "valla-normal") return check_valla_normal(a);
  if (id == "e3-nonneg") return check_e3_nonneg(a);
  if (id == "e3-zero") return check_e3_zero(a);
  if (id == "e4-bound") return check_e4_bound(a);
  throw InputError("unknown theorem id '" + id + "'");
}

/// A check that runs into a resource limit is reported as inconclusive.
template <class K>
Verdict check_theorem(Analysis<K>& a, const std::string& id) {
  try {
    return check_theorem_unguarded(a, id);
  } catch (const ResourceLimit& e) {
    Verdict v{id};
    v.hypothesis = Hypothesis::untestable;
    v.conclusion = Conclusion::inconclusive;
    v.bounded = true;
    v.note(e.what());
    return v;
  }
}

template <class K>
std::vector<Verdict> check_all(Analysis<K>& a) {
  std::vector<Verdict> out;
  for (const auto& id : theorem_ids()) out.push_back(check_theorem(a, id));
  return out;
}

}  // namespace hsamuel
