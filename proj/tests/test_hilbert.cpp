#include <gtest/gtest.h>

#include <functional>

#include "hsamuel/hilbert.hpp"

using namespace hsamuel;

namespace {

using I32 = Ideal<PrimeField>;

// oracle: C(x, k) by the product formula in floating point (small values)
std::int64_t slow_binomial(std::int64_t x, int k) {
  long double v = 1;
  for (int i = 0; i < k; ++i) v = v * static_cast<long double>(x - i) / static_cast<long double>(i + 1);
  return static_cast<std::int64_t>(v < 0 ? v - 0.5L : v + 0.5L);
}

// oracle: iterated forward differences of the table
std::vector<std::int64_t> differences(std::vector<std::int64_t> t, int times) {
  for (int k = 0; k < times; ++k) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i) t[i] = t[i + 1] - t[i];
    t.pop_back();
  }
  return t;
}

std::vector<std::uint64_t> table_of(const std::function<std::int64_t(std::int64_t)>& f, int len) {
  std::vector<std::uint64_t> t;
  for (int n = 0; n <= len; ++n) t.push_back(static_cast<std::uint64_t>(f(n)));
  return t;
}

}  // namespace

TEST(HilbertOracle, BinomialMatchesProductFormula) {
  for (std::int64_t x = -6; x <= 12; ++x) {
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(binomial(x, k), slow_binomial(x, k)) << x << " " << k;
  }
  EXPECT_EQ(binomial(5, -1), 0);
}

TEST(HilbertOracle, FitAgreesWithFiniteDifferences) {
  // λ(R/m^(kn)) = C(kn + d - 1, d) in d variables
  for (int d = 1; d <= 3; ++d) {
    for (int k = 1; k <= 3; ++k) {
      auto t = table_of([&](std::int64_t n) { return n == 0 ? 0 : binomial(k * n + d - 1, d); }, d + 8);
      auto fit = fit_coefficients(t, d, 3);
      std::vector<std::int64_t> ti(t.begin(), t.end());
      auto top = differences(ti, d);
      EXPECT_EQ(fit.e[0], top.back()) << d << " " << k;
      for (int n = fit.postulation; n < static_cast<int>(t.size()); ++n) {
        EXPECT_EQ(hilbert_polynomial(fit.e, n), static_cast<std::int64_t>(t[static_cast<std::size_t>(n)]));
      }
      if (fit.postulation > 0) {
        EXPECT_NE(hilbert_polynomial(fit.e, fit.postulation - 1), static_cast<std::int64_t>(t[static_cast<std::size_t>(fit.postulation - 1)]));
      }
    }
  }
}

TEST(HilbertOracle, SeriesCoefficientsAgreeWithFit) {
  auto R = make_ring_spec(PrimeField(), {"X", "Y", "Z"}, 3);
  auto I = I32::maximal(R).power(3);
  auto hd = hilbert_data(Filtration<PrimeField>::adic(I));
  EXPECT_EQ(hd.e, (std::vector<std::int64_t>{27, 18, 1, 0}));
  for (int j = 0; j <= 3; ++j) EXPECT_EQ(e_from_h(hd.h, j), hd.e[static_cast<std::size_t>(j)]);
}

TEST(Hilbert, KnownIdeals) {
  auto R2 = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  auto sq = hilbert_data(Filtration<PrimeField>::adic(I32::parse(R2, {"X^2", "X*Y", "Y^2"})));
  EXPECT_EQ(sq.e, (std::vector<std::int64_t>{4, 1, 0}));
  EXPECT_EQ(series_to_string(sq.h), "3 + t");
  auto par = hilbert_data(Filtration<PrimeField>::adic(I32::parse(R2, {"X^2", "Y^3"})));
  EXPECT_EQ(par.e, (std::vector<std::int64_t>{6, 0, 0}));
  EXPECT_EQ(par.postulation, 0);
}

TEST(Hilbert, ClosureFiltrationCoefficients) {
  auto R2 = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  auto a = hilbert_data(Filtration<PrimeField>::closure(I32::parse(R2, {"X^2", "Y^2"})));
  EXPECT_EQ(a.e, (std::vector<std::int64_t>{4, 1, 0}));
  auto b = hilbert_data(Filtration<PrimeField>::closure(I32::parse(R2, {"X^3", "Y^3"})));
  EXPECT_EQ(b.e, (std::vector<std::int64_t>{9, 3, 0}));
}

TEST(Hilbert, RatliffRushFiltrationHasTheSameCoefficients) {
  auto R = make_ring_spec(PrimeField(), {"X", "Y", "Z"}, 3);
  auto I = I32::parse(R, {"X^2 - Y^2", "Y^2 - Z^2", "X*Y", "X*Z", "Y*Z"});
  auto adic = hilbert_data(Filtration<PrimeField>::adic(I));
  auto rr = hilbert_data(Filtration<PrimeField>::ratliff_rush(I));
  EXPECT_EQ(adic.e, rr.e);
  EXPECT_NE(adic.h, rr.h);
}

TEST(Hilbert, PowerTransform) {
  EXPECT_EQ(power_transform({8, 4, 0, 0}, 2), (std::vector<std::int64_t>{64, 48, 4, 0}));
  EXPECT_EQ(power_transform({8, 4, 0, 0}, 1), (std::vector<std::int64_t>{8, 4, 0, 0}));
  EXPECT_THROW(power_transform({4, 1, 0}, 2), Unsupported);
  // against a direct fit of the m^3-adic table in three variables
  auto R = make_ring_spec(PrimeField(), {"X", "Y", "Z"}, 3);
  auto m = I32::maximal(R);
  auto e = hilbert_data(Filtration<PrimeField>::adic(m)).e;
  auto direct = hilbert_data(Filtration<PrimeField>::adic(m.power(3))).e;
  EXPECT_EQ(power_transform(e, 3), direct);
}

TEST(Hilbert, EqualityCaseSeries) {
  auto p = equality_case_series(3, 4, 0);
  EXPECT_EQ(series_to_string(p.h), "3 + t");
  EXPECT_TRUE(p.consistent);
  EXPECT_FALSE(equality_case_series(5, 4, 0).consistent);
  EXPECT_EQ(equality_case_series(31, 76, 2).h, (std::vector<std::int64_t>{31, 43, 2}));
}

TEST(Hilbert, SeriesFormatting) {
  EXPECT_EQ(series_to_string({5, 0, 6, -4, 1}), "5 + 6t^2 - 4t^3 + t^4");
  EXPECT_EQ(series_to_string({1, 3, 0, 3, -1}), "1 + 3t + 3t^3 - t^4");
  EXPECT_EQ(series_to_string({0}), "0");
  EXPECT_EQ(series_to_string({-2, -1}), "-2 - t");
}

TEST(Hilbert, ShortTablesAreResourceLimits) {
  auto t = table_of([](std::int64_t n) { return binomial(n + 1, 2); }, 3);
  EXPECT_THROW(fit_coefficients(t, 2, 3), ResourceLimit);
  auto R2 = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  HilbertOptions opt;
  opt.table_length = 3;
  EXPECT_THROW(hilbert_data(Filtration<PrimeField>::adic(I32::maximal(R2)), opt), ResourceLimit);
}

TEST(Hilbert, ConsistencyCheckCatchesCorruption) {
  HilbertData hd;
  hd.d = 2;
  hd.table = {0, 3, 10, 21};
  hd.e = {4, 1, 0};
  hd.h = {3, 1};
  EXPECT_NO_THROW(check_hilbert_data(hd));
  hd.e[1] = 2;
  EXPECT_THROW(check_hilbert_data(hd), InternalInconsistency);
}

TEST(Hilbert, WindowIsHonoured) {
  auto R2 = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  HilbertOptions opt;
  opt.window = 6;
  auto hd = hilbert_data(Filtration<PrimeField>::adic(I32::parse(R2, {"X^2", "X*Y", "Y^2"})), opt);
  EXPECT_GE(hd.certified_up_to - hd.postulation + 1, hd.d + 1 + opt.window);
}

TEST(Hilbert, UnitIdealIsRejected) {
  auto R = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  EXPECT_THROW(hilbert_data(Filtration<PrimeField>::adic(I32::parse(R, {"1 + X", "Y"}))), InputError);
}
