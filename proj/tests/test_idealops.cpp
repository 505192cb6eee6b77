#include <gtest/gtest.h>

#include <random>

#include "hsamuel/groebner.hpp"
#include "hsamuel/ideal.hpp"
#include "oracles.hpp"

using namespace hsamuel;

namespace {

using I32 = Ideal<PrimeField>;

RingSpecPtr<PrimeField> xyz() { return make_ring_spec(PrimeField(), {"X", "Y", "Z"}, 3); }

const std::vector<std::vector<std::string>>& samples() {
  static const std::vector<std::vector<std::string>> s{
      {"X^2 - Y^2", "Y^2 - Z^2", "X*Y", "X*Z", "Y*Z"},
      {"X^2 + Y^3", "Y^2 + Z^3", "Z^2 + X^3"},
      {"X - Y^2", "Y - Z^2", "Z^3"},
      {"X^3", "X*Y^2 + Z^3", "Y^3", "Z^4 + X*Y*Z"},
      {"X^2 + X*Y*Z", "Y^2 - Z^3", "X*Z + Y^3", "Z^4"},
  };
  return s;
}

}  // namespace

TEST(IdealOracle, LengthMatchesLinearAlgebra) {
  auto R = xyz();
  for (const auto& g : samples()) {
    auto I = I32::parse(R, g);
    EXPECT_EQ(I.length().value, oracle::local_length(I.gens())) << g.front();
  }
}

TEST(IdealOracle, LengthOfPowersMatchesLinearAlgebra) {
  auto R = xyz();
  auto I = I32::parse(R, samples()[1]);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(I.power(n).length().value, oracle::local_length(oracle::power_gens(I.gens(), n)));
}

TEST(IdealOracle, MembershipMatchesLinearAlgebra) {
  auto R = xyz();
  std::mt19937_64 rng(3);
  for (const auto& g : samples()) {
    auto I = I32::parse(R, g);
    const int N = I.certified_level() + 2;
    for (int t = 0; t < 12; ++t) {
      Poly<PrimeField> f(R->poly_ring());
      for (int k = 0; k < 3; ++k) {
        std::vector<int> e{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
        f += Poly<PrimeField>::monomial(R->poly_ring(), Monomial(e), R->field().random(rng));
      }
      EXPECT_EQ(I.contains(f), oracle::contains(I.gens(), f, N)) << to_string(f);
    }
  }
}

TEST(IdealOracle, PrincipalColonByExactSequence) {
  // 0 -> R/(a:x) -> R/a -> R/(a+x) -> 0
  auto R = xyz();
  for (const auto& g : samples()) {
    auto a = I32::parse(R, g);
    for (const char* xs : {"X", "Y + Z^2", "X*Y - Z^2"}) {
      auto x = R->parse(xs);
      auto colon = ideal_colon(a, I32(R, {x}));
      auto ax = a.gens();
      ax.push_back(x);
      EXPECT_EQ(colon.length().value, a.length().value - oracle::local_length(ax)) << xs;
      for (const auto& h : colon.gens()) EXPECT_TRUE(a.contains(h * x));
    }
  }
}

TEST(IdealOracle, IntersectionMatchesElimination) {
  // localization is flat, so the global intersection localizes to the local one
  auto R = xyz();
  const auto& s = samples();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    auto a = I32::parse(R, s[i]);
    auto b = I32::parse(R, s[i + 1]);
    auto cap = ideal_intersect(a, b);
    auto global = I32(R, intersect_by_elimination(a.gens(), b.gens()));
    EXPECT_TRUE(ideal_equal_local(cap, global)) << i;
  }
}

TEST(IdealOps, MonomialFastPathsAgreeWithGeneralPath) {
  auto R = xyz();
  auto a = I32::parse(R, {"X^2", "Y^3", "Z^2", "X*Y"});
  auto b = I32::parse(R, {"X^3", "Y^2", "Z^3"});
  // a disguised copy, no longer monomial as given
  auto b2 = I32::parse(R, {"X^3 + Y^2", "Y^2", "Z^3"});
  ASSERT_TRUE(b.is_monomial());
  ASSERT_FALSE(b2.is_monomial());
  EXPECT_TRUE(ideal_equal_local(ideal_intersect(a, b), ideal_intersect(a, b2)));
  EXPECT_TRUE(ideal_equal_local(ideal_colon(a, b), ideal_colon(a, b2)));
  EXPECT_EQ(ideal_product(a, b).length().value, ideal_product(a, b2).length().value);
}

TEST(IdealOps, PrimeAndRationalFieldsAgree) {
  auto Rp = xyz();
  auto Rq = make_ring_spec(RationalField(), {"X", "Y", "Z"}, 3);
  for (const auto& g : samples()) {
    auto Ip = I32::parse(Rp, g);
    auto Iq = Ideal<RationalField>::parse(Rq, g);
    EXPECT_EQ(Ip.length().value, Iq.length().value);
    EXPECT_EQ(Ip.power(2).length().value, Iq.power(2).length().value);
  }
}

TEST(IdealOps, QuotientRingLengths) {
  // k[[X,Y]]/(XY): λ(R/m^n) = 2n - 1
  auto R = make_ring_spec(PrimeField(), {"X", "Y"}, 1, {"X*Y"});
  auto m = I32::maximal(R);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(m.power(n).length().value, static_cast<std::uint64_t>(2 * n - 1));
}

TEST(IdealOps, LengthIsMonotoneAndAdditive) {
  auto R = xyz();
  auto I = I32::parse(R, samples()[0]);
  auto m = I32::maximal(R);
  EXPECT_TRUE(I.contains(I.power(2)));
  EXPECT_LT(I.length().value, I.power(2).length().value);
  EXPECT_EQ(quotient_length(I.power(2), I).value, I.power(2).length().value - I.length().value);
  EXPECT_TRUE(m.contains(I));
  EXPECT_FALSE(I.contains(m));
}

TEST(IdealOps, NonPrimaryIdealHitsTheCeiling) {
  Limits l;
  l.truncation_max = 10;
  auto R = make_ring_spec(PrimeField(), {"X", "Y"}, 2, {}, l);
  auto I = I32::parse(R, {"X^2", "X*Y"});
  EXPECT_THROW(I.length(), ResourceLimit);
}

TEST(IdealOps, UnitIdeal) {
  auto R = xyz();
  auto I = I32::parse(R, {"1 + X", "Y"});
  EXPECT_EQ(I.length().value, 0u);
  EXPECT_TRUE(I.is_unit_generated() || I.contains(R->parse("1")));
}
