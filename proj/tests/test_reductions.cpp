#include <gtest/gtest.h>

#include "hsamuel/theorems.hpp"
#include "oracles.hpp"

using namespace hsamuel;

namespace {

using I32 = Ideal<PrimeField>;

RingSpecPtr<PrimeField> xy() { return make_ring_spec(PrimeField(), {"X", "Y"}, 2); }

const std::vector<std::vector<std::string>>& samples() {
  static const std::vector<std::vector<std::string>> s{
      {"X^2", "X*Y", "Y^3"},
      {"X^4", "X^3*Y", "X*Y^3", "Y^4"},
      {"X^2 - Y^3", "X*Y^2", "Y^4"},
      {"X^3", "X^2*Y", "Y^2"},
      {"X^2", "Y^2"},
  };
  return s;
}

// oracle: λ(I^(n+1)/J I^n) from two linear-algebra lengths
std::uint64_t oracle_step(const I32& I, const I32& J, int n) {
  std::vector<Poly<PrimeField>> jin;
  for (const auto& a : J.gens()) {
    for (const auto& b : oracle::power_gens(I.gens(), n)) jin.push_back(a * b);
  }
  return oracle::local_length(jin) - oracle::local_length(oracle::power_gens(I.gens(), n + 1));
}

}  // namespace

TEST(ReductionOracle, TableMatchesLinearAlgebra) {
  auto R = xy();
  for (const auto& g : samples()) {
    auto I = I32::parse(R, g);
    auto red = minimal_reduction(I);
    ASSERT_EQ(red.lambda_table.size(), static_cast<std::size_t>(red.r + 1));
    for (int n = 0; n <= red.r; ++n) EXPECT_EQ(red.at(n), oracle_step(I, red.J, n)) << g.front() << " n=" << n;
    EXPECT_EQ(red.lambda_table.back(), 0u);
  }
}

TEST(ReductionOracle, MultiplicityIsColengthOfReduction) {
  auto R = xy();
  for (const auto& g : samples()) {
    auto I = I32::parse(R, g);
    auto red = minimal_reduction(I);
    auto hd = hilbert_data(Filtration<PrimeField>::adic(I));
    EXPECT_EQ(static_cast<std::uint64_t>(hd.e[0]), oracle::local_length(red.J.gens())) << g.front();
  }
}

TEST(ReductionOracle, FirstIntersectionTermIsColengthDifference) {
  auto R = xy();
  for (const auto& g : samples()) {
    auto I = I32::parse(R, g);
    auto red = minimal_reduction(I);
    auto inter = intersection_data(I, red);
    EXPECT_EQ(inter.terms.at(0), oracle::local_length(red.J.gens()) - oracle::local_length(I.gens())) << g.front();
  }
}

TEST(Reductions, LengthOfSecondPowerModJIIsSeedIndependent) {
  auto R = xy();
  for (const auto& g : samples()) {
    auto I = I32::parse(R, g);
    std::uint64_t first = 0;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      ReductionOptions opt;
      opt.seed = seed * 101;
      auto red = minimal_reduction(I, opt);
      if (seed == 1) first = red.at(1);
      EXPECT_EQ(red.at(1), first) << g.front() << " seed " << opt.seed;
    }
  }
}

TEST(Reductions, SameSeedSameReduction) {
  auto I = I32::parse(xy(), samples()[2]);
  auto a = minimal_reduction(I);
  auto b = minimal_reduction(I);
  ASSERT_EQ(a.x.size(), b.x.size());
  for (std::size_t i = 0; i < a.x.size(); ++i) EXPECT_EQ(to_string(a.x[i]), to_string(b.x[i]));
  EXPECT_EQ(a.lambda_table, b.lambda_table);
}

TEST(Reductions, GivenReductionOfSquareOfMaximal) {
  auto R = xy();
  auto I = I32::maximal(R).power(2);
  auto red = reduction_with(I, {R->parse("X^2"), R->parse("Y^2")}, 5);
  EXPECT_EQ(red.r, 1);
  EXPECT_EQ(red.at(0), 1u);
  EXPECT_EQ(red.at(1), 0u);
  EXPECT_TRUE(itoh_huneke_check(I, red.J));
}

TEST(Reductions, GeneratorOutsideIdealIsRejected) {
  auto R = xy();
  auto I = I32::maximal(R).power(2);
  EXPECT_THROW(reduction_with(I, {R->parse("X"), R->parse("Y^2")}, 5), NotContained);
}

TEST(Reductions, HuckabaAndIntersectionBoundsOnE1) {
  auto R = xy();
  for (const auto& g : samples()) {
    auto I = I32::parse(R, g);
    auto red = minimal_reduction(I);
    auto e1 = hilbert_data(Filtration<PrimeField>::adic(I)).e[1];
    EXPECT_LE(e1, static_cast<std::int64_t>(red.sum())) << g.front();
    EXPECT_GE(e1, static_cast<std::int64_t>(intersection_data(I, red).sum())) << g.front();
  }
}

TEST(Superficial, VariableIsSuperficialForMaximal) {
  auto R = xy();
  auto m = I32::maximal(R);
  EXPECT_EQ(superficial_witness(m, R->parse("X"), 5), std::optional<int>(1));
  EXPECT_EQ(superficial_witness(m, R->parse("X^2"), 5), std::nullopt);
  EXPECT_THROW(superficial_witness(m, R->parse("1 + X"), 5), NotContained);
}

TEST(Superficial, RandomElementIsCertified) {
  auto I = I32::parse(xy(), samples()[0]);
  auto s = superficial_element(I, 7);
  EXPECT_TRUE(I.contains(s.x));
  EXPECT_EQ(superficial_witness(I, s.x, s.n_max), std::optional<int>(s.c));
}

TEST(Depth, SquareOfMaximalIsCohenMacaulay) {
  auto I = I32::maximal(xy()).power(2);
  auto red = minimal_reduction(I);
  auto e1 = hilbert_data(Filtration<PrimeField>::adic(I)).e[1];
  auto c = depth_certificate(I, red, e1);
  EXPECT_EQ(c.lower, 2);
  EXPECT_EQ(c.upper, 2);
  EXPECT_TRUE(c.determined());
  EXPECT_EQ(c.lower_method, DepthMethod::vv_cm);
}

TEST(Depth, RatliffRushFailureProvesDepthZero) {
  auto I = I32::parse(xy(), samples()[1]);
  auto rr = rr_depth_positive(I, 3);
  EXPECT_FALSE(rr.positive);
  EXPECT_EQ(rr.first_failure, 1);
  auto red = minimal_reduction(I);
  auto e1 = hilbert_data(Filtration<PrimeField>::adic(I)).e[1];
  auto c = depth_certificate(I, red, e1);
  EXPECT_EQ(c.lower, 0);
  EXPECT_EQ(c.upper, 0);
}

TEST(Depth, LevelsPassForRegularSequence) {
  auto R = xy();
  auto m = I32::maximal(R);
  std::vector<bool> levels;
  auto [k, reached] = vv_levels(m, {R->parse("X"), R->parse("Y")}, 4, &levels);
  EXPECT_EQ(k, 2);
  EXPECT_EQ(reached, 4);
  EXPECT_EQ(levels, (std::vector<bool>{true, true}));
}

TEST(Depth, BoundsAreOrdered) {
  auto R = xy();
  for (const auto& g : samples()) {
    auto I = I32::parse(R, g);
    auto red = minimal_reduction(I);
    auto e1 = hilbert_data(Filtration<PrimeField>::adic(I)).e[1];
    auto c = depth_certificate(I, red, e1);
    EXPECT_LE(c.lower, c.upper) << g.front();
    EXPECT_LE(c.upper, 2);
    // e1 = Σ λ(I^(n+1)/J I^n) exactly when depth >= d - 1
    EXPECT_EQ(e1 == static_cast<std::int64_t>(red.sum()), c.lower >= 1 && c.lower_exact) << g.front();
  }
}
