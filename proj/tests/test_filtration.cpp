#include <gtest/gtest.h>

#include <random>

#include "hsamuel/filtration.hpp"
#include "hsamuel/newton.hpp"
#include "oracles.hpp"
#include "random_ideals.hpp"

using namespace hsamuel;

namespace {

using I32 = Ideal<PrimeField>;

}  // namespace

TEST(ClosureOracle, PolyhedralClosureMatchesPowerTest) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int nv = 2 + static_cast<int>(trial % 2);
    auto pts = fuzz::random_monomial_ideal(rng, nv, 4);
    NewtonPolyhedron np(pts);
    // every monomial in the box below the pure powers
    std::vector<int> top(static_cast<std::size_t>(nv), 0);
    for (const auto& p : pts) {
      for (int i = 0; i < nv; ++i) top[static_cast<std::size_t>(i)] = std::max(top[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i)]);
    }
    std::vector<int> u(static_cast<std::size_t>(nv), 0);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == nv) {
        EXPECT_EQ(np.contains(u), oracle::integral_by_powers(pts, u, 6)) << "trial " << trial;
        return;
      }
      for (int a = 0; a <= top[static_cast<std::size_t>(i)]; ++a) {
        u[static_cast<std::size_t>(i)] = a;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
}

TEST(ClosureOracle, RatliffRushMatchesColonDefinition) {
  // u ∈ Ĩ iff u I^k ⊆ I^(k+1) for some k
  auto R = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  auto I = I32::parse(R, {"X^4", "X^3*Y", "X*Y^3", "Y^4"});
  auto rr = ratliff_rush(I, 1);
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      auto u = Poly<PrimeField>::monomial(R->poly_ring(), Monomial({a, b}));
      bool oracle = false;
      for (int k = 1; k <= 4 && !oracle; ++k) {
        oracle = I.power(k + 1).contains(ideal_product(I32(R, {u}), I.power(k)));
      }
      EXPECT_EQ(rr.ideal.contains(u), oracle) << a << "," << b;
    }
  }
  EXPECT_FALSE(rr.equals_power);
  EXPECT_TRUE(rr.ideal.contains(R->parse("X^2*Y^2")));
}

TEST(Closure, KnownClosures) {
  auto R = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  auto c = monomial_closure(I32::parse(R, {"X^2", "Y^2"}));
  EXPECT_TRUE(ideal_equal_local(c, I32::parse(R, {"X^2", "X*Y", "Y^2"})));
  auto c3 = monomial_closure(I32::parse(R, {"X^3", "Y^3"}));
  EXPECT_TRUE(ideal_equal_local(c3, I32::maximal(R).power(3)));
  EXPECT_TRUE(is_integrally_closed_monomial(I32::maximal(R).power(4)));
  EXPECT_FALSE(is_integrally_closed_monomial(I32::parse(R, {"X^2", "Y^3"})));
}

TEST(Closure, ExtensiveAndIdempotent) {
  std::mt19937_64 rng(5);
  auto R = make_ring_spec(PrimeField(), {"X", "Y", "Z"}, 3);
  for (int t = 0; t < 15; ++t) {
    auto pts = fuzz::random_monomial_ideal(rng, 3, 4);
    auto I = detail::ideal_from_points(R, pts);
    auto c = monomial_closure(I);
    EXPECT_TRUE(c.contains(I));
    EXPECT_TRUE(ideal_equal_local(monomial_closure(c), c));
  }
}

TEST(Closure, RejectsNonMonomialInput) {
  auto R = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  EXPECT_THROW(monomial_closure(I32::parse(R, {"X^2 + Y^3", "Y^2"})), Unsupported);
}

TEST(Closure, AsymptoticNormality) {
  auto R = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  // in two variables closed ideals are normal
  EXPECT_TRUE(is_asymptotically_normal_monomial(I32::parse(R, {"X^2", "X*Y", "Y^3"}), 3).normal());
  EXPECT_FALSE(is_asymptotically_normal_monomial(I32::parse(R, {"X^2", "Y^2"}), 3).normal());
}

TEST(Newton, ScalingMatchesPowers) {
  std::vector<std::vector<int>> pts{{3, 0}, {1, 1}, {0, 4}};
  NewtonPolyhedron np(pts);
  auto R = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  auto I = detail::ideal_from_points(R, pts);
  for (int q = 1; q <= 3; ++q) {
    auto direct = NewtonPolyhedron(detail::exponent_vectors(I.power(q)));
    auto scaled = np.scaled(q);
    EXPECT_EQ(direct.minimal_lattice_points(), scaled.minimal_lattice_points()) << q;
  }
}

TEST(Filtration, RatliffRushOfExampleIdeal) {
  auto R = make_ring_spec(PrimeField(), {"X", "Y", "Z"}, 3);
  auto I = I32::parse(R, {"X^2 - Y^2", "Y^2 - Z^2", "X*Y", "X*Z", "Y*Z"});
  auto rr = ratliff_rush(I, 1);
  EXPECT_FALSE(rr.equals_power);
  EXPECT_TRUE(ideal_equal_local(rr.ideal, I32::maximal(R).power(2)));
  EXPECT_TRUE(ratliff_rush(I, 2).equals_power);
}

TEST(Filtration, MembersAreMultiplicative) {
  auto R = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  auto I = I32::parse(R, {"X^2", "Y^3"});
  EXPECT_TRUE(Filtration<PrimeField>::adic(I).multiplicative_up_to(4));
  EXPECT_TRUE(Filtration<PrimeField>::closure(I).multiplicative_up_to(4));
  EXPECT_TRUE(Filtration<PrimeField>::ratliff_rush(I).multiplicative_up_to(3));
  auto f = Filtration<PrimeField>::adic(I);
  EXPECT_EQ(f.at(0).length().value, 0u);
  EXPECT_EQ(f.at(2).length().value, I.power(2).length().value);
}

TEST(Filtration, QuotientByAnElementOfTheFirstMember) {
  auto R = make_ring_spec(PrimeField(), {"X", "Y"}, 2);
  auto I = I32::parse(R, {"X^2", "X*Y", "Y^2"});
  auto f = Filtration<PrimeField>::quotient(Filtration<PrimeField>::adic(I), {R->parse("X^2 + Y^2")});
  EXPECT_EQ(f.ring()->dim(), 1);
  for (int n = 1; n <= 4; ++n) {
    auto gens = I.power(n).gens();
    gens.push_back(R->parse("X^2 + Y^2"));
    EXPECT_EQ(f.at(n).length().value, oracle::local_length(gens));
  }
  EXPECT_THROW(Filtration<PrimeField>::quotient(Filtration<PrimeField>::adic(I), {R->parse("X")}), NotContained);
}
