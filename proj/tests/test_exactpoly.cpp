#include <gtest/gtest.h>

#include <random>

#include "hsamuel/poly_io.hpp"

using namespace hsamuel;

namespace {

// oracle: trial division
bool slow_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST(PrimeFieldOracle, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), slow_prime(n)) << n;
  EXPECT_TRUE(is_prime(2147483647ULL));
}

TEST(PrimeFieldOracle, InverseMatchesExhaustiveSearch) {
  PrimeField k(101);
  for (std::uint32_t a = 1; a < 101; ++a) {
    std::uint32_t found = 0;
    for (std::uint32_t b = 1; b < 101; ++b) {
      if (a * b % 101 == 1) found = b;
    }
    EXPECT_EQ(k.inv(a), found);
  }
}

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(100), InputError);
  EXPECT_THROW(PrimeField(1), InputError);
  EXPECT_NO_THROW(PrimeField(3));
}

TEST(PrimeField, FractionsReduce) {
  PrimeField k(7);
  EXPECT_EQ(k.from_fraction(1, 2), 4u);
  EXPECT_EQ(k.from_int(-1), 6u);
  EXPECT_THROW(k.from_fraction(1, 7), InputError);
}

TEST(RationalField, ExactArithmetic) {
  RationalField q;
  auto a = q.div(q.from_int(1), q.from_int(3));
  EXPECT_EQ(q.to_string(q.add(a, a)), "2/3");
  EXPECT_TRUE(q.is_one(q.mul(a, q.from_int(3))));
}

TEST(Poly, ParsePrintRoundTrip) {
  auto r = make_ring(PrimeField(), {"X", "Y", "Z"});
  for (const char* s : {"X^2 - Y^2", "X*(Y^3 + Z^3)", "3*X*Y - 2", "(X + Y)^3", "-X"}) {
    Poly<PrimeField> p = parse_poly(r, s);
    EXPECT_EQ(parse_poly(r, to_string(p)), p) << s;
  }
  EXPECT_EQ(to_string(parse_poly(r, "(X+Y)^2")), "X^2 + 2*X*Y + Y^2");
}

TEST(Poly, RationalCoefficients) {
  auto r = make_ring(RationalField(), {"X", "Y"});
  auto p = parse_poly(r, "1/2*X + 3/4*Y");
  EXPECT_EQ(to_string(p + p), "X + 3/2*Y");
}

TEST(Poly, ParseErrorsCarryColumns) {
  auto r = make_ring(PrimeField(), {"X", "Y"});
  try {
    parse_poly(r, "X + W");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5);
  }
  EXPECT_THROW(parse_poly(r, "X +"), ParseError);
  EXPECT_THROW(parse_poly(r, "(X"), ParseError);
  EXPECT_THROW(parse_poly(r, "X^-1"), ParseError);
}

TEST(Poly, RingAxiomsOnRandomInput) {
  auto r = make_ring(PrimeField(32003), {"X", "Y", "Z"});
  std::mt19937_64 rng(7);
  auto rnd = [&]() {
    Poly<PrimeField> p(r);
    for (int t = 0; t < 4; ++t) {
      std::vector<int> e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
      p += Poly<PrimeField>::monomial(r, Monomial(e), r->field().random(rng));
    }
    return p;
  };
  for (int i = 0; i < 50; ++i) {
    auto a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Monomial, OrderAndDivisibility) {
  Monomial u({2, 1, 0}), v({1, 1, 0});
  EXPECT_TRUE(v.divides(u));
  EXPECT_FALSE(u.divides(v));
  EXPECT_EQ((u / v).exponents(3), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(u.degree(), 3);
  auto local = TermOrder::local_degrevlex();
  // lower degree is larger in a local order
  EXPECT_GT(local.compare(v, u), 0);
  EXPECT_LT(TermOrder::degrevlex().compare(v, u), 0);
}
