#include <gtest/gtest.h>

#include <random>

#include "tlq/rational.hpp"

using tlq::Rational;

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("x"), std::exception);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::exception);
  EXPECT_THROW(Rational(0).inverse(), std::exception);
}

TEST(Rational, AgreesWithGmpUnderRandomArithmetic) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long long> small(-50, 50);
  std::uniform_int_distribution<int> op(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(small(rng), 1 + std::abs(small(rng)));
    mpq_class ga = a.to_mpq();
    for (int step = 0; step < 60; ++step) {
      long long n = small(rng), d = 1 + std::abs(small(rng));
      Rational b(n, d);
      mpq_class gb(static_cast<long>(n), static_cast<unsigned long>(d));
      gb.canonicalize();
      switch (op(rng)) {
        case 0: a += b; ga += gb; break;
        case 1: a -= b; ga -= gb; break;
        case 2: a *= b; ga *= gb; break;
        default:
          if (b.is_zero()) continue;
          a /= b;
          ga /= gb;
      }
      ASSERT_EQ(a.to_mpq(), ga) << "trial " << trial << " step " << step;
      ASSERT_EQ(a, Rational(ga));
    }
  }
}

TEST(Rational, PromotesAndDemotesAcrossTheMachineRange) {
  Rational big(std::numeric_limits<long long>::max());
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  Rational m(std::numeric_limits<long long>::min());
  EXPECT_EQ((-m).to_mpq(), -m.to_mpq());
  EXPECT_EQ(m.abs().to_mpq(), abs(m.to_mpq()));
}

TEST(Rational, AddMulMatchesSeparateOperations) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
  for (int t = 0; t < 500; ++t) {
    Rational acc(dist(rng), 1 + std::abs(dist(rng)) % 97);
    Rational a(dist(rng), 1 + std::abs(dist(rng)) % 89);
    Rational b(dist(rng));
    Rational expect = acc + a * b;
    add_mul(acc, a, b);
    ASSERT_EQ(acc, expect);
  }
}

TEST(Rational, OrderingMatchesGmp) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> dist(-30, 30);
  for (int t = 0; t < 300; ++t) {
    Rational a(dist(rng), 1 + std::abs(dist(rng)));
    Rational b(dist(rng), 1 + std::abs(dist(rng)));
    EXPECT_EQ(a < b, a.to_mpq() < b.to_mpq());
    EXPECT_EQ(a == b, a.to_mpq() == b.to_mpq());
  }
}
