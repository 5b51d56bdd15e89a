#include <gtest/gtest.h>

#include <random>

#include "manyfaces/rational.hpp"

using manyfaces::Rational;

TEST(Rational, LowestTermsAndSign) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_TRUE(r.is_small());
  EXPECT_EQ(Rational(0, -5).str(), "0");
  EXPECT_EQ(Rational(10, 5), Rational(2));
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("4/-6"), Rational(-2, 3));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, OverflowPromotesAndDemotes) {
  Rational big(std::int64_t(1) << 62);
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class(1) << 124));
  Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  EXPECT_EQ(sq - sq, Rational(0));
  EXPECT_TRUE((sq - sq).is_small());
}

// Arithmetic and ordering agree with GMP on random operands spanning the
// small/big boundary.
TEST(Rational, AgreesWithGmp) {
  std::mt19937_64 rng(17);
  auto pick = [&]() {
    std::int64_t n = std::int64_t(rng() >> (rng() % 63));
    std::int64_t d = std::int64_t((rng() >> (rng() % 63)) | 1);
    if (rng() & 1) n = -n;
    if (n == INT64_MIN) n = 0;
    return std::pair{n, d};
  };
  for (int i = 0; i < 20000; ++i) {
    auto [an, ad] = pick();
    auto [bn, bd] = pick();
    Rational a(an, ad), b(bn, bd);
    mpq_class qa{mpz_class{long(an)}, mpz_class{long(ad)}}, qb{mpz_class{long(bn)}, mpz_class{long(bd)}};
    qa.canonicalize();
    qb.canonicalize();
    ASSERT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
    ASSERT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
    ASSERT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
    if (bn != 0) ASSERT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
    ASSERT_EQ(cmp(a, b), cmp(qa, qb) < 0 ? -1 : (cmp(qa, qb) > 0 ? 1 : 0));
    Rational c = (a * b) * (a + b);
    ASSERT_EQ(c.to_mpq(), mpq_class(mpq_class(qa * qb) * mpq_class(qa + qb)));
  }
}
