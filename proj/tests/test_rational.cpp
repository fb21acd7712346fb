#include <gtest/gtest.h>

#include "webiso/error.hpp"
#include "webiso/rational.hpp"

using namespace webiso;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-10/5"), Rational(-2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-0/7")), "0");
  EXPECT_EQ(to_string(parse_rational("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(Rational, RejectsMalformed) {
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("2/"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Rational, Pow) {
  EXPECT_EQ(rational_pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(rational_pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(rational_pow(Rational(5), 0), Rational(1));
  EXPECT_THROW(rational_pow(Rational(0), -1), Error);
}

TEST(Rational, BitSize) {
  EXPECT_EQ(bit_size(Rational(1, 1024)), 11u);
  EXPECT_EQ(bit_size(Rational(255, 2)), 8u);
}
