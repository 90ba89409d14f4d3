#include <gtest/gtest.h>

#include "generators.hpp"
#include "hbl/error.hpp"

using namespace hbl;

TEST(Scalar, RationalsAreCanonical) {
  EXPECT_EQ(Scalar(2, 4), Scalar(1, 2));
  EXPECT_EQ(Scalar(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Scalar::parse("-3/6").to_string(), "-1/2");
  EXPECT_EQ(Scalar::parse("4/2").to_string(), "2");
  EXPECT_TRUE(Scalar::parse("0/5").is_zero());
}

TEST(Scalar, ParseRejectsGarbage) {
  EXPECT_THROW(Scalar::parse("abc"), ParseError);
  EXPECT_THROW(Scalar::parse(""), ParseError);
  EXPECT_THROW(Scalar::parse("1/0"), ParseError);
  EXPECT_THROW(Scalar(1, 0), DivisionByZero);
  EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
}

TEST(Scalar, PrimeField) {
  const Scalar a = Scalar::residue(3, 7);
  const Scalar b = Scalar::residue(5, 7);
  EXPECT_TRUE((a * b).is_one());
  EXPECT_EQ(a.inverse(), b);
  EXPECT_EQ(Scalar::residue(-1, 7).residue_value(), 6u);
  EXPECT_EQ(Scalar(1, 2).in(Field::prime(7)), Scalar::residue(4, 7));
  EXPECT_THROW(Scalar(1, 7).in(Field::prime(7)), FieldError);
  EXPECT_THROW(Scalar::residue(1, 5) + Scalar::residue(1, 7), FieldError);
  EXPECT_EQ(Scalar::parse("10", Field::prime(7)), Scalar::residue(3, 7));
}

TEST(Field, Parse) {
  EXPECT_TRUE(Field::parse("q").is_rational());
  EXPECT_EQ(Field::parse("gf:5").modulus(), 5u);
  EXPECT_EQ(Field::parse("gf:5").to_string(), "gf:5");
  EXPECT_THROW(Field::parse("gf:8"), FieldError);
  EXPECT_THROW(Field::prime(1), FieldError);
}

TEST(Scalar, IntegerConstantsMeetResidues) {
  const Scalar r = Scalar::residue(4, 5);
  EXPECT_EQ(r + Scalar(1), Scalar::residue(0, 5));
  EXPECT_TRUE((r + 1).is_zero());
  EXPECT_EQ((r * 2).field(), Field::prime(5));
}

TEST(ScalarProperty, FieldAxiomsOverRationals) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Scalar a = gen::random_scalar(rng), b = gen::random_scalar(rng),
                 c = gen::random_scalar(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a - a, Scalar(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
  }
}

TEST(ScalarProperty, FieldAxiomsOverGF101) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const Scalar a = gen::random_residue(rng, 101), b = gen::random_residue(rng, 101),
                 c = gen::random_residue(rng, 101);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(-a + a, Scalar::residue(0, 101));
    if (!b.is_zero()) {
      EXPECT_TRUE((b * b.inverse()).is_one());
    }
  }
}
