#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "latrec/errors.hpp"
#include "latrec/exactnum.hpp"

using namespace latrec;
using namespace latrec::test;

TEST(Gso, UnitLowerTriangular) {
  GsoData g = gso(rm({{1, 0}, {1, 1}}));
  EXPECT_EQ(g.gs_norms_sq, (std::vector<Rational>{1, 1}));
  EXPECT_EQ(g.mu(1, 0), 1);
}

TEST(Gso, Diagonal) {
  GsoData g = gso(rm({{2, 0}, {0, 3}}));
  EXPECT_EQ(g.gs_norms_sq, (std::vector<Rational>{4, 9}));
  EXPECT_EQ(g.mu(1, 0), 0);
}

TEST(Gso, ProjectionArithmetic) {
  // <b2,b1>/<b1,b1> = 2/2, b2 - b1 = (-1,1)
  GsoData g = gso(rm({{1, 1}, {0, 2}}));
  EXPECT_EQ(g.gs_norms_sq, (std::vector<Rational>{2, 2}));
  EXPECT_EQ(g.mu(1, 0), 1);
  EXPECT_EQ(g.mu(0, 0), 1);
  EXPECT_EQ(g.mu(0, 1), 0);
}

TEST(GramDetSq, Examples) {
  EXPECT_EQ(gram_det_sq(rm({{2, 0}, {0, 3}})), 36);
  EXPECT_EQ(gram_det_sq(rm({{1, 0}, {1, 1}})), 1);
  EXPECT_EQ(gram_det_sq(rm({{4, 1}, {9, 2}})), 1);
}

TEST(GramDetSq, NonSquareMatchesProductOfGsNorms) {
  RatMatrix b = rm({{1, 2, 3}, {q(1, 2), 0, -1}});
  GsoData g = gso(b);
  EXPECT_EQ(gram_det_sq(b), g.gs_norms_sq[0] * g.gs_norms_sq[1]);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(RatMatrix::identity(3)), RatMatrix::identity(3));
  EXPECT_EQ(inverse(rm({{2, 0}, {0, 4}})), rm({{q(1, 2), 0}, {0, q(1, 4)}}));
  EXPECT_EQ(inverse(rm({{1, 1}, {0, 1}})), rm({{1, -1}, {0, 1}}));
}

TEST(Inverse, SingularThrows) {
  EXPECT_THROW(inverse(rm({{1, 2}, {2, 4}})), Error);
}

TEST(Inverse, RandomProductIsIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 50; ++t) {
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        m(i, j) = Rational(d(rng), 1 + (d(rng) + 9) % 5);
        m(i, j).canonicalize();
      }
    if (matrix_rank(m) < 4) continue;
    EXPECT_EQ(mul(m, inverse(m)), RatMatrix::identity(4));
  }
}

TEST(Bitlength, Encoding) {
  RatMatrix zero(1, 1);
  EXPECT_EQ(bitlength(zero), 3u);  // numerator 0: sign bit; denominator 1: two bits
  EXPECT_EQ(bitlength(rm({{q(3, 2)}})), bitlength(Integer(3)) + bitlength(Integer(2)));
  EXPECT_EQ(bitlength(Integer(3)), 3u);
  EXPECT_EQ(bitlength(Integer(-4)), 4u);
}

TEST(Bitlength, DoublingCostsAtMostOneBitPerEntry) {
  RatMatrix b = rm({{q(3, 4), 5}, {-7, q(1, 6)}});
  RatMatrix b2 = b;
  for (std::size_t i = 0; i < 2; ++i)
    for (auto& x : b2.row(i)) x *= 2;
  EXPECT_GE(bitlength(b2) + 4, bitlength(b));
  EXPECT_LE(bitlength(b2), bitlength(b) + 4);
}

TEST(Rounding, Directions) {
  EXPECT_EQ(trunc_q(q(37, 10)), 3);
  EXPECT_EQ(trunc_q(q(-24, 10)), -2);
  EXPECT_EQ(floor_q(q(-24, 10)), -3);
  EXPECT_EQ(ceil_q(q(37, 10)), 4);
  EXPECT_EQ(round_q(q(5, 2)), 3);
  EXPECT_EQ(round_q(q(-5, 2)), -2);
}

TEST(ParseRational, RoundTrip) {
  for (const char* s : {"0", "-3", "7/9", "-12345678901234567890121/98765432109876543"})
    EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Log2, PowersOfTwoExact) {
  EXPECT_DOUBLE_EQ(log2_q(Rational(1024)), 10.0);
  EXPECT_DOUBLE_EQ(log2_q(q(1, 8)), -3.0);
}
